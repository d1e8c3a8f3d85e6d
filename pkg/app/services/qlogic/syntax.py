"""
app/services/qlogic/syntax.py

Text syntax for propositional formulas.

GRAMMAR
-------
    formula  := disj ('<->' formula)?          right associative
    disj     := exclusive ('|' exclusive)*
    exclusive:= conj ('^' conj)*
    conj     := unary ('&' unary)*
    unary    := '!' unary | atom
    atom     := NAME | '(' formula ')'
    NAME     := [a-z][a-z0-9]*

Binding strength: ! > & > ^ > | > <->. Whitespace is ignored.

`format_formula` writes the canonical form: every binary node parenthesized,
single spaces around binary operators, so parse(format(f)) == f.
"""

from __future__ import annotations

import re
from typing import Iterator

from ...models import And, Formula, Iff, Not, Or, Var, Xor
from ..shared.errors import FormulaSyntaxError

_TOKEN = re.compile(r"\s*(?:(?P<name>[a-z][a-z0-9]*)|(?P<op><->|[!&|^()]))")

_SYMBOLS = {And: "&", Or: "|", Xor: "^", Iff: "<->"}


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if match is None:
            column = position + len(text[position:]) - len(text[position:].lstrip()) + 1
            raise FormulaSyntaxError(f"Unexpected character at column {column}", column=column, text=text)
        value = match.group("name") or match.group("op")
        tokens.append((value, match.start(match.lastgroup) + 1))
        position = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> str | None:
        return self.tokens[self.index][0] if self.index < len(self.tokens) else None

    def column(self) -> int:
        if self.index < len(self.tokens):
            return self.tokens[self.index][1]
        return len(self.text) + 1

    def fail(self, message: str) -> FormulaSyntaxError:
        column = self.column()
        return FormulaSyntaxError(f"{message} at column {column}", column=column, text=self.text)

    def take(self) -> str:
        token = self.tokens[self.index][0]
        self.index += 1
        return token

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.peek() == "<->":
            self.take()
            return Iff(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        node = self.exclusive()
        while self.peek() == "|":
            self.take()
            node = Or(node, self.exclusive())
        return node

    def exclusive(self) -> Formula:
        node = self.conjunction()
        while self.peek() == "^":
            self.take()
            node = Xor(node, self.conjunction())
        return node

    def conjunction(self) -> Formula:
        node = self.unary()
        while self.peek() == "&":
            self.take()
            node = And(node, self.unary())
        return node

    def unary(self) -> Formula:
        if self.peek() == "!":
            self.take()
            return Not(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        token = self.peek()
        if token is None:
            raise self.fail("Unexpected end of formula")
        if token == "(":
            self.take()
            node = self.formula()
            if self.peek() != ")":
                raise self.fail("Expected ')'")
            self.take()
            return node
        if token[0].isalpha():
            self.take()
            return Var(token)
        raise self.fail(f"Unexpected '{token}'")


def parse_formula(text: str) -> Formula:
    """
    Parse formula text.

    RAISES
    ------
    FormulaSyntaxError
        With the 1-based column of the offending token in `details`.

    EXAMPLES
    --------
    parse_formula("x | !x")          -> Or(Var('x'), Not(Var('x')))
    parse_formula("a <-> b <-> c")   -> Iff(a, Iff(b, c))
    parse_formula("a & ")            -> FormulaSyntaxError (column 5)
    """
    parser = _Parser(text)
    node = parser.formula()
    if parser.peek() is not None:
        raise parser.fail(f"Unexpected '{parser.peek()}'")
    return node


def format_formula(formula: Formula) -> str:
    if isinstance(formula, Var):
        return formula.name
    if isinstance(formula, Not):
        return "!" + format_formula(formula.operand)
    symbol = _SYMBOLS[type(formula)]
    return f"({format_formula(formula.left)} {symbol} {format_formula(formula.right)})"


def _walk(formula: Formula) -> Iterator[Formula]:
    stack = [formula]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, Not):
            stack.append(node.operand)
        elif not isinstance(node, Var):
            stack.extend((node.right, node.left))


def variables(formula: Formula) -> tuple[str, ...]:
    """
    Variable names of a formula, sorted.
    """
    return tuple(sorted({node.name for node in _walk(formula) if isinstance(node, Var)}))
