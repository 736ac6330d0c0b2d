"""Recursive-descent parser for characteristic-class expressions.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' uint)?
    atom   := 'e' | 'p' uint | rational | '(' expr ')'

Rationals are ``12`` or ``3/4``.  The result is reduced to normal form, so
``e^2`` parses to ``p_n``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .charclass import CharClass
from .errors import ClassIndexError, ParseError

_TOKEN = re.compile(
    r"\s*(?:(?P<rat>\d+(?:/\d+)?)|(?P<p>p(?P<idx>\d+))|(?P<e>e)|(?P<op>[-+*^()]))"
)


class _Parser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.n = n
        self.tokens = self._lex(text)
        self.i = 0

    @staticmethod
    def _lex(text: str) -> list[tuple[str, str, int]]:
        tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
                raise ParseError(f"unexpected character {text[start]!r}", start)
            start = m.start(m.lastgroup if m.lastgroup != "idx" else "p")
            if m.group("rat") is not None:
                tokens.append(("rat", m.group("rat"), start))
            elif m.group("p") is not None:
                tokens.append(("p", m.group("idx"), start))
            elif m.group("e") is not None:
                tokens.append(("e", "e", start))
            else:
                tokens.append((m.group("op"), m.group("op"), start))
            pos = m.end()
        tokens.append(("end", "", len(text)))
        return tokens

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, kind: str | None = None) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> CharClass:
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return result

    def expr(self) -> CharClass:
        result = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> CharClass:
        result = self.factor()
        while self.peek()[0] == "*":
            self.take()
            result = result * self.factor()
        return result

    def factor(self) -> CharClass:
        if self.peek()[0] == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            kind, value, pos = self.peek()
            if kind != "rat" or "/" in value:
                raise ParseError("exponent must be a non-negative integer", pos)
            self.take()
            base = base ** int(value)
        return base

    def atom(self) -> CharClass:
        kind, value, pos = self.peek()
        if kind == "e":
            self.take()
            return CharClass.euler(self.n)
        if kind == "p":
            self.take()
            i = int(value)
            if not 1 <= i <= self.n:
                raise ClassIndexError(i, self.n, pos)
            return CharClass.pontryagin(self.n, i)
        if kind == "rat":
            self.take()
            num, _, den = value.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", pos)
            return CharClass.constant(self.n, Fraction(int(num), int(den or 1)))
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        what = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"expected e, p<i>, a number or '(', found {what}", pos)


def parse_class(text: str, n: int) -> CharClass:
    if n < 1:
        raise ValueError("rank must be at least 1")
    return _Parser(text, n).parse()
