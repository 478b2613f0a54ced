"""Recursive-descent parser for value expressions.

Grammar (whitespace is ignored)::

    expr  := term (('+' | '-') term)*
    term  := atom | '{' list '|' list '}'
    list  := (expr (',' expr)*)?
    atom  := integer | integer '/' pow2 | '*' digits? | '^' '*'? | 'v' '*'?
           | digits '.' ('^' | 'v') '*'? | 'Tiny(' expr ')' | 'Miny(' expr ')'
           | '-' atom

``^`` is up, ``v`` is down, ``3.^*`` is three ups plus star.  Multi-level
bars nest braces: ``{{2|1}|0}``.
"""

from __future__ import annotations

from fractions import Fraction

from . import kernel as k
from .kernel import Game


class ValueSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ValueSyntaxError(message, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, s: str) -> bool:
        self.skip()
        if self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str):
        if not self.take(s):
            self.error(f"expected {s!r}")

    def digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start : self.pos]

    def parse(self) -> Game:
        g = self.expr()
        if self.peek():
            self.error("unexpected input")
        return g

    def expr(self) -> Game:
        g = self.term()
        while True:
            if self.take("+"):
                g = k.add(g, self.term())
            elif self.take("-"):
                g = k.sub(g, self.term())
            else:
                return g

    def term(self) -> Game:
        if self.take("{"):
            left = self.options("|")
            self.expect("|")
            right = self.options("}")
            self.expect("}")
            return k.make(left, right)
        return self.atom()

    def options(self, stop: str) -> list[Game]:
        if self.peek() == stop:
            return []
        out = [self.expr()]
        while self.take(","):
            out.append(self.expr())
        return out

    def atom(self) -> Game:
        c = self.peek()
        if not c:
            self.error("unexpected end of input")
        if c == "-":
            self.pos += 1
            # a negated brace term is accepted too
            return k.neg(self.term())
        if c == "*":
            self.pos += 1
            n = self.digits()
            return k.nimber(int(n) if n else 1)
        if c in "^v":
            self.pos += 1
            return k.ups(1 if c == "^" else -1, self.take("*"))
        if self.take("Tiny("):
            return self._wrapped(k.tiny)
        if self.take("Miny("):
            return self._wrapped(k.miny)
        if c.isdigit():
            start = self.pos
            n = self.digits()
            if self.text.startswith(".", self.pos):
                self.pos += 1
                arrow = self.text[self.pos : self.pos + 1]
                if arrow not in ("^", "v"):
                    self.error("expected '^' or 'v' after multiplier")
                self.pos += 1
                count = int(n) if arrow == "^" else -int(n)
                return k.ups(count, self.take("*"))
            if self.take("/"):
                self.skip()
                d = self.digits()
                if not d:
                    self.error("expected denominator")
                den = int(d)
                if den == 0 or den & (den - 1):
                    self.pos = start
                    self.error(f"non-dyadic fraction {n}/{d}")
                return k.number(Fraction(int(n), den))
            return k.number(int(n))
        self.error(f"unexpected character {c!r}")

    def _wrapped(self, fn) -> Game:
        g = self.expr()
        self.expect(")")
        return fn(g)


def parse_value(text: str) -> Game:
    """Parse a value expression and return its canonical form."""
    return k.canonicalize(_Parser(text).parse())
