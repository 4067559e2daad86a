"""Parser for the exact-expression grammar used by the catalog and CLI.

Grammar: integer literals, the imaginary unit `i`, declared symbols,
binary + - * /, exponentiation ^ restricted to nonnegative integer
exponents, unary minus, parentheses.  Whitespace is insignificant.

`parse_expression(text, symbols)` evaluates directly into whatever algebra
the symbol bindings live in: bind x to a polynomial generator and s to a
coefficient generator and the result is a rational function in x; bind u
and w to extension-field generators and the result is an ExtScalar.
Integer literals become Fractions and climb the coercion ladder on use.
`w` (or any other name) is only legal when a binding supplies it, which is
how the `field w^2 = ...` declaration rule is enforced.

Identifiers may be multi-character; the catalog uses this to reference
previously defined entries (e.g. F10) inside later expressions.
"""

from __future__ import annotations

from fractions import Fraction

from .gaussian import GaussRational


class ExprSyntaxError(ValueError):
    pass


_OPS = set("+-*/^(),=")


def tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            tokens.append(("int", int(text[start:pos])))
            continue
        if ch.isalpha() or ch == "_":
            start = pos
            while pos < n and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            tokens.append(("name", text[start:pos]))
            continue
        if ch in _OPS:
            tokens.append(("op", ch))
            pos += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r} at position {pos}")
    return tokens


class _Parser:
    def __init__(self, tokens, symbols):
        self.tokens = tokens
        self.pos = 0
        self.symbols = symbols

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return (None, None)

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, val = self.next()
        if kind != "op" or val != op:
            raise ExprSyntaxError(f"expected {op!r}, found {val!r}")

    def parse(self):
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ExprSyntaxError(f"trailing input at token {self.peek()[1]!r}")
        return value

    def expr(self):
        kind, val = self.peek()
        value = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.next()
                rhs = self.factor()
                value = value * rhs if val == "*" else value / rhs
            else:
                return value

    def factor(self):
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.next()
            inner = self.factor()
            return inner if val == "+" else -inner

        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind, exp = self.next()
            if kind == "op" and exp == "(":
                kind, exp = self.next()
                self.expect_op(")")
            if kind != "int":
                raise ExprSyntaxError("exponent must be a nonnegative integer")
            return base ** exp
        return base

    def atom(self):
        kind, val = self.next()
        if kind == "int":
            return Fraction(val)
        if kind == "name":
            if val == "i" and "i" not in self.symbols:
                return GaussRational(0, 1)
            if val not in self.symbols:
                known = ", ".join(sorted(k for k in self.symbols)) or "none"
                raise ExprSyntaxError(
                    f"undeclared symbol {val!r} (declared: {known})"
                )
            return self.symbols[val]
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ExprSyntaxError(f"unexpected token {val!r}")


def parse_expression(text: str, symbols: dict):
    """Evaluate a grammar expression with the given symbol bindings."""
    return _Parser(tokenize(text), symbols).parse()


def parse_rational(text: str) -> Fraction:
    """Parse p, -p, or p/q into an exact Fraction (CLI theta inputs)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ExprSyntaxError(f"bad rational literal {text!r}") from exc
