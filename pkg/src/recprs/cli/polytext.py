"""Polynomial text formats.

Two inputs are accepted:

* an expression in ``x`` built from integer literals, ``+ - * / ^``,
  parentheses and implicit multiplication (``4x^7``, ``2(x+1)(x-3)``);
* a JSON array of coefficients, highest degree first, either inline or as
  ``@path``.  Entries may be integers or exact strings such as ``"-3/2"``.

``format_poly`` prints an expression that :func:`parse_poly` maps back to
the same polynomial.
"""

import json
import re
from fractions import Fraction

from ..errors import PolyParseError
from ..poly import Poly

__all__ = ["format_poly", "parse_coeff_array", "parse_expression", "parse_poly"]

_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|(\*\*|[-+*/^()]))")
_EXP_LIMIT = 10_000


def _tokenize(text):
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolyParseError(f"unexpected character {text[pos:].lstrip()[:1]!r} at offset {pos}")
        num, var, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif var is not None:
            tokens.append(("x", None))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok != ("op", op):
            raise PolyParseError(f"expected {op!r}")

    def expr(self):
        out = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self):
        out = self.unary()
        while True:
            tok = self.peek()
            if tok in (("op", "*"), ("op", "/")):
                self.take()
                rhs = self.unary()
                if tok[1] == "*":
                    out = out * rhs
                else:
                    if rhs.is_zero() or rhs.degree > 0:
                        raise PolyParseError("division only by a nonzero constant")
                    out = out.scale(1 / rhs.coeff(0))
            elif tok[0] == "x" or tok == ("op", "("):
                out = out * self.power()  # implicit multiplication
            else:
                return out

    def unary(self):
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            return -self.unary()
        if tok == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise PolyParseError("exponent must be a nonnegative integer literal")
            if tok[1] > _EXP_LIMIT:
                raise PolyParseError(f"exponent {tok[1]} too large")
            return base ** tok[1]
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return Poly.constant(val)
        if kind == "x":
            return Poly.x()
        if (kind, val) == ("op", "("):
            inner = self.expr()
            self.expect(")")
            return inner
        raise PolyParseError("unexpected end of input" if kind == "end" else f"unexpected {val!r}")


def parse_expression(text):
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty polynomial expression")
    parser = _Parser(tokens)
    out = parser.expr()
    if parser.i != len(tokens):
        raise PolyParseError(f"trailing input after token {parser.i}")
    return out


def _coeff(value):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise PolyParseError(f"coefficient {value!r} must be an integer or an exact string")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise PolyParseError(f"bad coefficient {value!r}") from None


def parse_coeff_array(data):
    """Coefficients highest degree first, e.g. ``["1", "-3/2", 0]``."""
    if not isinstance(data, list) or not data:
        raise PolyParseError("coefficient array must be a nonempty JSON list")
    return Poly.from_desc([_coeff(v) for v in data])


def parse_poly(text):
    """Parse an expression, an inline JSON array, or ``@file``."""
    if text.startswith("@"):
        try:
            with open(text[1:], encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise PolyParseError(f"cannot read {text[1:]}: {exc.strerror}") from None
        text = raw.strip()
        if not text.startswith("["):
            raise PolyParseError("@file must hold a JSON coefficient array")
    if text.lstrip().startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PolyParseError(f"invalid JSON: {exc.msg}") from None
        return parse_coeff_array(data)
    return parse_expression(text)


def format_poly(p):
    """Expression text; ``parse_poly(format_poly(p)) == p``."""
    return str(p)
