"""Dense univariate polynomials over the rationals.

Coefficients are stored in ascending powers with no trailing zeros, so the
zero polynomial has an empty coefficient tuple and the degree
:data:`NEG_INF`.
"""

from fractions import Fraction
from functools import total_ordering

from .errors import DegreeTooSmall, DivisionByZeroPoly, ZeroPolynomial
from .exact_arith import as_rational

__all__ = ["NEG_INF", "Poly", "coeff_vector"]


@total_ordering
class _NegInfDegree:
    """Degree of the zero polynomial.

    Compares below every integer but supports no arithmetic.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        if other is self:
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "NEG_INF"

    def __reduce__(self):
        return (_NegInfDegree, ())


NEG_INF = _NegInfDegree()


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim([as_rational(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, coeffs):
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", _trim(coeffs))
        return p

    @classmethod
    def from_desc(cls, coeffs):
        """Build from coefficients listed highest degree first."""
        return cls(list(coeffs)[::-1])

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def from_roots(cls, roots, lc=1):
        p = cls.constant(lc)
        for r in roots:
            p = p * cls((-as_rational(r), 1))
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("leading coefficient of the zero polynomial")
        return self.coeffs[-1]

    def coeff(self, power):
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else Fraction(0)

    def desc(self):
        """Coefficients highest degree first (empty for zero)."""
        return self.coeffs[::-1]

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs])

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative int")
        result, base = Poly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c):
        c = as_rational(c)
        if c == 0:
            return Poly()
        return Poly._raw([c * x for x in self.coeffs])

    def derivative(self):
        return Poly._raw([i * c for i, c in enumerate(self.coeffs)][1:])

    def divrem(self, q):
        """Return ``(quotient, remainder)`` with ``self = quotient*q + remainder``."""
        if not q.coeffs:
            raise DivisionByZeroPoly("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(q.coeffs) - 1
        if len(rem) - 1 < dq:
            return Poly(), self
        inv_lc = 1 / q.coeffs[-1]
        quot = [Fraction(0)] * (len(rem) - dq)
        qc = q.coeffs
        for s in range(len(rem) - 1 - dq, -1, -1):
            c = rem[s + dq] * inv_lc
            quot[s] = c
            if c:
                for i in range(dq + 1):
                    rem[s + i] -= c * qc[i]
        return Poly._raw(quot), Poly._raw(rem[:dq])

    def __floordiv__(self, q):
        return self.divrem(q)[0]

    def __mod__(self, q):
        return self.divrem(q)[1]

    def monic(self):
        return self.scale(1 / self.lc())

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if power == 0:
                body = str(mag)
            else:
                mono = "x" if power == 1 else f"x^{power}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(v):
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Fraction)):
        return Poly((v,))
    return NotImplemented


def coeff_vector(p, declared_degree):
    """Coefficients of ``p`` highest power first, zero-padded to ``declared_degree``."""
    if p.coeffs and p.degree > declared_degree:
        raise DegreeTooSmall(f"degree {p.degree} exceeds declared degree {declared_degree}")
    if declared_degree < 0:
        raise DegreeTooSmall("declared degree must be non-negative")
    return tuple(p.coeff(i) for i in range(declared_degree, -1, -1))
