"""Polynomial remainder sequences and recursive PRS.

A PRS step computes ``alpha*P[i-2] = q*P[i-1] + beta*P[i]``: the remainder
of ``alpha*P[i-2]`` by ``P[i-1]`` divided by ``beta``.  A recursive PRS
restarts from the last element of each level and its derivative until a
level ends in a nonzero constant.
"""

from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeOrder, ZeroInput
from .poly import Poly

__all__ = [
    "RULES",
    "DivisionRule",
    "Prs",
    "RecursivePrs",
    "compute_prs",
    "compute_recursive_prs",
    "gcd_by_prs",
    "monic_rule",
    "sturm_rule",
]


@dataclass(frozen=True)
class DivisionRule:
    """Per-step scale factors ``(alpha, beta)``.

    ``alpha(k, i)`` is applied before dividing; ``beta(k, i, remainder)``
    may inspect the remainder it will divide (the monic rule needs it).
    """

    name: str
    alpha: Callable[[int, int], Fraction]
    beta: Callable[[int, int, Poly], Fraction]

    def __repr__(self):
        return f"DivisionRule({self.name!r})"


def sturm_rule():
    return DivisionRule("sturm", lambda k, i: Fraction(1), lambda k, i, r: Fraction(-1))


def monic_rule():
    return DivisionRule("monic", lambda k, i: Fraction(1), lambda k, i, r: r.lc())


RULES = {"sturm": sturm_rule, "monic": monic_rule}


@dataclass(frozen=True)
class Prs:
    elements: tuple  # P_1 .. P_l
    factors: tuple  # (alpha_i, beta_i) for i = 3 .. l
    quotients: tuple  # q_{i-1} for i = 3 .. l
    rule: str = ""

    def __len__(self):
        return len(self.elements)

    @property
    def complete(self):
        return self.elements[-1].degree == 0

    def element(self, i):
        """``P_i`` with the 1-based index used throughout the theory."""
        return self.elements[i - 1]

    def alpha(self, i):
        return self.factors[i - 3][0]

    def beta(self, i):
        return self.factors[i - 3][1]

    @property
    def degrees(self):
        return tuple(p.degree for p in self.elements)

    @property
    def leading_coeffs(self):
        return tuple(p.lc() for p in self.elements)

    @property
    def gaps(self):
        d = self.degrees
        return tuple(d[i] - d[i + 1] for i in range(len(d) - 1))

    def n(self, i):
        return self.elements[i - 1].degree

    def c(self, i):
        return self.elements[i - 1].lc()

    def d(self, i):
        return self.n(i) - self.n(i + 1)


def compute_prs(f, g, rule=None, level=1):
    """Complete PRS of ``f`` and ``g`` under ``rule`` (Sturm by default)."""
    if f.is_zero() or g.is_zero():
        raise ZeroInput("PRS inputs must be nonzero")
    if f.degree <= g.degree:
        raise DegreeOrder(f"PRS needs deg f > deg g, got {f.degree} <= {g.degree}")
    rule = rule or sturm_rule()
    elems, factors, quots = [f, g], [], []
    i = 3
    while elems[-1].degree > 0:
        alpha = Fraction(rule.alpha(level, i))
        if alpha == 0:
            raise ValueError(f"division rule {rule.name} returned alpha = 0 at step {i}")
        q, r = elems[-2].scale(alpha).divrem(elems[-1])
        if r.is_zero():
            break
        beta = Fraction(rule.beta(level, i, r))
        if beta == 0:
            raise ValueError(f"division rule {rule.name} returned beta = 0 at step {i}")
        elems.append(r.scale(1 / beta))
        factors.append((alpha, beta))
        quots.append(q)
        i += 1
    return Prs(tuple(elems), tuple(factors), tuple(quots), rule.name)


@dataclass(frozen=True)
class RecursivePrs:
    levels: tuple  # Prs for k = 1 .. t

    @property
    def t(self):
        return len(self.levels)

    def level(self, k):
        return self.levels[k - 1]

    @property
    def f(self):
        return self.levels[0].elements[0]

    @property
    def g(self):
        return self.levels[0].elements[1]

    @property
    def m(self):
        return self.f.degree

    @property
    def n(self):
        return self.g.degree

    @property
    def j_indices(self):
        """``(j_0, j_1, ..., j_t)`` with ``j_0 = m`` and ``j_k`` the degree
        closing level ``k``."""
        return (self.m,) + tuple(lv.elements[-1].degree for lv in self.levels)

    def j(self, k):
        return self.j_indices[k]

    def element(self, k, i):
        return self.levels[k - 1].elements[i - 1]

    def degrees(self, k):
        return self.levels[k - 1].degrees

    def leading_coeffs(self, k):
        return self.levels[k - 1].leading_coeffs

    def gaps(self, k):
        return self.levels[k - 1].gaps

    def a(self, k, i, power):
        """Coefficient of ``x^power`` in ``P_i^{(k)}``."""
        return self.element(k, i).coeff(power)

    @property
    def complete(self):
        return self.levels[-1].complete

    def __len__(self):
        return sum(len(lv) for lv in self.levels)


def compute_recursive_prs(f, g, rule=None):
    """Complete recursive PRS of ``f`` and ``g``.

    A constant ``g`` is accepted and gives a single two-element level.
    """
    rule = rule or sturm_rule()
    levels = [compute_prs(f, g, rule, level=1)]
    while not levels[-1].complete:
        top = levels[-1].elements[-1]
        levels.append(compute_prs(top, top.derivative(), rule, level=len(levels) + 1))
    return RecursivePrs(tuple(levels))


def gcd_by_prs(f, g, rule=None):
    """Last element of the complete PRS: ``gamma * gcd(f, g)``, not normalized."""
    if f.is_zero() or g.is_zero():
        raise ZeroInput("gcd of a zero polynomial")
    if f.degree < g.degree:
        f, g = g, f
    if f.degree == g.degree:
        r = f % g
        if r.is_zero():
            return g
        f, g = g, r
    if g.degree == 0:
        return g
    return compute_prs(f, g, rule).elements[-1]
