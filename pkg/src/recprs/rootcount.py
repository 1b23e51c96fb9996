"""Counting real roots with multiplicity from a recursive Sturm sequence."""

from dataclasses import dataclass
from itertools import pairwise

from .errors import ConstantInput, EmptySequence, ZeroPolynomial
from .prs import compute_recursive_prs, sturm_rule

__all__ = [
    "RootCount",
    "SignSequence",
    "count_real_roots_with_multiplicity",
    "lambda_at_infinity",
    "root_count_report",
    "sign_variations",
]


@dataclass(frozen=True)
class SignSequence:
    values: tuple

    def __post_init__(self):
        if any(v == 0 for v in self.values):
            raise ValueError("sign sequences hold nonzero values only")

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def lambda_at_infinity(level, sign):
    """Leading coefficients of a PRS level as seen at ``+inf`` (``sign=+1``)
    or ``-inf`` (``sign=-1``, each multiplied by ``(-1)^degree``)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    vals = []
    for p in level.elements:
        c = p.lc()
        vals.append(-c if sign < 0 and p.degree % 2 else c)
    return SignSequence(tuple(vals))


def sign_variations(s):
    values = tuple(s)
    if not values:
        raise EmptySequence("sign variations of an empty sequence")
    return sum(1 for a, b in pairwise(values) if (a < 0) != (b < 0))


@dataclass(frozen=True)
class RootCount:
    total: int
    per_level: tuple
    rprs: object


def root_count_report(p):
    if p.is_zero():
        raise ZeroPolynomial("root count of the zero polynomial")
    if p.degree < 1:
        raise ConstantInput("root count needs degree >= 1")
    rprs = compute_recursive_prs(p, p.derivative(), sturm_rule())
    per_level = tuple(
        sign_variations(lambda_at_infinity(lv, -1)) - sign_variations(lambda_at_infinity(lv, 1))
        for lv in rprs.levels
    )
    return RootCount(sum(per_level), per_level, rprs)


def count_real_roots_with_multiplicity(p):
    """Number of real roots of ``p`` counted with multiplicity."""
    return root_count_report(p).total
