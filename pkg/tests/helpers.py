"""Instance generators and independent ledger recomputation for tests."""

import random
from fractions import Fraction

from recprs.instances import random_recursive_input
from recprs.prs import compute_recursive_prs

from oracles import ledger_by_recurrence, theorem1


def instances(seed, count, rule=None):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        f, g = random_recursive_input(rng)
        out.append(compute_recursive_prs(f, g, rule))
    return out


def B_oracle(prs):
    """S_{n_l}(P_1, P_2) = B * P_l: Theorem-1 product, or lc(P_2)^(d_1-1) for two elements."""
    l = len(prs)
    if l == 2:
        return Fraction(prs.c(2)) ** (prs.d(1) - 1)
    n = [None] + list(prs.degrees)
    c = [None] + list(prs.leading_coeffs)
    a = {q + 3: x for q, (x, _) in enumerate(prs.factors)}
    bt = {q + 3: y for q, (_, y) in enumerate(prs.factors)}
    return theorem1(n, c, a, bt, l, "n_i")


def oracle_ledger(rprs):
    return ledger_by_recurrence(rprs.levels, rprs.m, rprs.n, rprs.j_indices,
                                lambda k: B_oracle(rprs.level(k)))
