"""Seeded random inputs for property runs and ``verify --seed``."""

import random
from fractions import Fraction

from .poly import Poly

__all__ = [
    "random_defective_pair",
    "random_pair",
    "random_poly",
    "random_recursive_input",
    "random_sturm_input",
]


def random_poly(rng, degree, bound=5, sparsity=0.0):
    """Integer-coefficient polynomial of exact ``degree``."""
    coeffs = []
    for _ in range(degree):
        coeffs.append(0 if rng.random() < sparsity else rng.randint(-bound, bound))
    lead = 0
    while lead == 0:
        lead = rng.randint(-bound, bound)
    return Poly(coeffs + [lead])


def random_defective_pair(rng, max_degree=8):
    """``(F, G)`` whose remainder sequence has prescribed degrees with random
    gaps, built backwards: ``P_{i-2} = q P_{i-1} + c P_i``."""
    m = rng.randint(3, max_degree)
    degs = [m]
    while degs[-1] > 0:
        degs.append(max(0, degs[-1] - rng.choice([1, 1, 2, 3])))
    if len(degs) == 2:  # a single gap m -> 0 gives a constant G
        degs = [m, m - 1, 0]
    degs = degs[: rng.randint(3, len(degs))] if len(degs) > 3 else degs
    elems = [random_poly(rng, degs[-1], bound=4), random_poly(rng, degs[-2], bound=4)]
    for d in reversed(degs[:-2]):
        q = random_poly(rng, d - elems[-1].degree, bound=3)
        c = rng.choice([1, -1, 2, -3, Fraction(1, 2)])
        elems.append(q * elems[-1] + elems[-2].scale(c))
    return elems[-1], elems[-2]


def random_pair(rng, max_degree=8, sparsity=None):
    """Random ``(F, G)`` with ``deg F > deg G >= 1``.  About a quarter of
    the draws come from :func:`random_defective_pair`."""
    if sparsity is None:
        if rng.random() < 0.25:
            return random_defective_pair(rng, max_degree)
        sparsity = rng.choice([0.0, 0.0, 0.4, 0.6])
    m = rng.randint(2, max_degree)
    n = rng.randint(1, m - 1)
    return random_poly(rng, m, sparsity=sparsity), random_poly(rng, n, sparsity=sparsity)


def _repeated_part(rng, degree):
    """Product of linear factors with small integer roots; repeated roots likely."""
    roots = [rng.randint(-3, 3) for _ in range(degree)]
    return Poly.from_roots(roots)


def random_sturm_input(rng, max_degree=8):
    """``(P, P')`` with repeated real roots and possibly an irreducible quadratic."""
    m = rng.randint(3, max_degree)
    quad = m >= 4 and rng.random() < 0.3
    p = _repeated_part(rng, m - 2 if quad else m)
    if quad:
        p = p * Poly((rng.randint(1, 4), rng.randint(-2, 2), 1))
    p = p.scale(Fraction(rng.choice([1, 2, 3, -1, -2]), rng.choice([1, 1, 2, 3])))
    return p, p.derivative()


def random_recursive_input(rng, max_degree=8):
    """``(D*A, D*B)`` sharing a factor ``D`` with repeated roots, or a
    ``(P, P')`` pair; either way the recursive PRS usually has several levels."""
    if rng.random() < 0.5:
        return random_sturm_input(rng, max_degree)
    m = rng.randint(3, max_degree)
    dd = rng.randint(1, m - 2)
    d = _repeated_part(rng, dd)
    while True:
        a = random_poly(rng, m - dd, bound=4)
        b = random_poly(rng, rng.randint(0, m - dd - 1), bound=4)
        f, g = d * a, d * b
        if g.degree >= 1:
            return f, g


def seeded(seed):
    return random.Random(seed)
