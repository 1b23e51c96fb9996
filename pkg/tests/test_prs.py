import random
from fractions import Fraction
from itertools import pairwise

import pytest
import sympy

from recprs.errors import DegreeOrder, ZeroInput
from recprs.instances import random_pair, random_recursive_input
from recprs.poly import Poly
from recprs.prs import compute_prs, compute_recursive_prs, gcd_by_prs, monic_rule, sturm_rule

from oracles import X, from_sympy, to_sympy
from worked_example import EX1_J, EX1_LEVELS, EX1_P

x = Poly.x()


def test_sturm_rule_is_constant():
    r = sturm_rule()
    for k, i in [(1, 3), (2, 4), (7, 11)]:
        assert (r.alpha(k, i), r.beta(k, i, x)) == (1, -1)


def test_monic_rule_uses_remainder():
    r = monic_rule()
    assert r.beta(1, 3, Poly([1, Fraction(-5, 2)])) == Fraction(-5, 2)


class TestComputePrs:
    def test_example_first_level(self):
        prs = compute_prs(EX1_P, EX1_P.derivative(), sturm_rule())
        assert prs.elements == EX1_LEVELS[0]
        assert not prs.complete

    def test_exact_division_stops(self):
        prs = compute_prs(x ** 2 - 1, x - 1)
        assert prs.elements == (x ** 2 - 1, x - 1)

    def test_coprime_complete(self):
        prs = compute_prs(x ** 2 + 1, x, sturm_rule())
        assert prs.elements == (x ** 2 + 1, x, Poly.constant(-1))
        assert prs.complete

    def test_degree_order(self):
        with pytest.raises(DegreeOrder):
            compute_prs(x + 1, x - 1)

    def test_zero_input(self):
        with pytest.raises(ZeroInput):
            compute_prs(x, Poly())

    def test_bad_rule(self):
        from recprs.prs import DivisionRule

        bad = DivisionRule("bad", lambda k, i: 1, lambda k, i, r: 0)
        with pytest.raises(ValueError):
            compute_prs(x ** 3 + 1, x ** 2 + 2, bad)

    def test_step_relation_random(self, rule):
        rng = random.Random(4)
        for _ in range(150):
            f, g = random_pair(rng)
            prs = compute_prs(f, g, rule)
            degs = prs.degrees
            assert all(a > b for a, b in pairwise(degs))
            for idx, ((a, b), q) in enumerate(zip(prs.factors, prs.quotients)):
                i = idx + 3
                p2, p1, p0 = prs.element(i - 2), prs.element(i - 1), prs.element(i)
                assert (p2.scale(a) - q * p1 - p0.scale(b)).is_zero()
            assert prs.complete == (prs.elements[-1].degree == 0)

    def test_metadata_consistent(self, ex1):
        prs = ex1.level(1)
        assert prs.degrees == (8, 7, 6, 5)
        assert prs.leading_coeffs == (1, 8, Fraction(75, 16), Fraction(128, 25))
        assert prs.gaps == (1, 1, 1)
        assert (prs.n(3), prs.c(3), prs.d(2)) == (6, Fraction(75, 16), 1)


class TestRecursivePrs:
    def test_example_levels(self, ex1):
        assert ex1.t == 3
        assert tuple(len(lv) for lv in ex1.levels) == (4, 4, 3)
        for k, level in enumerate(EX1_LEVELS, start=1):
            assert ex1.level(k).elements == level
        assert ex1.j_indices == EX1_J
        assert sum(len(lv) for lv in ex1.levels) == 11

    def test_coprime_single_level(self):
        f, g = x ** 3 - 2, x ** 2 + 1
        r = compute_recursive_prs(f, g)
        assert r.t == 1 and r.level(1) == compute_prs(f, g)

    def test_cube(self):
        f = (x - 1) ** 3
        r = compute_recursive_prs(f, f.derivative())
        assert r.t == 3
        assert r.degrees(1)[-1] == 2 and r.degrees(2)[-1] == 1 and r.degrees(3)[-1] == 0
        for k, root_mult in [(1, 2), (2, 1)]:
            last = r.level(k).elements[-1]
            assert last == ((x - 1) ** root_mult).scale(last.lc())

    def test_linear_top_gives_two_element_level(self):
        f = (x - 1) ** 2 * (x + 3)
        r = compute_recursive_prs(f, f.derivative())
        assert r.level(r.t).degrees == (1, 0)

    def test_square_free_one_level(self):
        rng = random.Random(8)
        for _ in range(40):
            roots = rng.sample(range(-9, 10), rng.randint(2, 7))
            p = Poly.from_roots(roots, lc=rng.randint(1, 4))
            assert compute_recursive_prs(p, p.derivative()).t == 1

    def test_structure_random(self, rule):
        rng = random.Random(12)
        for _ in range(100):
            f, g = random_recursive_input(rng)
            r = compute_recursive_prs(f, g, rule)
            assert r.level(1).elements[:2] == (f, g)
            assert r.complete and r.level(r.t).elements[-1].degree == 0
            js = r.j_indices
            assert all(a > b for a, b in pairwise(js))
            for k in range(2, r.t + 1):
                top = r.level(k - 1).elements[-1]
                assert r.level(k).elements[:2] == (top, top.derivative())
            for k in range(1, r.t + 1):
                lv = r.level(k)
                last = lv.elements[-1]
                assert (lv.element(1) % last).is_zero() and (lv.element(2) % last).is_zero()

    def test_gcd_matches_sympy(self, rule):
        rng = random.Random(21)
        for _ in range(60):
            f, g = random_recursive_input(rng)
            ours = compute_recursive_prs(f, g, rule).level(1).elements[-1]
            ref = from_sympy(sympy.gcd(to_sympy(f), to_sympy(g)))
            assert list(ours.monic().desc()) == [c / ref[0] for c in ref]


class TestGcd:
    def test_example(self):
        g = gcd_by_prs(EX1_P, EX1_P.derivative())
        assert g == EX1_LEVELS[0][3]
        expanded = sympy.expand(sympy.Rational(128, 25) * (X + 2) * (X - 3) ** 2 * (X + 1) ** 2)
        assert list(g.desc()) == from_sympy(sympy.Poly(expanded, X, domain="QQ"))

    def test_same_input(self):
        p = EX1_P
        g = gcd_by_prs(p, p)
        assert g.monic() == p.monic()

    def test_coprime(self):
        assert gcd_by_prs(x ** 2 + 1, x).degree == 0

    def test_swapped_and_equal_degree(self):
        f, g = (x - 1) * (x + 2), (x - 1) * (x + 5)
        assert gcd_by_prs(f, g).monic() == x - 1
        assert gcd_by_prs(x - 1, f).monic() == x - 1

    def test_zero(self):
        with pytest.raises(ZeroInput):
            gcd_by_prs(Poly(), x)
