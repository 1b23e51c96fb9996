import random
from fractions import Fraction

from recprs.nested import nested_matrix, nested_subres_poly
from recprs.prs import compute_recursive_prs
from recprs.recsubres import recsubres_poly, scale_ledger, valid_degrees
from recprs.subres import subres_poly

from helpers import instances, oracle_ledger
from oracles import leibniz_det, sylvester_by_definition
from strategies import gcd4_instance
from worked_example import EX1_LEVELS


def A_by_border(f, g, j):
    """Coefficient A_j of S_4(F, G) as the bordered 3x3 minor."""
    a = {i: f.coeff(i) for i in range(-1, 7)}
    b = {i: g.coeff(i) for i in range(-1, 6)}
    return leibniz_det([[a[6], b[5], 0], [a[5], b[4], b[5]], [a[j], b[j - 1], b[j]]])


class TestNested:
    def test_level_one(self, ex1):
        for j in valid_degrees(ex1, 1):
            assert nested_subres_poly(ex1, 1, j) == subres_poly(ex1.f, ex1.g, j)
            assert nested_matrix(ex1, 1, j).matrix.tolist() == sylvester_by_definition(
                ex1.f.desc(), ex1.g.desc(), j)

    def test_example_lemma(self, ex1):
        b1 = Fraction(-5625, 4)  # S_5(P, P') / P_4^(1)
        s3 = subres_poly(*EX1_LEVELS[1][:2], 3)
        assert nested_subres_poly(ex1, 2, 3) == s3.scale(b1 ** 3)

    def test_gcd4_shape_and_entries(self):
        rng = random.Random(40)
        for _ in range(10):
            f, g = gcd4_instance(rng)
            rprs = compute_recursive_prs(f, g)
            assert rprs.j(1) == 4
            nm = nested_matrix(rprs, 2, 2)
            assert nm.matrix.shape == (5, 3)
            A = {j: A_by_border(f, g, j) for j in range(5)}
            expected = [
                [A[4], 4 * A[4], 0],
                [A[3], 3 * A[3], 4 * A[4]],
                [A[2], 2 * A[2], 3 * A[3]],
                [A[1], A[1], 2 * A[2]],
                [A[0], 0, A[1]],
            ]
            assert nm.matrix.tolist() == expected
            assert nm.provenance[:3] == ("A[4]", "4*A[4]", "0")
            assert nm.provenance[3:6] == ("A[3]", "3*A[3]", "4*A[4]")

    def test_lemma_random(self, rule):
        for rprs in instances(13, 30, rule):
            ref = oracle_ledger(rprs)
            for k in range(1, rprs.t + 1):
                p1, p2 = rprs.level(k).elements[:2]
                for j in valid_degrees(rprs, k):
                    f = ref["Rtilde"][k - 1] ** ref["b"](k, j)
                    assert nested_subres_poly(rprs, k, j) == subres_poly(p1, p2, j).scale(f)

    def test_whole_matrix_scaling(self, rule):
        for rprs in instances(14, 30, rule):
            ref = oracle_ledger(rprs)
            for k in range(2, rprs.t + 1):
                p1, p2 = rprs.level(k).elements[:2]
                for j in valid_degrees(rprs, k):
                    got = nested_matrix(rprs, k, j).matrix.tolist()
                    base = sylvester_by_definition(p1.desc(), p2.desc(), j)
                    assert got == [[ref["Rtilde"][k - 1] * e for e in row] for row in base]

    def test_sign_equivalence(self, rule):
        for rprs in instances(15, 30, rule):
            led = scale_ledger(rprs)
            for k in range(1, rprs.t + 1):
                for j in valid_degrees(rprs, k):
                    sign = led.Rprime[k - 1] ** led.b(k, j) * led.r(k, j)
                    assert sign in (1, -1)
                    assert recsubres_poly(rprs, k, j) == nested_subres_poly(rprs, k, j).scale(sign)
