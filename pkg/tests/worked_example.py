"""Worked-example values transcribed from the source text."""

from fractions import Fraction

from recprs.poly import Poly


def desc(*items):
    return Poly.from_desc([Fraction(str(v)) for v in items])


# P(x) = (x+2)^2 ((x-3)(x+1))^3
EX1_P = Poly.from_roots([-2, -2, 3, 3, 3, -1, -1, -1])

EX1_LEVELS = (
    (
        desc(1, -2, -17, 16, 115, 22, -279, -324, -108),
        desc(8, -14, -102, 80, 460, 66, -558, -324),
        desc("75/16", "-45/16", -60, "-225/8", "3315/16", "4815/16", "945/8"),
        desc("128/25", "-256/25", "-256/5", "1024/25", "4224/25", "2304/25"),
    ),
    (
        desc("128/25", "-256/25", "-256/5", "1024/25", "4224/25", "2304/25"),
        desc("128/5", "-1024/25", "-768/5", "2048/25", "4224/25"),
        desc("14848/625", "-1536/125", "-88576/625", "-66048/625"),
        desc("12800/841", "-25600/841", "-38400/841"),
    ),
    (
        desc("12800/841", "-25600/841", "-38400/841"),
        desc("25600/841", "-25600/841"),
        desc("51200/841"),
    ),
)

EX1_J = (8, 5, 2, 0)
EX1_PER_LEVEL = (3, 3, 2)

# lambda(L_k, +inf) as printed; the third L_2 entry is printed as 18848/625,
# which disagrees with lc(P_3^(2)) = 14848/625 listed a few lines earlier.
EX1_LAMBDA_PLUS_PRINTED = (
    (Fraction(1), Fraction(8), Fraction(75, 16), Fraction(128, 25)),
    (Fraction(128, 25), Fraction(128, 5), Fraction(18848, 625), Fraction(12800, 841)),
    (Fraction(12800, 841), Fraction(25600, 841), Fraction(51200, 841)),
)
