#!/usr/bin/env python3
"""Regenerate the frozen small-x Taylor coefficients in mirroratom.kernels.

The brace functions are combinations of

    C(x) = cos(2x)/(2x^2) - sin(2x)/(4x^3)
         = sum_{m>=0} (-1)^(m+1) 2^(2m+1) (2m+2) / (2m+3)!  x^(2m)
    S(x) = sin(2x)/(2x)
         = sum_{m>=0} (-1)^m 4^m / (2m+1)!  x^(2m)

namely 2/3 + C, 1/3 + C + S, 1/3 - C/2 and 1/3 - C - S.  Everything is done
with exact rationals and rounded to double once, so the printed values can be
pasted verbatim into kernels._SERIES.
"""

from fractions import Fraction
from math import factorial

M = 14  # highest retained power is x^(2M)

C = [Fraction((-1) ** (m + 1) * 2 ** (2 * m + 1) * (2 * m + 2),
              factorial(2 * m + 3)) for m in range(M + 1)]
S = [Fraction((-1) ** m * 4 ** m, factorial(2 * m + 1)) for m in range(M + 1)]

BRACES = {
    "(BoundaryCondition.DIRICHLET, MotionAxis.PARALLEL)":
        [Fraction(2, 3) + C[0]] + C[1:],
    "(BoundaryCondition.DIRICHLET, MotionAxis.PERPENDICULAR)":
        [Fraction(1, 3) + C[0] + S[0]] + [C[m] + S[m] for m in range(1, M + 1)],
    "(BoundaryCondition.NEUMANN, MotionAxis.PARALLEL)":
        [Fraction(1, 3) - C[0] / 2] + [-C[m] / 2 for m in range(1, M + 1)],
    "(BoundaryCondition.NEUMANN, MotionAxis.PERPENDICULAR)":
        [Fraction(1, 3) - C[0] - S[0]] + [-C[m] - S[m] for m in range(1, M + 1)],
}

if __name__ == "__main__":
    for key, coeffs in BRACES.items():
        print(f"{key}: (")
        for c in coeffs:
            if c == 0:
                print("    0.0,")
            else:
                print(f"    {c.numerator} / {c.denominator},")
        print("),")
