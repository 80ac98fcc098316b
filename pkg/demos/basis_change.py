"""
Ubar, Ybar and the extended polychromate
========================================

Ubar's coefficients are Ybar's coefficients in the paired power-sum basis.
Rewriting them in the paired augmented monomial basis gives the extended
polychromate's coefficients.
"""

from fractions import Fraction

from gpoly import catalog
from gpoly import equivalence as eq
from gpoly import invariants as inv

g = catalog.path2()

ub = inv.ubar(g)
yp = eq.ubar_to_ybar(ub)
ym = eq.p_to_m(yp)
chi = eq.ybar_to_extended_polychromate(yp)

print("Ubar        :", ub.canonical_string())
print("Ybar (pbar) :", yp.to_text())
print("Ybar (mbar) :", ym.to_text())
print("chi-bar     :", chi.canonical_string())
print("direct      :", inv.extended_polychromate(g).canonical_string())

# a single basis element: pbar[(2,1)] in the mbar basis
print("pbar[(2,1)] =", eq.paired_p_to_m(((2, 1),)))

# both expansions are the same function; check at a rational point with N = 3
x = [Fraction(1, 2), Fraction(2), Fraction(-1, 3)]
t = [Fraction(3), Fraction(0), Fraction(1, 5)]
print("p-side value:", yp.evaluate(x, t))
print("m-side value:", ym.evaluate(x, t))
print("colourings  :", inv.ybar_evaluate_oracle(g, x, t))
