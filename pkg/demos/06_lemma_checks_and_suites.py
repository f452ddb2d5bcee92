# The verifier module: executable finite-level checks of the supporting
# lemmas, plus seeded randomized suites whose failures would always indicate
# a bug (they are theorem-backed) and replay deterministically.

from fthresh import (
    Ideal,
    QuotientRing,
    check_colon_lemma,
    check_lemma22,
    check_monotonicity,
    check_reduction,
    check_superficial,
    check_theorem_A_randomized,
)

plane = QuotientRing(2, ["x", "y"])
node = QuotientRing(2, ["x", "y"], ["x*y"])

# (m^{n+1} : x) = m^n needs in(x) regular on the tangent cone: x + y works on
# the node, x alone is a zerodivisor there and the check says so
print("colon lemma, x on the plane:   ", check_colon_lemma(plane, plane.parse("x"), 3).verdict)
print("colon lemma, x+y on the node:  ", check_colon_lemma(node, node.parse("x+y"), 3).verdict)
print("colon lemma, x on the node:    ", check_colon_lemma(node, node.parse("x"), 3).verdict)

# reductions: (x+y) rescues the node from degree 1 on, (x^2, y^2) never does
print("reduction by (x+y) on the node:", check_reduction(Ideal(node, ["x+y"]), 4).details)
print("reduction by (x^2,y^2):        ", check_reduction(Ideal(plane, ["x^2", "y^2"]), 4).verdict)

# superficial elements: same split, with the failing colon witness reported
print("superficial x+y on the node:   ", check_superficial(node.parse("x+y"), 3, 4).verdict)
failed = check_superficial(node.parse("x"), 3, 4)
print("superficial x on the node:     ", failed.verdict, "| witnesses:", failed.witnesses[0])

# equal initial ideals through the nilpotency degree force equal ideals;
# unequal ones exhibit the separating graded class
sep = check_lemma22(Ideal(plane, ["x^2", "y^2"]), Ideal(plane, ["x^2", "x*y", "y^2"]))
print("lemma22 on (x^2,y^2) vs m^2:   ", sep.details)

# randomized suites: monotonicity of nu in both arguments plus Frobenius
# scaling, and the graded-fiber comparison over random hypersurfaces
print("monotonicity, 10 trials:", check_monotonicity(plane, 10, 2, seed=0).verdict)
print("graded comparison, 10 random hypersurfaces:",
      check_theorem_A_randomized(2, 10, 2, seed=0).verdict)
