# F-purity via Fedder's colon criterion, F-pure thresholds via the splitting
# colon (L^[q] : L), and tight-closure membership probes with explicit,
# recorded assumptions.

from fthresh import Ideal, QuotientRing, f_rational_probe, fedder_f_pure, fpt_estimate, tc_member

# Fedder: S/L is F-pure iff (L^[p] : L) escapes m^[p]
node = QuotientRing(2, ["x", "y"], ["x*y"])
cusp_like = QuotientRing(2, ["x", "y"], ["x^3 + y^3"])
print("F_2[x,y]/(xy) F-pure?     ", fedder_f_pure(node))
print("F_2[x,y]/(x^3+y^3) F-pure?", fedder_f_pure(cusp_like))

# fpt brackets: on a regular ring b(q) = nu(q) and the guess is exact
plane = QuotientRing(2, ["x", "y"])
est = fpt_estimate(plane.maximal_ideal(), 3)
print("fpt(m) on F_2[x,y]: records", est.records, " guess", est.guess)

line = QuotientRing(2, ["x"])
est = fpt_estimate(Ideal(line, ["x^2"]), 3)
print("fpt(x^2) on F_2[x]: records", est.records, " guess", est.guess)

# on the node every multiple of the splitting colon collapses: fpt(n) = 0
est = fpt_estimate(node.maximal_ideal(), 3)
print("fpt(n) on the node: records", est.records, " guess", est.guess, " caveats", est.caveats)

# tight closure probes: y escapes (x)* in a regular ring at the first level,
# while z^2 on the Fermat cone survives every checked level (it lies in the
# tight closure, so the cone is not F-rational)
print(tc_member(plane.parse("y"), Ideal(plane, ["x"]), plane.one(), 3).kind)
fermat = QuotientRing(2, ["x", "y", "z"], ["x^3 + y^3 + z^3"])
verdict = tc_member(fermat.parse("z^2"), Ideal(fermat, ["x", "y"]), fermat.parse("x^2"), 3)
print("z^2 against (x,y)^* on the Fermat cone:", verdict.kind, "through e =", verdict.checked_through)

# the probe packages this per socle representative and cross-checks the
# threshold exclusion c^I(J) < dim R
report = f_rational_probe(Ideal(fermat, ["x", "y"]), fermat.parse("x^2"), 3)
print("Fermat cone probe:", report.verdict)
for probe in report.socle_probes:
    print("  socle rep", probe.representative, "->", probe.verdict.kind,
          "| bracket excludes dim:", probe.excludes_dimension)
