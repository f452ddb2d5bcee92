"""nu-functions, F-threshold brackets, and finite-level threshold comparison.

nu(a, J, e) is the largest t with a^t not contained in the bracket power
J^[p^e] (computed through lifted ideals, so quotient presentations just
work). Scans ascend t and reuse p * nu(p^(e-1)) as a verified warm start;
each record carries a dual certificate that is re-checked on construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graded import GradedPresentation, gr_of_ideal, gr_presentation, hilbert_data
from .ideals import Ideal
from .ring import Polynomial, QuotientRing, RingError, monomials_of_degree


@dataclass
class NuRecord:
    """One certified value nu = nu^J_a(q): a^nu escapes J^[q], a^(nu+1) does not.

    A unit bracket ideal absorbs every power; that degenerate case is recorded
    as nu = -1 with a vacuous witness and flagged in caveats.
    """

    e: int
    q: int
    nu: int
    witness: Polynomial | None
    caveats: tuple = ()

    def verify(self, a: Ideal, target: Ideal) -> bool:
        """Re-check both certificates against the bracket ideal."""
        if self.nu < 0:
            return target.is_unit()
        if self.witness is None or target.contains_poly(self.witness):
            return False
        if _all_monomial(a.generators):
            return _first_escaping(a, self.nu + 1, target) is None
        return _scan_frontier(a, target)[0] == self.nu


@dataclass
class ThresholdEstimate:
    """nu records plus rigorous rational brackets for the F-threshold c^J(a).

    lower = max nu/q; upper = min (nu + 1 + mu)/q with mu the generator count
    of a (pigeonhole containment a^(sq' + mu(q'-1)) inside (a^s)^[q']).
    """

    records: list
    mu: int
    lower: Fraction
    upper: Fraction
    guess: Fraction | None
    caveats: tuple = ()

    def row_bounds(self):
        out = []
        for r in self.records:
            out.append((r, Fraction(r.nu, r.q), Fraction(r.nu + 1 + self.mu, r.q)))
        return out


def _is_maximal_ideal(a: Ideal) -> bool:
    vars_terms = {frozenset(v.terms.items()) for v in a.ring.gens()}
    return {frozenset(g.terms.items()) for g in a.generators} == vars_terms


def _all_monomial(polys) -> bool:
    return all(len(g.terms) == 1 for g in polys)


def _power_products(a: Ideal, t: int):
    """Generators of a^t; lazy monomial enumeration when a is the maximal ideal."""
    if t == 0:
        yield a.ring.one()
        return
    if _is_maximal_ideal(a):
        ring = a.ring
        for m in monomials_of_degree(ring.nvars, t):
            yield ring.monomial(m)
        return
    yield from a.power_generators(t)


def _first_escaping(a: Ideal, t: int, target: Ideal, seeds=None):
    """An element of a^t * (seeds) outside the target ideal, or None if contained."""
    if seeds is None:
        for g in _power_products(a, t):
            if not target.contains_poly(g):
                return g
        return None
    for g in _power_products(a, t):
        for s in seeds:
            h = g * s
            if not target.contains_poly(h):
                return h
    return None


def _scan_monomial(a: Ideal, target: Ideal, warm_start: int, seeds=None):
    """Ascending sweep for all-monomial data, chaining witnesses across levels.

    Returns None when already a^warm_start * seeds is contained (warm start
    invalid). The escape search at each next level first tries multiples of
    the previous witness, falling back to a full sweep; the final containment
    is always established by a full sweep.
    """
    t = warm_start
    witness = _first_escaping(a, t, target, seeds)
    if witness is None:
        return None
    while True:
        nxt = None
        for g in a.generators:
            h = witness * g
            if not target.contains_poly(h):
                nxt = h
                break
        if nxt is None:
            nxt = _first_escaping(a, t + 1, target, seeds)
        if nxt is None:
            return t, witness
        t, witness = t + 1, nxt


def _scan_frontier(a: Ideal, target: Ideal, seeds=None):
    """Ascending scan tracking normal forms of products modulo the target.

    Levels are deduplicated after reduction, so their size is bounded by the
    target's staircase no matter how many raw generator products exist.
    Returns (t_max, witness) where witness is an actual product escaping at
    t_max (reconstructed from its factor chain).
    """
    ring = a.ring
    if seeds is None:
        seeds = [ring.one()]
    frontier = []
    seen = set()
    for i, s in enumerate(seeds):
        nf = target.normal_form(s)
        key = frozenset(nf.terms.items())
        if nf.is_zero() or key in seen:
            continue
        seen.add(key)
        frontier.append((nf, (("seed", i),)))
    if not frontier:
        return -1, None
    t = 0
    best = frontier[0]
    while True:
        nxt = []
        seen = set()
        for nf, chain in frontier:
            for gi, g in enumerate(a.generators):
                red = target.normal_form(nf * g)
                if red.is_zero():
                    continue
                key = frozenset(red.terms.items())
                if key in seen:
                    continue
                seen.add(key)
                nxt.append((red, chain + ((("gen", gi)),)))
        if not nxt:
            product = seeds[best[1][0][1]]
            for kind, gi in best[1][1:]:
                product = product * a.generators[gi]
            return t, product
        frontier = nxt
        best = frontier[0]
        t += 1


def _check_preconditions(a: Ideal, J: Ideal):
    if a.ring != J.ring:
        raise RingError("ideals live in different rings")
    ring = a.ring
    m_plus_l = ring.power_of_maximal_ideal(1)
    for g in a.generators:
        if not m_plus_l.contains_poly(g):
            raise RingError(f"generator {g} is not in the maximal ideal")
    if not J.is_unit() and not J.is_m_primary():
        raise RingError("the bracket ideal must be m-primary")


def nu(a: Ideal, J: Ideal, e: int, warm_start: int | None = None) -> NuRecord:
    """Exact nu^J_a(p^e) by upward scan with a verified warm start."""
    if e < 0:
        raise RingError("e must be nonnegative")
    _check_preconditions(a, J)
    ring = a.ring
    q = ring.p**e
    target = J.bracket(q)
    caveats: list = []
    if target.is_unit():
        record = NuRecord(e, q, -1, None, ("unit-bracket-ideal",))
        if not record.verify(a, target):
            raise RingError("certificate re-check failed for the unit-bracket case")
        return record
    if _all_monomial(a.generators):
        result = None
        if warm_start:
            result = _scan_monomial(a, target, warm_start)
            if result is None:
                caveats.append("warm-start-fallback")
        if result is None:
            result = _scan_monomial(a, target, 0)
        if result is None:
            raise RingError("even a^0 = R is contained in a proper bracket power")
        t, witness = result
    else:
        t, witness = _scan_frontier(a, target)
        if t < 0:
            raise RingError("even a^0 = R is contained in a proper bracket power")
    record = NuRecord(e, q, t, witness, tuple(caveats))
    if not record.verify(a, target):
        raise RingError("nu certificate re-check failed; this is a bug")
    return record


def threshold_estimate(
    a: Ideal,
    J: Ideal,
    e_max: int,
    max_denominator: int = 10**6,
) -> ThresholdEstimate:
    """Records for e = 1..e_max plus the rational bracket around c^J(a)."""
    if e_max < 1:
        raise RingError("e_max must be at least 1")
    p = a.ring.p
    records = []
    prev = nu(a, J, 0)
    caveats = set(prev.caveats)
    for e in range(1, e_max + 1):
        rec = nu(a, J, e, warm_start=max(p * prev.nu, 0) if prev.nu >= 0 else None)
        caveats.update(rec.caveats)
        records.append(rec)
        prev = rec
    mu = len(a.generators)
    lower = max(Fraction(r.nu, r.q) for r in records)
    upper = min(Fraction(r.nu + 1 + mu, r.q) for r in records)
    ratios = [Fraction(r.nu, r.q) for r in records]
    if any(x > y for x, y in zip(ratios, ratios[1:])):
        caveats.add("lower-bounds-not-monotone")
    guess = None
    if upper - lower <= 1:
        guess = guess_rational(lower, upper, max_denominator)
    return ThresholdEstimate(records, mu, lower, upper, guess, tuple(sorted(caveats)))


# -- simplest rational in an interval ---------------------------------------


def _simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    n = math.ceil(lo)
    if Fraction(n) <= hi:
        return Fraction(n)
    k = math.floor(lo)
    return k + 1 / _simplest_between(1 / (hi - k), 1 / (lo - k))


def guess_rational(lo, hi, max_denominator: int = 10**6):
    """Simplest rational in [lo, hi] (minimal denominator, then numerator).

    Stern-Brocot descent; None when even the simplest rational needs a
    denominator beyond the bound.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise RingError("empty interval")
    best = _simplest_between(lo, hi)
    if best.denominator > max_denominator:
        return None
    return best


# -- finite-level comparison with the associated graded ring ------------------


@dataclass
class TheoremAReport:
    """Per-level comparison nu^b_m(q) <= nu^I_n(q) against the graded fiber."""

    verdict: str
    reason: str
    local_estimate: ThresholdEstimate | None = None
    graded_estimate: ThresholdEstimate | None = None
    presentation: GradedPresentation | None = None
    counterexample: dict | None = None
    caveats: tuple = ()

    @property
    def nu_table(self):
        rows = []
        if self.local_estimate and self.graded_estimate:
            for loc, grd in zip(self.local_estimate.records, self.graded_estimate.records):
                rows.append((loc.e, loc.q, loc.nu, grd.nu))
        return rows


def verify_theorem_A(
    ring: QuotientRing,
    b: Ideal,
    e_max: int,
    D: int | None = None,
) -> TheoremAReport:
    """Check nu^b_m(p^e) <= nu^I_n(p^e) for e <= e_max, I the initial ideal of b."""
    if not b.is_m_primary():
        raise RingError("b must be m-primary")
    caveats: list = []
    presentation = gr_presentation(ring, D)
    if not presentation.exact:
        D_check = presentation.truncation_degree
        if hilbert_data(ring, D_check) != hilbert_data(presentation, D_check):
            return TheoremAReport(
                "inconclusive",
                "truncated graded presentation fails the Hilbert consistency check",
                presentation=presentation,
            )
        caveats.append("truncated-graded-presentation")
    depth = max(presentation.truncation_degree, b.nilpotency_degree() + 1)
    graded_b = gr_of_ideal(b, presentation, depth)
    if not graded_b.exact:
        caveats.append("truncated-initial-ideal")
    m = ring.maximal_ideal()
    n_ideal = presentation.graded_ring.maximal_ideal()
    local = threshold_estimate(m, b, e_max)
    graded = threshold_estimate(n_ideal, graded_b.ideal, e_max)
    caveats.extend(local.caveats)
    caveats.extend(graded.caveats)
    for loc, grd in zip(local.records, graded.records):
        if loc.nu > grd.nu:
            return TheoremAReport(
                "fail",
                "nu^b_m exceeded nu^I_n; implementation bug or truncation failure",
                local,
                graded,
                presentation,
                {
                    "e": loc.e,
                    "q": loc.q,
                    "nu_local": loc.nu,
                    "nu_graded": grd.nu,
                    "witness": str(loc.witness),
                },
                tuple(caveats),
            )
    return TheoremAReport("pass", "inequality holds at every computed level", local, graded, presentation, None, tuple(caveats))
