"""Executable finite-level checks of the colon/reduction/superficial lemmas,
threshold monotonicity, and the graded-fiber comparison, on concrete and
seeded random inputs.

Theorem-backed checks must never fail; a fail report always carries a
replayable witness (ring, ideals, level, and the seed that produced them).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .frobenius import nu, verify_theorem_A
from .graded import (
    AtLeast,
    _stabilized_pieces,
    gr_presentation,
    initial_form,
    ord_of,
)
from .ideals import Ideal, zero_ideal
from .ring import Polynomial, QuotientRing, RingError, monomials_of_degree


@dataclass
class CheckReport:
    name: str
    verdict: str  # "pass" | "fail" | "inconclusive"
    inputs: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    seeds: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)


# -- graded multiplication-map rank helper -------------------------------------


def _graded_piece_basis(graded_ring: QuotientRing, degree: int):
    handle = zero_ideal(graded_ring)
    handle.groebner_basis()
    leads = [lead for lead, _ in handle._gb_leads]
    from .ring import monomial_divides

    return [
        m
        for m in monomials_of_degree(graded_ring.nvars, degree)
        if not any(monomial_divides(lead, m) for lead in leads)
    ]


def _multiplication_injective_through(graded_ring: QuotientRing, form: Polynomial, bound: int) -> bool:
    """Rank test: multiplication by a degree-1 form is injective in degrees <= bound."""
    handle = zero_ideal(graded_ring)
    for i in range(bound + 1):
        src = _graded_piece_basis(graded_ring, i)
        dst = _graded_piece_basis(graded_ring, i + 1)
        if not src:
            continue
        index = {m: j for j, m in enumerate(dst)}
        mat = np.zeros((len(src), len(dst)), dtype=np.int64)
        for r, m in enumerate(src):
            image = handle.normal_form(graded_ring.monomial(m) * form)
            for mm, c in image.terms.items():
                mat[r, index[mm]] = c
        if linalg.rank(mat, graded_ring.p) < len(src):
            return False
    return True


# -- colon lemma ------------------------------------------------------------------


def check_colon_lemma(ring: QuotientRing, x: Polynomial, n_max: int) -> CheckReport:
    """(m^{n+1} : x) = m^n for n <= n_max, given in(x) of degree 1 regular on gr."""
    inputs = {"ring": repr(ring), "x": str(x), "n_max": n_max}
    presentation = gr_presentation(ring)
    r = ord_of(x, ring, presentation.truncation_degree)
    if isinstance(r, AtLeast) or r != 1:
        return CheckReport(
            "colon-lemma", "inconclusive", inputs, details={"reason": f"ord(x) = {r}, expected 1"}
        )
    form = initial_form(x, ring, presentation.truncation_degree)
    graded = presentation.graded_ring
    from .ring import transfer

    if not _multiplication_injective_through(graded, transfer(form, graded), n_max + 1):
        return CheckReport(
            "colon-lemma",
            "inconclusive",
            inputs,
            details={"reason": f"in(x) = {form} is a zerodivisor on the graded presentation"},
        )
    for n in range(n_max + 1):
        colon = ring.power_of_maximal_ideal(n + 1).colon_poly(x)
        expected = ring.power_of_maximal_ideal(n)
        if not colon.equals(expected):
            separating = _separating_generator(colon, expected)
            return CheckReport(
                "colon-lemma",
                "fail",
                inputs,
                witnesses={"n": n, "element": str(separating)},
            )
    return CheckReport("colon-lemma", "pass", inputs, details={"initial_form": str(form)})


def _separating_generator(a: Ideal, b: Ideal):
    for g in a.generators + tuple(a.groebner_basis()):
        if not b.contains_poly(g):
            return g
    for g in b.generators + tuple(b.groebner_basis()):
        if not a.contains_poly(g):
            return g
    return None


# -- reduction check -----------------------------------------------------------------


def check_reduction(a: Ideal, n_max: int) -> CheckReport:
    """Minimal n0 with m^{n+1} = a m^n for all n0 <= n <= n_max, if any."""
    ring = a.ring
    inputs = {"ring": repr(ring), "a": repr(a), "n_max": n_max}
    m_plus_l = ring.power_of_maximal_ideal(1)
    for g in a.generators:
        if not m_plus_l.contains_poly(g):
            raise RingError(f"generator {g} is not in the maximal ideal")
    m = ring.maximal_ideal()
    flags = []
    for n in range(n_max + 1):
        lhs = ring.power_of_maximal_ideal(n + 1)
        rhs = a * m.power(n)
        flags.append(lhs.equals(rhs))
    n0 = None
    for n in range(n_max, -1, -1):
        if flags[n]:
            n0 = n
        else:
            break
    if n0 is None:
        return CheckReport(
            "reduction",
            "fail",
            inputs,
            witnesses={"flags": flags},
            details={"reason": "no n with m^{n+1} = a m^n up to n_max; a is not a reduction"},
        )
    return CheckReport("reduction", "pass", inputs, details={"n0": n0, "flags": flags})


# -- superficial element check ----------------------------------------------------------


def check_superficial(x: Polynomial, c_max: int, n_max: int) -> CheckReport:
    """Search c <= c_max with (m^{n+1} : x) ∩ m^c = m^n for all c <= n <= n_max."""
    ring = x.ring
    inputs = {"ring": repr(ring), "x": str(x), "c_max": c_max, "n_max": n_max}
    r = ord_of(x, ring, max(3, n_max))
    if isinstance(r, AtLeast) or r != 1:
        raise RingError("x must lie in m but not in m^2")
    failures = {}
    for c in range(c_max + 1):
        ok = True
        for n in range(c, n_max + 1):
            colon = ring.power_of_maximal_ideal(n + 1).colon_poly(x)
            lhs = colon if c == 0 else colon.intersect(ring.power_of_maximal_ideal(c))
            rhs = ring.power_of_maximal_ideal(n)
            if not lhs.equals(rhs):
                failures[c] = {"n": n, "element": str(_separating_generator(lhs, rhs))}
                ok = False
                break
        if ok:
            return CheckReport("superficial", "pass", inputs, details={"c": c})
    return CheckReport("superficial", "fail", inputs, witnesses=failures)


# -- graded-equality implies equality (finite form) ---------------------------------------


def check_lemma22(a: Ideal, b: Ideal) -> CheckReport:
    """Compare initial pieces of a ⊆ b through the nilpotency degree of a.

    Equal pieces are followed through with an actual mutual-containment
    verification; a piece mismatch exhibits the separating graded class.
    """
    ring = a.ring
    inputs = {"ring": repr(ring), "a": repr(a), "b": repr(b)}
    if not b.contains(a):
        raise RingError("a must be contained in b")
    if not (a.is_m_primary() and b.is_m_primary()):
        raise RingError("both ideals must be m-primary")
    D = a.nilpotency_degree()
    lifted_a = list(a.generators) + list(ring.relations)
    lifted_b = list(b.generators) + list(ring.relations)
    pieces_a, _ = _stabilized_pieces(ring, lifted_a, D)
    pieces_b, _ = _stabilized_pieces(ring, lifted_b, D)
    for i in range(D + 1):
        if pieces_a[i] == pieces_b[i]:
            continue
        cls = _separating_piece_row(ring, pieces_a[i], pieces_b[i], i)
        return CheckReport(
            "lemma22",
            "pass",
            inputs,
            details={
                "equal": False,
                "separating_degree": i,
                "separating_class": str(cls),
                "compared_through": D,
            },
        )
    if a.equals(b):
        return CheckReport(
            "lemma22",
            "pass",
            inputs,
            details={"equal": True, "verified": True, "compared_through": D},
        )
    return CheckReport(
        "lemma22",
        "fail",
        inputs,
        witnesses={"element": str(_separating_generator(b, a))},
        details={
            "reason": "graded pieces agree through the nilpotency degree but the ideals differ; "
            "truncated pieces must have undershot"
        },
    )


def _separating_piece_row(ring, rows_a, rows_b, degree):
    mons = sorted(monomials_of_degree(ring.nvars, degree), key=lambda m: (sum(m), m))
    from .ring import grevlex_key

    mons = list(monomials_of_degree(ring.nvars, degree))
    mons.sort(key=lambda m: (sum(m), grevlex_key(m)))
    mat_a = (
        np.array(rows_a, dtype=np.int64)
        if rows_a
        else np.zeros((0, len(mons)), dtype=np.int64)
    )
    basis, pivots = linalg.rref(mat_a, ring.p)
    basis = basis[: len(pivots)]
    for row in rows_b:
        if not linalg.in_row_space(np.array(row, dtype=np.int64), basis, pivots, ring.p):
            return ring.from_terms({m: c for m, c in zip(mons, row) if c})
    return None


# -- randomized suites --------------------------------------------------------------------


def random_poly(rng: random.Random, ring: QuotientRing, max_degree: int = 3, terms: int = 3):
    out = ring.zero()
    for _ in range(rng.randint(1, terms)):
        d = rng.randint(1, max_degree)
        exps = [0] * ring.nvars
        for _ in range(d):
            exps[rng.randrange(ring.nvars)] += 1
        out = out + ring.monomial(tuple(exps), rng.randint(1, ring.p - 1))
    return out


def random_m_primary(rng: random.Random, ring: QuotientRing) -> Ideal:
    """m^k for random k <= 3 plus a few random polynomials of degree <= 3."""
    k = rng.randint(1, 3)
    gens = [ring.monomial(m) for m in monomials_of_degree(ring.nvars, k)]
    for _ in range(rng.randint(1, 3)):
        f = random_poly(rng, ring)
        if not f.is_zero():
            gens.append(f)
    return Ideal(ring, gens)


def check_monotonicity(ring: QuotientRing, trials: int, e_max: int, seed: int) -> CheckReport:
    """Bracket/power monotonicity and Frobenius scaling on seeded random pairs."""
    inputs = {"ring": repr(ring), "trials": trials, "e_max": e_max}
    violations = []
    for trial in range(trials):
        rng = random.Random(seed + trial)
        J = random_m_primary(rng, ring)
        I = J + Ideal(ring, [random_poly(rng, ring)])
        a = random_m_primary(rng, ring)
        size = rng.randint(1, len(a.generators))
        b = Ideal(ring, list(a.generators)[:size])
        prev_a = None
        for e in range(1, e_max + 1):
            warm = max(ring.p * prev_a.nu, 0) if prev_a else None
            nu_aJ = nu(a, J, e, warm_start=warm)
            nu_aI = nu(a, I, e)
            nu_bJ = nu(b, J, e)
            if nu_aI.nu > nu_aJ.nu:
                violations.append(
                    {"trial": trial, "e": e, "kind": "bracket", "nu_aI": nu_aI.nu, "nu_aJ": nu_aJ.nu}
                )
            if nu_bJ.nu > nu_aJ.nu:
                violations.append(
                    {"trial": trial, "e": e, "kind": "power", "nu_bJ": nu_bJ.nu, "nu_aJ": nu_aJ.nu}
                )
            if prev_a is not None and nu_aJ.nu < ring.p * prev_a.nu:
                violations.append(
                    {"trial": trial, "e": e, "kind": "scaling", "nu": nu_aJ.nu, "prev": prev_a.nu}
                )
            prev_a = nu_aJ
    verdict = "pass" if not violations else "fail"
    return CheckReport(
        "monotonicity",
        verdict,
        inputs,
        witnesses={"violations": violations},
        seeds={"seed": seed, "per_trial": "seed + trial index"},
        details={"checked": trials * e_max * 3},
    )


def random_hypersurface(rng: random.Random, p: int, max_vars: int = 4) -> QuotientRing:
    names = ["x", "y", "z", "w"][: rng.randint(2, max_vars)]
    ambient = QuotientRing(p, names)
    while True:
        f = random_poly(rng, ambient, max_degree=3, terms=3)
        if not f.is_zero():
            return QuotientRing(p, names, [f])


def check_theorem_A_randomized(
    p: int,
    trials: int,
    e_max: int,
    seed: int,
    b_mode: str = "random",
) -> CheckReport:
    """verify_theorem_A over random hypersurfaces with random m-primary b."""
    inputs = {"p": p, "trials": trials, "e_max": e_max, "b_mode": b_mode}
    failures = []
    inconclusive = []
    for trial in range(trials):
        rng = random.Random(seed + trial)
        ring = random_hypersurface(rng, p)
        b = ring.maximal_ideal() if b_mode == "maximal" else random_m_primary(rng, ring)
        report = verify_theorem_A(ring, b, e_max)
        if report.verdict == "fail":
            failures.append(
                {
                    "trial": trial,
                    "ring": repr(ring),
                    "b": repr(b),
                    "counterexample": report.counterexample,
                }
            )
        elif report.verdict == "inconclusive":
            inconclusive.append({"trial": trial, "ring": repr(ring), "reason": report.reason})
    if failures:
        verdict = "fail"
    elif inconclusive:
        verdict = "inconclusive"
    else:
        verdict = "pass"
    return CheckReport(
        "theoremA",
        verdict,
        inputs,
        witnesses={"failures": failures, "inconclusive": inconclusive},
        seeds={"seed": seed, "per_trial": "seed + trial index"},
        details={"trials": trials},
    )
