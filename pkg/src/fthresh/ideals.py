"""Groebner bases and ideal arithmetic over quotient-ring presentations.

Every predicate about an ideal of R = S/L is evaluated through its lift
(generators + L) in the ambient polynomial ring S. The engine is classical
Buchberger with the normal pair-selection strategy; reduced bases are unique
for the fixed grevlex order, so handles compare ideals by comparing bases.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .ring import (
    Monomial,
    Polynomial,
    QuotientRing,
    RingError,
    elimination_key,
    grevlex_key,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomials_of_degree,
)


# -- term-dict level machinery --------------------------------------------


def _leading(terms, key):
    return max(terms, key=key)


def _normal_form_terms(terms, reducers, p, key):
    """Full normal form of a term dict against (lead, terms) reducer pairs.

    Reducers must be monic. Returns a new dict; the input is not mutated.
    """
    work = dict(terms)
    remainder: dict = {}
    while work:
        m = _leading(work, key)
        c = work.pop(m)
        reduced = False
        for lead, g_terms in reducers:
            if monomial_divides(lead, m):
                shift = monomial_div(m, lead)
                for gm, gc in g_terms.items():
                    if gm == lead:
                        continue
                    mm = monomial_mul(gm, shift)
                    v = (work.get(mm, 0) - c * gc) % p
                    if v:
                        work[mm] = v
                    else:
                        work.pop(mm, None)
                reduced = True
                break
        if not reduced:
            remainder[m] = c
    return remainder


def _divide_with_quotient(terms, divisor_terms, p, key):
    """Division by a single polynomial, returning (quotient, remainder)."""
    lead = _leading(divisor_terms, key)
    lc_inv = pow(divisor_terms[lead], p - 2, p)
    work = dict(terms)
    quotient: dict = {}
    remainder: dict = {}
    while work:
        m = _leading(work, key)
        c = work.pop(m)
        if monomial_divides(lead, m):
            shift = monomial_div(m, lead)
            factor = (c * lc_inv) % p
            quotient[shift] = (quotient.get(shift, 0) + factor) % p
            for gm, gc in divisor_terms.items():
                if gm == lead:
                    continue
                mm = monomial_mul(gm, shift)
                v = (work.get(mm, 0) - factor * gc) % p
                if v:
                    work[mm] = v
                else:
                    work.pop(mm, None)
        else:
            remainder[m] = c
    quotient = {m: c for m, c in quotient.items() if c}
    return quotient, remainder


def _monic(terms, p, key):
    lc = terms[_leading(terms, key)]
    if lc == 1:
        return dict(terms)
    inv = pow(lc, p - 2, p)
    return {m: (c * inv) % p for m, c in terms.items()}


def _s_poly(f, g, p, key):
    lf = _leading(f, key)
    lg = _leading(g, key)
    tau = monomial_lcm(lf, lg)
    sf = monomial_div(tau, lf)
    sg = monomial_div(tau, lg)
    out: dict = {}
    for m, c in f.items():
        mm = monomial_mul(m, sf)
        out[mm] = (out.get(mm, 0) + c) % p
    for m, c in g.items():
        mm = monomial_mul(m, sg)
        out[mm] = (out.get(mm, 0) - c) % p
    return {m: c for m, c in out.items() if c}


def buchberger(generator_terms, p, key=grevlex_key):
    """Reduced Groebner basis, as monic term dicts sorted by ascending lead.

    Pair selection is the normal strategy (minimal lcm degree, ties by the
    lcm monomial). Pairs with coprime leads and pairs of two monomials are
    skipped: their S-polynomials reduce to zero for free.
    """
    basis = []
    for terms in generator_terms:
        if not terms:
            continue
        nf = _normal_form_terms(terms, [( _leading(g, key), g) for g in basis], p, key)
        if nf:
            basis.append(_monic(nf, p, key))

    def useless(i, j):
        f, g = basis[i], basis[j]
        if len(f) == 1 and len(g) == 1:
            return True
        lf, lg = _leading(f, key), _leading(g, key)
        return monomial_lcm(lf, lg) == monomial_mul(lf, lg)

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis)) if not useless(i, j)}

    def pair_rank(pair):
        i, j = pair
        tau = monomial_lcm(_leading(basis[i], key), _leading(basis[j], key))
        return (sum(tau), key(tau), i, j)

    while pairs:
        i, j = min(pairs, key=pair_rank)
        pairs.discard((i, j))
        s = _s_poly(basis[i], basis[j], p, key)
        if not s:
            continue
        reducers = [(_leading(g, key), g) for g in basis]
        nf = _normal_form_terms(s, reducers, p, key)
        if not nf:
            continue
        basis.append(_monic(nf, p, key))
        k = len(basis) - 1
        for idx in range(k):
            if not useless(idx, k):
                pairs.add((idx, k))

    return _reduce_basis(basis, p, key)


def _reduce_basis(basis, p, key):
    """Interreduce to the unique reduced basis (monic, minimal, tail-reduced)."""
    if not basis:
        return []
    ordered = sorted(basis, key=lambda g: key(_leading(g, key)))
    kept = []
    for g in ordered:
        lg = _leading(g, key)
        if any(monomial_divides(_leading(h, key), lg) for h in kept):
            continue
        kept.append(g)
    reduced = []
    for idx, g in enumerate(kept):
        others = [(_leading(h, key), h) for pos, h in enumerate(kept) if pos != idx]
        nf = _normal_form_terms(g, others, p, key)
        if nf:
            reduced.append(_monic(nf, p, key))
    return sorted(reduced, key=lambda g: key(_leading(g, key)))


# -- ideal handles ----------------------------------------------------------


@dataclass(frozen=True)
class SocleBasis:
    """k-basis of (A : m)/A, each representative a normal form against A."""

    representatives: tuple


class Ideal:
    """Generator list plus lazily cached reduced basis of the lifted ideal."""

    def __init__(self, ring: QuotientRing, generators):
        self.ring = ring
        seen = set()
        gens = []
        for g in generators:
            f = ring.parse(g) if isinstance(g, str) else g
            if f.ring is not ring:
                if not f.ring.same_ambient(ring):
                    raise RingError("generator from a different ambient ring")
                f = Polynomial(ring, dict(f.terms))
            if f.is_zero():
                continue
            fkey = frozenset(f.terms.items())
            if fkey in seen:
                continue
            seen.add(fkey)
            gens.append(f)
        self.generators = tuple(gens)
        self._gb = None
        self._gb_leads = None
        self._monomial_elements = None
        self._bracket_cache: dict = {}
        self._power_cache: dict = {1: self.generators}
        self._nilpotency = None
        self._m_primary = None

    # -- Groebner data ------------------------------------------------------

    def groebner_basis(self):
        """Reduced Groebner basis of (generators + relations) in the ambient ring."""
        if self._gb is None:
            gen_terms = [g.terms for g in self.generators]
            gen_terms += [g.terms for g in self.ring.relations]
            basis = buchberger(gen_terms, self.ring.p)
            self._gb = tuple(Polynomial(self.ring, g) for g in basis)
            self._gb_leads = tuple((_leading(g, grevlex_key), g) for g in basis)
            self._monomial_elements = tuple(
                next(iter(g)) for g in basis if len(g) == 1
            )
        return self._gb

    def leading_monomials(self):
        self.groebner_basis()
        return [Monomial(lead) for lead, _ in self._gb_leads]

    def normal_form(self, f: Polynomial) -> Polynomial:
        if not f.ring.same_ambient(self.ring):
            raise RingError("element from a different ambient ring")
        self.groebner_basis()
        nf = _normal_form_terms(f.terms, self._gb_leads, self.ring.p, grevlex_key)
        return Polynomial(self.ring, nf)

    def contains_poly(self, f: Polynomial) -> bool:
        if len(f.terms) == 1:
            self.groebner_basis()
            m = next(iter(f.terms))
            if any(monomial_divides(g, m) for g in self._monomial_elements):
                return True
        return self.normal_form(f).is_zero()

    def contains(self, inner) -> bool:
        """Containment of an element or of a whole ideal (generatorwise)."""
        if isinstance(inner, Polynomial):
            return self.contains_poly(inner)
        if not isinstance(inner, Ideal):
            raise TypeError("contains expects a Polynomial or an Ideal")
        if inner.ring != self.ring:
            raise RingError("ideals live in different rings")
        return all(self.contains_poly(g) for g in inner.generators)

    def equals(self, other: "Ideal") -> bool:
        if other.ring != self.ring:
            raise RingError("ideals live in different rings")
        return [g.terms for g in self.groebner_basis()] == [g.terms for g in other.groebner_basis()]

    def is_zero_ideal(self) -> bool:
        return len(self.groebner_basis()) == 0

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_one()

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingError("ideals live in different rings")
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingError("ideals live in different rings")
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def power_generators(self, t: int):
        """Generators of the t-th ordinary power, deduplicated."""
        if t == 0:
            return (self.ring.one(),)
        known = max(k for k in self._power_cache if k <= t)
        gens = self._power_cache[known]
        while known < t:
            seen = set()
            nxt = []
            for f in gens:
                for g in self.generators:
                    h = f * g
                    hkey = frozenset(h.terms.items())
                    if hkey not in seen and not h.is_zero():
                        seen.add(hkey)
                        nxt.append(h)
            known += 1
            gens = tuple(nxt)
            self._power_cache[known] = gens
        return self._power_cache[t]

    def power(self, t: int) -> "Ideal":
        if t < 0:
            raise RingError("ideal power must be nonnegative")
        return Ideal(self.ring, self.power_generators(t))

    def bracket(self, q: int) -> "Ideal":
        """Frobenius bracket power: the ideal generated by g^q, q a power of p."""
        e = _power_of_p(q, self.ring.p)
        if e is None:
            raise RingError(f"{q} is not a power of the characteristic {self.ring.p}")
        if q not in self._bracket_cache:
            self._bracket_cache[q] = Ideal(self.ring, [g.frobenius(e) for g in self.generators])
        return self._bracket_cache[q]

    # -- colon and intersection ------------------------------------------------

    def intersect(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingError("ideals live in different rings")
        lifted_a = [g.terms for g in self.generators] + [g.terms for g in self.ring.relations]
        lifted_b = [g.terms for g in other.generators] + [g.terms for g in self.ring.relations]
        gens = _eliminate_intersection(lifted_a, lifted_b, self.ring.p)
        return Ideal(self.ring, [Polynomial(self.ring, t) for t in gens])

    def colon_poly(self, f: Polynomial) -> "Ideal":
        if f.is_zero():
            raise RingError("colon by the zero element")
        lifted = [g.terms for g in self.generators] + [g.terms for g in self.ring.relations]
        inter = _eliminate_intersection(lifted, [f.terms], self.ring.p)
        p = self.ring.p
        out = []
        for terms in inter:
            quotient, remainder = _divide_with_quotient(terms, f.terms, p, grevlex_key)
            if remainder:
                raise RingError("intersection element not divisible; internal error")
            out.append(Polynomial(self.ring, quotient))
        return Ideal(self.ring, out)

    def colon(self, other) -> "Ideal":
        """(self : other) in R, through lifted ideals; the result includes L."""
        if isinstance(other, Polynomial):
            return self.colon_poly(other)
        if other.ring != self.ring:
            raise RingError("ideals live in different rings")
        gens = [g for g in other.generators]
        if not gens:
            raise RingError("colon by the zero ideal")
        result = self.colon_poly(gens[0])
        for g in gens[1:]:
            result = result.intersect(self.colon_poly(g))
        return result

    # -- Artinian structure ------------------------------------------------------

    def _staircase_cofinite(self) -> bool:
        self.groebner_basis()
        for i in range(self.ring.nvars):
            if not any(
                lead[i] > 0 and all(e == 0 for j, e in enumerate(lead) if j != i)
                for lead, _ in self._gb_leads
            ):
                return False
        return True

    def is_m_primary(self) -> bool:
        """True iff every variable has some pure power lying in (generators + L)."""
        if self._m_primary is None:
            self._m_primary = self._check_m_primary()
        return self._m_primary

    def _check_m_primary(self) -> bool:
        if self.is_unit():
            return False
        if not self._staircase_cofinite():
            return False
        size = None
        for i, v in enumerate(self.ring.variables):
            # monomial basis element shortcut: a pure power is literally in the basis
            if any(g[i] > 0 and sum(g) == g[i] for g in self._monomial_elements):
                continue
            if size is None:
                size = len(self.standard_monomials())
            # pure-power membership is monotone, and x^N lands in the ideal for
            # some N iff it does for N = staircase size, so square past that
            nf = self.normal_form(self.ring.variable(v))
            k = 1
            while k < size and not nf.is_zero():
                nf = self.normal_form(nf * nf)
                k *= 2
            if not nf.is_zero():
                return False
        return True

    def nilpotency_degree(self) -> int:
        """Minimal N with m^N contained in (generators + L); requires m-primary."""
        if self._nilpotency is None:
            if not self.is_m_primary():
                raise RingError("nilpotency degree requires an m-primary ideal")
            n = self.ring.nvars
            cap = 1 + sum(self._pure_power_cap(i) - 1 for i in range(n))
            N = 1
            while N <= cap:
                if all(
                    self.contains_poly(self.ring.monomial(m))
                    for m in monomials_of_degree(n, N)
                ):
                    break
                N += 1
            self._nilpotency = N
        return self._nilpotency

    def _pure_power_cap(self, i: int) -> int:
        # smallest pure-power exponent of variable i appearing among the leads
        self.groebner_basis()
        best = None
        for lead, _ in self._gb_leads:
            if lead[i] > 0 and all(e == 0 for j, e in enumerate(lead) if j != i):
                best = lead[i] if best is None else min(best, lead[i])
        if best is None:
            raise RingError("staircase is not cofinite")
        # leads bound reducibility, not membership, so grow until pure power lands inside
        k = best
        while not self.contains_poly(self.ring.monomial(tuple(k if j == i else 0 for j in range(self.ring.nvars)))):
            k += 1
        return k

    def standard_monomials(self, max_degree=None):
        """Monomials outside the lead-term staircase, ascending; finite iff cofinite."""
        self.groebner_basis()
        if not self._staircase_cofinite():
            raise RingError("staircase is not cofinite; infinitely many standard monomials")
        n = self.ring.nvars
        caps = []
        for i in range(n):
            caps.append(
                min(
                    lead[i]
                    for lead, _ in self._gb_leads
                    if lead[i] > 0 and all(e == 0 for j, e in enumerate(lead) if j != i)
                )
            )
        leads = [lead for lead, _ in self._gb_leads]
        out = []
        for m in itertools.product(*(range(c) for c in caps)):
            if max_degree is not None and sum(m) > max_degree:
                continue
            if not any(monomial_divides(lead, m) for lead in leads):
                out.append(m)
        out.sort(key=grevlex_key)
        return out

    def socle(self) -> SocleBasis:
        """Basis of (self : m)/self via multiplication-map kernels on the staircase."""
        if not self.is_m_primary():
            raise RingError("socle requires an m-primary ideal")
        std = self.standard_monomials()
        index = {m: i for i, m in enumerate(std)}
        s = len(std)
        p = self.ring.p
        blocks = []
        for v in self.ring.variables:
            x = self.ring.variable(v)
            mat = np.zeros((s, s), dtype=np.int64)
            for j, m in enumerate(std):
                nf = self.normal_form(self.ring.monomial(m) * x)
                for mm, c in nf.terms.items():
                    mat[index[mm], j] = c
            blocks.append(mat)
        stacked = np.concatenate(blocks, axis=0)
        ker = linalg.kernel(stacked, p)
        reps = []
        for row in ker:
            terms = {std[j]: int(row[j]) for j in range(s) if row[j]}
            reps.append(Polynomial(self.ring, terms))
        reps.sort(key=lambda f: grevlex_key(_leading(f.terms, grevlex_key)))
        return SocleBasis(tuple(reps))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "0"
        return f"Ideal({gens})"


def _power_of_p(q: int, p: int):
    if q < 1:
        return None
    e = 0
    while q > 1:
        if q % p:
            return None
        q //= p
        e += 1
    return e


# -- elimination -----------------------------------------------------------


def _eliminate_intersection(terms_a, terms_b, p):
    """Generators of (a ∩ b) by tag-variable elimination.

    Adjoins a tag variable t ordered above everything, computes a basis of
    t*a + (1-t)*b, and keeps the elements not involving t.
    """
    tagged = []
    for terms in terms_a:
        tagged.append({(1,) + m: c for m, c in terms.items()})
    for terms in terms_b:
        tf: dict = {}
        for m, c in terms.items():
            tf[(0,) + m] = c
            tf[(1,) + m] = (-c) % p
        tagged.append(tf)
    basis = buchberger(tagged, p, key=elimination_key)
    out = []
    for g in basis:
        if all(m[0] == 0 for m in g):
            out.append({m[1:]: c for m, c in g.items()})
    return out


# -- ring-level operations ---------------------------------------------------


def zero_ideal(ring: QuotientRing) -> Ideal:
    handle = getattr(ring, "_zero_ideal_handle", None)
    if handle is None:
        handle = Ideal(ring, [])
        ring._zero_ideal_handle = handle
    return handle


def ring_dimension(ring: QuotientRing) -> int:
    """Krull dimension of S/L via independent variable sets modulo lead terms."""
    gb = zero_ideal(ring).groebner_basis()
    lead_supports = [
        frozenset(i for i, e in enumerate(max(g.terms, key=grevlex_key)) if e > 0) for g in gb
    ]
    if frozenset() in lead_supports:
        raise RingError("relations generate the unit ideal")
    n = ring.nvars
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            u = set(subset)
            if not any(supp <= u for supp in lead_supports):
                return size
    return 0
