from fractions import Fraction

import pytest

from fthresh import (
    Ideal,
    QuotientRing,
    RingError,
    guess_rational,
    nu,
    threshold_estimate,
    verify_theorem_A,
)
from oracles import nu_monomial_oracle, simplest_rational_oracle


def test_nu_regular_ring(regular2):
    m = regular2.maximal_ideal()
    record = nu(m, m, 1)
    assert record.nu == 2  # d(q-1), witnessed by (xy)^(q-1)
    assert record.verify(m, m.bracket(2))


def test_nu_node_against_enumeration_oracle(node2):
    n = node2.maximal_ideal()
    assert nu(n, n, 1).nu == 1
    vars2 = [(1, 0), (0, 1)]
    assert nu_monomial_oracle(vars2, [(2, 0), (0, 2), (1, 1)], 2, 5) == 1


def test_nu_node4_matches_oracle(node4):
    n = node4.maximal_ideal()
    vars4 = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    for e in (1, 2, 3):
        q = 2**e
        bracket = [tuple(q * c for c in v) for v in vars4] + [(1, 1, 0, 0)]
        oracle = nu_monomial_oracle(vars4, bracket, 4, 3 * (q - 1) + 2)
        record = nu(n, n, e)
        assert record.nu == oracle == 3 * (q - 1)


def test_nu_rejects_non_primary_bracket(regular2):
    m = regular2.maximal_ideal()
    with pytest.raises(RingError):
        nu(m, Ideal(regular2, ["x"]), 1)
    with pytest.raises(RingError):
        nu(Ideal(regular2, ["x + 1"]), m, 1)


def test_nu_unit_bracket_sentinel(regular2):
    m = regular2.maximal_ideal()
    unit = Ideal(regular2, ["1"])
    record = nu(m, unit, 1)
    assert record.nu == -1 and "unit-bracket-ideal" in record.caveats


def test_threshold_regular(regular2):
    m = regular2.maximal_ideal()
    est = threshold_estimate(m, m, 3)
    assert [r.nu for r in est.records] == [2, 6, 14]  # 2(q-1)
    assert est.lower == Fraction(7, 4)
    assert est.guess == 2
    assert est.lower <= 2 <= est.upper


def test_threshold_blowup_brackets_five_halves(blowup):
    m = blowup.maximal_ideal()
    est = threshold_estimate(m, m, 3)
    ratios = [Fraction(r.nu, r.q) for r in est.records]
    assert ratios == sorted(ratios)
    assert all(r <= Fraction(5, 2) for r in ratios)
    for record, lower, upper in est.row_bounds():
        assert lower <= Fraction(5, 2) <= upper
    assert est.guess == Fraction(5, 2)


def test_threshold_node4(node4):
    n = node4.maximal_ideal()
    est = threshold_estimate(n, n, 3)
    assert [r.nu for r in est.records] == [3, 9, 21]
    assert est.lower == Fraction(21, 8)
    assert est.guess == 3


def test_guess_rational_examples():
    assert guess_rational(Fraction(19, 10), Fraction(21, 10), 8) == 2
    assert guess_rational(Fraction(12, 5), Fraction(63, 25), 8) == Fraction(5, 2)
    assert guess_rational(Fraction(49, 100), Fraction(51, 100), 8) == Fraction(1, 2)
    assert guess_rational(Fraction(3, 10), Fraction(33, 100), 2) is None
    with pytest.raises(RingError):
        guess_rational(Fraction(2), Fraction(1))


@pytest.mark.parametrize(
    "lo,hi",
    [
        (Fraction(1, 3), Fraction(1, 2)),
        (Fraction(5, 7), Fraction(6, 7)),
        (Fraction(0), Fraction(1, 9)),
        (Fraction(22, 7), Fraction(23, 7)),
        (Fraction(-3, 2), Fraction(-7, 5)),
    ],
)
def test_guess_rational_matches_brute_force(lo, hi):
    assert guess_rational(lo, hi, 64) == simplest_rational_oracle(lo, hi, 64)


def test_scaling_invariant_on_fixtures(blowup, node2):
    for ring in (blowup, node2):
        m = ring.maximal_ideal()
        est = threshold_estimate(m, m, 3)
        for prev, nxt in zip(est.records, est.records[1:]):
            assert nxt.nu >= ring.p * prev.nu


def test_bracket_monotonicity_of_nu(regular2):
    m = regular2.maximal_ideal()
    a = Ideal(regular2, ["x + y^2", "y"])
    small = Ideal(regular2, ["x^2", "x*y", "y^2"])  # m^2 inside m
    assert nu(a, m, 1).nu <= nu(a, small, 1).nu  # J smaller => nu larger
    b = Ideal(regular2, [a.generators[0]])
    assert nu(b, small, 1).nu <= nu(a, small, 1).nu


def test_verify_theorem_A_blowup(blowup):
    report = verify_theorem_A(blowup, blowup.maximal_ideal(), 2)
    assert report.verdict == "pass"
    rows = report.nu_table
    assert rows[0][2] == 3 and rows[0][3] == 3
    assert any(local < graded for (_, _, local, graded) in rows) or len(rows) == 1


def test_verify_theorem_A_regular_is_equality(regular2):
    m = regular2.maximal_ideal()
    report = verify_theorem_A(regular2, m, 3)
    assert report.verdict == "pass"
    assert all(local == graded for (_, _, local, graded) in report.nu_table)
    msq = regular2.power_of_maximal_ideal(2)
    report2 = verify_theorem_A(regular2, msq, 2)
    assert report2.verdict == "pass"
    assert all(local == graded for (_, _, local, graded) in report2.nu_table)


def test_verify_theorem_A_requires_m_primary(regular2):
    with pytest.raises(RingError):
        verify_theorem_A(regular2, Ideal(regular2, ["x"]), 1)


def test_nu_records_reverify(blowup):
    m = blowup.maximal_ideal()
    est = threshold_estimate(m, m, 2)
    for record in est.records:
        assert record.verify(m, m.bracket(record.q))
