import pytest

from circnorm.catalog import FAMILIES, Status
from circnorm.config import Tolerances
from circnorm.verifier import (
    TABLE3,
    TABLE3_ORDERS,
    TABLE3_TEXT,
    Outcome,
    reproduce_table3,
    scan,
    verify_family,
)

SWAPPED = {3: 4, 4: 3, 8: 9, 9: 8}


def test_table3_reference_is_complete():
    assert len(TABLE3) == 70
    assert TABLE3_ORDERS == (3, 5, 6, 7, 8)
    assert {f for f, _ in TABLE3} == set(range(1, 15))
    assert TABLE3[(10, 8)] == 2205
    assert TABLE3_TEXT.splitlines()[1].split("\t") == [
        "3", "3", "3", "4", "8", "1", "7", "14", "12", "16", "17", "23", "4", "8", "3",
    ]


def test_verify_b2_passes():
    r = verify_family("B2", 7)
    assert r.outcome is Outcome.PASS
    assert r.oracle == r.closed_used == r.one_norm_val == 168
    assert r.spectral_float == pytest.approx(168)
    assert r.table_printed == 168


def test_verify_b14_flags_printed_formula():
    r = verify_family("B14", 6)
    assert r.outcome is Outcome.STATED_FORMULA_MISMATCH
    assert r.oracle == 30
    assert r.closed_stated == 48
    assert r.closed_used == 30
    assert r.closed_status is Status.CORRECTED


def test_verify_b1_order_one():
    r = verify_family(1, 1)
    assert r.outcome is Outcome.PASS
    assert r.oracle == 0
    assert r.spectral_float == 0.0


def test_garbled_family_passes_on_correction():
    r = verify_family(5, 8)
    assert r.closed_stated is None
    assert r.closed_status is Status.GARBLED
    assert r.outcome is Outcome.PASS
    assert r.oracle == 38


def test_table_mismatch_outcome():
    r = verify_family(3, 5)
    assert r.outcome is Outcome.TABLE_ENTRY_MISMATCH
    assert (r.oracle, r.table_printed) == (55, 33)


def test_float_route_refused_past_cap():
    r = verify_family(7, 80)
    assert r.spectral_float is None
    assert r.outcome is Outcome.PASS
    forced = verify_family(7, 80, allow_rounding=True)
    assert forced.spectral_float == pytest.approx(forced.oracle, rel=1e-12)


def test_float_divergence_is_reported():
    # a tolerance tighter than double rounding of the row sum
    tight = Tolerances(spectral_rtol=-1.0)
    assert verify_family(1, 5, tol=tight).outcome is Outcome.FLOAT_DIVERGENCE


def test_pass_implies_route_agreement():
    for f in FAMILIES:
        for n in range(1, 40):
            r = verify_family(f, n)
            if r.passed:
                assert r.oracle == r.closed_used == r.one_norm_val
                if r.spectral_float is not None:
                    assert abs(r.spectral_float - r.oracle) <= 1e-9 * max(1, r.oracle)


def test_three_routes_over_sweep():
    for f in FAMILIES:
        for n in range(1, 201):
            r = verify_family(f, n, float_route=n <= 70, allow_rounding=True)
            assert r.oracle == r.closed_used == r.one_norm_val, (f, n)
            if r.spectral_float is not None:
                assert abs(r.spectral_float - r.oracle) <= 1e-9 * max(1, r.oracle), (f, n)


def test_scan_examples():
    result = scan({"B2"}, (1, 10))
    assert len(result) == 10
    assert result.all_passed
    one = scan({"B14"}, (3, 3))
    assert [r.outcome for r in one.reports] == [Outcome.STATED_FORMULA_MISMATCH]
    assert len(scan(set(), (1, 5))) == 0


def test_scan_counts_and_order():
    result = scan(["B14", "B1"], (1, 6))
    assert [(r.family, r.n) for r in result.reports] == [
        (f"B{f}", n) for f in (1, 14) for n in range(1, 7)
    ]
    counts = result.counts
    assert counts["B1"]["Pass"] == 6
    # nF_n and nF_{n-1} agree only at n = 1
    assert counts["B14"]["StatedFormulaMismatch"] == 5


def test_scan_is_independent_of_workers():
    serial = scan(FAMILIES, (1, 25))
    parallel = scan(FAMILIES, (1, 25), workers=8)
    assert serial == parallel


def test_scan_rejects_bad_range():
    with pytest.raises(ValueError):
        scan({"B1"}, (0, 3))
    with pytest.raises(ValueError):
        scan({"B1"}, (5, 2))


def test_reproduce_table3_examples():
    grid, discrepancies = reproduce_table3()
    assert grid[(1, 5)] == 21 == TABLE3[(1, 5)]
    flagged = {(d.family, d.n): d for d in discrepancies}
    b3 = flagged[("B3", 5)]
    assert (b3.computed, b3.printed, b3.swap_partner) == (55, 33, "B4")
    b8 = flagged[("B8", 8)]
    assert (b8.computed, b8.printed, b8.swap_partner) == (2205, 1365, "B9")


def test_swap_partner_disambiguation():
    # at n = 6 the printed B9 value 320 is also the computed B10
    _, discrepancies = reproduce_table3()
    d = next(d for d in discrepancies if (d.family, d.n) == ("B9", 6))
    assert set(d.candidates) == {"B8", "B10"}
    assert d.swap_partner == "B8"


def test_audit_shape():
    _, discrepancies = reproduce_table3()
    assert {(int(d.family[1:]), d.n) for d in discrepancies} == {
        (f, n) for f in SWAPPED for n in TABLE3_ORDERS
    }
    for d in discrepancies:
        assert d.swap_partner == f"B{SWAPPED[int(d.family[1:])]}"


def test_reproduce_is_deterministic():
    assert reproduce_table3() == reproduce_table3()
