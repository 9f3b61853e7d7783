import pytest

from hgfree.errors import InvalidParameters
from hgfree.verdict import SWEEP_HEADER, Clause, analyze, decide, decide_galois, sweep


def test_worked_example_not_free():
    v = decide(13, 1, 12, 5)
    assert not v.free and v.clause is Clause.BOUNDARY_CONTINUED_FRACTION and v.cf_length == 5


@pytest.mark.parametrize("e,t,free,clause", [
    (1, 1, True, Clause.BOUNDARY_CONTINUED_FRACTION),
    (2, 7, True, Clause.BOUNDARY_CONTINUED_FRACTION),
    (2, 1, True, Clause.STABLE_DIVISIBILITY),
    (3, 7, False, Clause.STABLE_DIVISIBILITY),
])
def test_small_table(e, t, free, clause):
    v = decide(5, e, 4, t)
    assert (v.free, v.clause) == (free, clause)


def test_maximal():
    v = decide(3, 1, 2, 3)
    assert v.free and v.clause is Clause.MAXIMAL_RAMIFICATION and v.associated_order_maximal


def test_invalid_raises():
    with pytest.raises(InvalidParameters):
        analyze(4, 1, 1, 1)


def test_galois_criterion_agrees():
    for t in range(1, 10):
        if t % 3 == 0 and t != 9:
            continue
        v = decide(3, 6, 1, t)
        assert (v.free, v.clause.value) == decide_galois(3, 6, t)


def test_sweep_rows_and_skips():
    rows = sweep(5, 4, range(1, 3), range(1, 10), strict=True, typical_only=True)
    kept = [r for r in rows if r.analysis is not None]
    assert len(kept) == 6
    assert all(len(r.as_csv_fields()) == len(SWEEP_HEADER) for r in rows)
    assert any(r.skipped == "maximally ramified" for r in rows)


def test_empty_sweep():
    assert sweep(5, 4, range(1, 1), range(1, 5)) == []


def test_verdict_json_shape():
    js = decide(13, 1, 12, 5).to_json()
    assert js["free"] is False and js["clause"] == "BoundaryContinuedFraction"
    assert js["witness"] == {"expansion": "[4;1,1,1,1,2]"}
