import pytest

from hgfree import structmat
from hgfree.errors import InternalInvariant
from hgfree.verdict import analyze


def _an(*args):
    return analyze(*args)


def test_patterns_match_valuations_worked_example():
    an = _an(13, 1, 12, 5)
    for k in range(13):
        assert structmat.build_pattern(k, an.table, an.derived) == structmat.pattern_from_valuations(
            k, an.params, an.derived, an.table)


def test_hall_certificate_worked_example():
    an = _an(13, 1, 12, 5)
    hall = structmat.necessity_columns(an.table, an.derived)
    assert hall.found
    assert hall.certificate == {"s": 2, "h": [4, 7, 10], "columns": [9, 6, 3], "rows": [7, 10]}
    search = structmat.sufficiency_search(an.table, an.derived)
    assert not search.found
    assert "entry (4, 3) of M_1 is not one" in search.violations


def test_no_perfect_matching_when_not_free():
    an = _an(13, 1, 12, 5)
    pats = structmat.all_patterns(an.table, an.derived)
    assert structmat.max_matching_size(structmat.union_support(pats), 13) < 13
    assert structmat.generic_det_nonzero(pats, an.table, an.derived) is False


def test_generator_certificate_when_free():
    an = _an(5, 2, 4, 7)
    mv = structmat.matrix_verdict(an.params, an.derived, an.table)
    assert mv.free and mv.certificate_type == "generator"
    assert mv.matching_size == 5
    js = mv.to_json()
    assert set(js) == {"patterns_summary", "certificate"}


def test_columns_have_single_candidate():
    an = _an(13, 1, 12, 5)
    for pat in structmat.all_patterns(an.table, an.derived):
        for i in range(13):
            assert sum(pat.entry(j, i).nonzero for j in range(13)) <= 1


def test_stable_regime_rejected():
    an = _an(5, 2, 4, 1)
    with pytest.raises(ValueError):
        structmat.build_pattern(0, an.table, an.derived)


def test_necessity_needs_long_expansion():
    an = _an(5, 2, 4, 7)
    with pytest.raises(ValueError):
        structmat.necessity_columns(an.table, an.derived)


def test_matching_of_empty_support():
    assert structmat.max_matching_size(set(), 3) == 0


def test_invariant_error_type():
    assert issubclass(InternalInvariant, AssertionError)
