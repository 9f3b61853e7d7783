import pytest
from hypothesis import given, strategies as st

from hgfree.errors import InvalidParameters
from hgfree.params import (
    ExtensionParams,
    Regime,
    check,
    classify,
    derive,
    is_prime,
    iter_valid,
    validate,
)


def test_worked_example_invariants():
    d = derive(ExtensionParams(13, 1, 12, 5))
    assert (d.c, d.b, d.ell, d.a, d.a0) == (5, -5, 60, 8, 4)
    assert d.regime is Regime.TYPICAL_BOUNDARY


@pytest.mark.parametrize("t,regime", [(1, Regime.TYPICAL_STABLE), (7, Regime.TYPICAL_BOUNDARY),
                                      (9, Regime.TYPICAL_BOUNDARY), (10, Regime.MAXIMAL)])
def test_regimes_p5_r4_e2(t, regime):
    assert derive(ExtensionParams(5, 2, 4, t)).regime is regime


def test_maximal_example():
    d = derive(check(3, 1, 2, 3))
    assert d.a == 0 and d.regime is Regime.MAXIMAL


@pytest.mark.parametrize("args,fragment", [
    ((4, 1, 1, 1), "odd prime"),
    ((2, 1, 1, 1), "odd prime"),
    ((5, 0, 4, 1), "e"),
    ((5, 1, 3, 1), "divide"),
    ((5, 1, 4, 0), "t"),
    ((5, 1, 4, 7), "exceeds"),
    ((5, 2, 4, 5), "divides"),
])
def test_invalid_tuples_rejected(args, fragment):
    report = validate(*args)
    assert not report.ok
    assert any(fragment in v for v in report.violations)
    with pytest.raises(InvalidParameters):
        check(*args)


def test_non_integer_rejected():
    assert not validate(5, 1.5, 4, 1).ok


def test_coprimality_warning_or_violation():
    lenient = validate(5, 1, 4, 2)
    assert lenient.ok and lenient.warnings
    assert not validate(5, 1, 4, 2, strict=True).ok


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_iter_valid_is_ordered_and_valid():
    items = list(iter_valid(11, 3))
    keys = [(q.p, q.r, q.e, q.t) for q, _ in items]
    assert keys == sorted(keys)
    assert all(validate(q.p, q.e, q.r, q.t).ok for q, _ in items)


@given(st.sampled_from([3, 5, 7, 11, 13]), st.integers(1, 5), st.data())
def test_derived_identities(p, e, data):
    r = data.draw(st.sampled_from([d for d in range(1, p) if (p - 1) % d == 0]))
    t = data.draw(st.integers(1, r * p * e // (p - 1)))
    if not validate(p, e, r, t).ok:
        return
    d = derive(ExtensionParams(p, e, r, t))
    assert t == p * d.c + r * d.b
    assert d.ell == d.c * p + d.b == d.a0 * p + d.a
    assert 0 <= d.a < p
    assert (d.a == 0) == (t * (p - 1) == r * p * e)
    assert classify(p, e, r, t, d.a) is d.regime
