import pytest

from hgfree import exponents
from hgfree.errors import InternalInvariant
from hgfree.params import ExtensionParams, derive


def _table(*args):
    params = ExtensionParams(*args)
    d = derive(params)
    return params, d, exponents.build_table(params, d)


def test_worked_example_table():
    params, d, table = _table(13, 1, 12, 5)
    assert list(table.nu) == [0, 5, 9, 14, 19, 23, 28, 32, 37, 42, 46, 51, 56]
    assert list(table.n_exp) == [0, 4, 9, 13, 18, 23, 27, 32, 37, 41, 46, 51, 56]
    assert table.precision == 8
    assert list(table.E) == [1, 2, 5]
    assert not table.orders_equal
    assert table.to_json() == {
        "nu": list(table.nu), "n": list(table.n_exp), "precision": 8, "E": [1, 2, 5]
    }


def test_closed_form_matches():
    params, d, table = _table(13, 1, 12, 5)
    assert exponents.n_table_closed_form(d.a, d.a0, 13, table.E) == list(table.n_exp)
    assert exponents.n_table(table.nu) == list(table.n_exp)


def test_stable_divisible_has_equal_orders():
    params, d, table = _table(5, 2, 4, 1)
    assert table.orders_equal
    assert exponents.ring_condition(params, d, table).holds


def test_stable_non_divisible_ring_witness():
    params, d, table = _table(5, 3, 4, 7)
    ring = exponents.ring_condition(params, d, table)
    assert not ring.holds and ring.witness is not None


def test_precision_and_boundary_identities():
    params, d, table = _table(13, 1, 12, 5)
    assert exponents.precision_identity_check(params, d, table)
    assert exponents.boundary_check(params, d, table)


def test_maximal_has_no_precision():
    params = ExtensionParams(3, 1, 2, 3)
    with pytest.raises(ValueError):
        exponents.scaffold_precision(params, derive(params))


def test_boundary_check_detects_regime_mismatch():
    params, d, table = _table(13, 1, 12, 5)
    broken = table.__class__(
        nu=tuple(table.nu[:-1]) + (table.nu[-1] - 1,), n_exp=table.n_exp, d=table.d,
        omega=table.omega, precision=table.precision, E=table.E,
    )
    with pytest.raises(InternalInvariant):
        exponents.boundary_check(params, d, broken)
