import pytest

from hgfree import tateoort
from hgfree.errors import InternalInvariant
from hgfree.tateoort import GroupAlgebraElement


def test_teichmuller():
    assert tateoort.teichmuller(2, 5, 2) == 7
    z = tateoort.teichmuller(2, 5, 6)
    assert pow(z, 4, 5 ** 6) == 1 and z % 5 == 2
    with pytest.raises(ValueError):
        tateoort.teichmuller(5, 5, 3)


def test_epsilon_values():
    assert tateoort.epsilon_unit(3, 6) == 3 ** 6 - 1
    z = tateoort.teichmuller(2, 5, 6)
    assert tateoort.epsilon_unit(5, 6) == -(3 + 4 * z) % 5 ** 6 == 4269


@pytest.mark.parametrize("p", [3, 5, 7, 13])
def test_b_table_relations(p):
    bs = tateoort.b_table(p, 6)
    assert bs[p - 1] == p * bs[p - 2] % p ** 6
    fact = 1
    for i in range(1, p):
        fact = fact * i % p
        assert bs[i - 1] % p == fact
    assert [tateoort.compute_b(i, p, 6) for i in range(1, p + 1)] == bs


@pytest.mark.parametrize("p", [3, 5, 7])
def test_eigenspaces(p):
    for i in range(1, p):
        x = tateoort.psi(i, p, 4)
        for m in range(1, p):
            assert tateoort.hopf_power_map(m, x) == x * tateoort.chi_power(m, i, p, 4)


def test_algebra_basics():
    s = GroupAlgebraElement.sigma_power(1, 5, 3)
    assert s ** 5 == GroupAlgebraElement.identity(5, 3)
    assert (s + s - s) == s and (-s).counit() == 5 ** 3 - 1
    with pytest.raises(ValueError):
        GroupAlgebraElement.from_coeffs(5, 3, [1, 2])
    with pytest.raises(ValueError):
        s + GroupAlgebraElement.identity(3, 3)


def test_scalar_ratio_rejects_non_multiples():
    p, N = 5, 3
    with pytest.raises(InternalInvariant):
        tateoort.scalar_ratio(tateoort.psi(1, p, N), tateoort.psi(2, p, N))


def test_summary_flags():
    s = tateoort.summary(5)
    assert s["checks_passed"] and not s["b_i_congruent_i"]
    assert s["epsilon_signed"] == tateoort.signed(s["epsilon"], 5 ** 6)
    assert tateoort.summary(3)["b_i_congruent_i"]
