"""Exponent tables for the integral bases of the two orders, and scaffold data.

``nu[i]`` is the exponent with ``pi_K^(-nu[i]) w^i`` spanning the order of
elements sending ``theta = pi_L^a`` into the ring of integers; ``n[i]`` plays
the same role for the associated order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from hgfree import contfrac
from hgfree.errors import InternalInvariant
from hgfree.params import DerivedInvariants, ExtensionParams, Regime


@dataclass(frozen=True)
class ExponentTable:
    nu: tuple[int, ...]
    n_exp: tuple[int, ...]
    d: tuple[int, ...]
    omega: tuple[int, ...]
    precision: int
    E: tuple[int, ...]

    @property
    def orders_equal(self) -> bool:
        return self.nu == self.n_exp

    def to_json(self) -> dict:
        return {
            "nu": list(self.nu),
            "n": list(self.n_exp),
            "precision": self.precision,
            "E": list(self.E),
        }


@dataclass(frozen=True)
class RingCheck:
    holds: bool
    witness: Optional[tuple[int, int]] = None


def nu_table(a: int, ell: int, p: int) -> list[int]:
    return [(a + i * ell) // p for i in range(p)]


def n_table(nu) -> list[int]:
    p = len(nu)
    return [min(nu[i + j] - nu[j] for j in range(p - i)) for i in range(p)]


def n_table_closed_form(a: int, a0: int, p: int, E) -> list[int]:
    E = set(E)
    return [i * a0 + (i * a) // p + (1 if (p - i) in E else 0) for i in range(p)]


def scaffold_parameters(shift: int, p: int) -> tuple[list[int], list[int]]:
    """``(d, omega)`` for a scaffold with the given shift parameter on a degree-p extension."""
    a = shift % p
    d = [(a + shift * i) // p for i in range(p)]
    omega = [min(d[i + j] - d[j] for j in range(p - i)) for i in range(p)]
    return d, omega


def top_exponent_bound(params: ExtensionParams, derived: DerivedInvariants) -> int:
    """``e + (p-1)/r * (r-1) * c``, the largest admissible value of ``nu[p-1]``."""
    p, r = params.p, params.r
    return params.e + (p - 1) // r * (r - 1) * derived.c


def _require_typical(derived: DerivedInvariants) -> None:
    if derived.a == 0:
        raise ValueError("maximally ramified extension (a = 0) carries no scaffold data here")


def scaffold_precision(params: ExtensionParams, derived: DerivedInvariants) -> int:
    _require_typical(derived)
    p, r = params.p, params.r
    precision = p * params.e - (p - 1) // r * params.t
    if precision < 1:
        raise InternalInvariant(f"scaffold precision {precision} < 1 for {params}")
    return precision


def precision_identity_check(params, derived, table: ExponentTable) -> bool:
    p = params.p
    rhs = p * (top_exponent_bound(params, derived) - table.nu[p - 1]) + derived.a
    return table.precision == rhs


def boundary_check(params, derived, table: ExponentTable) -> bool:
    """Return whether ``nu[p-1]`` attains its bound; raise if it exceeds it."""
    _require_typical(derived)
    bound = top_exponent_bound(params, derived)
    top = table.nu[params.p - 1]
    if top > bound:
        raise InternalInvariant(f"nu[p-1]={top} exceeds {bound} for {params}")
    attained = top == bound
    if attained != (derived.regime is Regime.TYPICAL_BOUNDARY):
        raise InternalInvariant(f"bound attainment disagrees with regime for {params}")
    return attained


def ring_condition(params, derived, table: ExponentTable) -> RingCheck:
    """Test whether the nu-lattice is closed under multiplication.

    Pairs with ``i + j >= p`` must always pass; a failure there raises.
    """
    _require_typical(derived)
    p = params.p
    nu = table.nu
    bound = top_exponent_bound(params, derived)
    witness = None
    for i in range(p):
        for j in range(p):
            if i + j <= p - 1:
                if witness is None and nu[i] + nu[j] > nu[i + j]:
                    witness = (i, j)
            elif nu[i] + nu[j] > bound + nu[i + j + 1 - p]:
                raise InternalInvariant(f"wrap-around product ({i}, {j}) leaves the lattice for {params}")
    return RingCheck(witness is None, witness)


def build_table(params: ExtensionParams, derived: DerivedInvariants) -> ExponentTable:
    _require_typical(derived)
    p, a, ell = params.p, derived.a, derived.ell
    nu = nu_table(a, ell, p)
    n_exp = n_table(nu)
    d, omega = scaffold_parameters(ell, p)
    if nu[0] != 0 or n_exp[0] != 0:
        raise InternalInvariant("nu[0] and n[0] must vanish")
    if nu[p - 1] != a + (p - 1) * derived.a0:
        raise InternalInvariant(f"nu[p-1]={nu[p - 1]} != a + (p-1)a0")
    if any(ni > vi for ni, vi in zip(n_exp, nu)):
        raise InternalInvariant("n[i] > nu[i]")
    return ExponentTable(
        nu=tuple(nu),
        n_exp=tuple(n_exp),
        d=tuple(d),
        omega=tuple(omega),
        precision=scaffold_precision(params, derived),
        E=tuple(contfrac.set_E(a, p)),
    )
