"""The freeness decision for a degree-p extension and parameter sweeps."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional

from hgfree import contfrac, exponents
from hgfree.errors import InternalInvariant, InvalidParameters
from hgfree.params import (
    DerivedInvariants,
    ExtensionParams,
    Regime,
    check,
    derive,
    validate,
)


class Clause(str, enum.Enum):
    MAXIMAL_RAMIFICATION = "MaximalRamification"
    STABLE_DIVISIBILITY = "StableDivisibility"
    BOUNDARY_CONTINUED_FRACTION = "BoundaryContinuedFraction"


@dataclass(frozen=True)
class FreenessVerdict:
    free: bool
    clause: Clause
    cf_length: Optional[int] = None
    divides: Optional[bool] = None
    associated_order_maximal: bool = False
    witness: Optional[dict] = None
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "free": self.free,
            "clause": self.clause.value,
            "cf_length": self.cf_length,
            "divides": self.divides,
            "associated_order_maximal": self.associated_order_maximal,
            "witness": self.witness,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class Analysis:
    """Everything computed for one tuple, kept together for reporting."""

    params: ExtensionParams
    derived: DerivedInvariants
    cf: Optional[contfrac.ContinuedFraction]
    table: Optional[exponents.ExponentTable]
    verdict: FreenessVerdict
    warnings: tuple[str, ...] = field(default=())


def _verdict_from(params, derived, cf, table) -> FreenessVerdict:
    p, a = params.p, derived.a
    if derived.regime is Regime.MAXIMAL:
        return FreenessVerdict(
            free=True,
            clause=Clause.MAXIMAL_RAMIFICATION,
            associated_order_maximal=True,
            notes=("a = 0: the associated order is the maximal order",),
        )

    divides = (p - 1) % a == 0
    n = cf.n
    if derived.regime is Regime.TYPICAL_STABLE:
        free = divides
        clause = Clause.STABLE_DIVISIBILITY
        ring = exponents.ring_condition(params, derived, table)
        witness = None if ring.holds else {"pair": list(ring.witness)}
        notes = (f"a={a} {'divides' if divides else 'does not divide'} p-1={p - 1}",)
    else:
        free = n <= 4
        clause = Clause.BOUNDARY_CONTINUED_FRACTION
        witness = {"expansion": str(cf)}
        notes = (f"ell/p = {cf}, length n = {n}",)

    if divides and not free:
        raise InternalInvariant(f"a | p-1 but verdict is not free for {params}")
    return FreenessVerdict(
        free=free,
        clause=clause,
        cf_length=n,
        divides=divides,
        witness=witness,
        notes=notes,
    )


def analyze(p: int, e: int, r: int, t: int, strict: bool = False) -> Analysis:
    report = validate(p, e, r, t, strict=strict)
    if not report.ok:
        raise InvalidParameters(report.violations)
    params = ExtensionParams(p, e, r, t)
    derived = derive(params)
    cf = table = None
    if derived.typical:
        cf = contfrac.cf_expand(derived.ell, p)
        table = exponents.build_table(params, derived)
    verdict = _verdict_from(params, derived, cf, table)
    return Analysis(params, derived, cf, table, verdict, report.warnings)


def decide(p: int, e: int, r: int, t: int, strict: bool = False) -> FreenessVerdict:
    """Decide whether the ring of integers is free over its associated order."""
    return analyze(p, e, r, t, strict=strict).verdict


def decide_galois(p: int, e: int, t: int) -> tuple[bool, str]:
    """Cyclic degree-p criterion stated directly in terms of ``t``.

    Kept separate from :func:`decide` so the ``r = 1`` specialization can be
    checked against it.  Returns ``(free, clause)``.
    """
    check(p, e, 1, t)
    a = t % p
    if a == 0:
        return True, Clause.MAXIMAL_RAMIFICATION.value
    # t < pe/(p-1) - 1  <=>  (t + 1)(p - 1) < pe
    if (t + 1) * (p - 1) < p * e:
        return (p - 1) % a == 0, Clause.STABLE_DIVISIBILITY.value
    return contfrac.cf_expand(t, p).n <= 4, Clause.BOUNDARY_CONTINUED_FRACTION.value


SWEEP_HEADER = ("p", "e", "r", "t", "c", "ell", "a", "regime", "n", "free", "clause", "skipped")


@dataclass(frozen=True)
class SweepRow:
    p: int
    e: int
    r: int
    t: int
    analysis: Optional[Analysis] = None
    skipped: str = ""

    def as_csv_fields(self) -> list:
        if self.analysis is None:
            return [self.p, self.e, self.r, self.t, "", "", "", "", "", "", "", self.skipped]
        d, v = self.analysis.derived, self.analysis.verdict
        n = "" if v.cf_length is None else v.cf_length
        return [
            self.p, self.e, self.r, self.t, d.c, d.ell, d.a, d.regime.value,
            n, str(v.free).lower(), v.clause.value, "",
        ]


def sweep(
    p: int,
    r: int,
    e_range: Iterable[int],
    t_range: Iterable[int],
    strict: bool = False,
    typical_only: bool = False,
) -> list[SweepRow]:
    """Evaluate every ``(e, t)`` pair; rows come out ordered by ``(e, t)``.

    Invalid tuples become rows with a ``skipped`` reason instead of raising.
    """
    rows = []
    t_values = sorted(set(t_range))
    for e in sorted(set(e_range)):
        for t in t_values:
            report = validate(p, e, r, t, strict=strict)
            if not report.ok:
                rows.append(SweepRow(p, e, r, t, skipped="; ".join(report.violations)))
                continue
            result = analyze(p, e, r, t, strict=strict)
            if typical_only and not result.derived.typical:
                rows.append(SweepRow(p, e, r, t, skipped="maximally ramified"))
                continue
            rows.append(SweepRow(p, e, r, t, result))
    return rows
