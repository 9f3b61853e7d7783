"""Input validation and the scalar invariants of a degree-p extension.

An extension is described by the tuple ``(p, e, r, t)``: the residue
characteristic (equal to the degree), the absolute ramification index of
the base field, the degree of the normal closure over the top field, and
the ramification jump of the normal closure.  Every comparison against the
rational bound ``r*p*e/(p-1)`` is done by cross-multiplication.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd

from hgfree.errors import InternalInvariant, InvalidParameters


class Regime(str, enum.Enum):
    MAXIMAL = "Maximal"
    TYPICAL_STABLE = "TypicalStable"
    TYPICAL_BOUNDARY = "TypicalBoundary"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class ExtensionParams:
    p: int
    e: int
    r: int
    t: int


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class DerivedInvariants:
    c: int
    b: int
    ell: int
    a: int
    a0: int
    regime: Regime
    coprimality_warning: bool = field(default=False)

    @property
    def typical(self) -> bool:
        return self.a != 0


def validate(p: int, e: int, r: int, t: int, strict: bool = False) -> ValidationReport:
    """Collect every violated constraint on ``(p, e, r, t)``.

    Never raises.  With ``strict=True`` a non-coprime ``(t mod r, r)`` pair is
    a violation; otherwise it is only reported as a warning.
    """
    violations: list[str] = []
    warnings: list[str] = []
    for name, value in (("p", p), ("e", e), ("r", r), ("t", t)):
        if not isinstance(value, int) or isinstance(value, bool):
            violations.append(f"{name}={value!r} is not an integer")
    if violations:
        return ValidationReport(tuple(violations), ())

    if not is_prime(p) or p == 2:
        violations.append(f"p={p} is not an odd prime")
    if e < 1:
        violations.append(f"e={e} must be >= 1")
    if r < 1:
        violations.append(f"r={r} must be >= 1")
    elif p >= 2 and (p - 1) % r != 0:
        violations.append(f"r={r} does not divide p-1={p - 1}")
    if t < 1:
        violations.append(f"t={t} must be >= 1")
    if violations:
        return ValidationReport(tuple(violations), ())

    lhs, rhs = t * (p - 1), r * p * e
    if lhs > rhs:
        violations.append(f"t(p-1)={lhs} exceeds rpe={rhs}")
    elif lhs < rhs and t % p == 0:
        # below the bound the jump of a typical extension is prime to p
        violations.append(f"p={p} divides t={t} but t(p-1)={lhs} < rpe={rhs}")

    c = t % r
    if gcd(c, r) > 1:
        msg = f"gcd(c, r)=gcd({c}, {r})={gcd(c, r)} > 1"
        if strict:
            violations.append(msg)
        else:
            warnings.append(msg)
    return ValidationReport(tuple(violations), tuple(warnings))


def check(p: int, e: int, r: int, t: int, strict: bool = False) -> ExtensionParams:
    """Validate and return the parameter record, raising on any violation."""
    report = validate(p, e, r, t, strict=strict)
    if not report.ok:
        raise InvalidParameters(report.violations)
    return ExtensionParams(p, e, r, t)


def classify(p: int, e: int, r: int, t: int, a: int) -> Regime:
    if a == 0:
        return Regime.MAXIMAL
    if (t + r) * (p - 1) < r * p * e:
        return Regime.TYPICAL_STABLE
    return Regime.TYPICAL_BOUNDARY


def derive(params: ExtensionParams) -> DerivedInvariants:
    p, e, r, t = params.p, params.e, params.r, params.t
    c = t % r
    num = t - p * c
    if num % r:
        raise InternalInvariant(f"t - pc = {num} is not divisible by r = {r}")
    b = num // r
    ell = c * p + b
    if r * ell != p * c * (r - 1) + t:
        raise InternalInvariant(f"r*ell != pc(r-1)+t for {params}")
    a, a0 = ell % p, ell // p
    regime = classify(p, e, r, t, a)
    if (a == 0) != (t * (p - 1) == r * p * e):
        raise InternalInvariant(f"a = 0 disagrees with maximal ramification for {params}")
    return DerivedInvariants(c, b, ell, a, a0, regime, gcd(c, r) > 1)


def rpe_bound_excess(params: ExtensionParams) -> int:
    """``r*p*e - t*(p-1)``; zero exactly in the maximally ramified case."""
    return params.r * params.p * params.e - params.t * (params.p - 1)


def iter_valid(p_max: int, e_max: int, strict: bool = False):
    """Yield every valid ``(params, derived)`` pair with ``p <= p_max``, ``e <= e_max``.

    Order is lexicographic in ``(p, r, e, t)``.
    """
    for p in range(3, p_max + 1):
        if not is_prime(p):
            continue
        for r in range(1, p):
            if (p - 1) % r:
                continue
            for e in range(1, e_max + 1):
                t_max = (r * p * e) // (p - 1)
                for t in range(1, t_max + 1):
                    if validate(p, e, r, t, strict=strict).ok:
                        params = ExtensionParams(p, e, r, t)
                        yield params, derive(params)
