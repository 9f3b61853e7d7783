"""Zero patterns of the multiplication matrices in the boundary regime.

For ``alpha = sum_k x_k pi_K^(-nu[k]) w^k`` the matrix ``M(alpha)`` of
``lambda -> lambda * alpha`` (associated-order basis to nu-basis) is
``sum_k x_k M_k``.  Only the residues of the entries of ``M_k`` modulo the
maximal ideal matter, and each is zero, exactly one, or some unit we do not
pin down.  All determinant reasoning below is combinatorial on that pattern.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from hgfree import contfrac, exponents
from hgfree.errors import InternalInvariant
from hgfree.exponents import ExponentTable
from hgfree.params import DerivedInvariants, ExtensionParams, Regime


class Entry(enum.IntEnum):
    ZERO = 0
    ONE = 1
    UNIT = 2

    @property
    def nonzero(self) -> bool:
        return self is not Entry.ZERO


@dataclass(frozen=True)
class StructureMatrix:
    """Pattern of ``M_k``; each column has at most one non-zero entry.

    ``columns[i]`` is ``(row, entry)`` for the only candidate row of column
    ``i``; the entry may still be ``Entry.ZERO``.
    """

    k: int
    p: int
    columns: tuple[tuple[int, Entry], ...]

    def entry(self, j: int, i: int) -> Entry:
        row, value = self.columns[i]
        return value if row == j else Entry.ZERO

    def grid(self) -> list[list[Entry]]:
        out = [[Entry.ZERO] * self.p for _ in range(self.p)]
        for i, (row, value) in enumerate(self.columns):
            out[row][i] = value
        return out

    def support(self) -> set[tuple[int, int]]:
        return {(row, i) for i, (row, value) in enumerate(self.columns) if value.nonzero}


def _candidate_row(k: int, i: int, p: int) -> int:
    return k + i if k + i <= p - 1 else k + i - (p - 1)


def _require_boundary(derived: DerivedInvariants) -> None:
    if derived.regime is not Regime.TYPICAL_BOUNDARY:
        raise ValueError(f"matrix patterns need the boundary regime, got {derived.regime.value}")


def pattern_for(k: int, a: int, p: int, E) -> StructureMatrix:
    """Entry pattern of ``M_k`` from the fractional-part criteria."""
    if not 0 <= k <= p - 1:
        raise ValueError(f"k={k} outside [0, {p - 1}]")
    E = set(E)
    fk = contfrac.frac_residue(k + 1, a, p)
    cols = []
    for i in range(p):
        h = p - i
        fh = contfrac.frac_residue(h, a, p)
        row = _candidate_row(k, i, p)
        if k + i <= p - 1:
            one = h == p or h in E or fk < fh
            value = Entry.ONE if one else Entry.ZERO
        else:
            # all fractional parts are numerators over p
            rhs = fh + p if h in E else fh
            value = Entry.UNIT if a + fk < rhs else Entry.ZERO
        cols.append((row, value))
    return StructureMatrix(k, p, tuple(cols))


def build_pattern(k: int, table: ExponentTable, derived: DerivedInvariants) -> StructureMatrix:
    _require_boundary(derived)
    return pattern_for(k, derived.a, len(table.nu), table.E)


def entry_valuations(k: int, params: ExtensionParams, derived: DerivedInvariants,
                     table: ExponentTable) -> list[int]:
    """Valuation of the single candidate entry in every column of ``M_k``.

    Read straight off the coordinate formula: ``nu[k+i] - nu[k] - n[i]`` below
    the wrap, and ``bound + nu[m] - nu[k] - n[i]`` past it, where ``bound`` is
    the valuation of the coefficient of ``w^p`` on ``w``.
    """
    p = params.p
    nu, n = table.nu, table.n_exp
    bound = exponents.top_exponent_bound(params, derived)
    out = []
    for i in range(p):
        if k + i <= p - 1:
            out.append(nu[k + i] - nu[k] - n[i])
        else:
            m = k + i - (p - 1)
            out.append(bound + nu[m] - nu[k] - n[i])
    return out


def pattern_from_valuations(k: int, params, derived, table) -> StructureMatrix:
    """Independent route to the pattern: an entry is non-zero iff its valuation is 0."""
    _require_boundary(derived)
    p = params.p
    vals = entry_valuations(k, params, derived, table)
    cols = []
    for i, v in enumerate(vals):
        if v < 0:
            raise InternalInvariant(f"entry ({_candidate_row(k, i, p)}, {i}) of M_{k} is not integral")
        if v > 0:
            value = Entry.ZERO
        else:
            value = Entry.ONE if k + i <= p - 1 else Entry.UNIT
        cols.append((_candidate_row(k, i, p), value))
    return StructureMatrix(k, p, tuple(cols))


def all_patterns(table: ExponentTable, derived: DerivedInvariants) -> list[StructureMatrix]:
    return [build_pattern(k, table, derived) for k in range(len(table.nu))]


def union_support(patterns) -> set[tuple[int, int]]:
    out: set[tuple[int, int]] = set()
    for pat in patterns:
        out |= pat.support()
    return out


def max_matching_size(support, p: int) -> int:
    if not support:
        return 0
    rows, cols = zip(*support)
    graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(p, p))
    match = maximum_bipartite_matching(graph, perm_type="column")
    return int(np.count_nonzero(match >= 0))


@dataclass
class SearchResult:
    certificate: Optional[dict] = None
    violations: list[str] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.certificate is not None


def _cf_data(derived: DerivedInvariants, p: int):
    cf = contfrac.cf_expand(derived.ell, p)
    return cf, contfrac.convergents(cf)


def sufficiency_search(table: ExponentTable, derived: DerivedInvariants) -> SearchResult:
    """Try to certify a generator ``u*Id + pi_K^(-nu[k]) w^k`` with ``k = q[2] - 1``."""
    _require_boundary(derived)
    p = len(table.nu)
    cf, conv = _cf_data(derived, p)
    m1 = build_pattern(0, table, derived)
    diag = [m1.entry(i, i) for i in range(p)]

    if cf.n <= 2:
        if all(v is Entry.ONE for v in diag):
            return SearchResult({"k": 0, "permutation": list(range(p))})
        return SearchResult(violations=["M(1) diagonal is not all ones"])

    res = SearchResult()
    k = conv.q[2] - 1
    mk = build_pattern(k, table, derived)
    if diag[0] is not Entry.ONE:
        res.violations.append("M(1) entry (0, 0) is not one")
    if all(v is Entry.ONE for v in diag[1:]):
        res.violations.append("M(1) has no zero on the diagonal although n > 2")
    if any(mk.entry(0, i).nonzero for i in range(p)):
        res.violations.append(f"row 0 of M_{k} is not zero")

    perm = {}
    for i in range(1, p):
        row, value = mk.columns[i]
        if k + i <= p - 1:
            if value is not Entry.ONE:
                res.violations.append(f"entry ({row}, {i}) of M_{k} is not one")
        elif not value.nonzero:
            res.violations.append(f"entry ({row}, {i}) of M_{k} is zero")
        if row == i:
            res.violations.append(f"M_{k} meets the diagonal at column {i}")
        perm[i] = row
    if sorted(perm.values()) != list(range(1, p)):
        res.violations.append("column-to-row map is not a permutation of 1..p-1")
    if res.violations:
        return res
    res.certificate = {
        "k": k,
        "permutation": [0] + [perm[i] for i in range(1, p)],
        "zero_diagonal": [i for i in range(1, p) if diag[i] is Entry.ZERO],
    }
    return res


def necessity_indices(n: int, conv: contfrac.ConvergentTable) -> tuple[int, list[int]]:
    """``(s, h_values)`` for the columns used against ``n >= 5``."""
    s = (n - 2) // 2 if n % 2 == 0 else (n - 1) // 2
    q = conv.q
    hs = [2 * q[2 * s - 2]]
    hs += [q[2 * s - 2] + r * q[2 * s - 1] + q[2 * s] for r in range(conv.quotients[2 * s] + 1)]
    return s, hs


def necessity_columns(table: ExponentTable, derived: DerivedInvariants,
                      patterns: Optional[list] = None) -> SearchResult:
    """Look for columns whose joint non-zero support is too small for any determinant term."""
    _require_boundary(derived)
    p = len(table.nu)
    cf, conv = _cf_data(derived, p)
    if cf.n < 5:
        raise ValueError(f"necessity columns need n >= 5, got n = {cf.n}")
    if patterns is None:
        patterns = all_patterns(table, derived)
    s, hs = necessity_indices(cf.n, conv)
    cols = [p - h for h in hs]
    res = SearchResult()
    if len(set(cols)) != len(cols) or not all(1 <= i <= p - 1 for i in cols):
        res.violations.append(f"designated columns {cols} are not distinct in-range indices")
        return res

    rows = set()
    for pat in patterns:
        for h, i in zip(hs, cols):
            if pat.entry(pat.columns[i][0], i).nonzero:
                rows.add(pat.columns[i][0])
                if pat.k == 0 or pat.k > h - 1:
                    res.violations.append(f"M_{pat.k} has a non-zero in column {i} (h = {h})")
    a_2s = conv.quotients[2 * s]
    if len(rows) > a_2s + 1:
        res.violations.append(f"support rows {sorted(rows)} exceed a_2s + 1 = {a_2s + 1}")
    if res.violations:
        return res
    res.certificate = {"s": s, "h": hs, "columns": cols, "rows": sorted(rows)}
    return res


def generic_det_nonzero(patterns, table: ExponentTable, derived: DerivedInvariants) -> bool:
    """Whether some ``alpha`` has ``det M(alpha)`` prime to the maximal ideal.

    ``False`` when the union support has no perfect matching; ``True`` when
    additionally the explicit generator certificate exists.
    """
    p = len(table.nu)
    matched = max_matching_size(union_support(patterns), p) == p
    if not matched:
        return False
    if sufficiency_search(table, derived).found:
        return True
    raise InternalInvariant("perfect matching exists but no generator certificate was found")


@dataclass(frozen=True)
class MatrixVerdict:
    free: bool
    certificate_type: str
    certificate: dict
    matching_size: int
    summary: list

    def to_json(self) -> dict:
        return {
            "patterns_summary": {
                "per_k": self.summary,
                "matching_size": self.matching_size,
            },
            "certificate": {"type": self.certificate_type, "data": self.certificate},
        }


def matrix_verdict(params: ExtensionParams, derived: DerivedInvariants,
                   table: ExponentTable) -> MatrixVerdict:
    """Freeness decided by pattern combinatorics alone."""
    _require_boundary(derived)
    p = params.p
    patterns = all_patterns(table, derived)
    for pat in patterns:
        for i, (row, _) in enumerate(pat.columns):
            if sum(pat.entry(j, i).nonzero for j in range(p)) > 1:
                raise InternalInvariant(f"column {i} of M_{pat.k} has two non-zero entries")
    matching = max_matching_size(union_support(patterns), p)
    summary = [
        {
            "k": pat.k,
            "ones": sum(v is Entry.ONE for _, v in pat.columns),
            "units": sum(v is Entry.UNIT for _, v in pat.columns),
        }
        for pat in patterns
    ]
    free = generic_det_nonzero(patterns, table, derived)
    if free:
        cert = sufficiency_search(table, derived)
        return MatrixVerdict(True, "generator", cert.certificate, matching, summary)
    hall = necessity_columns(table, derived, patterns)
    if not hall.found:
        raise InternalInvariant(f"no Hall certificate for {params}: {hall.violations}")
    return MatrixVerdict(False, "hall", hall.certificate, matching, summary)
