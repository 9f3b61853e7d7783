"""Finite continued fractions of x/p and the circle geometry of h*a/p.

Fractional parts and distances to the nearest integer of ``h*a/p`` are
carried as integer numerators over ``p``; the ``Fraction``-returning
helpers exist for callers that want a self-describing value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class ContinuedFraction:
    numerator: int
    denominator: int
    partial_quotients: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.partial_quotients) - 1

    def value(self) -> Fraction:
        """Rebuild the rational from its partial quotients."""
        acc = Fraction(self.partial_quotients[-1])
        for q in reversed(self.partial_quotients[:-1]):
            acc = q + 1 / acc
        return acc

    def __str__(self) -> str:
        head, *tail = self.partial_quotients
        if not tail:
            return f"[{head}]"
        return f"[{head};{','.join(map(str, tail))}]"


@dataclass(frozen=True)
class ConvergentTable:
    quotients: tuple[int, ...]
    p: tuple[int, ...]
    q: tuple[int, ...]

    def semiconvergent_q(self, i: int, r: int) -> int:
        """Denominator ``r*q[i+1] + q[i]`` of an intermediate convergent."""
        if not 0 <= r <= self.quotients[i + 2]:
            raise ValueError(f"r={r} outside [0, a_{i + 2}={self.quotients[i + 2]}]")
        return r * self.q[i + 1] + self.q[i]

    def semiconvergent_p(self, i: int, r: int) -> int:
        if not 0 <= r <= self.quotients[i + 2]:
            raise ValueError(f"r={r} outside [0, a_{i + 2}={self.quotients[i + 2]}]")
        return r * self.p[i + 1] + self.p[i]


def cf_expand(num: int, den: int) -> ContinuedFraction:
    """Canonical expansion of ``num/den`` (last quotient >= 2 unless integral)."""
    if den == 0:
        raise ZeroDivisionError("continued fraction of x/0")
    if num < 0 or den < 0:
        raise ValueError("cf_expand expects non-negative numerator and positive denominator")
    g = gcd(num, den)
    num, den = num // g, den // g
    quotients = []
    x, y = num, den
    while y:
        quotients.append(x // y)
        x, y = y, x % y
    # Euclid's last quotient is >= 2 whenever there is more than one.
    return ContinuedFraction(num, den, tuple(quotients))


def convergents(cf: ContinuedFraction) -> ConvergentTable:
    a = cf.partial_quotients
    p_prev, p_cur = 1, a[0]
    q_prev, q_cur = 0, 1
    ps, qs = [p_cur], [q_cur]
    for ai in a[1:]:
        p_prev, p_cur = p_cur, ai * p_cur + p_prev
        q_prev, q_cur = q_cur, ai * q_cur + q_prev
        ps.append(p_cur)
        qs.append(q_cur)
    return ConvergentTable(a, tuple(ps), tuple(qs))


def frac_residue(h: int, a: int, p: int) -> int:
    """Numerator over ``p`` of the fractional part of ``h*a/p``."""
    return (h * a) % p


def dist_residue(h: int, a: int, p: int) -> int:
    """Numerator over ``p`` of the distance from ``h*a/p`` to the nearest integer."""
    m = (h * a) % p
    return min(m, p - m)


def frac_part(h: int, a: int, p: int) -> Fraction:
    return Fraction(frac_residue(h, a, p), p)


def dist_nearest(h: int, a: int, p: int) -> Fraction:
    return Fraction(dist_residue(h, a, p), p)


def circle_distance(h: int, k: int, a: int, p: int) -> int:
    """Arc length between the points of ``h`` and ``k`` on the unit circle, times ``p``."""
    return dist_residue(h - k, a, p)


def set_E_bruteforce(a: int, p: int) -> list[int]:
    """Indices ``1 <= h < p`` where the fractional part of ``h*a/p`` is a new strict minimum."""
    out = []
    best = p
    for h in range(1, p):
        f = frac_residue(h, a, p)
        if f < best:
            out.append(h)
            best = f
    return out


def set_E_semiconvergents(a: int, p: int) -> list[int]:
    """The same set, read off from the even-index semiconvergent denominators.

    Requires the expansion of ``a/p`` to have length ``n >= 2``.
    """
    if not 0 < a < p:
        raise ValueError(f"need 0 < a < p, got a={a}, p={p}")
    cf = cf_expand(a, p)
    n = cf.n
    if n < 2:
        raise ValueError(f"expansion of {a}/{p} has length {n} < 2")
    table = convergents(cf)
    out = set()
    i = 0
    while 2 * i < n - 1:
        top = cf.partial_quotients[2 * i + 2]
        if 2 * i == n - 3:
            top += 1
        for r in range(top):
            out.add(table.semiconvergent_q(2 * i, r))
        i += 1
    return sorted(out)


def set_E(a: int, p: int) -> list[int]:
    cf = cf_expand(a, p)
    if cf.n >= 2:
        return set_E_semiconvergents(a, p)
    return set_E_bruteforce(a, p)


def density_check(a: int, p: int) -> bool:
    """Check the semiconvergent density property on every ``1 <= h < p``.

    Whenever the point of ``h`` lies strictly between those of ``q[2i+2]`` and
    ``q[2i]``, some semiconvergent ``q_{2i,r}`` must be closer to ``h`` than
    ``||q[2i+1]*a/p||``, and every such close semiconvergent within distance
    ``q[2i+2]`` of ``h`` must equal ``h``.
    """
    if not 0 < a < p:
        raise ValueError(f"need 0 < a < p, got a={a}, p={p}")
    cf = cf_expand(a, p)
    n = cf.n
    table = convergents(cf)
    q = table.q
    for h in range(1, p):
        fh = frac_residue(h, a, p)
        i = 0
        while 2 * i < n - 1:
            lo = frac_residue(q[2 * i + 2], a, p)
            hi = frac_residue(q[2 * i], a, p)
            if lo < fh < hi:
                radius = dist_residue(q[2 * i + 1], a, p)
                close = [
                    table.semiconvergent_q(2 * i, r)
                    for r in range(cf.partial_quotients[2 * i + 2] + 1)
                ]
                close = [s for s in close if circle_distance(h, s, a, p) < radius]
                if not close:
                    return False
                for s in close:
                    if abs(h - s) < q[2 * i + 2] and h != s:
                        return False
            i += 1
    return True


def circle_points(a: int, p: int) -> list[tuple[int, int]]:
    """``(h, h*a mod p)`` for ``1 <= h < p``: the points on the circle of length one."""
    return [(h, frac_residue(h, a, p)) for h in range(1, p)]
