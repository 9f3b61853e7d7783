"""Eigenelements of the group algebra (Z/p^N)[C_p] and their power coefficients.

Elements are coefficient vectors ``c[0..p-1]`` standing for
``sum c[m] sigma^m``.  ``psi(1)`` generates the first eigenspace and its
powers satisfy ``psi^i = b_i psi_i`` (``i < p``) and ``psi^p = b_p psi``.
"""

from __future__ import annotations

from dataclasses import dataclass

from hgfree.errors import InternalInvariant

DEFAULT_PRECISION = 6


@dataclass(frozen=True)
class GroupAlgebraElement:
    p: int
    N: int
    coeffs: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return self.p ** self.N

    @classmethod
    def from_coeffs(cls, p: int, N: int, coeffs) -> "GroupAlgebraElement":
        mod = p ** N
        coeffs = tuple(int(c) % mod for c in coeffs)
        if len(coeffs) != p:
            raise ValueError(f"need {p} coefficients, got {len(coeffs)}")
        return cls(p, N, coeffs)

    @classmethod
    def identity(cls, p: int, N: int) -> "GroupAlgebraElement":
        return cls.from_coeffs(p, N, [1] + [0] * (p - 1))

    @classmethod
    def sigma_power(cls, m: int, p: int, N: int) -> "GroupAlgebraElement":
        c = [0] * p
        c[m % p] = 1
        return cls.from_coeffs(p, N, c)

    def _check(self, other: "GroupAlgebraElement") -> None:
        if (self.p, self.N) != (other.p, other.N):
            raise ValueError("elements live in different rings")

    def __add__(self, other):
        self._check(other)
        return self.from_coeffs(self.p, self.N, [x + y for x, y in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return self.from_coeffs(self.p, self.N, [x - y for x, y in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return self.from_coeffs(self.p, self.N, [-x for x in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return self.from_coeffs(self.p, self.N, [other * x for x in self.coeffs])
        self._check(other)
        p = self.p
        out = [0] * p
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[(i + j) % p] += x * y
        return self.from_coeffs(p, self.N, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = self.identity(self.p, self.N)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def counit(self) -> int:
        return sum(self.coeffs) % self.modulus


def teichmuller(m: int, p: int, N: int) -> int:
    """Multiplicative lift of ``m mod p`` to a (p-1)-st root of unity mod ``p^N``."""
    if m % p == 0:
        raise ValueError(f"{m} is not a unit mod {p}")
    mod = p ** N
    x = m % mod
    while True:
        nxt = pow(x, p, mod)
        if nxt == x:
            return x
        x = nxt


def chi_power(m: int, i: int, p: int, N: int) -> int:
    """``chi(m)^i`` for any integer ``i``, negative exponents by inversion."""
    return pow(teichmuller(m, p, N), i, p ** N)


def hopf_power_map(n: int, x: GroupAlgebraElement) -> GroupAlgebraElement:
    """``[n]``: the algebra map sending ``sigma^m`` to ``sigma^(n*m)``."""
    p = x.p
    out = [0] * p
    for m, c in enumerate(x.coeffs):
        out[(n * m) % p] += c
    return GroupAlgebraElement.from_coeffs(p, x.N, out)


def psi(i: int, p: int, N: int = DEFAULT_PRECISION) -> GroupAlgebraElement:
    if not 1 <= i <= p - 1:
        raise ValueError(f"eigenelement index {i} outside [1, {p - 1}]")
    if i == p - 1:
        return GroupAlgebraElement.from_coeffs(p, N, [p - 1] + [-1] * (p - 1))
    coeffs = [0] + [-chi_power(m, -i, p, N) for m in range(1, p)]
    return GroupAlgebraElement.from_coeffs(p, N, coeffs)


def scalar_ratio(x: GroupAlgebraElement, target: GroupAlgebraElement) -> int:
    """Solve ``x = c * target`` for ``c``, requiring agreement on every coefficient."""
    mod = x.modulus
    p = x.p
    pivot = next((idx for idx, t in enumerate(target.coeffs) if t % p), None)
    if pivot is None:
        raise InternalInvariant("target has no unit coefficient to divide by")
    c = x.coeffs[pivot] * pow(target.coeffs[pivot], -1, mod) % mod
    if (target * c).coeffs != x.coeffs:
        raise InternalInvariant("element is not a scalar multiple of the target")
    return c


def compute_b(i: int, p: int, N: int = DEFAULT_PRECISION) -> int:
    """``b_i`` with ``psi^i = b_i psi_i`` for ``i < p`` and ``psi^p = b_p psi``."""
    if not 1 <= i <= p:
        raise ValueError(f"index {i} outside [1, {p}]")
    base = psi(1, p, N)
    target = base if i == p else psi(i, p, N)
    return scalar_ratio(base ** i, target)


def b_table(p: int, N: int = DEFAULT_PRECISION) -> list[int]:
    """``[b_1, ..., b_p]`` computed from successive powers of ``psi``."""
    base = psi(1, p, N)
    out = []
    power = base
    for i in range(1, p + 1):
        target = base if i == p else psi(i, p, N)
        out.append(scalar_ratio(power, target))
        power = power * base
    return out


def epsilon_unit(p: int, N: int = DEFAULT_PRECISION) -> int:
    """The unit ``b_{p-1}`` appearing in ``w^p = eps * p * y^((p-1)(r-1)) * w``."""
    eps = compute_b(p - 1, p, N)
    if eps % p == 0:
        raise InternalInvariant(f"b_{p - 1} is not a unit mod {p}")
    return eps


def signed(x: int, mod: int) -> int:
    """Representative of ``x mod mod`` in ``(-mod/2, mod/2]``."""
    x %= mod
    return x - mod if x > mod // 2 else x


def summary(p: int, N: int = DEFAULT_PRECISION) -> dict:
    """All coefficients plus the checks that must hold, as a JSON-ready dict."""
    mod = p ** N
    bs = b_table(p, N)
    eps = bs[p - 2]
    fact, factorials = 1, []
    for i in range(1, p):
        fact = fact * i % p
        factorials.append(fact)
    checks = {
        "b_i_congruent_i_factorial": all(bs[i - 1] % p == factorials[i - 1] for i in range(1, p)),
        "b_p_equals_p_b_p_minus_1": bs[p - 1] == (p * eps) % mod,
        "epsilon_unit": eps % p != 0,
        "eigenspaces": all(
            hopf_power_map(m, psi(i, p, N)) == psi(i, p, N) * chi_power(m, i, p, N)
            for m in range(1, p)
            for i in range(1, p)
        ),
    }
    return {
        "p": p,
        "precision": N,
        "modulus": mod,
        "b": {str(i): bs[i - 1] for i in range(1, p + 1)},
        "epsilon": eps,
        "epsilon_signed": signed(eps, mod),
        "checks": checks,
        "checks_passed": all(checks.values()),
        # the congruence b_i = i mod p as usually quoted; false for p >= 5
        "b_i_congruent_i": all(bs[i - 1] % p == i for i in range(1, p)),
    }
