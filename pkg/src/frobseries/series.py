"""Truncated formal power series in one variable q.

Everything is computed inside a hard truncation window: a series of
truncation N stores exactly the coefficients of q^0 .. q^N and nothing
else.  Operations never extend or silently shrink the window; combining
series with different truncations (or different coefficient rings) is an
error.

Coefficients live either in the arbitrary-precision integers or in the
integers mod m, selected by a :class:`CoefficientRing` tag fixed per
series.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class CoefficientRing:
    """Coefficient ring tag: exact integers (``modulus=None``) or Z/mZ."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")

    @property
    def is_modular(self) -> bool:
        return self.modulus is not None

    def normalize(self, x: int) -> int:
        return x if self.modulus is None else x % self.modulus

    def unit_inverse(self, x: int) -> int:
        """Multiplicative inverse of a unit, or ValueError if x is no unit."""
        if self.modulus is None:
            if x not in (1, -1):
                raise ValueError(f"{x} is not a unit in the integers")
            return x
        try:
            return pow(x, -1, self.modulus)
        except ValueError:
            raise ValueError(f"{x} is not a unit mod {self.modulus}") from None

    def __str__(self) -> str:
        return "Z" if self.modulus is None else f"Z/{self.modulus}"


EXACT = CoefficientRing()
MOD2 = CoefficientRing(2)


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficient vector c_0..c_N; index n holds the coefficient of q^n."""

    ring: CoefficientRing
    truncation: int
    coeffs: tuple

    def __post_init__(self):
        if self.truncation < 0:
            raise ValueError("truncation must be >= 0")
        if len(self.coeffs) != self.truncation + 1:
            raise ValueError(
                f"need {self.truncation + 1} coefficients, got {len(self.coeffs)}"
            )

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.truncation:
            raise IndexError(
                f"index {n} outside truncation window [0, {self.truncation}]"
            )
        return self.coeffs[n]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return mul(self, other)

    def __neg__(self) -> "TruncatedSeries":
        return negate(self)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, negate(other))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> list[int]:
        """Exponents with nonzero coefficient."""
        return [n for n, c in enumerate(self.coeffs) if c]

    def __str__(self) -> str:
        terms = [f"{c}*q^{n}" for n, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"({body}) + O(q^{self.truncation + 1}) over {self.ring}"


def make_series(
    ring: CoefficientRing, truncation: int, coeffs: Sequence[int] = ()
) -> TruncatedSeries:
    """Build a series from a (possibly short) coefficient list.

    Missing trailing coefficients are zero; modular values are reduced
    into [0, m).  More than truncation+1 entries is an error.
    """
    if len(coeffs) > truncation + 1:
        raise ValueError(
            f"{len(coeffs)} coefficients exceed truncation window {truncation}"
        )
    padded = [ring.normalize(c) for c in coeffs]
    padded.extend([0] * (truncation + 1 - len(padded)))
    return TruncatedSeries(ring, truncation, tuple(padded))


def zero_series(ring: CoefficientRing, truncation: int) -> TruncatedSeries:
    return make_series(ring, truncation)


def one_series(ring: CoefficientRing, truncation: int) -> TruncatedSeries:
    return make_series(ring, truncation, [1])


def _check_compatible(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.ring != b.ring:
        raise ValueError(f"ring mismatch: {a.ring} vs {b.ring}")
    if a.truncation != b.truncation:
        raise ValueError(
            f"truncation mismatch: {a.truncation} vs {b.truncation}"
        )


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_compatible(a, b)
    ring = a.ring
    return TruncatedSeries(
        ring,
        a.truncation,
        tuple(ring.normalize(x + y) for x, y in zip(a.coeffs, b.coeffs)),
    )


def negate(a: TruncatedSeries) -> TruncatedSeries:
    ring = a.ring
    return TruncatedSeries(
        ring, a.truncation, tuple(ring.normalize(-c) for c in a.coeffs)
    )


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Truncated Cauchy product (schoolbook convolution)."""
    _check_compatible(a, b)
    n = a.truncation
    out = [0] * (n + 1)
    bc = b.coeffs
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        for j in range(n + 1 - i):
            bj = bc[j]
            if bj:
                out[i + j] += ai * bj
    ring = a.ring
    if ring.is_modular:
        m = ring.modulus
        out = [c % m for c in out]
    return TruncatedSeries(ring, n, tuple(out))


def invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse at the shared truncation.

    Standard recurrence b_n = -a_0^{-1} * sum_{i=1..n} a_i b_{n-i};
    requires the constant coefficient to be a unit of the ring.
    """
    ring = a.ring
    inv0 = ring.unit_inverse(a.coeffs[0])
    n = a.truncation
    out = [0] * (n + 1)
    out[0] = ring.normalize(inv0)
    ac = a.coeffs
    for m in range(1, n + 1):
        acc = 0
        for i in range(1, m + 1):
            ai = ac[i]
            if ai:
                acc += ai * out[m - i]
        out[m] = ring.normalize(-inv0 * acc)
    return TruncatedSeries(ring, n, tuple(out))


def pochhammer(
    ring: CoefficientRing, truncation: int, start: int, step: int
) -> TruncatedSeries:
    """Truncated (q^start; q^step)_inf = prod_{j>=0} (1 - q^{start + j*step}).

    Factors whose exponent exceeds the truncation contribute nothing and
    are skipped.
    """
    if start < 1 or step < 1:
        raise ValueError("start and step must be >= 1")
    n = truncation
    out = [0] * (n + 1)
    out[0] = 1
    e = start
    while e <= n:
        # multiply in place by (1 - q^e); descending keeps out[i-e] pristine
        for i in range(n, e - 1, -1):
            out[i] = ring.normalize(out[i] - out[i - e])
        e += step
    return TruncatedSeries(ring, n, tuple(out))


def pentagonal_series(ring: CoefficientRing, truncation: int) -> TruncatedSeries:
    """Sparse signed sum over generalized pentagonal exponents (3k^2-k)/2.

    The coefficient of q^{(3k^2-k)/2} is (-1)^k for every integer k; this
    is the sparse form of (q;q)_inf, built term by term rather than by
    expanding the product.
    """
    n = truncation
    out = [0] * (n + 1)
    k = 0
    while True:
        placed = False
        for kk in ((k,) if k == 0 else (k, -k)):
            e = (3 * kk * kk - kk) // 2
            if e <= n:
                out[e] = ring.normalize(out[e] + (-1 if k % 2 else 1))
                placed = True
        if not placed:
            break
        k += 1
    return TruncatedSeries(ring, n, tuple(out))


def triangular_cube_series(
    ring: CoefficientRing, truncation: int
) -> TruncatedSeries:
    """Sparse form of (q;q)_inf^3: coefficient (-1)^k (2k+1) at q^{k(k+1)/2}."""
    n = truncation
    out = [0] * (n + 1)
    k = 0
    while k * (k + 1) // 2 <= n:
        e = k * (k + 1) // 2
        c = (2 * k + 1) * (-1 if k % 2 else 1)
        out[e] = ring.normalize(c)
        k += 1
    return TruncatedSeries(ring, n, tuple(out))


def reduce_mod(a: TruncatedSeries, m: int) -> TruncatedSeries:
    """Coefficientwise reduction of an exact-integer series into Z/mZ."""
    if a.ring.is_modular:
        raise ValueError("reduce_mod expects an exact-integer series")
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    ring = CoefficientRing(m)
    return TruncatedSeries(
        ring, a.truncation, tuple(c % m for c in a.coeffs)
    )


def coefficient(a: TruncatedSeries, n: int) -> int:
    return a.coefficient(n)
