"""Generating functions for the generalized Frobenius families phi_k and cphi_k.

Three independent routes are implemented:

* ``phi_series_double_sum`` -- Andrews' double-sum formula: a sparse signed
  numerator over pairs (j, r) with r >= (k+1)|j|, divided by
  (q;q)_inf^2 (q^{k+1};q^{k+1})_inf.
* ``phi_parity_series`` -- the mod-2 collapse of the same function to the
  eta quotient (q;q)_inf / (q^{k+1};q^{k+1})_inf.
* ``cphi_series`` -- constant-term extraction: cphi_k(n) is the z^0
  coefficient of the two-variable product
  prod_{n>=0} (1 + z q^{n+1})^k (1 + z^{-1} q^n)^k.

The two-variable intermediate lives in :class:`LaurentPolyOverSeries`, a
finite window of z-exponents each carrying a truncated q-series.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .series import (
    EXACT,
    MOD2,
    CoefficientRing,
    TruncatedSeries,
    invert,
    mul,
    pentagonal_series,
    pochhammer,
    zero_series,
)


@dataclass(frozen=True)
class LaurentPolyOverSeries:
    """Laurent polynomial in z whose coefficients are truncated q-series.

    ``entries[j - z_min]`` is the q-series attached to z^j; exponents
    outside [z_min, z_max] are identically zero.
    """

    z_min: int
    z_max: int
    entries: tuple

    def __post_init__(self):
        if not self.z_min <= 0 <= self.z_max:
            raise ValueError("z-exponent window must contain 0")
        if len(self.entries) != self.z_max - self.z_min + 1:
            raise ValueError("entry count does not match z window")
        rings = {s.ring for s in self.entries}
        truncs = {s.truncation for s in self.entries}
        if len(rings) > 1 or len(truncs) > 1:
            raise ValueError("all z rows must share one ring and truncation")

    @property
    def ring(self) -> CoefficientRing:
        return self.entries[0].ring

    @property
    def truncation(self) -> int:
        return self.entries[0].truncation

    def z_coefficient(self, j: int) -> TruncatedSeries:
        if self.z_min <= j <= self.z_max:
            return self.entries[j - self.z_min]
        return zero_series(self.ring, self.truncation)

    def constant_term(self) -> TruncatedSeries:
        return self.z_coefficient(0)


def _laurent_product(factors, ring, truncation, window):
    """Left-to-right product of sparse two-variable factors.

    Each factor is a list of (dz, dq, coefficient) terms.  State is a dict
    z-exponent -> mutable q-coefficient list; z-exponents are clipped to
    [-window, window], q-exponents to [0, truncation].
    """
    n = truncation
    rows = {0: [0] * (n + 1)}
    rows[0][0] = 1
    modulus = ring.modulus
    for terms in factors:
        new_rows: dict[int, list[int]] = {}
        for z, row in rows.items():
            for dz, dq, c in terms:
                nz = z + dz
                if nz > window or nz < -window:
                    continue
                target = new_rows.get(nz)
                if target is None:
                    target = [0] * (n + 1)
                    new_rows[nz] = target
                if c == 1:
                    for i in range(n + 1 - dq):
                        ri = row[i]
                        if ri:
                            target[i + dq] += ri
                else:
                    for i in range(n + 1 - dq):
                        ri = row[i]
                        if ri:
                            target[i + dq] += c * ri
        if modulus is not None:
            for row in new_rows.values():
                for i, v in enumerate(row):
                    if v:
                        row[i] = v % modulus
        rows = new_rows
    return rows


def _wrap_rows(rows, ring, truncation) -> LaurentPolyOverSeries:
    nonzero = [z for z, row in rows.items() if any(row)]
    z_min = min(min(nonzero, default=0), 0)
    z_max = max(max(nonzero, default=0), 0)
    entries = []
    blank = (0,) * (truncation + 1)
    for z in range(z_min, z_max + 1):
        row = rows.get(z)
        coeffs = tuple(row) if row is not None else blank
        entries.append(TruncatedSeries(ring, truncation, coeffs))
    return LaurentPolyOverSeries(z_min, z_max, tuple(entries))


def cg_product(
    exponent: int,
    truncation: int,
    ring: CoefficientRing = EXACT,
    window_margin: int = 0,
) -> LaurentPolyOverSeries:
    """Expand prod_{n=0}^{N} (1 + z q^{n+1})^e (1 + z^{-1} q^n)^e.

    z-exponents are clipped to [-(N+e), N+e] (plus an optional margin for
    window-soundness checks): a unit of positive z-exponent costs at least
    one q-degree, and only the n=0 factor hands out negative z-exponent
    for free, so states outside the window cannot reach z^0 within the
    q-budget.
    """
    if exponent < 1:
        raise ValueError("exponent must be >= 1")
    if truncation < 0:
        raise ValueError("truncation must be >= 0")
    n, e = truncation, exponent
    window = n + e + window_margin
    factors = []
    for m in range(n + 1):
        up = [(i, (m + 1) * i, comb(e, i)) for i in range(e + 1) if (m + 1) * i <= n]
        if len(up) > 1:
            factors.append(up)
        down = [(-i, m * i, comb(e, i)) for i in range(e + 1) if m * i <= n]
        if len(down) > 1:
            factors.append(down)
    rows = _laurent_product(factors, ring, n, window)
    return _wrap_rows(rows, ring, n)


def cphi_series(
    k: int, truncation: int, ring: CoefficientRing = EXACT
) -> TruncatedSeries:
    """Sum of cphi_k(n) q^n: the z^0 row of the colored product with e = k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return cg_product(k, truncation, ring).constant_term()


def cphi_parity_witness(k: int, truncation: int) -> LaurentPolyOverSeries:
    """Mod-2 form of the colored product with subscript 2k.

    Over Z/2 the product collapses to
    prod_{n>=0} (1 + z^2 q^{2n+2})^k (1 + z^{-2} q^{2n})^k, whose every
    z row involves only even q-exponents; that structural fact forces
    cphi_{2k}(odd) to be even.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = truncation
    window = n + 2 * k
    factors = []
    for m in range(n // 2 + 1):
        up = [
            (2 * i, (2 * m + 2) * i, comb(k, i))
            for i in range(k + 1)
            if (2 * m + 2) * i <= n
        ]
        if len(up) > 1:
            factors.append(up)
        down = [
            (-2 * i, 2 * m * i, comb(k, i))
            for i in range(k + 1)
            if 2 * m * i <= n
        ]
        if len(down) > 1:
            factors.append(down)
    rows = _laurent_product(factors, MOD2, n, window)
    return _wrap_rows(rows, MOD2, n)


def phi_series_double_sum(
    k: int, truncation: int, ring: CoefficientRing = EXACT
) -> TruncatedSeries:
    """Sum of phi_k(n) q^n via Andrews' double-sum formula.

    Numerator: sum over integers j and r >= (k+1)|j| of
    (-1)^{r+kj} q^{binom(r+1,2) - binom(k+1,2) j^2}, assembled sparsely.
    Denominator: (q;q)_inf^2 (q^{k+1};q^{k+1})_inf, applied by inversion
    in the requested ring.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = truncation
    num = [0] * (n + 1)
    half_kk1 = k * (k + 1) // 2
    j = 0
    while (k + 1) * j * (j + 1) // 2 <= n:
        floor = (k + 1) * j * (j + 1) // 2
        for jj in ((j,) if j == 0 else (j, -j)):
            r = (k + 1) * j
            while True:
                exp = r * (r + 1) // 2 - half_kk1 * j * j
                if exp > n:
                    break
                assert exp >= floor >= 0
                sign = -1 if (r + k * jj) % 2 else 1
                num[exp] += sign
                r += 1
        j += 1
    numerator = TruncatedSeries(
        ring, n, tuple(ring.normalize(c) for c in num)
    )
    euler = pochhammer(ring, n, 1, 1)
    den = mul(mul(euler, euler), pochhammer(ring, n, k + 1, k + 1))
    return mul(numerator, invert(den))


def phi_parity_series(k: int, truncation: int) -> TruncatedSeries:
    """Sum of phi_k(n) q^n over Z/2: (q;q)_inf / (q^{k+1};q^{k+1})_inf mod 2."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = truncation
    return mul(
        pentagonal_series(MOD2, n),
        invert(pochhammer(MOD2, n, k + 1, k + 1)),
    )


def partition_series(
    truncation: int, ring: CoefficientRing = EXACT
) -> TruncatedSeries:
    """1 / (q;q)_inf: the ordinary partition numbers p(n)."""
    return invert(pochhammer(ring, truncation, 1, 1))
