"""Congruence claims, quadratic-residue machinery, and verification suites.

A claim is a statement "f_k(a*n + b) == 0 (mod m) for all n"; verification
here is always over an explicit finite window [0, n_max], recorded in the
report.  A Verified report means "no counterexample in the window", never
an unbounded assertion.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import frobenius
from .series import CoefficientRing, TruncatedSeries, reduce_mod

PRIMALITY_CAP = 10_000

PHI = "phi"
CPHI = "cphi"
FAMILIES = (PHI, CPHI)


class ResidueClass(enum.Enum):
    RESIDUE = "residue"
    NONRESIDUE = "nonresidue"
    ZERO = "zero"


def is_prime(p: int) -> bool:
    """Trial division, capped at desk scale."""
    if p > PRIMALITY_CAP:
        raise ValueError(f"primality testing capped at {PRIMALITY_CAP}")
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def residue_class(x: int, p: int) -> ResidueClass:
    """Euler's criterion trichotomy for x modulo an odd prime p."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    t = x % p
    if t == 0:
        return ResidueClass.ZERO
    if pow(t, (p - 1) // 2, p) == 1:
        return ResidueClass.RESIDUE
    return ResidueClass.NONRESIDUE


def eligible_residues(p: int) -> set[int]:
    """Residues 0 < r < p with 24r+1 a quadratic nonresidue mod p."""
    if p < 5 or not is_prime(p):
        raise ValueError(f"need a prime >= 5, got {p}")
    return {
        r
        for r in range(1, p)
        if residue_class(24 * r + 1, p) is ResidueClass.NONRESIDUE
    }


def pentagonal_class_reachable(p: int, r: int) -> bool:
    """Whether some integer k has (3k^2 - k)/2 == r (mod p).

    Scans k over a full residue system; (3k^2-k)/2 mod p has period p in k
    for odd p.
    """
    if p < 5 or not is_prime(p):
        raise ValueError(f"need a prime >= 5, got {p}")
    if not 0 < r < p:
        raise ValueError(f"need 0 < r < p, got r={r}")
    return any((3 * k * k - k) // 2 % p == r for k in range(p))


@dataclass(frozen=True)
class CongruenceClaim:
    """f_k(a*n + b) == 0 (mod m) for all n >= 0, f in {phi, cphi}."""

    family: str
    k: int
    a: int
    b: int
    m: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.k < 1:
            raise ValueError("subscript k must be >= 1")
        if self.a < 1 or not 0 <= self.b < self.a:
            raise ValueError("need a >= 1 and 0 <= b < a")
        if self.m < 2:
            raise ValueError("congruence modulus must be >= 2")

    def sort_key(self):
        return (self.family, self.k, self.a, self.b, self.m)


VERIFIED = "verified"
REFUTED = "refuted"
SKIPPED = "skipped"


@dataclass(frozen=True)
class VerificationReport:
    claim: CongruenceClaim
    n_max: int
    status: str
    counterexamples: tuple = ()
    route: str = ""

    def to_dict(self) -> dict:
        return {
            "claim": {
                "family": self.claim.family,
                "k": self.claim.k,
                "a": self.claim.a,
                "b": self.claim.b,
                "m": self.claim.m,
            },
            "n_max": self.n_max,
            "status": self.status,
            "counterexamples": [
                {"n": n, "value": v} for n, v in self.counterexamples
            ],
            "route": self.route,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        c = data["claim"]
        return cls(
            claim=CongruenceClaim(c["family"], c["k"], c["a"], c["b"], c["m"]),
            n_max=data["n_max"],
            status=data["status"],
            counterexamples=tuple(
                (e["n"], e["value"]) for e in data["counterexamples"]
            ),
            route=data["route"],
        )


def default_series_provider(
    claim: CongruenceClaim, truncation: int
) -> tuple[TruncatedSeries, str]:
    """Series for the claim's family in Z/m, with the route that built it.

    phi mod 2 takes the cheap eta-quotient parity route; other phi moduli
    use the double sum; cphi always uses constant-term extraction.
    """
    ring = CoefficientRing(claim.m)
    if claim.family == PHI:
        if claim.m == 2:
            return frobenius.phi_parity_series(claim.k, truncation), "phi-parity-series"
        return (
            frobenius.phi_series_double_sum(claim.k, truncation, ring),
            "phi-double-sum",
        )
    return frobenius.cphi_series(claim.k, truncation, ring), "cphi-constant-term"


def verify_claim(
    claim: CongruenceClaim, n_max: int, series_provider=None
) -> VerificationReport:
    """Check coefficient(a*n + b) == 0 (mod m) for 0 <= n <= n_max."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    provider = series_provider or default_series_provider
    needed = claim.a * n_max + claim.b
    series, route = provider(claim, needed)
    if series.truncation < needed:
        raise ValueError(
            f"truncation shortfall: have {series.truncation}, need {needed}"
        )
    if series.ring.modulus != claim.m:
        series_mod = (
            series
            if series.ring.is_modular
            else reduce_mod(series, claim.m)
        )
        if series_mod.ring.modulus != claim.m:
            raise ValueError(
                f"provider ring {series.ring} does not match modulus {claim.m}"
            )
        series = series_mod
    counterexamples = []
    for n in range(n_max + 1):
        v = series.coefficient(claim.a * n + claim.b)
        if v:
            counterexamples.append((claim.a * n + claim.b, v))
    status = VERIFIED if not counterexamples else REFUTED
    return VerificationReport(
        claim, n_max, status, tuple(counterexamples), route
    )


def _run_claims(claims, n_max, series_provider, jobs):
    if jobs and jobs > 1 and len(claims) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(
                pool.map(
                    lambda c: verify_claim(c, n_max, series_provider), claims
                )
            )
    else:
        reports = [verify_claim(c, n_max, series_provider) for c in claims]
    reports.sort(key=lambda r: r.claim.sort_key())
    return reports


def _shared_provider(series: TruncatedSeries, route: str):
    """Provider returning one precomputed series for every claim it serves."""

    def provider(claim, truncation):
        return series, route

    provider.route = route
    return provider


def main_theorem_suite(
    primes, ells, n_max: int, series_provider=None, jobs: int | None = None
) -> list[VerificationReport]:
    """phi_{p*ell - 1}(p*n + r) == 0 (mod 2) for every eligible residue r."""
    claims = []
    for p in sorted(set(primes)):
        for ell in sorted(set(ells)):
            if ell < 1:
                raise ValueError("ell must be >= 1")
            for r in sorted(eligible_residues(p)):
                claims.append(CongruenceClaim(PHI, p * ell - 1, p, r, 2))
    return _run_claims(claims, n_max, series_provider, jobs)


def cphi_even_suite(
    ks, n_max: int, series_provider=None, jobs: int | None = None
) -> list[VerificationReport]:
    """cphi_{2k}(2n + 1) == 0 (mod 2) for each k."""
    claims = []
    for k in sorted(set(ks)):
        if k < 1:
            raise ValueError("k must be >= 1")
        claims.append(CongruenceClaim(CPHI, 2 * k, 2, 1, 2))
    return _run_claims(claims, n_max, series_provider, jobs)


def andrews_p_squared_suite(
    p: int, n_max: int, series_provider=None, jobs: int | None = None
) -> list[VerificationReport]:
    """cphi_p(p*n + r) == 0 (mod p^2) for every 0 < r < p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    claims = [CongruenceClaim(CPHI, p, p, r, p * p) for r in range(1, p)]
    if series_provider is None:
        # one constant-term expansion serves all p-1 progressions
        truncation = p * n_max + p - 1
        series = frobenius.cphi_series(p, truncation, CoefficientRing(p * p))
        series_provider = _shared_provider(series, "cphi-constant-term")
    return _run_claims(claims, n_max, series_provider, jobs)


def garvan_sellers_lift_check(
    k: int,
    p: int,
    r: int,
    lift_count: int,
    n_max: int,
    series_provider=None,
) -> list[VerificationReport]:
    """Conditional lift: if cphi_k(pn+r) == 0 (mod p) holds in-window,
    check cphi_{pN+k}(pn+r) == 0 (mod p) for N = 1..lift_count."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not 0 < r < p:
        raise ValueError(f"need 0 < r < p, got r={r}")
    if lift_count < 0:
        raise ValueError("lift_count must be >= 0")
    hypothesis = CongruenceClaim(CPHI, k, p, r, p)
    reports = [verify_claim(hypothesis, n_max, series_provider)]
    lifted = [
        CongruenceClaim(CPHI, p * n + k, p, r, p)
        for n in range(1, lift_count + 1)
    ]
    if reports[0].status == VERIFIED:
        for claim in lifted:
            reports.append(verify_claim(claim, n_max, series_provider))
    else:
        route = reports[0].route
        for claim in lifted:
            reports.append(
                VerificationReport(claim, n_max, SKIPPED, (), route)
            )
    return reports


def all_verified(reports) -> bool:
    """True when every non-skipped report is verified."""
    return all(r.status in (VERIFIED, SKIPPED) for r in reports)


def any_refuted(reports) -> bool:
    return any(r.status == REFUTED for r in reports)
