"""Rank bounds from the sum-of-squares conjecture: k0, the threshold and the gap bands."""

from dataclasses import dataclass

from ..errors import InputError


@dataclass(frozen=True)
class SosBounds:
    n: int
    k0: int
    threshold: int
    bands: tuple  # ((lo, hi) for k = 0..k0)


def compute_k0(n):
    """Largest k >= 0 with k(k+1)/2 < n - 1."""
    k = 0
    while (k + 1) * (k + 2) // 2 < n - 1:
        k += 1
    return k


def compute_bounds(n):
    if n < 2:
        raise InputError("the rank bounds need n >= 2")
    k0 = compute_k0(n)
    threshold = (k0 + 1) * n - k0 * (k0 + 1) // 2
    bands = tuple((n * k - k * (k - 1) // 2, n * k) for k in range(k0 + 1))
    return SosBounds(n, k0, threshold, bands)


@dataclass(frozen=True)
class RankClass:
    kind: str  # "above-threshold" | "in-band" | "gap-violation"
    band: int | None = None

    def __str__(self):
        return f"in-band({self.band})" if self.kind == "in-band" else self.kind


def classify_rank(n, rho):
    if rho < 0:
        raise InputError("rank must be nonnegative")
    b = compute_bounds(n)
    if rho >= b.threshold:
        return RankClass("above-threshold")
    for k, (lo, hi) in enumerate(b.bands):
        if lo <= rho <= hi:
            return RankClass("in-band", k)
    return RankClass("gap-violation")
