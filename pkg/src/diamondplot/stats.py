"""Summary statistics, regression fits, and a seeded bivariate-normal sampler.

Reproducibility contract: all randomness comes from SplitMix64 (the 64-bit
counter-based generator of Steele, Lea & Flood), with normal deviates via the
basic Box-Muller transform.  The same seed yields the same dataset on every
run and platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .data_io import DataSet
from .errors import DegenerateFit, InsufficientData, IsotropicCloud
from .geometry import Point2

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_TWO53 = 9007199254740992.0  # 2**53


class SplitMix64:
    """Counter-based 64-bit generator; tiny state, full 64-bit period."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """53-bit uniform in [0, 1)."""
        return (self.next_u64() >> 11) / _TWO53

    def uniform_pos(self) -> float:
        """53-bit uniform in (0, 1]; safe as a log argument."""
        return ((self.next_u64() >> 11) + 1) / _TWO53

    def normal_pair(self) -> tuple[float, float]:
        """Two independent standard normals (Box-Muller, basic form)."""
        r = math.sqrt(-2.0 * math.log(self.uniform_pos()))
        t = 2.0 * math.pi * self.uniform()
        return r * math.cos(t), r * math.sin(t)


def mix_seed(seed: int, stream: int) -> int:
    """Derive a decorrelated seed for a numbered substream."""
    return SplitMix64((seed ^ (stream * _GAMMA)) & _MASK64).next_u64()


@dataclass(frozen=True)
class BivariateNormalSpec:
    """Parameters of a correlated normal sample."""

    mean1: float = 0.0
    mean2: float = 0.0
    sd1: float = 1.0
    sd2: float = 1.0
    rho: float = 0.0
    n: int = 100
    seed: int = 0

    def __post_init__(self) -> None:
        if self.sd1 <= 0 or self.sd2 <= 0:
            raise ValueError("standard deviations must be positive")
        if not -1.0 < self.rho < 1.0:
            raise ValueError(f"rho must be in (-1, 1), got {self.rho}")
        if self.n < 1:
            raise ValueError("n must be >= 1")


def sample_bivariate_normal(spec: BivariateNormalSpec, labels: tuple[str, str] = ("variable 1", "variable 2")) -> DataSet:
    """Deterministic correlated normal sample.

    Each observation consumes one Box-Muller pair (z1, z2), combined through
    the Cholesky factor [[sd1, 0], [sd2*rho, sd2*sqrt(1-rho^2)]].
    """
    rng = SplitMix64(spec.seed)
    resid = math.sqrt(1.0 - spec.rho * spec.rho)
    points = []
    for _ in range(spec.n):
        z1, z2 = rng.normal_pair()
        points.append(
            Point2(
                spec.mean1 + spec.sd1 * z1,
                spec.mean2 + spec.sd2 * (spec.rho * z1 + resid * z2),
            )
        )
    source = f"sampled:rho={spec.rho},n={spec.n},seed={spec.seed}"
    return DataSet(labels[0], labels[1], tuple(points), source=source)


@dataclass(frozen=True)
class SummaryStats:
    """Sample moments and fits; None marks a statistic that is undefined
    for the data (zero variance) rather than NaN."""

    n: int
    mean1: float
    mean2: float
    var1: float
    var2: float
    pearson_r: float | None
    ols_slope: float | None
    ols_intercept: float | None
    deming_slope: float | None
    deming_intercept: float | None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mean1": self.mean1,
            "mean2": self.mean2,
            "var1": self.var1,
            "var2": self.var2,
            "pearson_r": self.pearson_r,
            "ols_slope": self.ols_slope,
            "ols_intercept": self.ols_intercept,
            "deming_slope": self.deming_slope,
            "deming_intercept": self.deming_intercept,
        }


def _moments(points: Sequence[Point2]) -> tuple[int, float, float, float, float, float]:
    """n, means, and sample (n-1) variances/covariance."""
    n = len(points)
    mean1 = sum(p.a1 for p in points) / n
    mean2 = sum(p.a2 for p in points) / n
    s11 = s22 = s12 = 0.0
    for p in points:
        d1 = p.a1 - mean1
        d2 = p.a2 - mean2
        s11 += d1 * d1
        s22 += d2 * d2
        s12 += d1 * d2
    return n, mean1, mean2, s11 / (n - 1), s22 / (n - 1), s12 / (n - 1)


def summary(data: DataSet, deming_delta: float = 1.0) -> SummaryStats:
    """All summary statistics at once; fits degrade to None when undefined."""
    if len(data) < 2:
        raise InsufficientData(f"need n >= 2, got {len(data)}")
    n, mean1, mean2, var1, var2, cov = _moments(data.values)

    if var1 > 0.0 and var2 > 0.0:
        r = cov / math.sqrt(var1 * var2)
        pearson = max(-1.0, min(1.0, r))
    else:
        pearson = None

    if var1 > 0.0:
        ols_slope = cov / var1
        ols_intercept = mean2 - ols_slope * mean1
    else:
        ols_slope = ols_intercept = None

    try:
        deming_slope, deming_intercept = deming_fit(data, deming_delta)
    except DegenerateFit:
        deming_slope = deming_intercept = None

    return SummaryStats(
        n, mean1, mean2, var1, var2, pearson, ols_slope, ols_intercept,
        deming_slope, deming_intercept,
    )


def ols_fit(data: DataSet) -> tuple[float, float]:
    """Least-squares line of variable 2 on variable 1 (vertical residuals)."""
    if len(data) < 2:
        raise InsufficientData(f"need n >= 2, got {len(data)}")
    _, mean1, mean2, var1, _, cov = _moments(data.values)
    if var1 == 0.0:
        raise DegenerateFit("variable 1 has zero variance")
    slope = cov / var1
    return slope, mean2 - slope * mean1


def deming_fit(data: DataSet, delta: float = 1.0) -> tuple[float, float]:
    """Errors-in-variables line minimizing weighted squared distances.

    ``delta`` is the ratio of variable-2 error variance to variable-1 error
    variance; delta = 1 is orthogonal regression.  The line passes through
    the sample means.  A perfectly symmetric (isotropic) cloud is genuinely
    ambiguous; the non-negative slope sqrt(delta) is returned there so the
    result stays deterministic.
    """
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {delta}")
    if len(data) < 2:
        raise InsufficientData(f"need n >= 2, got {len(data)}")
    _, mean1, mean2, var1, var2, cov = _moments(data.values)
    if var1 == 0.0 and var2 == 0.0:
        raise DegenerateFit("all points identical")
    diff = var2 - delta * var1
    if cov == 0.0:
        if diff > 0.0:
            raise DegenerateFit("best fit is a vertical line")
        if diff < 0.0:
            slope = 0.0
        else:
            slope = math.sqrt(delta)  # isotropic tie-break
    else:
        disc = math.sqrt(diff * diff + 4.0 * delta * cov * cov)
        # Two algebraically equal forms; pick the one without cancellation.
        if diff >= 0.0:
            slope = (diff + disc) / (2.0 * cov)
        else:
            slope = 2.0 * delta * cov / (disc - diff)
    return slope, mean2 - slope * mean1


def principal_axis_angle(points: Sequence[Point2]) -> float:
    """Orientation of the leading covariance eigenvector, in degrees.

    Measured from the positive a1 direction in the data-up frame, in
    (-90, 90].  Raises IsotropicCloud when the eigenvalues are equal (no
    preferred axis).
    """
    points = tuple(points)
    if len(points) < 3:
        raise InsufficientData(f"need n >= 3, got {len(points)}")
    _, _, _, var1, var2, cov = _moments(points)
    trace = var1 + var2
    # Eigenvalue gap is sqrt((var1-var2)^2 + 4 cov^2); zero gap = isotropic.
    gap_sq = (var1 - var2) ** 2 + 4.0 * cov * cov
    if trace == 0.0 or gap_sq <= (1e-12 * trace) ** 2:
        raise IsotropicCloud("equal covariance eigenvalues")
    angle = 0.5 * math.degrees(math.atan2(2.0 * cov, var1 - var2))
    if angle <= -90.0:
        angle += 180.0
    return angle


def angle_distance_mod180(a: float, b: float) -> float:
    """Distance between two undirected axis angles, in degrees."""
    d = (a - b) % 180.0
    return min(d, 180.0 - d)
