"""Demo datasets: the Anscombe quartet plus five canned normal panels.

The fig5a..fig5e panels cover the interesting correlation/variance cases:
uncorrelated with either variable dominating, positively correlated with
either variable dominating, and negatively correlated with equal variances.
Panel seeds are decorrelated substreams of one base seed, so a single
``--seed`` reproduces the whole set.
"""

from __future__ import annotations

from .data_io import BUILTIN_NAMES, DataSet, builtin
from .errors import UnknownDataset
from .stats import BivariateNormalSpec, mix_seed, sample_bivariate_normal

DEFAULT_SEED = 42
DEFAULT_PANEL_N = 300

# name -> (sd1, sd2, rho); means are 0.
FIG5_PANELS: dict[str, tuple[float, float, float]] = {
    "fig5a": (2.0, 1.0, 0.0),
    "fig5b": (1.0, 2.0, 0.0),
    "fig5c": (2.0, 1.0, 0.75),
    "fig5d": (1.0, 2.0, 0.75),
    "fig5e": (1.0, 1.0, -0.75),
}

DEMO_NAMES = BUILTIN_NAMES + tuple(FIG5_PANELS)


def panel_spec(name: str, seed: int = DEFAULT_SEED, n: int = DEFAULT_PANEL_N) -> BivariateNormalSpec:
    sd1, sd2, rho = FIG5_PANELS[name]
    ordinal = list(FIG5_PANELS).index(name)
    return BivariateNormalSpec(
        mean1=0.0, mean2=0.0, sd1=sd1, sd2=sd2, rho=rho, n=n,
        seed=mix_seed(seed, ordinal),
    )


def demo_dataset(name: str, seed: int = DEFAULT_SEED, n: int = DEFAULT_PANEL_N) -> DataSet:
    """Builtin dataset or regenerated normal panel by name."""
    if name in BUILTIN_NAMES:
        return builtin(name)
    if name in FIG5_PANELS:
        return sample_bivariate_normal(panel_spec(name, seed, n))
    raise UnknownDataset(name, DEMO_NAMES)
