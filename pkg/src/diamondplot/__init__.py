"""diamondplot: scatter plots and their 45-degree rotated diamond variant.

A diamond plot shows bivariate data with neither variable on the horizontal
axis, so the display itself stops suggesting that one variable drives the
other.  The package provides the geometry, statistics, scene layout and
deterministic SVG rendering needed to produce both plot families, plus a
serialized scene-bundle format consumed by the interactive viewer.
"""

from .data_io import BUILTIN_NAMES, DataSet, builtin, dataset_hash, dataset_to_csv, parse_csv, parse_csv_with_report
from .errors import (
    ColumnNotFound,
    DegenerateFit,
    DiamondPlotError,
    EmptyData,
    InconsistentBundle,
    InsufficientData,
    InvalidRange,
    InvalidViewport,
    IsotropicCloud,
    ParseError,
    SingularTransform,
    UnknownDataset,
)
from .figures import DEFAULT_PANEL_N, DEFAULT_SEED, DEMO_NAMES, FIG5_PANELS, demo_dataset, panel_spec
from .geometry import (
    GOLDEN_ASPECT,
    Margins,
    NormalizedDataSet,
    Orientation,
    Point2,
    ViewTransform,
    apply,
    format_tick,
    invert,
    make_transform,
    normalize,
    tick_positions,
)
from .render_svg import SvgDocument, render
from .scene import (
    BUNDLE_VERSION,
    Circle,
    Line,
    PlotConfig,
    Scene,
    SceneBundle,
    Text,
    build_scene,
    bundle_from_json,
    bundle_to_json,
    scene_bundle,
)
from .stats import (
    BivariateNormalSpec,
    SplitMix64,
    SummaryStats,
    angle_distance_mod180,
    deming_fit,
    mix_seed,
    ols_fit,
    principal_axis_angle,
    sample_bivariate_normal,
    summary,
)

__version__ = "0.1.0"
