"""Exception types shared across the plotting engine."""


class DiamondPlotError(Exception):
    """Base class for every error this package raises deliberately."""


class EmptyData(DiamondPlotError):
    """No usable observations."""


class InsufficientData(DiamondPlotError):
    """Operation needs more observations than were supplied."""


class InvalidViewport(DiamondPlotError):
    """Viewport and margins leave no positive drawing area."""


class InvalidRange(DiamondPlotError):
    """Interval is empty, inverted, or beyond float arithmetic."""


class SingularTransform(DiamondPlotError):
    """Affine transform has no inverse."""


class DegenerateFit(DiamondPlotError):
    """Regression line is undefined for this data."""


class IsotropicCloud(DiamondPlotError):
    """Covariance eigenvalues are equal; the principal axis is undefined."""


class ColumnNotFound(DiamondPlotError):
    """Requested CSV column is not in the header."""

    def __init__(self, name: str, available: tuple[str, ...] = ()):
        self.name = name
        self.available = tuple(available)
        msg = f"column {name!r} not found"
        if self.available:
            msg += f" (available: {', '.join(self.available)})"
        super().__init__(msg)


class ParseError(DiamondPlotError):
    """CSV input could not be parsed."""

    def __init__(self, message: str, row: int | None = None):
        self.row = row
        super().__init__(message if row is None else f"row {row}: {message}")


class UnknownDataset(DiamondPlotError):
    """Builtin dataset name is not recognized."""

    def __init__(self, name: str, valid: tuple[str, ...]):
        self.name = name
        self.valid = tuple(valid)
        super().__init__(f"unknown dataset {name!r}; valid names: {', '.join(valid)}")


class InconsistentBundle(DiamondPlotError):
    """Bundle parts were not all derived from the same dataset."""
