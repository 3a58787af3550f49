"""Dataset ingestion: CSV parsing, builtin datasets, serialization."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
from dataclasses import dataclass, field

from .errors import ColumnNotFound, EmptyData, ParseError, UnknownDataset
from .geometry import Point2


@dataclass(frozen=True)
class DataSet:
    """Two equal-length labeled numeric series.

    ``source`` is a provenance tag (file path or builtin name); it is not
    part of dataset identity.
    """

    label1: str
    label2: str
    values: tuple[Point2, ...]
    source: str = ""

    def __post_init__(self) -> None:
        if not self.label1 or not self.label2:
            raise ValueError("labels must be nonempty")
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) < 1:
            raise EmptyData("dataset needs at least one observation")

    def __len__(self) -> int:
        return len(self.values)

    def swapped(self) -> "DataSet":
        """The same data with the variable roles exchanged."""
        return DataSet(
            self.label2,
            self.label1,
            tuple(Point2(p.a2, p.a1) for p in self.values),
            self.source,
        )


def dataset_hash(data: DataSet) -> str:
    """Content hash over labels and full-precision values (not source)."""
    payload = json.dumps(
        [data.label1, data.label2, [[repr(p.a1), repr(p.a2)] for p in data.values]],
        separators=(",", ":"),
    ).encode("utf-8")
    return hashlib.sha256(payload).hexdigest()


def parse_csv_with_report(
    raw: bytes | str,
    col1: str,
    col2: str,
    strict: bool = True,
) -> tuple[DataSet, list[int]]:
    """Parse an RFC-4180-style CSV with a header row.

    Returns the dataset and the list of rejected data-row numbers (1-based,
    header excluded).  In strict mode any bad row raises ParseError instead.
    """
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from None
    reader = csv.reader(io.StringIO(raw, newline=""))
    try:
        header = next(reader, None)
    except csv.Error as exc:
        raise ParseError(f"malformed CSV header: {exc}") from None
    if header is None:
        raise EmptyData("input has no header row")
    header = [h.strip() for h in header]
    try:
        i1 = header.index(col1)
    except ValueError:
        raise ColumnNotFound(col1, tuple(header)) from None
    try:
        i2 = header.index(col2)
    except ValueError:
        raise ColumnNotFound(col2, tuple(header)) from None

    points: list[Point2] = []
    rejected: list[int] = []
    row_no = 0
    while True:
        try:
            row = next(reader, None)
        except csv.Error as exc:
            raise ParseError(f"malformed CSV: {exc}", row=row_no + 1) from None
        if row is None:
            break
        row_no += 1
        if not row or all(cell.strip() == "" for cell in row):
            continue  # blank line
        problem = None
        v1 = v2 = 0.0
        if len(row) <= max(i1, i2):
            problem = f"expected at least {max(i1, i2) + 1} fields, got {len(row)}"
        else:
            try:
                v1 = float(row[i1])
                v2 = float(row[i2])
            except ValueError:
                problem = f"non-numeric value in {col1!r} or {col2!r}"
            else:
                if not (math.isfinite(v1) and math.isfinite(v2)):
                    problem = "non-finite value"
        if problem is not None:
            if strict:
                raise ParseError(problem, row=row_no)
            rejected.append(row_no)
            continue
        points.append(Point2(v1, v2))

    if not points:
        raise EmptyData("no valid data rows")
    return DataSet(col1, col2, tuple(points), source="csv"), rejected


def parse_csv(raw: bytes | str, col1: str, col2: str, strict: bool = True) -> DataSet:
    data, _ = parse_csv_with_report(raw, col1, col2, strict=strict)
    return data


def dataset_to_csv(data: DataSet) -> str:
    """Serialize with full-precision values; parse_csv inverts this exactly."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([data.label1, data.label2])
    for p in data.values:
        writer.writerow([repr(p.a1), repr(p.a2)])
    return buf.getvalue()


# Anscombe's quartet (Anscombe 1973): four 11-point sets sharing means,
# variances, correlation and linear fit.
_ANSCOMBE_X123 = (10.0, 8.0, 13.0, 9.0, 11.0, 14.0, 6.0, 4.0, 12.0, 7.0, 5.0)
_ANSCOMBE = {
    "anscombe1": (
        _ANSCOMBE_X123,
        (8.04, 6.95, 7.58, 8.81, 8.33, 9.96, 7.24, 4.26, 10.84, 4.82, 5.68),
    ),
    "anscombe2": (
        _ANSCOMBE_X123,
        (9.14, 8.14, 8.74, 8.77, 9.26, 8.10, 6.13, 3.10, 9.13, 7.26, 4.74),
    ),
    "anscombe3": (
        _ANSCOMBE_X123,
        (7.46, 6.77, 12.74, 7.11, 7.81, 8.84, 6.08, 5.39, 8.15, 6.42, 5.73),
    ),
    "anscombe4": (
        (8.0, 8.0, 8.0, 8.0, 8.0, 8.0, 8.0, 19.0, 8.0, 8.0, 8.0),
        (6.58, 5.76, 7.71, 8.84, 8.47, 7.04, 5.25, 12.50, 5.56, 7.91, 6.89),
    ),
}

BUILTIN_NAMES = tuple(_ANSCOMBE)


def builtin(name: str) -> DataSet:
    """One of the four builtin Anscombe datasets."""
    try:
        xs, ys = _ANSCOMBE[name]
    except KeyError:
        raise UnknownDataset(name, BUILTIN_NAMES) from None
    values = tuple(Point2(x, y) for x, y in zip(xs, ys))
    return DataSet("x", "y", values, source=f"builtin:{name}")
