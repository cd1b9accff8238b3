"""
Feature CSV files.

A data-set file has the header `f1,...,fd,label` and rows of d numbers followed by one of
`+`, `-`, `?`. A query file has the same layout without the label column.
"""
import logging
import re
from pathlib import Path
from typing import List, Optional, Tuple

import pandas as pd

from qgestalt.classifier.labels import ClassLabel
from qgestalt.generic.exceptions import EmptyDatasetError, InvalidFeatureError, MalformedRowError
from qgestalt.qstate.states import FeatureVector
from .file_actions import FileActions

__all__ = ['ingest_features', 'ingest_queries', 'ingest_manifest', 'features_to_csv', 'write_features']
logger = logging.getLogger(__name__)

LABEL_COLUMN = 'label'


def _read_table(path: str) -> pd.DataFrame:
    if not FileActions.exists(path):
        raise FileNotFoundError(f"Cannot read {path}: File does not exist.")
    try:
        # the header is read as a data row: pandas then rejects any wider row instead of
        # turning its first field into an index
        raw = pd.read_csv(path, header=None, index_col=False, dtype=str, keep_default_na=False,
                          skip_blank_lines=False, skipinitialspace=True)
    except pd.errors.EmptyDataError:
        return pd.DataFrame()
    except pd.errors.ParserError as e:
        found = re.search(r"line (\d+)", str(e))
        raise MalformedRowError(f"{path}: {e}", int(found.group(1)) if found else 0) from e
    header = ["" if pd.isna(cell) else str(cell).strip() for cell in raw.iloc[0].tolist()]
    body = raw.iloc[1:].reset_index(drop=True)
    body.columns = header
    return body


def _content_rows(frame: pd.DataFrame):
    """Yield (file line number, cells) for the non-blank rows; blank lines are kept by the reader."""
    width = frame.shape[1]
    for line, row in enumerate(frame.itertuples(index=False, name=None), 2):
        if all(pd.isna(cell) or str(cell).strip() == "" for cell in row):
            continue
        if any(pd.isna(cell) for cell in row):
            raise MalformedRowError(f"expected {width} fields", line)
        yield line, [str(cell).strip() for cell in row]


def _features(cells: List[str], line: int) -> FeatureVector:
    try:
        values = [float(cell) for cell in cells]
    except ValueError:
        raise MalformedRowError(f"non-numeric feature in {cells}", line) from None
    try:
        return FeatureVector(values)
    except InvalidFeatureError as e:
        raise MalformedRowError(e.message, line) from e


def ingest_features(path: str) -> List[Tuple[FeatureVector, ClassLabel]]:
    """
    Read a labeled feature CSV.

    Args:
        path (str): CSV with header `f1,...,fd,label`.

    Returns:
        List of (FeatureVector, ClassLabel) in file order.

    Raises:
        FileNotFoundError: If the file does not exist.
        EmptyDatasetError: If the file holds no rows.
        MalformedRowError: With the file line number, on a bad row or label token.
    """
    frame = _read_table(path)
    if frame.shape[1] < 2 or str(frame.columns[-1]).strip().lower() != LABEL_COLUMN:
        if frame.empty and frame.shape[1] == 0:
            raise EmptyDatasetError(f"{path} is empty")
        raise MalformedRowError(f"header must read f1,...,fd,{LABEL_COLUMN}", 1)
    rows = []
    for line, cells in _content_rows(frame):
        try:
            label = ClassLabel.of(cells[-1])
        except ValueError as e:
            raise MalformedRowError(str(e), line) from None
        rows.append((_features(cells[:-1], line), label))
    if not rows:
        raise EmptyDatasetError(f"{path} has a header but no rows")
    logger.info(f"ingested {len(rows)} labeled rows from {path}")
    return rows


def ingest_queries(path: str) -> List[FeatureVector]:
    """
    Read an unlabeled query CSV (header `f1,...,fd`). An empty file yields no queries.

    Raises:
        FileNotFoundError: If the file does not exist.
        MalformedRowError: With the file line number, on a bad row.
    """
    frame = _read_table(path)
    if frame.shape[1] == 0:
        return []
    if str(frame.columns[-1]).strip().lower() == LABEL_COLUMN:
        frame = frame.iloc[:, :-1]
    queries = [_features(cells, line) for line, cells in _content_rows(frame)]
    logger.info(f"ingested {len(queries)} queries from {path}")
    return queries


def ingest_manifest(path: str) -> List[Tuple[str, ClassLabel]]:
    """
    Read a musical data-set manifest with header `theme,label`; theme paths are resolved
    relative to the manifest.

    Raises:
        EmptyDatasetError: If the manifest lists nothing.
        MalformedRowError: On a bad row or label token.
    """
    frame = _read_table(path)
    columns = [str(c).strip().lower() for c in frame.columns]
    if columns != ['theme', LABEL_COLUMN]:
        if frame.shape[1] == 0:
            raise EmptyDatasetError(f"{path} is empty")
        raise MalformedRowError(f"header must read theme,{LABEL_COLUMN}", 1)
    base = Path(path).parent
    rows = []
    for line, cells in _content_rows(frame):
        if not cells[0]:
            raise MalformedRowError("missing theme path", line)
        try:
            label = ClassLabel.of(cells[1])
        except ValueError as e:
            raise MalformedRowError(str(e), line) from None
        rows.append((str(base / cells[0]), label))
    if not rows:
        raise EmptyDatasetError(f"{path} lists no themes")
    return rows


def features_to_csv(rows: List[Tuple[FeatureVector, Optional[ClassLabel]]]) -> str:
    """
    Render rows in the feature-CSV layout; rows labeled None produce a query file.
    """
    if not rows:
        return ""
    d = rows[0][0].dimension
    labeled = rows[0][1] is not None
    columns = [f"f{i}" for i in range(1, d + 1)] + ([LABEL_COLUMN] if labeled else [])
    records = [list(vector.values) + ([str(label)] if labeled else []) for vector, label in rows]
    return pd.DataFrame(records, columns=columns).to_csv(index=False, float_format="%.17g")


def write_features(path: str, rows: List[Tuple[FeatureVector, Optional[ClassLabel]]]) -> bool:
    """Write rows as a feature CSV (see features_to_csv)."""
    return FileActions.write(path, features_to_csv(rows))
