"""Readers and writers for CSV and svmlight files (dense in memory)."""

import csv

import numpy as np

from ..exceptions import NonAscendingIndex, ParseError, RaggedRow


def _is_number(text):
    try:
        float(text)
    except ValueError:
        return False
    return True


def _labels(values):
    if all(_is_number(v) for v in values):
        arr = np.array([float(v) for v in values])
        if np.all(arr == np.round(arr)):
            return arr.astype(np.int64)
        return arr
    return np.array(values)


def load_csv(path, label_column=None, delimiter=","):
    """Read a rectangular numeric table.

    A first row with a non-numeric feature field is treated as a header.
    With a named label column the label field counts too.

    Parameters
    ----------
    path : str or path-like
    label_column : str, int or None
        Column holding labels: a header name, or a (possibly negative)
        position. ``None`` means every column is a feature.
    delimiter : str

    Returns
    -------
    X : ndarray of shape (n_rows, n_features)
    y : ndarray or None
        Integer labels when every label is integral, floats when numeric,
        otherwise the raw strings.

    Raises
    ------
    RaggedRow
        A row's field count differs from the first row's.
    ParseError
        A feature field is not a number, or the label column is unknown.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [(lineno, row) for lineno, row in enumerate(csv.reader(fh, delimiter=delimiter), 1)
                if row and any(field.strip() for field in row)]
    if not rows:
        raise ParseError("file contains no data rows")

    header = None
    first_line, first = rows[0]
    probe = first
    if isinstance(label_column, int) or (
        isinstance(label_column, str) and label_column.lstrip("-").isdigit()
    ):
        # a positional label may be a string; only feature fields decide
        skip = int(label_column) % len(first) if first else 0
        probe = [field for pos, field in enumerate(first) if pos != skip]
    if not all(_is_number(field) for field in probe):
        header = [field.strip() for field in first]
        rows = rows[1:]
        if not rows:
            raise ParseError("file contains a header but no data rows", first_line)
    width = len(header) if header is not None else len(rows[0][1])

    label_idx = None
    if label_column is not None:
        if isinstance(label_column, str) and not label_column.lstrip("-").isdigit():
            if header is None or label_column not in header:
                raise ParseError(f"label column {label_column!r} not found in header {header}")
            label_idx = header.index(label_column)
        else:
            label_idx = int(label_column)
            if not -width <= label_idx < width:
                raise ParseError(f"label column {label_idx} out of range for {width} columns")
            label_idx %= width

    features, labels = [], []
    for lineno, row in rows:
        if len(row) != width:
            raise RaggedRow(f"expected {width} fields, found {len(row)}", lineno)
        values = []
        for pos, field in enumerate(row):
            if pos == label_idx:
                labels.append(field.strip())
                continue
            try:
                values.append(float(field))
            except ValueError:
                raise ParseError(f"field {pos + 1} is not a number: {field!r}", lineno) from None
        features.append(values)
    X = np.array(features, dtype=np.float64)
    y = _labels(labels) if label_idx is not None else None
    return X, y


def write_csv(path, X, y=None, header=True, label_name="y"):
    """Write ``X`` (and ``y`` as the last column) with round-trip float precision."""
    X = np.asarray(X, dtype=np.float64)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        if header:
            names = [f"x{j}" for j in range(X.shape[1])]
            writer.writerow(names + ([label_name] if y is not None else []))
        for i, row in enumerate(X):
            fields = [repr(float(v)) for v in row]
            if y is not None:
                fields.append(str(y[i]))
            writer.writerow(fields)


def load_svmlight(path, n_features=None):
    """Read ``label idx:val idx:val ...`` lines into a dense matrix.

    Indices are 1-based and must be strictly ascending within a line.
    Text after ``#`` is ignored, ``qid:`` tokens are skipped, and blank
    lines are ignored. A line with a label and no features is an all-zero
    row. The width is the largest index seen (or ``n_features``).
    """
    labels, rows = [], []
    max_idx = 0
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            try:
                labels.append(float(tokens[0]))
            except ValueError:
                raise ParseError(f"label is not a number: {tokens[0]!r}", lineno) from None
            entries = []
            prev = 0
            for tok in tokens[1:]:
                key, sep, val = tok.partition(":")
                if not sep:
                    raise ParseError(f"expected idx:value, got {tok!r}", lineno)
                if key == "qid":
                    continue
                try:
                    idx = int(key)
                    value = float(val)
                except ValueError:
                    raise ParseError(f"malformed feature {tok!r}", lineno) from None
                if idx < 1:
                    raise ParseError(f"feature index {idx} is not 1-based", lineno)
                if idx <= prev:
                    raise NonAscendingIndex(f"index {idx} follows {prev}", lineno)
                prev = idx
                entries.append((idx, value))
            max_idx = max(max_idx, prev)
            rows.append(entries)
    if n_features is None:
        n_features = max_idx
    elif n_features < max_idx:
        raise ParseError(f"index {max_idx} exceeds n_features={n_features}")
    X = np.zeros((len(rows), n_features))
    for i, entries in enumerate(rows):
        for idx, value in entries:
            X[i, idx - 1] = value
    return X, _labels([repr(v) for v in labels]) if labels else np.array([])


def write_svmlight(path, X, y):
    X = np.asarray(X, dtype=np.float64)
    with open(path, "w", encoding="utf-8") as fh:
        for row, label in zip(X, y):
            nz = np.flatnonzero(row)
            feats = " ".join(f"{j + 1}:{float(row[j])!r}" for j in nz)
            fh.write(f"{label} {feats}".rstrip() + "\n")
