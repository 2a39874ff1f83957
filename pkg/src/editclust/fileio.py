"""Dataset and cost-matrix files.

Dataset layout (UTF-8)::

    #alphabet: 0,1
    id,label,seq
    s0,0,1;0;1
    s1,,0;0

``label`` may be empty on every row (unlabeled data) but not on some rows
only. Tokens may not contain ``,`` or ``;``.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .costs import CostModel, Seq, make_matrix_cost_model, make_unit_cost_model
from .errors import DataError

ALPHABET_PREFIX = "#alphabet:"
HEADER = ["id", "label", "seq"]
SEQ_SEP = ";"


@dataclass
class Dataset:
    alphabet: Tuple[str, ...]
    ids: List[str]
    sequences: List[Seq]
    labels: Optional[List[int]] = None

    def __len__(self):
        return len(self.sequences)

    def index_of(self, seq_id: str) -> int:
        try:
            return self.ids.index(seq_id)
        except ValueError:
            raise DataError(f"no sequence with id {seq_id!r}") from None

    def unit_cost(self) -> CostModel:
        return make_unit_cost_model(self.alphabet)


def _check_token(tok: str):
    if not tok or any(c in tok for c in ",;\n\r") or tok != tok.strip():
        raise DataError(f"invalid alphabet token {tok!r}")


def format_dataset(ds: Dataset) -> str:
    for tok in ds.alphabet:
        _check_token(tok)
    buf = io.StringIO()
    buf.write(ALPHABET_PREFIX + " " + ",".join(ds.alphabet) + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    labels = ds.labels if ds.labels is not None else [None] * len(ds.sequences)
    for seq_id, seq, label in zip(ds.ids, ds.sequences, labels):
        w.writerow([seq_id, "" if label is None else label,
                    SEQ_SEP.join(ds.alphabet[s] for s in seq)])
    return buf.getvalue()


def write_dataset(ds: Dataset, path) -> None:
    Path(path).write_text(format_dataset(ds), encoding="utf-8")


def parse_dataset(text: str, path=None) -> Dataset:
    lines = text.splitlines()
    if not lines or not lines[0].startswith(ALPHABET_PREFIX):
        raise DataError(f"first line must start with {ALPHABET_PREFIX!r}", path, 1)
    alphabet = tuple(t.strip() for t in lines[0][len(ALPHABET_PREFIX):].split(","))
    try:
        for tok in alphabet:
            _check_token(tok)
    except DataError as exc:
        raise DataError(str(exc), path, 1) from None
    if len(set(alphabet)) != len(alphabet):
        raise DataError("duplicate alphabet token", path, 1)
    index = {t: i for i, t in enumerate(alphabet)}

    ids, seqs, labels = [], [], []
    seen = set()
    reader = csv.reader(lines[1:])
    header = next(reader, None)
    if header != HEADER:
        raise DataError(f"expected header {','.join(HEADER)}", path, 2)
    for lineno, row in enumerate(reader, start=3):
        if not row:
            continue
        if len(row) != 3:
            raise DataError(f"expected 3 columns, got {len(row)}", path, lineno)
        seq_id, label, body = row
        if not seq_id:
            raise DataError("empty id", path, lineno)
        if seq_id in seen:
            raise DataError(f"duplicate id {seq_id!r}", path, lineno)
        seen.add(seq_id)
        if not body:
            raise DataError("empty sequence", path, lineno)
        try:
            seq = tuple(index[t] for t in body.split(SEQ_SEP))
        except KeyError as exc:
            raise DataError(f"token {exc.args[0]!r} not in alphabet", path, lineno) from None
        if label == "":
            labels.append(None)
        else:
            try:
                value = int(label)
            except ValueError:
                raise DataError(f"label {label!r} is not an integer", path, lineno) from None
            if value < 0:
                raise DataError("labels must be non-negative", path, lineno)
            labels.append(value)
        ids.append(seq_id)
        seqs.append(seq)
    if not seqs:
        raise DataError("dataset has no rows", path)
    present = [x is not None for x in labels]
    if any(present) and not all(present):
        raise DataError(f"label missing on line {present.index(False) + 3}", path)
    return Dataset(alphabet, ids, seqs, labels if all(present) else None)


def read_dataset(path) -> Dataset:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise DataError(f"cannot read: {exc}", path) from None
    return parse_dataset(text, path)


def read_cost_matrix(path, alphabet: Sequence[str], del_cost: float = 1.0) -> CostModel:
    """Substitution costs from a CSV whose first row and column list tokens.

    Rows and columns may come in any order; they are rearranged to the
    dataset alphabet, which must be fully covered.
    """
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = [r for r in csv.reader(fh) if r]
    except OSError as exc:
        raise DataError(f"cannot read: {exc}", path) from None
    if not rows:
        raise DataError("empty cost matrix", path)
    cols = [t.strip() for t in rows[0][1:]]
    table = {}
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(cols) + 1:
            raise DataError("row width differs from header", path, lineno)
        try:
            table[row[0].strip()] = {c: float(v) for c, v in zip(cols, row[1:])}
        except ValueError as exc:
            raise DataError(str(exc), path, lineno) from None
    missing = [t for t in alphabet if t not in table or t not in cols]
    if missing:
        raise DataError(f"tokens missing from cost matrix: {missing}", path)
    matrix = [[table[a][b] for b in alphabet] for a in alphabet]
    return make_matrix_cost_model(alphabet, matrix, del_cost)


def format_assignment(ids: Sequence[str], assignment: Sequence[int]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["id", "cluster"])
    w.writerows(zip(ids, assignment))
    return buf.getvalue()


def read_labels(path) -> Tuple[List[str], List[int]]:
    """``id,cluster`` / ``id,label`` CSV, or a labeled dataset file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read: {exc}", path) from None
    if text.startswith(ALPHABET_PREFIX):
        ds = parse_dataset(text, path)
        if ds.labels is None:
            raise DataError("dataset carries no labels", path)
        return ds.ids, ds.labels
    reader = csv.reader(text.splitlines())
    header = next(reader, None)
    if not header or len(header) != 2 or header[0] != "id":
        raise DataError("expected a two-column CSV with header id,<label>", path, 1)
    ids, labels = [], []
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != 2:
            raise DataError("expected 2 columns", path, lineno)
        try:
            labels.append(int(row[1]))
        except ValueError:
            raise DataError(f"label {row[1]!r} is not an integer", path, lineno) from None
        ids.append(row[0])
    return ids, labels


def format_centroids(centroids: Sequence[Seq], alphabet: Sequence[str]) -> str:
    return "".join(SEQ_SEP.join(alphabet[s] for s in c) + "\n" for c in centroids)
