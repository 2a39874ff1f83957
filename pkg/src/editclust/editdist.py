"""Unconstrained edit distance (deletions and substitutions only).

``W[e, s]`` is the cost of turning the prefix ``X[:e+s]`` into ``Y[:s]``
with exactly ``e`` deletions. Only the rectangle ``0 <= e <= N-M``,
``0 <= s <= M`` is materialized: no other cell can reach the answer
``W[N-M, M]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from . import _kernels
from .costs import GAP, AlignedSymbol, CostModel, Seq
from .errors import InvariantError, PreconditionError

#: absolute tolerance for matching DP cells when costs are not integral
BACKTRACK_ATOL = 1e-9


@dataclass(frozen=True, eq=False)
class DpMatrix:
    W: np.ndarray
    n: int
    m: int

    @property
    def value(self) -> float:
        return float(self.W[self.n - self.m, self.m])


@dataclass(frozen=True)
class EditSequence:
    """Aligned rows ``alpha`` (source symbols) and ``beta`` (symbol or GAP)."""

    alpha: Tuple[AlignedSymbol, ...]
    beta: Tuple[AlignedSymbol, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "beta", tuple(self.beta))
        if len(self.alpha) != len(self.beta):
            raise PreconditionError("alpha and beta must have equal length")
        if any(a == GAP for a in self.alpha):
            raise PreconditionError("alpha must not contain the gap marker")

    def __len__(self):
        return len(self.alpha)

    @property
    def source(self) -> Seq:
        return self.alpha

    @property
    def target(self) -> Seq:
        return tuple(b for b in self.beta if b != GAP)

    @property
    def n_deletions(self) -> int:
        return sum(1 for b in self.beta if b == GAP)


def _as_array(seq) -> np.ndarray:
    arr = np.asarray(seq, dtype=np.int64)
    if arr.ndim != 1 or arr.shape[0] == 0:
        raise PreconditionError("sequences must be non-empty 1-d")
    return arr


def _check_orientation(x: np.ndarray, y: np.ndarray):
    if x.shape[0] < y.shape[0]:
        raise PreconditionError(
            f"source length {x.shape[0]} < target length {y.shape[0]}; "
            "use distance_sym or swap the arguments")


def dp_matrix(X: Sequence[int], Y: Sequence[int], cost: CostModel) -> DpMatrix:
    x, y = _as_array(X), _as_array(Y)
    _check_orientation(x, y)
    W = _kernels.fill_matrix(x, y, cost.sub_matrix, cost.del_cost)
    W.flags.writeable = False
    return DpMatrix(W, x.shape[0], y.shape[0])


def distance(X: Sequence[int], Y: Sequence[int], cost: CostModel) -> float:
    """Edit distance from the longer (or equal) ``X`` to ``Y``."""
    x, y = _as_array(X), _as_array(Y)
    _check_orientation(x, y)
    return float(_kernels.oriented_distance(x, y, cost.sub_matrix, cost.del_cost))


def distance_sym(A: Sequence[int], B: Sequence[int], cost: CostModel) -> float:
    """Distance between sequences of any lengths, longer one as source.

    With equal lengths the arguments are used as given, so an asymmetric
    substitution matrix can make ``distance_sym(A, B) != distance_sym(B, A)``.
    """
    a, b = _as_array(A), _as_array(B)
    return float(_kernels.sym_distance(a, b, cost.sub_matrix, cost.del_cost))


def backtrack(X: Sequence[int], Y: Sequence[int], W: DpMatrix, cost: CostModel) -> EditSequence:
    """Reconstruct one optimal edit sequence from a filled matrix.

    Walks from ``(N-M, M)`` back to ``(0, 0)``; when both moves reproduce the
    cell value the deletion is taken. Output reads left to right.
    """
    X = tuple(int(v) for v in X)
    Y = tuple(int(v) for v in Y)
    n, m = len(X), len(Y)
    if (W.n, W.m) != (n, m) or W.W.shape != (n - m + 1, m + 1):
        raise PreconditionError("matrix does not belong to these sequences")
    w = W.W
    de = cost.del_cost
    sub = cost.sub_matrix
    if cost.is_integral:
        def same(a, b):
            return a == b
    else:
        def same(a, b):
            return abs(a - b) <= BACKTRACK_ATOL

    alpha, beta = [], []
    e, s = n - m, m
    while e > 0 or s > 0:
        here = w[e, s]
        x = X[e + s - 1]
        if e > 0 and same(here, w[e - 1, s] + de):
            alpha.append(x)
            beta.append(GAP)
            e -= 1
        elif s > 0 and same(here, w[e, s - 1] + sub[x, Y[s - 1]]):
            alpha.append(x)
            beta.append(Y[s - 1])
            s -= 1
        else:
            raise InvariantError(f"no predecessor reproduces W[{e}][{s}] = {here}")
    alpha.reverse()
    beta.reverse()
    return EditSequence(tuple(alpha), tuple(beta))


def align(X: Sequence[int], Y: Sequence[int], cost: CostModel) -> EditSequence:
    """Optimal edit sequence from ``X`` to ``Y`` (``|X| >= |Y|``)."""
    return backtrack(X, Y, dp_matrix(X, Y, cost), cost)


def score_edit_sequence(E: EditSequence, cost: CostModel) -> float:
    total = 0.0
    for a, b in zip(E.alpha, E.beta):
        total += cost.elem(a, b)
    return total


def expanded_target(E: EditSequence) -> Tuple[AlignedSymbol, ...]:
    return E.beta
