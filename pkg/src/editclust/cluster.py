"""k-means analogue for variable-length discrete sequences.

Each iteration rebuilds every centroid by expanding the cluster members to
the length of the cluster's longest member (via optimal edit sequences)
and taking a per-coordinate majority vote, gaps included. Gaps are then
stripped. Members are reassigned to the nearest centroid until the
partition repeats.
"""
from __future__ import annotations

import enum
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import _kernels
from .costs import GAP, CostModel, Seq
from .editdist import align
from .errors import ConfigurationError, PreconditionError


class TiePolicy(enum.Enum):
    RANDOM = "random"
    NEAREST_TO_FIRST = "first"
    NEAREST_TO_LAST = "last"
    PREFER_EMPTY = "empty"

    @classmethod
    def parse(cls, value) -> "TiePolicy":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        for member in cls:
            if key in (member.value, member.name.lower()):
                return member
        raise ConfigurationError(f"unknown tie policy {value!r}")


@dataclass(frozen=True)
class ClusterConfig:
    k: int
    cost: CostModel
    tie_policy: TiePolicy = TiePolicy.RANDOM
    max_iters: int = 100
    restarts: int = 5
    rng_seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "tie_policy", TiePolicy.parse(self.tie_policy))
        for name in ("k", "max_iters", "restarts"):
            value = getattr(self, name)
            if int(value) != value or value < 1:
                raise ConfigurationError(f"{name} must be a positive integer, got {value!r}")


@dataclass
class Clustering:
    assignment: Tuple[int, ...]
    centroids: List[Seq]
    iterations: int
    converged: bool
    objective: float
    restart_objectives: Tuple[float, ...] = ()
    # wall-clock seconds per iteration of the selected restart
    iteration_times: Tuple[float, ...] = field(default=(), compare=False, repr=False)

    @property
    def k(self) -> int:
        return len(self.centroids)

    def members(self, i: int) -> List[int]:
        return [r for r, c in enumerate(self.assignment) if c == i]


def _rng(rng) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def init_centroids(P: Sequence[Seq], k: int, rng) -> List[Seq]:
    """Pick ``k`` distinct members of ``P`` at random."""
    if k < 1:
        raise ConfigurationError("k must be >= 1")
    if k > len(P):
        raise ConfigurationError(f"k={k} exceeds the number of sequences ({len(P)})")
    picks = _rng(rng).choice(len(P), size=k, replace=False)
    return [tuple(P[int(i)]) for i in picks]


def _distance_table(packed, centroids, cost: CostModel) -> np.ndarray:
    flat, offs = packed
    cflat, coffs = _kernels.pack(centroids)
    return _kernels.cross_distances(flat, offs, cflat, coffs, cost.sub_matrix, cost.del_cost)


def assign(P: Sequence[Seq], centroids: Sequence[Seq], cost: CostModel, _packed=None) -> Tuple[int, ...]:
    """Index of the nearest centroid for every input; ties go to the lowest index."""
    if not centroids:
        raise PreconditionError("at least one centroid is required")
    packed = _packed if _packed is not None else _kernels.pack(P)
    table = _distance_table(packed, centroids, cost)
    # argmin returns the first minimum
    return tuple(int(j) for j in np.argmin(table, axis=1))


def _break_tie(tied: List[int], policy: TiePolicy, rng: np.random.Generator) -> int:
    symbols = [t for t in tied if t != GAP]
    if policy is TiePolicy.PREFER_EMPTY and GAP in tied:
        return GAP
    if policy is TiePolicy.NEAREST_TO_FIRST:
        return min(symbols)
    if policy is TiePolicy.NEAREST_TO_LAST:
        return max(symbols)
    return tied[int(rng.integers(len(tied)))]


def _vote(column, policy: TiePolicy, rng: np.random.Generator) -> int:
    counts = Counter(column)
    top = max(counts.values())
    tied = sorted(sym for sym, c in counts.items() if c == top)
    if len(tied) == 1:
        return tied[0]
    return _break_tie(tied, policy, rng)


def compute_centroid(members: Sequence[Seq], cost: CostModel,
                     tie_policy: TiePolicy = TiePolicy.RANDOM, rng=None) -> Seq:
    """Majority-vote centroid of a cluster.

    ``members`` must be in dataset order: among several longest members the
    first one is the expansion reference. The reference itself does not
    vote. If every coordinate votes for the gap, the reference is returned.
    """
    if not members:
        raise PreconditionError("cannot compute the centroid of an empty cluster")
    tie_policy = TiePolicy.parse(tie_policy)
    rng = _rng(rng)
    lengths = [len(p) for p in members]
    ref_idx = lengths.index(max(lengths))
    ref = tuple(members[ref_idx])
    if len(members) == 1:
        return ref
    rows = [align(ref, p, cost).beta
            for i, p in enumerate(members) if i != ref_idx]
    expanded = [_vote(col, tie_policy, rng) for col in zip(*rows)]
    centroid = tuple(s for s in expanded if s != GAP)
    return centroid if centroid else ref


def sum_of_squares(P: Sequence[Seq], assignment: Sequence[int], cost: CostModel, _packed=None) -> float:
    """Sum over clusters of squared distances between ordered member pairs."""
    if len(assignment) != len(P):
        raise PreconditionError("assignment length differs from the number of sequences")
    if not P:
        return 0.0
    flat, offs = _packed if _packed is not None else _kernels.pack(P)
    labels = np.asarray(assignment, dtype=np.int64)
    k = int(labels.max()) + 1
    return float(_kernels.within_sum_squares(
        flat, offs, labels, k, cost.sub_matrix, cost.del_cost, cost.is_symmetric))


def _single_run(P, packed, config: ClusterConfig, rng: np.random.Generator):
    k = config.k
    centroids = init_centroids(P, k, rng)
    current = assign(P, centroids, config.cost, packed)
    converged = False
    iterations = 0
    times = []
    while iterations < config.max_iters:
        t0 = time.perf_counter()
        iterations += 1
        groups = [[] for _ in range(k)]
        for r, c in enumerate(current):
            groups[c].append(P[r])
        # an empty cluster keeps its previous centroid
        centroids = [compute_centroid(g, config.cost, config.tie_policy, rng) if g else centroids[i]
                     for i, g in enumerate(groups)]
        new = assign(P, centroids, config.cost, packed)
        times.append(time.perf_counter() - t0)
        if new == current:
            converged = True
            break
        current = new
    objective = sum_of_squares(P, current, config.cost, packed)
    return Clustering(current, centroids, iterations, converged, objective,
                      iteration_times=tuple(times))


def run(P: Sequence[Seq], config: ClusterConfig) -> Clustering:
    """Cluster ``P`` into ``config.k`` groups, keeping the best of several restarts.

    Each restart draws from its own child of ``SeedSequence(config.rng_seed)``.
    The restart with the smallest sum-of-squares objective wins; ties keep
    the earliest restart.
    """
    if not P:
        raise ConfigurationError("no sequences to cluster")
    if config.k > len(P):
        raise ConfigurationError(f"k={config.k} exceeds the number of sequences ({len(P)})")
    P = [tuple(int(v) for v in p) for p in P]
    for p in P:
        if not p:
            raise ConfigurationError("sequences must be non-empty")
    packed = _kernels.pack(P)
    seeds = np.random.SeedSequence(config.rng_seed % 2**64).spawn(config.restarts)
    best: Optional[Clustering] = None
    objectives = []
    for seed in seeds:
        result = _single_run(P, packed, config, np.random.default_rng(seed))
        objectives.append(result.objective)
        if best is None or result.objective < best.objective:
            best = result
    best.restart_objectives = tuple(objectives)
    return best
