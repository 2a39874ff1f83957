"""Labeled synthetic datasets with planted clusters and controlled overlap.

A member *overlaps* when it is not strictly closer (unit-cost edit
distance) to its own prototype than to every foreign prototype. Ordinary
members are perturbations of their own prototype that are strictly
closer to it; overlapping members are perturbations of a foreign
prototype that land at least as close to it as to their own. Both kinds
are rejection-sampled, so the realized overlap count is exactly
``round(f * m)``.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, fields
from typing import List, Optional, Tuple

import numpy as np

from . import _kernels
from .costs import CostModel, Seq, make_unit_cost_model
from .errors import ConfigurationError, GenerationError


@dataclass(frozen=True)
class GenSpec:
    m: int
    k_true: int = 2
    alphabet_size: int = 2
    len_min: int = 10
    len_max: int = 20
    overlap_fraction: float = 0.0
    # expected edits per member, split evenly between substitutions and deletions
    edit_noise: float = 2.0
    rng_seed: int = 0
    # minimum unit-cost distance between prototypes; None means len_max / 2
    separation: Optional[float] = None
    max_attempts: int = 10_000

    def __post_init__(self):
        if self.k_true < 1:
            raise ConfigurationError("k_true must be >= 1")
        if self.m < self.k_true:
            raise ConfigurationError("m must be >= k_true")
        if self.alphabet_size < 1:
            raise ConfigurationError("alphabet_size must be >= 1")
        if self.len_min < 1 or self.len_max < self.len_min:
            raise ConfigurationError("need 1 <= len_min <= len_max")
        if not 0.0 <= self.overlap_fraction <= 1.0:
            raise ConfigurationError("overlap_fraction must lie in [0, 1]")
        if self.overlap_fraction > 0 and self.k_true < 2:
            raise ConfigurationError("overlap needs at least two planted clusters")
        if self.edit_noise < 0:
            raise ConfigurationError("edit_noise must be >= 0")
        if self.max_attempts < 1:
            raise ConfigurationError("max_attempts must be >= 1")

    @property
    def min_separation(self) -> float:
        return self.len_max / 2 if self.separation is None else float(self.separation)

    @property
    def n_overlap(self) -> int:
        return int(math.floor(self.overlap_fraction * self.m + 0.5))

    @property
    def alphabet(self) -> Tuple[str, ...]:
        return tuple(str(i) for i in range(self.alphabet_size))

    def cost_model(self) -> CostModel:
        return make_unit_cost_model(self.alphabet)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "GenSpec":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigurationError(f"unknown generator keys: {sorted(unknown)}")
        return cls(**data)


@dataclass
class LabeledDataset:
    sequences: List[Seq]
    labels: List[int]
    prototypes: List[Seq]
    alphabet: Tuple[str, ...]

    def __post_init__(self):
        if len(self.sequences) != len(self.labels):
            raise ConfigurationError("sequences and labels differ in length")

    def __len__(self):
        return len(self.sequences)


def _draw_prototypes(spec: GenSpec, rng, cost: CostModel) -> List[np.ndarray]:
    """Accept candidates one at a time, each far enough from those already kept."""
    sub, de = cost.sub_matrix, cost.del_cost
    protos: List[np.ndarray] = []
    for _ in range(spec.max_attempts):
        cand = rng.integers(spec.alphabet_size,
                            size=int(rng.integers(spec.len_min, spec.len_max + 1)))
        if all(_kernels.sym_distance(cand, p, sub, de) >= spec.min_separation for p in protos):
            protos.append(cand)
            if len(protos) == spec.k_true:
                return protos
    raise GenerationError(
        f"no {spec.k_true} prototypes at distance >= {spec.min_separation} "
        f"after {spec.max_attempts} attempts")


def perturb(proto: np.ndarray, spec: GenSpec, rng) -> np.ndarray:
    """Random substitutions, then random deletions (never down to empty)."""
    n = proto.shape[0]
    rate = min(1.0, spec.edit_noise / 2 / n)
    out = proto.copy()
    if spec.alphabet_size > 1 and rate > 0:
        hit = rng.random(n) < rate
        # shift by 1..A-1 so the symbol really changes
        shift = rng.integers(1, spec.alphabet_size, size=n)
        out = np.where(hit, (out + shift) % spec.alphabet_size, out)
    n_del = min(int(rng.binomial(n, rate)) if rate > 0 else 0, n - 1)
    if n_del:
        drop = rng.choice(n, size=n_del, replace=False)
        out = np.delete(out, drop)
    return out


def overlap_flags(sequences, labels, prototypes, cost: CostModel) -> List[bool]:
    """Whether each member is not strictly closer to its own prototype."""
    flat, offs = _kernels.pack(sequences)
    pflat, poffs = _kernels.pack(prototypes)
    table = _kernels.cross_distances(flat, offs, pflat, poffs, cost.sub_matrix, cost.del_cost)
    flags = []
    for row, own in zip(table, labels):
        foreign = np.delete(row, own)
        flags.append(bool(foreign.size) and bool(foreign.min() <= row[own]))
    return flags


def generate(spec: GenSpec) -> LabeledDataset:
    rng = np.random.default_rng(spec.rng_seed % 2**64)
    cost = spec.cost_model()
    sub, de = cost.sub_matrix, cost.del_cost
    protos = _draw_prototypes(spec, rng, cost)
    k = spec.k_true

    labels = [i % k for i in range(spec.m)]
    overlapping = np.zeros(spec.m, dtype=bool)
    overlapping[rng.choice(spec.m, size=spec.n_overlap, replace=False)] = True

    members = []
    for label, wants_overlap in zip(labels, overlapping):
        for _ in range(spec.max_attempts):
            if wants_overlap:
                donor = int(rng.integers(k - 1))
                donor += donor >= label
            else:
                donor = label
            cand = perturb(protos[donor], spec, rng)
            dists = [_kernels.sym_distance(cand, p, sub, de) for p in protos]
            own = dists[label]
            nearest_foreign = min((d for j, d in enumerate(dists) if j != label), default=math.inf)
            if (nearest_foreign <= own) == bool(wants_overlap):
                members.append(cand)
                break
        else:
            kind = "overlapping" if wants_overlap else "separated"
            raise GenerationError(f"could not draw a {kind} member of cluster {label} "
                                  f"in {spec.max_attempts} attempts")

    order = rng.permutation(spec.m)
    return LabeledDataset(
        sequences=[tuple(int(v) for v in members[i]) for i in order],
        labels=[labels[i] for i in order],
        prototypes=[tuple(int(v) for v in p) for p in protos],
        alphabet=spec.alphabet,
    )
