"""Scoring clusterings against planted labels, and repeated experiments."""
from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Tuple

from .cluster import ClusterConfig, run
from .datagen import GenSpec, generate
from .errors import ConfigurationError, PreconditionError, UnsupportedError

MAX_EXHAUSTIVE_K = 8

#: inclusive (low, high) bounds of misclustered-count categories; None = open
DEFAULT_BINS: Tuple[Tuple[int, Optional[int]], ...] = (
    (0, 0), (1, 5), (6, 20), (21, 100), (101, None))


def bin_label(low: int, high: Optional[int]) -> str:
    if high is None:
        return f">{low - 1}"
    if low == high:
        return str(low)
    return f"{low}-{high}"


def bin_of(count: int, bins=DEFAULT_BINS) -> str:
    for low, high in bins:
        if count >= low and (high is None or count <= high):
            return bin_label(low, high)
    raise ConfigurationError(f"no bin holds {count}")


def mismatch_count(predicted: Sequence[int], truth: Sequence[int], k: int) -> Tuple[int, Tuple[int, ...]]:
    """Fewest disagreements over all bijections of predicted ids onto true ids.

    Returns ``(count, perm)`` where ``perm[p]`` is the true label matched
    to predicted cluster ``p``. Exhaustive over k! maps; the first optimum in
    lexicographic order is kept.
    """
    if len(predicted) != len(truth):
        raise PreconditionError("predicted and true labels differ in length")
    if k < 1:
        raise ConfigurationError("k must be >= 1")
    if k > MAX_EXHAUSTIVE_K:
        raise UnsupportedError(f"exhaustive matching supports k <= {MAX_EXHAUSTIVE_K}")
    confusion = [[0] * k for _ in range(k)]
    for p, t in zip(predicted, truth):
        if not (0 <= p < k and 0 <= t < k):
            raise PreconditionError(f"label out of range [0, {k}): predicted {p}, true {t}")
        confusion[p][t] += 1
    best_hits, best_perm = -1, tuple(range(k))
    for perm in itertools.permutations(range(k)):
        hits = sum(confusion[p][perm[p]] for p in range(k))
        if hits > best_hits:
            best_hits, best_perm = hits, perm
    return len(truth) - best_hits, best_perm


@dataclass
class EvalReport:
    misclustered: int
    m: int
    best_label_map: Tuple[int, ...]
    per_category_histogram: Dict[str, int] = field(default_factory=dict)

    @property
    def accuracy(self) -> float:
        return 1.0 - self.misclustered / self.m if self.m else 1.0

    def format(self) -> str:
        mapping = " ".join(f"{p}->{t}" for p, t in enumerate(self.best_label_map))
        hist = " ".join(f"{b}:{c}" for b, c in self.per_category_histogram.items())
        return (f"misclustered: {self.misclustered}\n"
                f"accuracy: {self.accuracy:.6f}\n"
                f"label_map: {mapping}\n"
                f"histogram: {hist}\n")


def evaluate(predicted, truth, k: int, bins=DEFAULT_BINS) -> EvalReport:
    count, perm = mismatch_count(predicted, truth, k)
    hist = {bin_label(lo, hi): 0 for lo, hi in bins}
    hist[bin_of(count, bins)] += 1
    return EvalReport(count, len(truth), perm, hist)


@dataclass(frozen=True)
class SampleResult:
    spec_id: int
    sample: int
    misclustered: int
    iterations: int
    converged: bool
    objective: float


@dataclass
class ExperimentResult:
    bins: Tuple[Tuple[int, Optional[int]], ...]
    samples: List[SampleResult]

    def histogram(self) -> List[Tuple[int, str, int]]:
        rows = []
        for spec_id in sorted({s.spec_id for s in self.samples}):
            counts = {bin_label(lo, hi): 0 for lo, hi in self.bins}
            for s in self.samples:
                if s.spec_id == spec_id:
                    counts[bin_of(s.misclustered, self.bins)] += 1
            rows.extend((spec_id, b, c) for b, c in counts.items())
        return rows

    def mean_misclustered(self, spec_id: int) -> float:
        vals = [s.misclustered for s in self.samples if s.spec_id == spec_id]
        return sum(vals) / len(vals)

    def histogram_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["spec_id", "bin", "count"])
        w.writerows(self.histogram())
        return buf.getvalue()

    def detail_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["spec_id", "sample", "misclustered", "iterations", "converged", "objective"])
        for s in self.samples:
            w.writerow([s.spec_id, s.sample, s.misclustered, s.iterations,
                        str(s.converged).lower(), repr(s.objective)])
        return buf.getvalue()


def run_sample(spec: GenSpec, config: ClusterConfig, spec_id: int, sample: int) -> SampleResult:
    """One generate -> cluster -> score round with seeds offset by ``sample``."""
    data = generate(replace(spec, rng_seed=spec.rng_seed + sample))
    cfg = replace(config, k=spec.k_true, cost=spec.cost_model(),
                  rng_seed=config.rng_seed + sample)
    result = run(data.sequences, cfg)
    count, _ = mismatch_count(result.assignment, data.labels, spec.k_true)
    return SampleResult(spec_id, sample, count, result.iterations, result.converged, result.objective)


def _run_sample_args(args):
    return run_sample(*args)


def batch_experiment(specs: Sequence[GenSpec], config: ClusterConfig, samples: int,
                     bins=DEFAULT_BINS, workers: int = 1) -> ExperimentResult:
    """Repeat generate -> run -> mismatch_count ``samples`` times per spec.

    The cluster count is taken from each spec's ``k_true`` and the cost model
    from its alphabet; ``config`` supplies the remaining settings. Results are
    ordered by (spec, sample) whatever ``workers`` is.
    """
    if samples < 1:
        raise ConfigurationError("samples must be >= 1")
    jobs = [(spec, config, i, s) for i, spec in enumerate(specs) for s in range(samples)]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_sample_args, jobs))
    else:
        results = [run_sample(*job) for job in jobs]
    return ExperimentResult(tuple(bins), results)
