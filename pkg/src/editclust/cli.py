"""Command-line front end: ``editclust <command> ...``.

Exit status is 0 on success, 1 on usage errors and 2 on data errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fileio
from .cluster import ClusterConfig, TiePolicy, run
from .costs import make_matrix_cost_model
from .datagen import GenSpec, generate
from .editdist import align, distance_sym
from .errors import ConfigurationError, DataError, EditClustError
from .evaluate import DEFAULT_BINS, batch_experiment, evaluate

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def format_number(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else repr(float(x))


def _load_json(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise DataError(f"cannot read: {exc}", path) from None
    except json.JSONDecodeError as exc:
        raise DataError(f"invalid JSON: {exc.msg}", path, exc.lineno) from None


def _cost_model(ds, matrix_path, del_cost):
    de = 1.0 if del_cost is None else del_cost
    if matrix_path:
        return fileio.read_cost_matrix(matrix_path, ds.alphabet, de)
    unit = ds.unit_cost()
    return make_matrix_cost_model(ds.alphabet, unit.sub_matrix, de)


def _pair(ds, id_a, id_b):
    return ds.sequences[ds.index_of(id_a)], ds.sequences[ds.index_of(id_b)]


def cmd_dist(args, out):
    ds = fileio.read_dataset(args.file)
    cost = _cost_model(ds, args.cost_matrix, args.del_cost)
    a, b = _pair(ds, args.id_a, args.id_b)
    out.write(format_number(distance_sym(a, b, cost)) + "\n")


def cmd_align(args, out):
    ds = fileio.read_dataset(args.file)
    cost = _cost_model(ds, args.cost_matrix, args.del_cost)
    a, b = _pair(ds, args.id_a, args.id_b)
    if len(a) < len(b):
        a, b = b, a
    E = align(a, b, cost)
    top = cost.decode(E.alpha)
    bottom = cost.decode(E.beta, gap="-")
    widths = [max(len(u), len(v)) for u, v in zip(top, bottom)]
    for row in (top, bottom):
        out.write(" ".join(t.ljust(w) for t, w in zip(row, widths)).rstrip() + "\n")


def _setting(cli_value, config, key, default):
    if cli_value is not None:
        return cli_value
    return config.get(key, default)


def cmd_cluster(args, out):
    config = _load_json(args.config) if args.config else {}
    if not isinstance(config, dict):
        raise DataError("config file must hold a JSON object", args.config)
    known = {"k", "tie_policy", "max_iters", "restarts", "seed", "del_cost", "cost_matrix"}
    if set(config) - known:
        raise DataError(f"unknown config keys: {sorted(set(config) - known)}", args.config)
    ds = fileio.read_dataset(args.file)
    k = _setting(args.k, config, "k", None)
    if k is None:
        raise UsageError("cluster: --k is required (flag or config key)")
    cost = _cost_model(ds, _setting(args.cost_matrix, config, "cost_matrix", None),
                       _setting(args.del_cost, config, "del_cost", None))
    cfg = ClusterConfig(
        k=int(k), cost=cost,
        tie_policy=_setting(args.tie_policy, config, "tie_policy", "random"),
        max_iters=int(_setting(args.max_iters, config, "max_iters", 100)),
        restarts=int(_setting(args.restarts, config, "restarts", 5)),
        rng_seed=int(_setting(args.seed, config, "seed", 0)),
    )
    result = run(ds.sequences, cfg)
    assignment = fileio.format_assignment(ds.ids, result.assignment)
    centroids = fileio.format_centroids(result.centroids, ds.alphabet)
    if args.out:
        Path(args.out).write_text(assignment, encoding="utf-8")
        cpath = args.centroids or str(args.out) + ".centroids"
        Path(cpath).write_text(centroids, encoding="utf-8")
    else:
        out.write(assignment)
        if args.centroids:
            Path(args.centroids).write_text(centroids, encoding="utf-8")
    print(f"iterations={result.iterations} converged={str(result.converged).lower()} "
          f"objective={format_number(result.objective)}", file=sys.stderr)


def _gen_spec(data, path):
    if not isinstance(data, dict):
        raise DataError("generator spec must be a JSON object", path)
    try:
        return GenSpec.from_dict(data)
    except TypeError as exc:
        raise DataError(str(exc), path) from None


def cmd_gen(args, out):
    spec = _gen_spec(_load_json(args.spec), args.spec)
    data = generate(spec)
    width = len(str(len(data) - 1))
    ds = fileio.Dataset(data.alphabet, [f"s{i:0{width}d}" for i in range(len(data))],
                        data.sequences, data.labels)
    fileio.write_dataset(ds, args.out)
    if args.prototypes:
        Path(args.prototypes).write_text(
            fileio.format_centroids(data.prototypes, data.alphabet), encoding="utf-8")


def cmd_eval(args, out):
    pred_ids, pred = fileio.read_labels(args.pred)
    true_ids, truth = fileio.read_labels(args.truth)
    if sorted(pred_ids) != sorted(true_ids):
        raise DataError("prediction and truth files list different ids")
    by_id = dict(zip(pred_ids, pred))
    report = evaluate([by_id[i] for i in true_ids], truth, args.k)
    out.write(report.format())


def _parse_bins(raw):
    try:
        return tuple((int(lo), None if hi is None else int(hi)) for lo, hi in raw)
    except (TypeError, ValueError):
        raise ConfigurationError("bins must be a list of [low, high-or-null] pairs") from None


def cmd_experiment(args, out):
    data = _load_json(args.spec)
    if isinstance(data, list):
        data = {"specs": data}
    elif isinstance(data, dict) and "specs" not in data:
        data = {"specs": [data]}
    if not isinstance(data, dict) or not isinstance(data["specs"], list):
        raise DataError("experiment file must hold a spec list", args.spec)
    specs = [_gen_spec(s, args.spec) for s in data["specs"]]
    if not specs:
        raise DataError("no generator specs given", args.spec)
    cl = data.get("cluster", {})
    config = ClusterConfig(
        k=specs[0].k_true, cost=specs[0].cost_model(),
        tie_policy=cl.get("tie_policy", "random"),
        max_iters=int(cl.get("max_iters", 100)),
        restarts=int(cl.get("restarts", 5)),
        rng_seed=int(cl.get("seed", 0)),
    )
    bins = _parse_bins(data["bins"]) if "bins" in data else DEFAULT_BINS
    result = batch_experiment(specs, config, args.samples, bins=bins, workers=args.workers)
    Path(args.out).write_text(result.histogram_csv(), encoding="utf-8")
    detail = args.detail or str(Path(args.out).with_suffix("")) + ".detail.csv"
    Path(detail).write_text(result.detail_csv(), encoding="utf-8")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="editclust", description="Edit-distance clustering of discrete sequences.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    for name, fn, helptext in (("dist", cmd_dist, "print the edit distance of two rows"),
                               ("align", cmd_align, "print an optimal edit sequence")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("file")
        sp.add_argument("id_a")
        sp.add_argument("id_b")
        sp.add_argument("--cost-matrix")
        sp.add_argument("--del-cost", type=float)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("cluster", help="cluster a dataset")
    sp.add_argument("file")
    sp.add_argument("--k", type=int)
    sp.add_argument("--tie-policy", choices=[t.value for t in TiePolicy])
    sp.add_argument("--max-iters", type=int)
    sp.add_argument("--restarts", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--cost-matrix")
    sp.add_argument("--del-cost", type=float)
    sp.add_argument("--config", help="JSON file with defaults for the flags above")
    sp.add_argument("--out", help="assignment CSV (default: stdout)")
    sp.add_argument("--centroids", help="centroid file (default: OUT.centroids)")
    sp.set_defaults(func=cmd_cluster)

    sp = sub.add_parser("gen", help="generate a labeled synthetic dataset")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--prototypes")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("eval", help="score predicted clusters against labels")
    sp.add_argument("--pred", required=True)
    sp.add_argument("--truth", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("experiment", help="repeated generate/cluster/eval runs")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--samples", type=int, required=True)
    sp.add_argument("--out", required=True, help="histogram CSV")
    sp.add_argument("--detail", help="per-sample CSV (default: OUT stem + .detail.csv)")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_experiment)
    return p


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        args.func(args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (EditClustError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
