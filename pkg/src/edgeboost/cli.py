"""Command-line harness: generation, boosting, evaluation, and sweeps.

Exit codes: 0 success, 1 usage error, 2 data error (unreadable or
malformed inputs, misbehaving external detectors), 3 infeasible
generation parameters.  ``EDGEBOOST_SEED`` supplies the default seed
wherever ``--seed`` is omitted.
"""

from __future__ import annotations

import argparse
import csv
import os
import shlex
import subprocess
import sys

from .benchgen import BenchmarkSpec, generate, measured_mixing, perturb
from .boost import BoostConfig, run
from .community import DetectorKind, detect
from .errors import (
    DetectorConfigError,
    EdgeBoostError,
    EdgeFileFormatError,
    GenerationInfeasibleError,
    InvalidArgumentError,
)
from .fileio import (
    partition_from_pairs,
    read_edge_list,
    read_partition,
    write_edge_list,
    write_partition,
    write_per_tau_csv,
)
from .graph import Graph
from .linkpred import PredictorKind, intra_edge_precision, score_all
from .metrics import evaluate
from .partition import Partition
from .rng import spawn_seed
from .sweep import run_sweep

_DELETE_TAG = 101  # deletion stream tag, matches the sweep harness

_DETECTOR_NAMES = ["louvain", "label-propagation", "lpa"]
_PREDICTOR_NAMES = ["jaccard", "adamic-adar", "aa", "common-neighbors", "cn"]


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad flags; this harness reserves 2 for data errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _float_list(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}")


def _resolve_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    raw = os.environ.get("EDGEBOOST_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise InvalidArgumentError(f"EDGEBOOST_SEED must be an integer, got {raw!r}")


def subprocess_detector(command: str):
    """Wrap an external detector executable as a (Graph, seed) -> Partition.

    The child receives the graph as `u<TAB>v` lines on stdin (dense integer
    ids) plus the seed in EDGEBOOST_SEED, and must print one
    `node<TAB>community` line per node on stdout.
    """
    argv = shlex.split(command)

    def fn(g: Graph, seed: int) -> Partition:
        payload = "".join(f"{u}\t{v}\n" for u, v, _ in g.edges())
        env = dict(os.environ, EDGEBOOST_SEED=str(seed))
        proc = subprocess.run(
            argv, input=payload, capture_output=True, text=True, env=env
        )
        if proc.returncode != 0:
            raise DetectorConfigError(
                f"external detector exited {proc.returncode}: {proc.stderr.strip()[:200]}"
            )
        labels: dict[int, str] = {}
        for line in proc.stdout.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2:
                raise DetectorConfigError(f"bad detector output line: {line!r}")
            try:
                node = int(fields[0])
            except ValueError:
                raise DetectorConfigError(f"non-integer node id: {fields[0]!r}") from None
            labels[node] = fields[1]
        missing = [u for u in range(g.n) if u not in labels]
        if missing:
            raise DetectorConfigError(
                f"external detector left {len(missing)} nodes unassigned"
            )
        return Partition.from_labels(labels[u] for u in range(g.n))

    return fn


def _detector_from_args(args):
    if getattr(args, "detector_cmd", None):
        return subprocess_detector(args.detector_cmd), f"cmd:{args.detector_cmd}"
    kind = DetectorKind.from_name(args.detector)
    return kind, kind.value


# -- commands ---------------------------------------------------------------


def _cmd_generate(args) -> int:
    seed = _resolve_seed(args)
    spec = BenchmarkSpec(
        n_nodes=args.n_nodes,
        avg_degree=args.avg_degree,
        max_degree=args.max_degree,
        degree_exponent=args.degree_exponent,
        community_exponent=args.community_exponent,
        min_community=args.min_community,
        max_community=args.max_community,
        mu=args.mu,
        delta=args.delta,
        seed=seed,
    )
    net = generate(spec)
    if spec.delta > 0:
        net = perturb(net, spec.delta, spawn_seed(seed, _DELETE_TAG))
    labels = [str(u) for u in range(net.graph.n)]
    write_edge_list(args.out + ".edges", net.graph, labels)
    write_partition(args.out + ".truth", net.truth, labels)
    print(
        f"wrote {args.out}.edges ({net.graph.n} nodes, {net.graph.m} edges) "
        f"and {args.out}.truth ({net.truth.n_communities} communities, "
        f"mixing {measured_mixing(net.graph, net.truth):.3f})"
    )
    return 0


def _cmd_boost(args) -> int:
    g, labels = read_edge_list(args.edges)
    detector, _ = _detector_from_args(args)
    cfg = BoostConfig(
        detector=detector,
        predictor=PredictorKind.from_name(args.predictor),
        n_iterations=args.iterations,
        master_seed=_resolve_seed(args),
        fixed_k=args.fixed_k,
    )
    result = run(g, cfg, workers=args.threads)
    write_partition(args.out + ".partition", result.final_partition, labels)
    write_per_tau_csv(args.out + ".tau.csv", result.per_tau)
    print(f"chosen_tau\t{result.chosen_tau!r}")
    print(f"score\t{result.score!r}")
    print(f"n_communities\t{result.final_partition.n_communities}")
    if result.imputation_degraded:
        print("imputation_degraded\ttrue")
    return 0


def _cmd_eval(args) -> int:
    truth_pairs = read_partition(args.truth)
    node_labels = [lab for lab, _ in truth_pairs]
    try:
        truth = partition_from_pairs(truth_pairs, node_labels)
        inferred = partition_from_pairs(read_partition(args.partition), node_labels)
    except InvalidArgumentError as exc:
        print(f"edgeboost eval: {exc}", file=sys.stderr)
        return 2
    report = evaluate(inferred, truth)
    print(f"nmi\t{report.nmi!r}")
    print(f"relative_error\t{report.relative_error!r}")
    print(f"n_inferred\t{report.n_inferred}")
    print(f"n_truth\t{report.n_truth}")
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["nmi", "relative_error", "n_inferred", "n_truth"])
            writer.writerow(
                [repr(report.nmi), repr(report.relative_error), report.n_inferred, report.n_truth]
            )
    return 0


def _cmd_sweep(args) -> int:
    base = BenchmarkSpec(
        n_nodes=args.n_nodes,
        avg_degree=args.avg_degree,
        max_degree=args.max_degree,
        min_community=args.min_community,
        max_community=args.max_community,
    )
    detector = DetectorKind.from_name(args.detector)
    added = run_sweep(
        args.out,
        mus=args.mus,
        deltas=args.deltas,
        seeds=range(args.seeds),
        detector=detector,
        predictor=PredictorKind.from_name(args.predictor),
        n_iterations=args.iterations,
        base_spec=base,
        threads=args.threads,
        log=(None if args.quiet else lambda msg: print(msg, file=sys.stderr)),
    )
    print(f"wrote {added} new rows to {args.out}")
    return 0


def _cmd_linkpred_eval(args) -> int:
    g, labels = read_edge_list(args.edges)
    try:
        truth = partition_from_pairs(read_partition(args.truth), labels)
    except InvalidArgumentError as exc:
        print(f"edgeboost linkpred-eval: {exc}", file=sys.stderr)
        return 2
    scored = score_all(g, PredictorKind.from_name(args.predictor))
    rows = [
        (kp, intra_edge_precision(scored, truth, kp, args.original_edge_count))
        for kp in args.kpercents
    ]
    out_fh = open(args.out, "w", encoding="utf-8", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(out_fh)
        writer.writerow(["k_percent", "precision"])
        for kp, prec in rows:
            writer.writerow([repr(kp), repr(prec)])
    finally:
        if args.out:
            out_fh.close()
    return 0


# -- parser -----------------------------------------------------------------


def _add_benchmark_flags(p, with_exponents: bool) -> None:
    p.add_argument("--n-nodes", type=_positive_int, default=1000)
    p.add_argument("--avg-degree", type=float, default=10.0)
    p.add_argument("--max-degree", type=_positive_int, default=50)
    p.add_argument("--min-community", type=_positive_int, default=10)
    p.add_argument("--max-community", type=_positive_int, default=50)
    if with_exponents:
        p.add_argument("--degree-exponent", type=float, default=-2.0)
        p.add_argument("--community-exponent", type=float, default=-1.0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="edgeboost",
        description="Consensus clustering with link-prediction imputation.",
    )
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("generate", help="write a planted-partition benchmark network")
    _add_benchmark_flags(p, with_exponents=True)
    p.add_argument("--mu", type=float, default=0.2, help="mixing parameter")
    p.add_argument("--delta", type=float, default=0.0, help="fraction of edges to delete")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", required=True, help="output prefix (.edges/.truth)")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("boost", help="run the boosted pipeline on an edge list")
    p.add_argument("--edges", required=True)
    p.add_argument("--detector", choices=_DETECTOR_NAMES, default="louvain")
    p.add_argument("--detector-cmd", default=None, help="external detector executable")
    p.add_argument("--predictor", choices=_PREDICTOR_NAMES, default="jaccard")
    p.add_argument("--iterations", type=_positive_int, default=50)
    p.add_argument("--fixed-k", type=_positive_int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--threads", type=_positive_int, default=1)
    p.add_argument("--out", required=True, help="output prefix (.partition/.tau.csv)")
    p.set_defaults(func=_cmd_boost)

    p = sub.add_parser("eval", help="compare a partition file against a truth file")
    p.add_argument("--partition", required=True)
    p.add_argument("--truth", required=True)
    p.add_argument("--out", default=None, help="optional CSV output")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("sweep", help="baseline-vs-boosted grid experiment")
    p.add_argument("--mus", type=_float_list, required=True)
    p.add_argument("--deltas", type=_float_list, required=True)
    p.add_argument("--seeds", type=_positive_int, required=True, help="seeds 0..k-1")
    p.add_argument("--detector", choices=_DETECTOR_NAMES, default="louvain")
    p.add_argument("--predictor", choices=_PREDICTOR_NAMES, default="jaccard")
    p.add_argument("--iterations", type=_positive_int, default=50)
    p.add_argument("--threads", type=_positive_int, default=1)
    p.add_argument("--quiet", action="store_true")
    _add_benchmark_flags(p, with_exponents=False)
    p.add_argument("--out", required=True, help="CSV path (appended, resumable)")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("linkpred-eval", help="intra-edge precision of a predictor")
    p.add_argument("--edges", required=True)
    p.add_argument("--truth", required=True)
    p.add_argument("--predictor", choices=_PREDICTOR_NAMES, default="jaccard")
    p.add_argument(
        "--kpercents", type=_float_list, default=[0.02, 0.05, 0.10, 0.15, 0.20]
    )
    p.add_argument("--original-edge-count", type=_positive_int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_linkpred_eval)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_help()
        return 1
    try:
        return args.func(args)
    except GenerationInfeasibleError as exc:
        print(f"edgeboost: infeasible: {exc}", file=sys.stderr)
        return 3
    except InvalidArgumentError as exc:
        print(f"edgeboost: {exc}", file=sys.stderr)
        return 1
    except (EdgeFileFormatError, OSError, EdgeBoostError) as exc:
        print(f"edgeboost: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
