"""Parameter sweeps over (mu, delta, seed) grids, with CSV output.

Each cell generates a planted network, deletes a delta fraction of its
edges, then scores the baseline detector against the boosted pipeline on
the damaged graph.  Rows are written in grid order regardless of thread
count, and rerunning against an existing CSV skips cells that already
have rows, so an interrupted sweep can resume without duplicates.
"""

from __future__ import annotations

import csv
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import Sequence

from .benchgen import BenchmarkSpec, generate, perturb
from .boost import BoostConfig, run
from .community import DetectorKind, detect
from .linkpred import PredictorKind
from .metrics import evaluate
from .rng import spawn_seed

COLUMNS = [
    "mu",
    "delta",
    "seed",
    "detector",
    "predictor",
    "n_iterations",
    "nmi_baseline",
    "nmi_boosted",
    "re_baseline",
    "re_boosted",
    "chosen_tau",
    "wall_time_ms",
    "error",
]

# stream tags so deletion, baseline, and boost draw from unrelated streams
_DELETE_TAG = 101
_BASELINE_TAG = 202
_BOOST_TAG = 303


def _fmt(x: float) -> str:
    return repr(float(x))


def _cell_key(mu, delta, seed, detector, predictor, n_iterations) -> tuple:
    return (_fmt(mu), _fmt(delta), str(seed), detector, predictor, str(n_iterations))


def _existing_keys(path: str) -> set[tuple]:
    if not os.path.exists(path) or os.path.getsize(path) == 0:
        return set()
    with open(path, encoding="utf-8", newline="") as fh:
        return {
            (
                row["mu"],
                row["delta"],
                row["seed"],
                row["detector"],
                row["predictor"],
                row["n_iterations"],
            )
            for row in csv.DictReader(fh)
        }


def _run_cell(
    mu: float,
    delta: float,
    seed: int,
    detector: DetectorKind,
    predictor: PredictorKind,
    n_iterations: int,
    base_spec: BenchmarkSpec,
) -> dict:
    started = time.perf_counter()
    row = {
        "mu": _fmt(mu),
        "delta": _fmt(delta),
        "seed": str(seed),
        "detector": detector.value,
        "predictor": predictor.value,
        "n_iterations": str(n_iterations),
        "nmi_baseline": "",
        "nmi_boosted": "",
        "re_baseline": "",
        "re_boosted": "",
        "chosen_tau": "",
        "wall_time_ms": "",
        "error": "",
    }
    try:
        spec = replace(base_spec, mu=mu, delta=delta, seed=seed)
        net = generate(spec)
        observed = perturb(net, delta, spawn_seed(seed, _DELETE_TAG))
        baseline = detect(observed.graph, detector, spawn_seed(seed, _BASELINE_TAG))
        boosted = run(
            observed.graph,
            BoostConfig(
                detector=detector,
                predictor=predictor,
                n_iterations=n_iterations,
                master_seed=spawn_seed(seed, _BOOST_TAG),
            ),
        )
        base_rep = evaluate(baseline, net.truth)
        boost_rep = evaluate(boosted.final_partition, net.truth)
        row["nmi_baseline"] = _fmt(base_rep.nmi)
        row["nmi_boosted"] = _fmt(boost_rep.nmi)
        row["re_baseline"] = _fmt(base_rep.relative_error)
        row["re_boosted"] = _fmt(boost_rep.relative_error)
        row["chosen_tau"] = _fmt(boosted.chosen_tau)
    except Exception as exc:  # record the failure, keep sweeping
        row["error"] = f"{type(exc).__name__}: {exc}".replace("\n", " ")
    row["wall_time_ms"] = str(int((time.perf_counter() - started) * 1000))
    return row


def run_sweep(
    out_path: str,
    *,
    mus: Sequence[float],
    deltas: Sequence[float],
    seeds: Sequence[int],
    detector: DetectorKind = DetectorKind.LOUVAIN,
    predictor: PredictorKind = PredictorKind.JACCARD,
    n_iterations: int = 50,
    base_spec: BenchmarkSpec | None = None,
    threads: int = 1,
    log=None,
) -> int:
    """Run the full cross-product; returns the number of rows added."""
    base = base_spec if base_spec is not None else BenchmarkSpec()
    done = _existing_keys(out_path)
    cells = [
        (mu, delta, seed)
        for mu in mus
        for delta in deltas
        for seed in seeds
        if _cell_key(mu, delta, seed, detector.value, predictor.value, n_iterations)
        not in done
    ]

    header_needed = not os.path.exists(out_path) or os.path.getsize(out_path) == 0
    written = 0
    with open(out_path, "a", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=COLUMNS)
        if header_needed:
            writer.writeheader()
            fh.flush()

        def emit(row: dict) -> None:
            nonlocal written
            writer.writerow(row)
            fh.flush()
            written += 1
            if log is not None:
                log(
                    f"mu={row['mu']} delta={row['delta']} seed={row['seed']} "
                    f"nmi {row['nmi_baseline'] or '-'} -> {row['nmi_boosted'] or '-'}"
                    + (f" [{row['error']}]" if row["error"] else "")
                )

        if threads <= 1:
            for mu, delta, seed in cells:
                emit(_run_cell(mu, delta, seed, detector, predictor, n_iterations, base))
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                futures = [
                    pool.submit(
                        _run_cell, mu, delta, seed, detector, predictor, n_iterations, base
                    )
                    for mu, delta, seed in cells
                ]
                for fut in futures:  # in-order collection keeps row order fixed
                    emit(fut.result())
    return written
