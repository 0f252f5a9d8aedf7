"""Command-line pipelines: ingest, analyze, nullmodel, generate.

Every command writes CSV outputs plus one manifest.json into --out-dir,
recording input digests, parameters, backend, and per-stage timings.  All
randomness hangs off a single --seed, so identical inputs, flags, and seed
reproduce identical output files on one build.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from ._backend import BACKEND
from .generators import BaSpec, ba_generate, degree_histogram
from .graph import EmptyEdgeSetError, build_graph, largest_component
from .ingest import (ParseError, merge_sources, parse_as_paths,
                     parse_edge_list, write_edge_list, write_graph_edge_list)
from .nullmodel import RewireConfig, rewire
from ._rng import derive_stream_seed
from .profiles import aggregate_realizations, radial_histogram, radial_profile
from .radial import (DEFAULT_TIER1, DisconnectedGraphError, compute_metrics,
                     tier1_summary, triangle_census)

log = logging.getLogger(__name__)

PROFILE_QUANTITIES = ("degree", "neighbor_degree", "clustering",
                      "deletion_impact", "distance_balance")


class Manifest:
    """Collects one run's inputs, outputs, parameters, and stage timings."""

    def __init__(self, command: str, params: dict, out_dir: Path):
        self.out_dir = out_dir
        self.data = {
            "tool": "radialnet",
            "version": __version__,
            "backend": BACKEND,
            "command": command,
            "created_utc": datetime.now(timezone.utc).isoformat(),
            "parameters": params,
            "inputs": [],
            "outputs": [],
            "timings_sec": {},
        }

    def add_input(self, path: Path) -> None:
        digest = hashlib.sha256(path.read_bytes()).hexdigest()
        self.data["inputs"].append(
            {"path": str(path), "sha256": digest, "bytes": path.stat().st_size})

    def output(self, name: str) -> Path:
        self.data["outputs"].append(name)
        return self.out_dir / name

    @contextmanager
    def stage(self, name: str):
        t0 = time.perf_counter()
        yield
        self.data["timings_sec"][name] = round(time.perf_counter() - t0, 6)

    def write(self) -> None:
        path = self.out_dir / "manifest.json"
        path.write_text(json.dumps(self.data, indent=2, sort_keys=True) + "\n",
                        encoding="utf-8")


def _open_out(path: Path):
    return open(path, "w", encoding="utf-8", newline="\n")


def _write_rows(path: Path, rows) -> None:
    with _open_out(path) as f:
        for row in rows:
            f.write(row + "\n")


def _load_graph(path: Path):
    with open(path, encoding="utf-8") as f:
        return build_graph(parse_edge_list(f))


def _thread_count(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("RADIALNET_THREADS", "").strip()
    return max(1, int(env)) if env else 1


def _parse_tier1(text: str):
    return tuple(int(tok) for tok in text.replace(",", " ").split())


def cmd_ingest(args) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    params = {"edges": args.edges, "paths": args.paths, "baseline": args.baseline}
    manifest = Manifest("ingest", params, out_dir)

    sources = []
    with manifest.stage("parse"):
        for path_str in args.edges:
            path = Path(path_str)
            manifest.add_input(path)
            with open(path, encoding="utf-8") as f:
                sources.append((path_str, parse_edge_list(f, source=path_str)))
        for path_str in args.paths:
            path = Path(path_str)
            manifest.add_input(path)
            with open(path, encoding="utf-8") as f:
                sources.append((path_str, parse_as_paths(f, source=path_str)))
    if not sources:
        raise SystemExit("error: no input files given (use --edges/--paths)")

    baseline = args.baseline if args.baseline else sources[0][0]
    with manifest.stage("merge"):
        union, report = merge_sources(sources, baseline)

    with manifest.stage("write"):
        with _open_out(manifest.output("merged.edges")) as f:
            write_edge_list(union, f, deduplicate=True)
        _write_rows(manifest.output("sources.csv"), report.csv_rows())
    manifest.write()
    print(f"merged {len(sources)} sources: {report.union_edges} distinct edges "
          f"(gain {report.gain:.4f} over {baseline})")
    return 0


def cmd_analyze(args) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    threads = _thread_count(args)
    tier1 = _parse_tier1(args.tier1_list)
    params = {"graph": args.graph, "bin_width": args.bin_width,
              "triangle_threshold": args.triangle_threshold,
              "tier1_list": list(tier1), "threads": threads}
    manifest = Manifest("analyze", params, out_dir)
    graph_path = Path(args.graph)
    manifest.add_input(graph_path)

    with manifest.stage("load"):
        g_full = _load_graph(graph_path)
        g, retained = largest_component(g_full)

    with manifest.stage("metrics"):
        metrics = compute_metrics(g, threads=threads)

    with manifest.stage("profiles"):
        hist = radial_histogram(metrics.dbar, args.bin_width)
        profiles = {
            "degree": radial_profile(metrics.dbar, metrics.k, args.bin_width, "degree"),
            "neighbor_degree": radial_profile(metrics.dbar, metrics.K, args.bin_width, "neighbor_degree"),
            "clustering": radial_profile(metrics.dbar, metrics.C, args.bin_width, "clustering"),
            "deletion_impact": radial_profile(metrics.dbar, metrics.phi, args.bin_width, "deletion_impact"),
            "distance_balance": radial_profile(metrics.dbar, metrics.b, args.bin_width, "distance_balance"),
        }
        census = triangle_census(g, metrics.dbar, args.triangle_threshold)
        t1 = tier1_summary(g, metrics.dbar, tier1)

    with manifest.stage("write"):
        with _open_out(manifest.output("metrics.csv")) as f:
            metrics.write_csv(f)
        _write_rows(manifest.output("histogram.csv"), hist.csv_rows())
        for name, prof in profiles.items():
            _write_rows(manifest.output(f"profile_{name}.csv"), prof.csv_rows())
        _write_rows(manifest.output("triangles.csv"), [
            "total,any_above,all_above,threshold",
            f"{census.total},{census.any_above},{census.all_above},{census.threshold:.12g}",
        ])
        _write_rows(manifest.output("tier1.csv"), t1.csv_rows())
        summary = [
            "key,value",
            f"n_input,{g_full.n}",
            f"m_input,{g_full.m}",
            f"dropped_loops,{g_full.dropped_loops}",
            f"dropped_duplicates,{g_full.dropped_duplicates}",
            f"n,{g.n}",
            f"m,{g.m}",
            f"retained_fraction,{retained:.12g}",
            f"tier1_present,{len(t1.found)}",
            f"tier1_missing,{' '.join(map(str, t1.missing))}",
            f"tier1_mean_dbar,{t1.mean_dbar:.12g}",
            f"tier1_sd,{t1.sd:.12g}",
            f"tier1_se,{t1.se:.12g}",
        ]
        _write_rows(manifest.output("summary.csv"), summary)
    manifest.write()
    print(f"analyzed n={g.n} m={g.m} (retained {retained:.4f}); "
          f"tier-1 mean dbar {t1.mean_dbar:.4g} (sd {t1.sd:.2g}, se {t1.se:.2g})")
    return 0


def _realization_profiles(g, cfg, bin_width, dump_path):
    """Rewire once and bin its metrics; runs on worker threads."""
    result = rewire(g, cfg)
    comp, retained = largest_component(result.graph)
    metrics = compute_metrics(comp, threads=1)
    profs = {
        "fraction": radial_histogram(metrics.dbar, bin_width).as_profile(),
        "degree": radial_profile(metrics.dbar, metrics.k, bin_width, "degree"),
        "neighbor_degree": radial_profile(metrics.dbar, metrics.K, bin_width, "neighbor_degree"),
        "clustering": radial_profile(metrics.dbar, metrics.C, bin_width, "clustering"),
        "deletion_impact": radial_profile(metrics.dbar, metrics.phi, bin_width, "deletion_impact"),
        "distance_balance": radial_profile(metrics.dbar, metrics.b, bin_width, "distance_balance"),
    }
    if dump_path is not None:
        with _open_out(dump_path) as f:
            write_graph_edge_list(result.graph, f)
    return profs, result.unchanged, retained


def cmd_nullmodel(args) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    threads = _thread_count(args)
    params = {"graph": args.graph, "realizations": args.realizations,
              "seed": args.seed, "sweeps": args.sweeps,
              "max_retries": args.max_retries, "rotation_prob": args.rotation_prob,
              "bin_width": args.bin_width, "threads": threads,
              "dump_realizations": args.dump_realizations}
    manifest = Manifest("nullmodel", params, out_dir)
    graph_path = Path(args.graph)
    manifest.add_input(graph_path)

    with manifest.stage("load"):
        g = _load_graph(graph_path)

    base = RewireConfig(seed=args.seed, sweeps=args.sweeps,
                        max_retries=args.max_retries,
                        rotation_probability=args.rotation_prob)
    jobs = []
    for r in range(args.realizations):
        cfg = RewireConfig(seed=derive_stream_seed(base.seed, r), sweeps=base.sweeps,
                           max_retries=base.max_retries,
                           rotation_probability=base.rotation_probability)
        dump = manifest.output(f"realization_{r}.edges") if args.dump_realizations else None
        jobs.append((cfg, dump))

    with manifest.stage("ensemble"):
        if threads == 1:
            results = [_realization_profiles(g, cfg, args.bin_width, dump)
                       for cfg, dump in jobs]
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(
                    lambda job: _realization_profiles(g, job[0], args.bin_width, job[1]),
                    jobs))

    unchanged = sum(1 for _, warn, _ in results if warn)
    if unchanged:
        log.warning("nullmodel: %d/%d realizations accepted no move (input returned unchanged)",
                    unchanged, len(results))

    with manifest.stage("aggregate"):
        agg = {name: aggregate_realizations([profs[name] for profs, _, _ in results])
               for name in ("fraction",) + PROFILE_QUANTITIES}

    with manifest.stage("write"):
        _write_rows(manifest.output("nullmodel_histogram.csv"), agg["fraction"].csv_rows())
        for name in PROFILE_QUANTITIES:
            _write_rows(manifest.output(f"nullmodel_profile_{name}.csv"), agg[name].csv_rows())
    manifest.write()
    mean_retained = sum(r for _, _, r in results) / len(results)
    print(f"aggregated {args.realizations} realizations "
          f"({unchanged} unchanged, mean retained fraction {mean_retained:.4f})")
    return 0


def cmd_generate(args) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    fit_min = args.fit_min if args.fit_min is not None else 2 * args.m
    fit_max = args.fit_max
    params = {"model": args.model, "n": args.n, "m": args.m, "seed": args.seed,
              "fit_min": fit_min, "fit_max": fit_max}
    manifest = Manifest("generate", params, out_dir)

    with manifest.stage("generate"):
        g = ba_generate(BaSpec(n=args.n, m=args.m, seed=args.seed))

    with manifest.stage("fit"):
        hist = degree_histogram(g, fit_min, fit_max)

    with manifest.stage("write"):
        with _open_out(manifest.output("ba.edges")) as f:
            write_graph_edge_list(g, f)
        exponent = "" if hist.tail_exponent is None else f"{hist.tail_exponent:.12g}"
        rows = list(hist.csv_rows())
        rows.append(f"# ccdf_fit k_min={hist.k_min} k_max={hist.k_max} "
                    f"points={hist.fit_points} exponent={exponent}")
        _write_rows(manifest.output("degree_histogram.csv"), rows)
    manifest.write()
    print(f"generated {args.model}: n={g.n} m={g.m}; ccdf tail exponent "
          f"{exponent or 'n/a'} over [{hist.k_min}, {hist.k_max}]")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radialnet",
        description="Radial structure analysis of large sparse graphs")
    parser.add_argument("--version", action="version", version=f"radialnet {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="parse and merge edge/path sources")
    p.add_argument("--edges", action="append", default=[], metavar="FILE",
                   help="edge-list input (repeatable)")
    p.add_argument("--paths", action="append", default=[], metavar="FILE",
                   help="AS-path input (repeatable)")
    p.add_argument("--baseline", default=None,
                   help="source name for the gain baseline (default: first input)")
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("analyze", help="per-vertex radial metrics and profiles")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("--bin-width", type=float, default=0.1)
    p.add_argument("--triangle-threshold", type=float, default=3.8,
                   help="dbar threshold for the triangle census")
    p.add_argument("--tier1-list", default=" ".join(map(str, DEFAULT_TIER1)),
                   help="comma/space-separated AS numbers")
    p.add_argument("--threads", type=int, default=None,
                   help="BFS workers (default: $RADIALNET_THREADS or 1)")
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("nullmodel", help="degree-preserving rewired ensemble profiles")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("--realizations", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sweeps", type=int, default=10)
    p.add_argument("--max-retries", type=int, default=100)
    p.add_argument("--rotation-prob", type=float, default=0.1)
    p.add_argument("--bin-width", type=float, default=0.1)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--dump-realizations", action="store_true",
                   help="write each realization as realization_<r>.edges")
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_nullmodel)

    p = sub.add_parser("generate", help="generate a model graph")
    p.add_argument("model", choices=["ba"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fit-min", type=int, default=None,
                   help="CCDF fit lower degree (default: 2*m)")
    p.add_argument("--fit-max", type=int, default=200)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=os.environ.get("RADIALNET_LOGLEVEL", "INFO"),
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: cannot read {exc.filename}", file=sys.stderr)
        return 2
    except (ParseError, EmptyEdgeSetError, DisconnectedGraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
