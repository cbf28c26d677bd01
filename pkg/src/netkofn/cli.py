"""Command-line front end.

Commands: ``pk``, ``nk``, ``curve``, ``validate``. Output is CSV by default,
JSON with ``--format json``. Errors are reported as one line on stderr,
``error: <Kind>: <message>``, with exit code 2 (parse), 3 (validation) or
4 (capacity).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from math import comb
from typing import Any, Optional, Sequence, Union

from . import __version__
from .cutsets import count_table
from .errors import NetKofNError, NotConnected, ParseError
from .formats import format_graph, load
from .graph import ConstructionScript, Graph, bridges, derive_script, is_connected
from .montecarlo import RNG_NAME, estimate_failure, estimate_pk
from .recurrence import KDistribution, build_distribution, graph_kind
from .reliability import failure_curve, parse_model, time_grid

DEFAULT_SEED = 20240917
DEFAULT_SAMPLES = 10_000
METHODS = ("recurrence", "brute", "mc")


def fmt_float(x: float) -> str:
    return format(float(x), ".17g")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # one-line diagnostics, exit 2
        self.exit(2, f"error: UsageError: {message}\n")


def _graph_of(obj: Union[Graph, ConstructionScript]) -> Graph:
    g = obj.replay() if isinstance(obj, ConstructionScript) else obj
    if g.n_vertices < 2 or not is_connected(g):
        raise NotConnected("input graph must be connected with at least two vertices")
    return g


def _distribution(obj: Union[Graph, ConstructionScript], method: str) -> KDistribution:
    g = _graph_of(obj)
    if method == "recurrence":
        script = obj if isinstance(obj, ConstructionScript) else derive_script(g).script
        return build_distribution(script).dist
    table = count_table(g)
    return KDistribution(g.m, g.n_vertices, table.counts)


def pk_rows(dist: KDistribution) -> list[dict[str, Any]]:
    rows = []
    for k in range(dist.m + 1):
        p = dist.p(k)
        rows.append(
            {
                "k": k,
                "binom": comb(dist.m, k),
                "count": dist.d[k],
                "p_num": p.numerator,
                "p_den": p.denominator,
                "p_float": float(p),
            }
        )
    return rows


def _emit(rows: list[dict[str, Any]], meta: dict[str, Any], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps({"meta": meta, "rows": rows}) + "\n")
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if rows:
        writer.writerow(rows[0].keys())
    for row in rows:
        writer.writerow(fmt_float(v) if isinstance(v, float) else v for v in row.values())
    out.write(buf.getvalue())


def cmd_pk(args: argparse.Namespace, out) -> None:
    obj = load(args.path)
    start = time.perf_counter()
    meta: dict[str, Any] = {"method": args.method}
    if args.method == "mc":
        g = _graph_of(obj)
        rows = []
        for k in range(g.m + 1):
            est = estimate_pk(g, k, args.samples, args.seed)
            rows.append({"k": k, "binom": comb(g.m, k), "mean": est.mean, "half_width": est.half_width, "samples": est.samples})
        meta.update(seed=args.seed, rng=RNG_NAME, samples=args.samples)
    else:
        rows = pk_rows(_distribution(obj, args.method))
    meta["elapsed_s"] = time.perf_counter() - start
    _emit(rows, meta, args.format, out)


def cmd_nk(args: argparse.Namespace, out) -> None:
    g = _graph_of(load(args.path))
    u, v = args.uv
    start = time.perf_counter()
    table = count_table(g, uv=(u, v))
    rows = [{"k": k, "binom": comb(g.m, k), "n": c} for k, c in enumerate(table.counts)]
    meta = {"method": "brute", "u": u, "v": v, "elapsed_s": time.perf_counter() - start}
    _emit(rows, meta, args.format, out)


def cmd_curve(args: argparse.Namespace, out) -> None:
    if args.model is None:
        raise ParseError("curve needs --model (const:p, exp:rate or weibull:shape,scale)")
    model = parse_model(args.model)
    obj = load(args.path)
    start = time.perf_counter()
    meta: dict[str, Any] = {"method": args.method, "model": model.spec()}
    if args.method == "mc":
        g = _graph_of(obj)
        rows = []
        for t in time_grid(args.t0, args.t1, args.steps):
            # same seed at every t: common random numbers keep the curve monotone
            est = estimate_failure(g, model, t, args.samples, args.seed)
            rows.append({"t": float(t), "failure_prob": est.mean, "half_width": est.half_width})
        meta.update(seed=args.seed, rng=RNG_NAME, samples=args.samples)
    else:
        curve = failure_curve(_distribution(obj, args.method), model, args.t0, args.t1, args.steps)
        rows = [{"t": float(t), "failure_prob": float(p)} for t, p in curve.points]
    meta["elapsed_s"] = time.perf_counter() - start
    _emit(rows, meta, args.format, out)


def cmd_validate(args: argparse.Namespace, out) -> None:
    g = _graph_of(load(args.path))
    notes = (
        f"vertices: {g.n_vertices}",
        f"edges: {g.m}",
        f"bridges: {bin(bridges(g)).count('1')}",
        f"kind: {graph_kind(g) or 'general'}",
    )
    out.write(format_graph(g, notes))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("path", help="graph file or construction script file")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--method", choices=METHODS, default="recurrence")
    sampling.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    sampling.add_argument("--seed", type=int, default=DEFAULT_SEED)

    parser = _Parser(prog="netkofn", description="Exact disconnection distributions of simple graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("pk", parents=[common, sampling], help="P_k table for k = 0..M")
    p.set_defaults(func=cmd_pk)

    p = sub.add_parser("nk", parents=[common], help="two-component u/v separation counts")
    p.add_argument("--uv", nargs=2, type=int, required=True, metavar=("U", "V"))
    p.set_defaults(func=cmd_nk)

    p = sub.add_parser("curve", parents=[common, sampling], help="system failure probability over time")
    p.add_argument("--model", required=True, help="const:p | exp:rate | weibull:shape,scale")
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--t1", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=10)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("validate", parents=[common], help="check input and print the canonical graph")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except NetKofNError as exc:
        msg = " ".join(str(exc).split())
        err.write(f"error: {exc.kind}: {msg}\n")
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
