"""Command-line front end.

Subcommands: ``compute`` (index report for one graph), ``mycielskian``
(emit mu(G) as an edge list), ``verify`` (run claim checks over a
corpus), ``enumerate`` (stream all labeled connected graphs of one
order). Output for a fixed command line is byte-identical across runs:
ordering is fixed, floats carry 12 significant digits, seeds are
explicit, and verify timings are zeroed unless ``--timings`` is given.

Exit status: 0 success, 1 usage error, 2 input parse error,
3 hypothesis violation, 4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Iterable, TextIO

from .errors import EdgeListParseError, GraphError, InvalidParameterError
from .generators import (
    complete,
    complete_bipartite,
    cycle,
    enumerate_connected,
    erdos_renyi_connected,
    path,
    petersen,
    star,
)
from .graph import Graph, format_edge_list, read_edge_list
from .indices import dd_mycielskian_closed, index_report, randic_bounds
from .transform import mycielskian
from .verify import CLAIM_IDS, verify_corpus

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_HYPOTHESIS = 3
EXIT_VERIFY = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default, which is reserved for input parse errors
    def error(self, message: str):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt_float(x: float) -> str:
    return f"{x:.12g}"


def _json_float(x: float) -> float:
    return float(_fmt_float(x))


def parse_family(text: str) -> Graph:
    """Build a graph from a family spec like ``cycle:5`` or ``gnp:12,0.4,42``."""
    kind, _, arg = text.partition(":")
    try:
        params = [s for s in arg.split(",") if s] if arg else []
        if kind == "path":
            (n,) = map(int, params)
            return path(n)
        if kind == "cycle":
            (n,) = map(int, params)
            return cycle(n)
        if kind == "complete":
            (n,) = map(int, params)
            return complete(n)
        if kind == "star":
            (leaves,) = map(int, params)
            return star(leaves)
        if kind == "kbipartite":
            a, b = map(int, params)
            return complete_bipartite(a, b)
        if kind == "petersen":
            if params:
                raise _UsageError("petersen takes no parameters")
            return petersen()
        if kind == "gnp":
            n_s, p_s, seed_s = params
            return erdos_renyi_connected(int(n_s), float(p_s), int(seed_s))
    except (ValueError, InvalidParameterError) as exc:
        raise _UsageError(f"bad family spec {text!r}: {exc}") from exc
    raise _UsageError(f"unknown family {kind!r}")


def _load_graph(args: argparse.Namespace) -> Graph:
    if args.family is not None:
        return parse_family(args.family)
    try:
        return read_edge_list(args.input)
    except OSError as exc:
        raise EdgeListParseError(f"cannot read {args.input}: {exc}") from exc


def _open_output(args: argparse.Namespace) -> TextIO:
    if args.output is None:
        return sys.stdout
    return open(args.output, "w", encoding="utf-8", newline="\n")


def _check_format(fmt: str, allowed: tuple[str, ...]) -> None:
    if fmt not in allowed:
        raise _UsageError(f"format {fmt!r} not valid here (choose from {', '.join(allowed)})")


def _cmd_compute(args: argparse.Namespace, out: TextIO) -> int:
    _check_format(args.format, ("json", "csv"))
    g = _load_graph(args)
    report = index_report(g)
    record: dict[str, object] = report.as_dict()
    record["randic"] = _json_float(report.randic)
    if report.diameter == 2:
        bounds = randic_bounds(g)
        record["degree_distance_mu"] = dd_mycielskian_closed(g)
        record["randic_mu_lower"] = _json_float(bounds.lower)
        record["randic_mu_upper"] = _json_float(bounds.upper)
        record["is_regular"] = bounds.is_regular
    if args.format == "json":
        out.write(json.dumps(record, indent=2) + "\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(record.keys())
        writer.writerow(
            _fmt_float(v) if isinstance(v, float)
            else str(v).lower() if isinstance(v, bool)
            else v
            for v in record.values()
        )
    return EXIT_OK


def _cmd_mycielskian(args: argparse.Namespace, out: TextIO) -> int:
    _check_format(args.format, ("edgelist",))
    g = _load_graph(args)
    layout = mycielskian(g)
    n = g.n
    comment = f"roles: original 0..{n - 1}, shadow {n}..{2 * n - 1}, root {2 * n}"
    out.write(format_edge_list(layout.mu, comment))
    return EXIT_OK


def _corpus(args: argparse.Namespace) -> Iterable[Graph]:
    sources = [
        args.enumerate is not None,
        args.gnp is not None,
        args.family is not None,
        args.input is not None,
    ]
    if sum(sources) != 1:
        raise _UsageError("give exactly one corpus source: --enumerate, --gnp, --family or --input")
    if args.enumerate is not None:
        return enumerate_connected(args.enumerate)
    if args.gnp is not None:
        try:
            n_s, p_s, seed_s = args.gnp.split(",")
            n, p, seed = int(n_s), float(p_s), int(seed_s)
        except ValueError as exc:
            raise _UsageError(f"bad --gnp value {args.gnp!r}: expected n,p,seed") from exc
        if args.trials < 1:
            raise _UsageError("--trials must be at least 1")
        return (erdos_renyi_connected(n, p, seed + t) for t in range(args.trials))
    return [_load_graph(args)]


def _cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    _check_format(args.format, ("json",))
    if args.claims is None:
        claims = list(CLAIM_IDS)
    else:
        claims = [c.strip() for c in args.claims.split(",") if c.strip()]
        unknown = set(claims) - set(CLAIM_IDS)
        if unknown:
            raise _UsageError(
                f"unknown claims {sorted(unknown)}; available: {', '.join(CLAIM_IDS)}"
            )
    corpus = _corpus(args)
    outcomes = verify_corpus(claims, corpus, relax_diameter=args.relax_diameter)
    report = [o.as_dict(include_timing=args.timings) for o in outcomes]
    out.write(json.dumps(report, indent=2) + "\n")
    return EXIT_OK if all(o.passed for o in outcomes) else EXIT_VERIFY


def _cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    _check_format(args.format, ("edgelist",))
    if args.enumerate is None:
        raise _UsageError("enumerate requires --enumerate <n>")
    first = True
    for g in enumerate_connected(args.enumerate):
        if not first:
            out.write("\n")
        out.write(format_edge_list(g))
        first = False
    return EXIT_OK


_COMMANDS = {
    "compute": (_cmd_compute, "json"),
    "mycielskian": (_cmd_mycielskian, "edgelist"),
    "verify": (_cmd_verify, "json"),
    "enumerate": (_cmd_enumerate, "edgelist"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mycielski", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", help="edge-list file ('n m' header, one 'u v' per line)")
        p.add_argument("--family", help="family spec, e.g. cycle:5, kbipartite:2,3, gnp:12,0.4,42")
        p.add_argument("--format", choices=["json", "csv", "edgelist"], default=None)
        p.add_argument("--claims", help="comma-separated claim ids (default: all)")
        p.add_argument("--enumerate", type=int, metavar="N",
                       help="all labeled connected graphs on N vertices (N <= 6)")
        p.add_argument("--gnp", metavar="N,P,SEED", help="seeded connected G(n,p) corpus")
        p.add_argument("--trials", type=int, default=1,
                       help="number of gnp samples, seeds SEED..SEED+k-1")
        p.add_argument("--relax-diameter", action="store_true",
                       help="evaluate the DD closed form outside diameter 2 (exploratory)")
        p.add_argument("--timings", action="store_true",
                       help="include measured elapsed_ms in verify reports")
        p.add_argument("--output", help="write to this path instead of stdout")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler, default_format = _COMMANDS[args.command]
    if args.format is None:
        args.format = default_format
    needs_input = args.command in ("compute", "mycielskian")
    try:
        if needs_input and (args.family is None) == (args.input is None):
            raise _UsageError("give exactly one of --family or --input")
        out = _open_output(args)
        try:
            return handler(args, out)
        finally:
            if out is not sys.stdout:
                out.close()
    except _UsageError as exc:
        print(f"mycielski: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EdgeListParseError as exc:
        print(f"mycielski: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GraphError as exc:
        print(f"mycielski: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS


if __name__ == "__main__":
    sys.exit(main())
