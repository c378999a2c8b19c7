"""Command-line front end.

Subcommands wrap the public operations: ``color`` (the headline solver),
``detect``, ``classify``, ``oracle``, ``verify``, ``gen``, ``replay``.

Exit codes: 0 success; 2 parse error; 3 input is not (P5, gem)-free;
4 maximum degree below 9; 5 clique number at least the maximum degree;
6 internal inconsistency; 1 for other precondition or usage failures.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .classify import classify
from .coloring import Coloring, verify_coloring
from .errors import (CliqueBoundError, DegreeRangeError, ForbiddenPatternError,
                     GraphFormatError, InternalInconsistencyError,
                     OracleCapExceeded, PentagemError)
from .graph import Graph
from .graphio import FORMATS, parse_graph, write_graph
from .instances import GenSpec, gallery_g1, gallery_g2, gen_class_instance
from .oracle import DEFAULT_ORACLE_CAP, exact_chromatic
from .patterns import find_induced, is_p5_gem_free
from .solver import replay_trace, solve
from .structure import TEMPLATES
from .trace import dumps_trace, loads_trace

ENV_ORACLE_CAP = "PENTAGEM_ORACLE_CAP"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_NOT_FREE = 3
EXIT_DEGREE = 4
EXIT_CLIQUE = 5
EXIT_INTERNAL = 6


def _read_graph(path: str, fmt: str | None) -> Graph:
    return parse_graph(Path(path).read_text(), fmt)


def _print_coloring(coloring: Coloring) -> None:
    print(f"palette {coloring.k}")
    for v in sorted(coloring.colors):
        print(f"{v} {coloring.colors[v]}")


def _oracle_cap(args) -> int:
    if args.max_oracle_n is not None:
        return args.max_oracle_n
    env = os.environ.get(ENV_ORACLE_CAP)
    return int(env) if env else DEFAULT_ORACLE_CAP


def cmd_color(args) -> int:
    g = _read_graph(args.graph, args.format)
    coloring, trace = solve(g)
    _print_coloring(coloring)
    if args.trace:
        Path(args.trace).write_text(dumps_trace(trace))
    return EXIT_OK


def cmd_detect(args) -> int:
    g = _read_graph(args.graph, args.format)
    wanted = ("P5", "GEM", "C5") if args.pattern == "all" else (args.pattern.upper(),)
    for p in wanted:
        w = find_induced(g, p)
        if w is None:
            print(f"{p}: none")
        else:
            print(f"{p}: " + " ".join(str(v) for v in w.vertices))
    return EXIT_OK


def cmd_classify(args) -> int:
    g = _read_graph(args.graph, args.format)
    label = classify(g)
    if label.bags is None:
        print(label.kind)
    else:
        print(label.kind)
        for name in TEMPLATES[label.kind].nodes:
            print(f"{name}: " + " ".join(str(v) for v in label.bags[name]))
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _read_graph(args.graph, args.format)
    chi, _ = exact_chromatic(g, cap=_oracle_cap(args))
    print(f"chi = {chi}")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph(args.graph, args.format)
    colors: dict[int, int] = {}
    k = None
    for raw in Path(args.coloring).read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if toks[0] == "palette":
            k = int(toks[1])
        else:
            colors[int(toks[0])] = int(toks[1])
    if k is None:
        k = max(colors.values(), default=0)
    ok = verify_coloring(g, Coloring(colors, k))
    print("valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_USAGE


def cmd_gen(args) -> int:
    if args.cls == "gallery-g1":
        g, bags = gallery_g1(), None
    elif args.cls == "gallery-g2":
        g, bags = gallery_g2(args.t), None
    else:
        sizes_list = [int(x) for x in args.sizes.split(",")] if args.sizes else []
        t = TEMPLATES[args.cls]
        body = [n for n in t.nodes if n != t.pendant]
        if len(sizes_list) != len(body):
            raise PentagemError(
                f"class {args.cls} needs {len(body)} bag sizes, got {len(sizes_list)}")
        a7 = tuple(int(x) for x in args.a7.split(",")) if args.a7 else ()
        spec = GenSpec(args.cls, dict(zip(body, sizes_list)), a7, args.mode, args.seed)
        g, bags = gen_class_instance(spec)
    text = write_graph(g, args.format or "edgelist")
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if bags is not None and args.bags_out:
        lines = [f"{name}: " + " ".join(str(v) for v in vs) for name, vs in bags.items()]
        Path(args.bags_out).write_text("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_replay(args) -> int:
    g = _read_graph(args.graph, args.format)
    trace = loads_trace(Path(args.trace).read_text())
    coloring = replay_trace(g, trace)
    if not verify_coloring(g, coloring):
        raise InternalInconsistencyError("replayed coloring failed verification")
    _print_coloring(coloring)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pentagem",
        description="Color (P5, gem)-free graphs with one less color than "
                    "the maximum degree.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=FORMATS, default=None,
                       help="input format (default: sniff)")
        p.add_argument("--seed", type=int, default=0, help="seed for any generation")

    p = sub.add_parser("color", help="run the solver on a graph file")
    p.add_argument("graph")
    p.add_argument("--trace", help="write the reduction trace here")
    common(p)
    p.set_defaults(fn=cmd_color)

    p = sub.add_parser("detect", help="find induced P5 / gem / C5 witnesses")
    p.add_argument("graph")
    p.add_argument("--pattern", choices=("p5", "gem", "c5", "all"), default="all")
    common(p)
    p.set_defaults(fn=cmd_detect)

    p = sub.add_parser("classify", help="structure class of a connected graph")
    p.add_argument("graph")
    common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("oracle", help="exact chromatic number (desk scale)")
    p.add_argument("graph")
    p.add_argument("--max-oracle-n", type=int, default=None,
                   help=f"size cap (default {DEFAULT_ORACLE_CAP}, env {ENV_ORACLE_CAP})")
    common(p)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("verify", help="check a coloring file against a graph file")
    p.add_argument("graph")
    p.add_argument("coloring")
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("gen", help="generate a class member or gallery graph")
    p.add_argument("cls", metavar="class",
                   choices=sorted(TEMPLATES) + ["gallery-g1", "gallery-g2"])
    p.add_argument("--sizes", help="comma-separated bag sizes in template order")
    p.add_argument("--a7", help="comma-separated pendant component sizes (class H)")
    p.add_argument("--mode", choices=("clique", "cograph"), default="clique")
    p.add_argument("--t", type=int, default=9, help="parameter for gallery-g2")
    p.add_argument("--out", help="write the graph here (default stdout)")
    p.add_argument("--bags-out", help="write the ground-truth bags here")
    common(p)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("replay", help="re-execute a trace and verify it")
    p.add_argument("graph")
    p.add_argument("trace")
    common(p)
    p.set_defaults(fn=cmd_replay)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (GraphFormatError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ForbiddenPatternError as exc:
        w = exc.witness
        detail = f" witness: {' '.join(map(str, w.vertices))}" if w else ""
        print(f"error: {exc}.{detail}", file=sys.stderr)
        return EXIT_NOT_FREE
    except DegreeRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGREE
    except CliqueBoundError as exc:
        w = exc.witness
        detail = f" clique: {' '.join(map(str, w))}" if w else ""
        print(f"error: {exc}.{detail}", file=sys.stderr)
        return EXIT_CLIQUE
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (PentagemError, OracleCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
