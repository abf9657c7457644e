"""Command-line front end: ``bipzagreb {index,construct,table,verify}``.

Exit codes: 0 success (discrepancy records allowed), 1 at least one failed
check, 2 usage or parse error, 3 non-bipartite input under
``--require-bipartite``.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path

from . import graph6
from .constructions import chain_graph, chain_pi1, chain_pi2, theorem38_params
from .graph import Graph, GraphError, bipartition, diameter, from_edge_list, is_connected
from .indices import INDICES
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NOT_BIPARTITE = 0, 1, 2, 3


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 already; keep the message on stderr only
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_graphs(text: str) -> list[Graph]:
    """Edge list (first line ``n``, then one ``u v`` pair per line) or graph6, one per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise InputError("empty input")
    if lines[0].isdigit():
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise InputError(f"bad edge line {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
        try:
            return [from_edge_list(n, edges)]
        except GraphError as e:
            raise InputError(str(e)) from e
    out = []
    for ln in lines:
        try:
            out.append(graph6.decode(ln))
        except graph6.Graph6Error as e:
            raise InputError(str(e)) from e
    return out


def _describe(g: Graph, index: str) -> dict:
    rec = {"n": g.n, "index": index, "value": str(INDICES[index](g)),
           "degrees": list(g.degrees()), "graph6": graph6.encode(g)}
    if is_connected(g):
        rec["diameter"] = diameter(g)
        sides = bipartition(g)
        rec["bipartition"] = [len(sides[0]), len(sides[1])] if sides else None
    else:
        rec["diameter"] = None
        rec["bipartition"] = None
    return rec


def cmd_index(args) -> int:
    try:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        graphs = parse_graphs(text)
    except (OSError, UnicodeDecodeError, InputError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.require_bipartite:
        for k, g in enumerate(graphs):
            if not is_connected(g) or bipartition(g) is None:
                print(f"error: graph {k} is not a connected bipartite graph", file=sys.stderr)
                return EXIT_NOT_BIPARTITE
    if args.json:
        print(json.dumps([_describe(g, args.index) for g in graphs], indent=2))
    else:
        for g in graphs:
            print(INDICES[args.index](g))
    return EXIT_OK


def _params_or_exit(n: int, d: int):
    try:
        return theorem38_params(n, d)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return None


def cmd_construct(args) -> int:
    params = _params_or_exit(args.n, args.d)
    if params is None:
        return EXIT_USAGE
    g = chain_graph(params.chain())
    if args.emit == "graph6":
        print(graph6.encode(g))
    else:
        print(g.n)
        for u, v in g.edges():
            print(u, v)
    return EXIT_OK


TABLE_COLUMNS = ("d", "a", "b", "s", "t", "pi1", "pi2")


def table_rows(n: int) -> list[dict]:
    rows = []
    for d in range(2, n):
        p = theorem38_params(n, d)
        chain = p.chain()
        rows.append({"d": d, "a": p.a, "b": p.b, "s": p.s, "t": p.t,
                     "pi1": str(chain_pi1(chain)), "pi2": str(chain_pi2(chain))})
    return rows


def cmd_table(args) -> int:
    if args.n < 3:
        print("error: table needs n >= 3", file=sys.stderr)
        return EXIT_USAGE
    rows = table_rows(args.n)
    if args.csv:
        w = csv.DictWriter(sys.stdout, fieldnames=TABLE_COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    else:
        widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in TABLE_COLUMNS}
        print("  ".join(c.rjust(widths[c]) for c in TABLE_COLUMNS))
        for r in rows:
            print("  ".join(str(r[c]).rjust(widths[c]) for c in TABLE_COLUMNS))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n_max < 4:
        print("error: --n-max must be at least 4", file=sys.stderr)
        return EXIT_USAGE
    if args.n_max > 10 and args.suite not in ("ordering", "claims"):
        logging.getLogger(__name__).warning("oracle suites stop at n=%d", 10 if args.opt_in_n10 else 9)
    records = run_suite(args.suite, args.n_max, args.opt_in_n10)
    payload = [r.to_json() for r in records]
    text = json.dumps(payload, indent=2)
    if args.out == "-":
        print(text)
    else:
        Path(args.out).write_text(text + "\n")
    counts: dict[str, int] = {}
    for r in records:
        counts[r.status] = counts.get(r.status, 0) + 1
    print(" ".join(f"{k}={v}" for k, v in sorted(counts.items())), file=sys.stderr)
    for r in records:
        if r.status != "pass":
            print(f"{r.status}: {r.claim} {json.dumps(r.params)} {r.detail}", file=sys.stderr)
    return EXIT_FAIL if counts.get("fail") else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="bipzagreb", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("index", help="index value of each input graph")
    p.add_argument("--in", dest="input", required=True, help="graph6 lines or an edge list; '-' for stdin")
    p.add_argument("--index", choices=sorted(INDICES), required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--require-bipartite", action="store_true")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("construct", help="the extremal layer chain for (n, d)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--emit", choices=("graph6", "edges"), default="graph6")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("table", help="per-diameter parameters and index values")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run verification suites and write a JSON report")
    p.add_argument("--suite", choices=SUITES + ("all",), required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--opt-in-n10", action="store_true", help="let oracle suites reach n=10")
    p.add_argument("--out", required=True, help="report path; '-' for stdout")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
