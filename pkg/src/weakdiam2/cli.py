"""Command-line entry point: ``weakdiam2 {seq,table,build,check,shrink,search}``.

Exit codes: 0 success, 1 usage or parse error, 2 verification failure or
conjecture mismatch, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import construct, digraph, search, sequence

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_BUDGET = 0, 1, 2, 3

DEFAULT_ROWS = (10, 100, 1000, 10_000, 100_000, 1_000_000)
CSV_HEADER = "n,ks,fhpz,klss,xn"


@dataclass(frozen=True)
class BoundsRow:
    n: int
    ks: int
    fhpz: int | None  # undefined below n = 9
    klss: int | None  # undefined for n = 1
    xn: int

    def csv(self) -> str:
        cells = [self.n, self.ks, self.fhpz, self.klss, self.xn]
        return ",".join("n/a" if c is None else str(c) for c in cells)

    def improves(self) -> bool:
        """``x_n`` is no larger than either defined literature bound."""
        return all(b is None or self.xn <= b for b in (self.fhpz, self.klss))


def bounds_row(n: int) -> BoundsRow:
    row = BoundsRow(
        n,
        sequence.bound_ks(n),
        sequence.bound_fhpz(n) if n >= 9 else None,
        sequence.bound_klss(n, 2) if n >= 2 else None,
        sequence.x(n),
    )
    if n >= 9 and not row.improves():
        raise AssertionError(f"x_n exceeds a literature bound at n={n}: {row}")
    return row


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def _rows(text: str) -> list[int]:
    return [_positive(part) for part in text.split(",") if part.strip()]


def _read_graph(path: str) -> digraph.OrientedGraph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}") from None
    try:
        return digraph.parse_edgelist(text)
    except digraph.EdgeListError as e:
        raise CliError(f"{path}: {e}") from None


def _write(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
        return
    try:
        Path(output).write_text(text)
    except OSError as e:
        raise CliError(f"cannot write {output}: {e.strerror}") from None


def cmd_seq(args) -> int:
    n = args.n
    if args.bounds:
        print(CSV_HEADER)
        print(bounds_row(n).csv())
    else:
        print(sequence.x(n))
    if args.alt:
        xa = sequence.x_alt(n)
        equal = xa == sequence.x(n)
        print(f"x_alt={xa} equal={'yes' if equal else 'no'}")
        if not equal:
            return EXIT_VERIFY
    return EXIT_OK


def cmd_table(args) -> int:
    lines = [CSV_HEADER] + [bounds_row(n).csv() for n in args.rows]
    print("\n".join(lines))
    return EXIT_OK


def cmd_build(args) -> int:
    g = construct.build_O(args.n)
    text = digraph.to_dot(g, f"O{args.n}") if args.format == "dot" else digraph.to_edgelist(g)
    _write(text, args.output)
    if args.verify:
        clique = digraph.is_absolute_clique(g)
        count_ok = g.num_arcs == sequence.x(args.n)
        ok = clique and count_ok
        print(
            f"verify n={args.n} arcs={g.num_arcs} xn={sequence.x(args.n)} "
            f"clique={'yes' if clique else 'no'} {'pass' if ok else 'FAIL'}",
            file=sys.stderr if args.output in (None, "-") else sys.stdout,
        )
        if not ok:
            return EXIT_VERIFY
    return EXIT_OK


def cmd_check(args) -> int:
    g = _read_graph(args.file)
    d = digraph.weak_diameter(g)
    print(f"n={g.n}")
    print(f"m={g.num_arcs}")
    print(f"weak_diameter={'infinity' if d == float('inf') else d}")
    print(f"clique: {'yes' if digraph.is_absolute_clique(g) else 'no'}")
    return EXIT_OK


def cmd_shrink(args) -> int:
    g = _read_graph(args.file)
    if not digraph.is_absolute_clique(g):
        raise CliError(f"{args.file}: input is not an absolute oriented clique")
    if g.n < 2 or g.num_arcs == 0:
        raise CliError(f"{args.file}: nothing to shrink (n={g.n}, m={g.num_arcs})")
    if args.vertex is not None and not 0 <= args.vertex < g.n:
        raise CliError(f"--vertex {args.vertex} out of range for n={g.n}")

    steps = [digraph.shrink_step(g, args.vertex)]
    if args.chain:
        while steps[-1].graph.n > 1:
            steps.append(digraph.shrink_step(steps[-1].graph))

    print(f"start n={g.n} arcs={g.num_arcs}")
    for i, s in enumerate(steps, start=1):
        detail = f" pair={s.pair[0]},{s.pair[1]}" if s.pair else ""
        print(f"step {i}: branch={s.branch} w={s.w} pushed={len(s.pushed)}{detail} n={s.graph.n} arcs={s.graph.num_arcs}")
    counts = [g.num_arcs] + [s.graph.num_arcs for s in steps]
    print("arcs: " + " ".join(map(str, counts)))
    if args.output_dir:
        out = Path(args.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        for s in steps:
            (out / f"shrink_n{s.graph.n}.el").write_text(digraph.to_edgelist(s.graph))
    if not all(a > b for a, b in zip(counts, counts[1:])):
        return EXIT_VERIFY
    return EXIT_OK


def cmd_search(args) -> int:
    threads = args.threads
    cfg = search.SearchConfig(
        args.n,
        m_start=args.m_start,
        m_end=args.m_end,
        node_budget=args.max_nodes,
        parallel=threads > 1,
        threads=threads,
        symmetry=args.symmetry,
    )
    outcome = search.f2_exact(cfg)
    for line in outcome.log_lines():
        print(line)
    xn = sequence.x(args.n)
    if outcome.witness is not None:
        print("witness:")
        sys.stdout.write(digraph.to_edgelist(outcome.witness))
    if not outcome.exhaustive:
        print(f"budget exhausted after {outcome.nodes_explored} nodes; no verdict against x_n={xn}")
        return EXIT_BUDGET
    if outcome.f2 is None:
        print(f"no clique with at most {cfg.m_end} arcs")
        return EXIT_OK if cfg.m_end is not None and cfg.m_end < xn else EXIT_VERIFY
    if outcome.f2 == xn:
        print(f"f2={outcome.f2} matches x_n={xn}")
        return EXIT_OK
    print(f"MISMATCH: f2={outcome.f2} but x_n={xn}")
    return EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weakdiam2", description="Oriented graphs of weak diameter 2.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("seq", help="evaluate x_n")
    s.add_argument("n", type=_positive)
    s.add_argument("--alt", action="store_true", help="also evaluate the three-term recurrence")
    s.add_argument("--bounds", action="store_true", help="print the full bounds row as CSV")
    s.set_defaults(func=cmd_seq)

    s = sub.add_parser("table", help="bounds comparison table as CSV")
    s.add_argument("--rows", type=_rows, default=list(DEFAULT_ROWS), help="comma-separated n values")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("build", help="write the recursive clique O_n")
    s.add_argument("n", type=_positive)
    s.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")
    s.add_argument("-o", "--output", help="output file (default stdout)")
    s.add_argument("--verify", action="store_true", help="check cliqueness and arc count")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("check", help="weak diameter and clique verdict for an edge-list file")
    s.add_argument("file", help="edge-list file, or - for stdin")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("shrink", help="remove one vertex from a clique, losing at least one arc")
    s.add_argument("file")
    s.add_argument("--vertex", type=int, help="vertex whose in-neighbours are pushed (default: max in-degree)")
    s.add_argument("--chain", action="store_true", help="repeat down to a single vertex")
    s.add_argument("--output-dir", help="write every intermediate graph here")
    s.set_defaults(func=cmd_shrink)

    s = sub.add_parser("search", help="exact minimum arc count by exhaustive search")
    s.add_argument("n", type=_positive)
    s.add_argument("--max-nodes", type=_positive)
    s.add_argument("--threads", type=_positive, default=_env_threads())
    s.add_argument("--m-start", type=int)
    s.add_argument("--m-end", type=int)
    s.add_argument("--symmetry", action="store_true", help="enable the vertex-0 symmetry cut")
    s.set_defaults(func=cmd_search)
    return p


def _env_threads() -> int:
    raw = os.environ.get("WEAKDIAM2_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except CliError as e:
        print(f"weakdiam2: error: {e}", file=sys.stderr)
        return e.code
    except (ValueError, digraph.OrientationError) as e:
        print(f"weakdiam2: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
