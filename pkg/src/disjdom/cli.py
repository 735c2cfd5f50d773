"""Command-line front end.

    disjdom solve {pig,exact,greedy} GRAPH [--problem P] [--b K] [--budget N]
    disjdom transform {gc,domhard,apx} GRAPH [--roles PATH]
    disjdom generate --family F --n N --seed S [--p P] [--span X] [--name NAME]
    disjdom verify GRAPH --problem P [--b K] --set 1,2,...
    disjdom order GRAPH

GRAPH is an edge-list file, or ``-`` for standard input. Exit status is 0 on
success, 2 on invalid input or usage and 3 when a search runs out of budget.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time
from dataclasses import dataclass

from .errors import BudgetExceeded, DisjdomError
from .exact import (
    SearchConfig,
    exact_disjunctive,
    exact_domination,
    exact_two_domination,
    exact_vertex_cover,
)
from .generators import GenSpec, generate
from .graph import Graph, Problem, Solution, parse_graph, serialize_graph, verify
from .greedy import build_cmsmc, greedy_multicover
from .orderings import compute_bco
from .pig import solve_pig_linear
from .reductions import apx_gadget_transform, domination_hardness_transform, gc_transform

EXIT_OK, EXIT_INPUT, EXIT_BUDGET = 0, 2, 3

TRANSFORMS = {
    "gc": gc_transform,
    "domhard": domination_hardness_transform,
    "apx": apx_gadget_transform,
}


class _InputError(Exception):
    """Bad command-line value detected after argument parsing."""


@dataclass(frozen=True)
class RunReport:
    command: str
    input_hash: str
    members: tuple[int, ...]
    problem: Problem
    b: int
    valid: bool
    millis: float

    def text(self) -> str:
        label = self.problem.value + (f" b={self.b}" if self.problem is Problem.DISJUNCTIVE else "")
        return (
            f"command: {self.command}\n"
            f"input sha256: {self.input_hash}\n"
            f"problem: {label}\n"
            f"set: {' '.join(map(str, self.members))}\n"
            f"cardinality: {len(self.members)}\n"
            f"verdict: {'VALID' if self.valid else 'INVALID'}\n"
            f"time: {self.millis:.3f} ms\n"
        )

    def porcelain(self, with_time: bool = True) -> str:
        lines = [f"k {len(self.members)}", f"s {' '.join(map(str, self.members))}".rstrip()]
        if with_time:
            lines.append(f"t {round(self.millis)}")
        lines.append(f"ok {int(self.valid)}")
        return "\n".join(lines) + "\n"


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--b", type=int, default=2, help="distance-two threshold (default 2)")
    parser.add_argument("--budget", type=int, default=10**8, help="search node budget")
    parser.add_argument("--seed", type=int, default=0, help="seed for generators")
    parser.add_argument("--porcelain", action="store_true", help="line-oriented machine output")
    parser.add_argument("--no-time", action="store_true",
                        help="omit the timing line from porcelain output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="disjdom", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    problems = [p.value for p in Problem]

    solve = sub.add_parser("solve", help="solve one instance")
    solve.add_argument("method", choices=["pig", "exact", "greedy"])
    solve.add_argument("graph")
    solve.add_argument("--problem", choices=problems, default="ddp")
    solve.add_argument("--strategy", choices=["branch_and_bound", "exhaustive"],
                       default="branch_and_bound")
    solve.add_argument("--canonical", action="store_true",
                       help="return the lexicographically least optimum (exact only)")
    solve.add_argument("--emit-instance", metavar="PATH",
                       help="write the multicover instance (greedy only)")
    _common(solve)

    tr = sub.add_parser("transform", help="apply a reduction and print the new graph")
    tr.add_argument("kind", choices=sorted(TRANSFORMS))
    tr.add_argument("graph")
    tr.add_argument("--roles", metavar="PATH", help="write 'role <index> <tag>' lines here")
    _common(tr)

    gen = sub.add_parser("generate", help="print a seeded random graph")
    gen.add_argument("--family", required=True,
                     choices=["proper_interval", "gnp_connected", "tree", "cubic", "named"])
    gen.add_argument("--n", type=int, default=1)
    gen.add_argument("--p", type=float, default=0.5, help="edge probability (gnp_connected)")
    gen.add_argument("--span", type=float, help="interval spread (proper_interval)")
    gen.add_argument("--name", help="graph name such as P5, C4, K2,3 (named)")
    _common(gen)

    ver = sub.add_parser("verify", help="check a vertex set")
    ver.add_argument("graph")
    ver.add_argument("--problem", choices=problems, default="ddp")
    ver.add_argument("--set", dest="members", default="", help="comma-separated vertices")
    _common(ver)

    order = sub.add_parser("order", help="print a bi-compatible elimination ordering")
    order.add_argument("graph")
    _common(order)
    return parser


def _read_graph(path: str) -> tuple[Graph, str]:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise _InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise _InputError(f"{path} is not UTF-8 text") from None
    return parse_graph(text), hashlib.sha256(data).hexdigest()


def _parse_set(text: str, n: int) -> frozenset[int]:
    members = set()
    for tok in filter(None, (t.strip() for t in text.split(","))):
        try:
            v = int(tok)
        except ValueError:
            raise _InputError(f"--set entry {tok!r} is not an integer") from None
        if not 0 <= v < n:
            raise _InputError(f"--set vertex {v} out of range for n={n}")
        members.add(v)
    return frozenset(members)


def _solve(args, g: Graph) -> Solution:
    problem = Problem(args.problem)
    if args.method == "pig":
        if problem is not Problem.DISJUNCTIVE or args.b != 2:
            raise _InputError("solve pig handles --problem ddp with --b 2 only")
        return Solution(solve_pig_linear(g), problem, 2)
    if args.method == "greedy":
        if problem is not Problem.DISJUNCTIVE:
            raise _InputError("solve greedy handles --problem ddp only")
        inst = build_cmsmc(g, args.b)
        if args.emit_instance:
            with open(args.emit_instance, "w") as fh:
                fh.write(inst.dump())
        picked = greedy_multicover(inst)
        return Solution(frozenset(inst.origin[i] for i in picked), problem, args.b)
    cfg = SearchConfig(strategy=args.strategy, node_budget=args.budget, b=args.b,
                       canonical=args.canonical)
    if problem is Problem.DISJUNCTIVE:
        members = exact_disjunctive(g, args.b, cfg)
    elif problem is Problem.DOMINATION:
        members = exact_domination(g, cfg)
    elif problem is Problem.TWO_DOMINATION:
        members = exact_two_domination(g, cfg)
    else:
        members = exact_vertex_cover(g, cfg)
    return Solution(members, problem, args.b)


def _report(args, argv, digest, g, sol, millis) -> None:
    # the verdict is recomputed here, independently of the solver
    report = RunReport(
        command=" ".join(["disjdom", *argv]),
        input_hash=digest,
        members=tuple(sol.sorted()),
        problem=sol.problem,
        b=sol.b,
        valid=verify(g, sol),
        millis=millis,
    )
    out = report.porcelain(not args.no_time) if args.porcelain else report.text()
    sys.stdout.write(out)


def _dispatch(args, argv) -> int:
    if args.b < 1:
        raise _InputError(f"--b must be >= 1, got {args.b}")
    if args.command == "generate":
        spec = GenSpec(args.family, args.n, args.seed,
                       {"p": args.p, "span": args.span, "name": args.name or ""})
        sys.stdout.write(serialize_graph(generate(spec)))
        return EXIT_OK

    g, digest = _read_graph(args.graph)
    if args.command == "solve":
        start = time.perf_counter()
        sol = _solve(args, g)
        millis = (time.perf_counter() - start) * 1000
        _report(args, argv, digest, g, sol, millis)
    elif args.command == "verify":
        sol = Solution(_parse_set(args.members, g.n), Problem(args.problem), args.b)
        _report(args, argv, digest, g, sol, 0.0)
    elif args.command == "transform":
        result = TRANSFORMS[args.kind](g)
        if args.roles:
            with open(args.roles, "w") as fh:
                fh.write(result.role_lines())
        sys.stdout.write(serialize_graph(result.h))
    else:  # order
        try:
            ordering = compute_bco(g)
        except DisjdomError as exc:
            sys.stdout.write(f"rejected: {exc}\n")
            return EXIT_INPUT
        sys.stdout.write(" ".join(map(str, ordering.order)) + "\n")
    return EXIT_OK


def run(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help
        return int(exc.code or 0)
    try:
        return _dispatch(args, argv)
    except BudgetExceeded as exc:
        print(f"disjdom: search budget of {exc.budget} nodes exhausted", file=sys.stderr)
        return EXIT_BUDGET
    except (DisjdomError, _InputError, ValueError, KeyError) as exc:
        print(f"disjdom: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
