"""Command-line front end.

Subcommands: ``compute`` (number tables), ``sequence`` (difference-stream
terms), ``plan`` (emit a move plan), ``validate`` (replay a plan file),
``bfs`` (exhaustive optimum), ``verify`` (cross-check suite).

Exit codes: 0 success, 1 bad usage or parameters, 2 a verification or
validation mismatch, 3 search budget exceeded, 4 unreadable or malformed
input.  Values that may not fit in 64 bits (number-table values, diffs,
predicted lengths) are emitted as decimal strings in JSON output.
"""

from __future__ import annotations

import argparse
import bisect
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .gfs import GfsTable, gfs_prefix
from .hanoi import (
    DEFAULT_STATE_BUDGET,
    BudgetError,
    bfs_optimal,
    plan_complete,
    plan_path3,
    plan_star,
)
from .planfile import ParseError, graph_by_name, parse_graph_spec, parse_plan, serialize_plan
from .smooth import (
    ParameterError,
    Params,
    UnsupportedRegimeError,
    smooth_stream,
    split_indices_up_to,
)
from .verify import DEFAULT_SEED, run_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_BUDGET = 3
EXIT_IO = 4

BUDGET_ENV = "GFS_STATE_BUDGET"


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; this tool reserves 2 for
    # verification mismatches, so usage errors exit 1 instead.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    params: Params | None = None
    ns: tuple[int, int] | None = None
    count: int | None = None
    want_splits: bool = False
    oracle: bool = False
    fmt: str = "plain"
    graph_spec: str | None = None
    n: int | None = None
    src: int | None = None
    dst: int | None = None
    budget: int | None = None
    plan_file: str | None = None
    max_n: int | None = None
    seed: int = DEFAULT_SEED


def _parse_pq(text: str) -> tuple[int, int]:
    p, colon, q = text.partition(":")
    if not colon or not p.isdigit() or not q.isdigit() or int(p) < 1 or int(q) < 1:
        raise argparse.ArgumentTypeError(f"expected P:Q with positive integers, got {text!r}")
    return (int(p), int(q))


def _parse_n_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            a, _, b = text.partition("..")
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"need 0 <= A <= B, got {text!r}")
    return (lo, hi)


def _parse_bases(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(chunk) for chunk in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gfshanoi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="tabulate move numbers for a parameter family")
    p.add_argument("--pq", metavar="P:Q", type=_parse_pq, action="append", required=True,
                   help="one pair per level, three-peg level first; repeatable")
    p.add_argument("--n", metavar="N|A..B", type=_parse_n_range, required=True,
                   help="single disk count or inclusive range")
    p.add_argument("--splits", action="store_true", help="include the optimal split column")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check every value against the plain recurrence")
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")

    p = sub.add_parser("sequence", help="emit difference-stream terms for a base tuple")
    p.add_argument("--bases", metavar="B1,B2,...", type=_parse_bases, required=True)
    p.add_argument("--count", type=_nonneg_int, required=True, help="number of terms")
    p.add_argument("--splits", action="store_true", help="also list split indices")
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")

    p = sub.add_parser("plan", help="write a move plan for a named graph to stdout")
    p.add_argument("--graph", required=True, help="K<k>, P3, or S<leaves>")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--src", type=int, required=True)
    p.add_argument("--dst", type=int, required=True)

    p = sub.add_parser("validate", help="replay a plan file against the rules")
    p.add_argument("file", nargs="?", default=None, help="plan file (default: stdin)")
    p.add_argument("--format", choices=("plain", "json"), default="plain")

    p = sub.add_parser("bfs", help="exact optimum by exhaustive search")
    p.add_argument("--graph", required=True,
                   help="named graph, or '<pegs>; u-v,u-v,...' for a custom one")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--src", type=int, required=True)
    p.add_argument("--dst", type=int, required=True)
    p.add_argument("--budget", type=int, default=None,
                   help=f"state-count limit (default {DEFAULT_STATE_BUDGET}, "
                        f"or the {BUDGET_ENV} environment variable)")
    p.add_argument("--format", choices=("plain", "json"), default="plain")

    p = sub.add_parser("verify", help="run the randomized cross-check suite")
    p.add_argument("--max-n", type=_nonneg_int, default=None,
                   help="cap instance sizes for a quicker run")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return parser


def _resolve_budget(flag: int | None) -> int:
    if flag is not None:
        if flag < 1:
            raise ParameterError("--budget must be at least 1")
        return flag
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_STATE_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ParameterError(f"{BUDGET_ENV}={raw!r} is not an integer") from None
    if value < 1:
        raise ParameterError(f"{BUDGET_ENV} must be at least 1")
    return value


def _make_config(args: argparse.Namespace) -> RunConfig:
    if args.cmd == "compute":
        return RunConfig("compute", params=Params.from_pairs(args.pq), ns=args.n,
                         want_splits=args.splits, oracle=args.oracle, fmt=args.format)
    if args.cmd == "sequence":
        bases = args.bases
        return RunConfig("sequence", params=Params(bases, (1,) * len(bases)),
                         count=args.count, want_splits=args.splits, fmt=args.format)
    if args.cmd == "plan":
        return RunConfig("plan", graph_spec=args.graph, n=args.n, src=args.src, dst=args.dst)
    if args.cmd == "validate":
        return RunConfig("validate", plan_file=args.file, fmt=args.format)
    if args.cmd == "bfs":
        return RunConfig("bfs", graph_spec=args.graph, n=args.n, src=args.src, dst=args.dst,
                         budget=_resolve_budget(args.budget), fmt=args.format)
    return RunConfig("verify", max_n=args.max_n, seed=args.seed)


def cmd_compute(config: RunConfig) -> int:
    params = config.params
    lo, hi = config.ns
    prefix = gfs_prefix(params, hi)
    diffs: dict[int, int] = {}
    if hi >= 1:
        for j, term in enumerate(smooth_stream(params.bases, hi), start=1):
            diffs[j] = params.q * term.value
    splits: dict[int, int] = {}
    source = None
    if config.want_splits:
        if params.k < 4:
            raise ParameterError("the split column needs at least two P:Q pairs")
        if all(base >= 2 for base in params.bases):
            source = "split-indices"
            marks = split_indices_up_to(params.bases, hi) if hi else []
            for n in range(1, hi + 1):
                splits[n] = bisect.bisect_right(marks, n)
        else:
            source = "oracle-argmin"
            table = GfsTable.build(params, hi)
            for n in range(1, hi + 1):
                splits[n] = table.argmin_split(n)
    if config.oracle:
        table = GfsTable.build(params, hi)
        for n in range(hi + 1):
            if table.value(n) != prefix[n]:
                print(f"oracle: mismatch at n={n}: recurrence={table.value(n)} "
                      f"prefix={prefix[n]}", file=sys.stderr)
                return EXIT_MISMATCH
        print(f"oracle: match ({hi + 1} checked)", file=sys.stderr)

    rows = [
        {
            "n": n,
            "value": str(prefix[n]),
            "diff": str(diffs[n]) if n in diffs else None,
            "split": splits.get(n),
            "split_source": source if n in splits else None,
        }
        for n in range(lo, hi + 1)
    ]
    if config.fmt == "json":
        payload = {"bases": list(params.bases), "weights": list(params.weights),
                   "k": params.k, "rows": rows}
        print(json.dumps(payload, indent=2))
    elif config.fmt == "csv":
        import csv

        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "value", "diff", "split"])
        for row in rows:
            split = row["split"] if row["split_source"] == "split-indices" else ""
            writer.writerow([row["n"], row["value"], row["diff"] or "", split])
    else:
        print("n value diff split")
        starred = False
        for row in rows:
            if row["split"] is None:
                split = "-"
            elif row["split_source"] == "oracle-argmin":
                split = f"{row['split']}*"
                starred = True
            else:
                split = str(row["split"])
            print(f"{row['n']} {row['value']} {row['diff'] or '-'} {split}")
        if starred:
            print("* split from recurrence argmin (outside the split-index regime)")
    return EXIT_OK


def cmd_sequence(config: RunConfig) -> int:
    bases = config.params.bases
    terms = smooth_stream(bases, config.count)
    marks: list[int] | None = None
    ordinals: dict[int, int] = {}
    if config.want_splits:
        marks = split_indices_up_to(bases, config.count)
        ordinals = {m: i for i, m in enumerate(marks, start=1)}
    if config.fmt == "json":
        payload = {
            "bases": list(bases),
            "terms": [
                {"j": j, "value": str(term.value), "exponents": list(term.exponents)}
                for j, term in enumerate(terms, start=1)
            ],
            "splits": marks,
        }
        print(json.dumps(payload, indent=2))
    elif config.fmt == "csv":
        import csv

        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["j", "value", "exponents", "split"])
        for j, term in enumerate(terms, start=1):
            writer.writerow([j, term.value, " ".join(map(str, term.exponents)),
                             ordinals.get(j, "")])
    else:
        print("j value exponents")
        for j, term in enumerate(terms, start=1):
            vector = "(" + ",".join(map(str, term.exponents)) + ")"
            print(f"{j} {term.value} {vector}")
        if marks is not None:
            print("splits: " + " ".join(map(str, marks)))
    return EXIT_OK


def cmd_plan(config: RunConfig) -> int:
    spec = config.graph_spec.strip()
    if ";" in spec or spec.startswith("edges:"):
        raise ParameterError("planning supports only the named graphs K<k>, P3, and S<leaves>")
    graph = graph_by_name(spec)
    if spec == "P3":
        plan = plan_path3(config.n, config.src, config.dst)
    elif spec.startswith("K"):
        plan = plan_complete(graph.pegs, config.n, config.src, config.dst)
    else:
        plan = plan_star(graph.pegs - 1, config.n, config.src, config.dst)
    sys.stdout.write(serialize_plan(plan))
    return EXIT_OK


def cmd_validate(config: RunConfig) -> int:
    if config.plan_file in (None, "-"):
        text = sys.stdin.read()
    else:
        text = Path(config.plan_file).read_text(encoding="utf-8")
    from .hanoi import validate_plan

    report = validate_plan(parse_plan(text))
    if config.fmt == "json":
        payload = {
            "ok": report.ok,
            "moves_applied": report.moves_applied,
            "predicted": str(report.predicted_length),
            "failure_index": report.failure_index,
            "failure": report.failure,
        }
        print(json.dumps(payload, indent=2))
    elif report.ok:
        print(f"pass, {report.moves_applied} moves")
    else:
        print(f"fail: {report.failure}")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_bfs(config: RunConfig) -> int:
    graph = parse_graph_spec(config.graph_spec)
    moves = bfs_optimal(graph, config.n, config.src, config.dst, config.budget)
    if config.fmt == "json":
        payload = {"graph": graph.name, "n": config.n, "src": config.src,
                   "dst": config.dst, "moves": str(moves)}
        print(json.dumps(payload, indent=2))
    else:
        print(moves)
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    report = run_suite(max_n=config.max_n, seed=config.seed)
    print(json.dumps(report, indent=2))
    return EXIT_OK if report["ok"] else EXIT_MISMATCH


_COMMANDS = {
    "compute": cmd_compute,
    "sequence": cmd_sequence,
    "plan": cmd_plan,
    "validate": cmd_validate,
    "bfs": cmd_bfs,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = _make_config(args)
        return _COMMANDS[config.subcommand](config)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ParameterError, UnsupportedRegimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
