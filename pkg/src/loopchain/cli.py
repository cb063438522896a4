"""Command-line interface: ``loopchain <command> [flags]``.

Exit codes: 0 success, 1 a verification/oracle check failed, 2 usage error.
Big integers are always written as base-10 strings in JSON output.
"""
from __future__ import annotations

import argparse
import csv
import json
import multiprocessing
import statistics
import sys
import time
from dataclasses import dataclass, field

from . import closedpower, exmatrix, fib, graphfam, spectral
from .exactnum import as_integer

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_ABS_R = 10**6
MAX_CHARPOLY_N = 64

DECIMAL_PATTERN = r"^-?(0|[1-9][0-9]*)$"

_DEC = {"type": "string", "pattern": DECIMAL_PATTERN}

OUTPUT_SCHEMA = {
    "type": "object",
    "required": ["command", "meta"],
    "properties": {
        "command": {"type": "string"},
        "k": {"type": "integer", "minimum": 1},
        "r": {"type": "integer"},
        "matrix": {"type": "array", "items": {"type": "array", "items": _DEC}},
        "coefficients": {"type": "array", "items": _DEC},
        "factored": {"type": "string"},
        "det": _DEC,
        "count": _DEC,
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "passed"],
                "properties": {"name": {"type": "string"}, "passed": {"type": "boolean"}},
            },
        },
        "meta": {"type": "object"},
    },
}


class UsageError(Exception):
    pass


@dataclass
class OutputDocument:
    command: str
    k: int | None = None
    r: int | None = None
    matrix: list[list[str]] | None = None
    extra: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"command": self.command}
        if self.k is not None:
            out["k"] = self.k
        if self.r is not None:
            out["r"] = self.r
        if self.matrix is not None:
            out["matrix"] = self.matrix
        out.update(self.extra)
        out["meta"] = self.meta
        return out


def _matrix_strings(m: exmatrix.ExactMatrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in m.to_int_rows()]


def _pretty_matrix(rows: list[list[str]]) -> str:
    width = max(len(c) for r in rows for c in r)
    return "\n".join(" ".join(c.rjust(width) for c in r) for r in rows)


def _emit(doc: OutputDocument, fmt: str, pretty_lines: list[str]):
    if fmt == "json":
        print(json.dumps(doc.to_dict(), indent=2))
    else:
        print("\n".join(pretty_lines))


def _check_k(k: int):
    if k < 1:
        raise UsageError(f"--k must be >= 1, got {k}")


# -- commands ------------------------------------------------------------------


def cmd_power(args) -> int:
    _check_k(args.k)
    if abs(args.r) > MAX_ABS_R:
        raise UsageError(f"|--r| must be <= {MAX_ABS_R}")
    t0 = time.perf_counter_ns()
    m = closedpower.matrix_power_closed(args.k, args.r)
    elapsed = time.perf_counter_ns() - t0
    rows = _matrix_strings(m)
    doc = OutputDocument("power", args.k, args.r, rows, meta={"n": 2 * args.k, "closed_ns": str(elapsed)})
    lines = [f"A^{args.r} for k={args.k} (n={2 * args.k})", _pretty_matrix(rows)]
    status = EXIT_OK
    if args.oracle:
        oracle = exmatrix.mat_pow(graphfam.build_adjacency(args.k), args.r)
        verdict = "match" if oracle == m else "mismatch"
        doc.meta["oracle"] = verdict
        lines.append(f"oracle: {verdict}")
        if verdict != "match":
            status = EXIT_FAIL
    _emit(doc, args.format, lines)
    return status


def _closed_charpoly(k: int) -> exmatrix.IntPolynomial:
    return exmatrix.poly_pow(exmatrix.IntPolynomial((-1, -1, 1)), k)


def cmd_charpoly(args) -> int:
    _check_k(args.k)
    if 2 * args.k > MAX_CHARPOLY_N:
        raise UsageError(f"charpoly needs 2k <= {MAX_CHARPOLY_N}")
    p = _closed_charpoly(args.k)
    coeffs = [str(c) for c in p.int_coefficients()]
    factored = f"(x^2-x-1)^{args.k}"
    doc = OutputDocument(
        "charpoly", args.k, extra={"coefficients": coeffs, "factored": factored},
        meta={"n": 2 * args.k},
    )
    lines = [f"P_{2 * args.k}(x) = {p}", f"factored: {factored}", "coefficients (constant first): " + " ".join(coeffs)]
    status = EXIT_OK
    if args.oracle:
        verdict = "match" if exmatrix.char_poly(graphfam.build_adjacency(args.k)) == p else "mismatch"
        doc.meta["oracle"] = verdict
        lines.append(f"oracle: {verdict}")
        if verdict != "match":
            status = EXIT_FAIL
    _emit(doc, args.format, lines)
    return status


def cmd_det(args) -> int:
    _check_k(args.k)
    d = closedpower.det_closed(args.k)
    doc = OutputDocument("det", args.k, extra={"det": str(d)}, meta={"n": 2 * args.k})
    lines = [f"det(A) for k={args.k}: {d}"]
    status = EXIT_OK
    if args.oracle:
        verdict = "match" if exmatrix.mat_det(graphfam.build_adjacency(args.k)) == d else "mismatch"
        doc.meta["oracle"] = verdict
        lines.append(f"oracle: {verdict}")
        if verdict != "match":
            status = EXIT_FAIL
    _emit(doc, args.format, lines)
    return status


def cmd_walks(args) -> int:
    _check_k(args.k)
    g = graphfam.LoopChainGraph(args.k)
    for name, v in (("--from", args.source), ("--to", args.target)):
        if not 1 <= v <= g.n:
            raise UsageError(f"{name} must be in 1..{g.n}, got {v}")
    if args.length < 0:
        raise UsageError("--length must be non-negative")
    if not args.closed and args.length > args.cap:
        raise UsageError(f"--length {args.length} exceeds enumeration cap {args.cap}; pass --closed")

    q = graphfam.WalkQuery(args.source, args.target, args.length)
    enumerated = graphfam.count_walks(g, q, cap=args.cap) if args.length <= args.cap else None
    closed = closedpower.entry_closed(args.k, args.source, args.target, args.length) if args.closed else None
    count = closed if closed is not None else enumerated

    meta = {"n": g.n, "method": "closed" if args.closed else "enumeration"}
    lines = [str(count)]
    status = EXIT_OK
    if closed is not None and enumerated is not None:
        agree = closed == enumerated
        meta["agree"] = agree
        lines.append(f"enumeration: {enumerated}, closed: {closed}, agree: {'yes' if agree else 'no'}")
        if not agree:
            status = EXIT_FAIL
    doc = OutputDocument(
        "walks", args.k, extra={"from": args.source, "to": args.target, "length": args.length, "count": str(count)},
        meta=meta,
    )
    _emit(doc, args.format, lines)
    return status


# -- verify --------------------------------------------------------------------


def run_checks(k_max: int, r_max: int, walk_cap: int = graphfam.DEFAULT_WALK_CAP) -> list[tuple[str, bool]]:
    """Every closed form against its oracle for ``k <= k_max``, ``|r| <= r_max``."""
    checks: list[tuple[str, bool]] = []
    rs = range(-r_max, r_max + 1)
    checks.append((
        f"fib fast-doubling vs recurrence |n|<={max(r_max, 2) + 1}",
        all(fib.fib(n) == fib.fib_naive(n) for n in range(-max(r_max, 2) - 1, max(r_max, 2) + 2)),
    ))
    checks.append((
        f"alpha/beta entry formulas vs Fibonacci block |r|<={r_max}",
        all(closedpower.power_block_binet(r) == closedpower.power_block(r) for r in rs),
    ))
    for k in range(1, k_max + 1):
        g = graphfam.LoopChainGraph(k)
        a = graphfam.build_adjacency(g)
        checks.append((
            f"k={k} adjacency structure",
            a.is_symmetric() and a.trace() == k and a.nonzero_count() == 3 * k
            and all(g.degree(v) == (1 if v % 2 else 3) for v in range(1, g.n + 1)),
        ))
        checks.append((f"k={k} similarity T J T^-1 = A", spectral.verify_similarity(k)))
        checks.append((
            f"k={k} determinant closed vs elimination",
            exmatrix.mat_det(a) == closedpower.det_closed(k),
        ))
        if 2 * k <= MAX_CHARPOLY_N:
            checks.append((
                f"k={k} charpoly (x^2-x-1)^k vs Faddeev-LeVerrier",
                exmatrix.char_poly(a) == _closed_charpoly(k),
            ))
        decomposition = spectral.JordanDecomposition.of(k)
        ok_oracle = ok_spectral = ok_det = True
        for r in rs:
            closed = closedpower.matrix_power_closed(k, r)
            ok_oracle &= closed == exmatrix.mat_pow(a, r)
            ok_spectral &= closed == decomposition.power(r)
            ok_det &= as_integer(exmatrix.mat_det(closed)) == (-1) ** ((k * r) % 2)
        checks.append((f"k={k} closed power vs binary exponentiation |r|<={r_max}", ok_oracle))
        checks.append((f"k={k} closed power vs T J^r T^-1 |r|<={r_max}", ok_spectral))
        checks.append((f"k={k} det(A^r) = (-1)^(kr) |r|<={r_max}", ok_det))
        r_walk = min(r_max, walk_cap)
        checks.append((
            f"k={k} closed entries vs walk enumeration 0<=r<={r_walk}",
            all(
                closedpower.entry_closed(k, i, j, r) == graphfam.count_walks(g, graphfam.WalkQuery(i, j, r), cap=walk_cap)
                for r in range(r_walk + 1)
                for i in range(1, g.n + 1)
                for j in range(1, g.n + 1)
            ),
        ))
    return checks


def cmd_verify(args) -> int:
    if args.k_max < 1 or args.r_max < 0:
        raise UsageError("--k-max must be >= 1 and --r-max >= 0")
    checks = run_checks(args.k_max, args.r_max)
    all_ok = all(ok for _, ok in checks)
    doc = OutputDocument(
        "verify",
        extra={"checks": [{"name": name, "passed": ok} for name, ok in checks]},
        meta={"k_max": args.k_max, "r_max": args.r_max, "passed": all_ok},
    )
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in checks]
    lines.append(f"{sum(ok for _, ok in checks)}/{len(checks)} checks passed")
    _emit(doc, args.format, lines)
    return EXIT_OK if all_ok else EXIT_FAIL


# -- bench ----------------------------------------------------------------------


def _time_reps(fn, reps: int) -> list[int]:
    out = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        fn()
        out.append(time.perf_counter_ns() - t0)
    return out


def _oracle_worker(k: int, r: int, reps: int, conn):
    a = graphfam.build_adjacency(k)
    conn.send(_time_reps(lambda: exmatrix.mat_pow(a, r), reps))
    conn.close()


def bench_oracle(k: int, r: int, reps: int, budget_ms: int) -> int | None:
    """Median ns of the dense oracle, or None if it overruns ``budget_ms``."""
    methods = multiprocessing.get_all_start_methods()
    ctx = multiprocessing.get_context("fork" if "fork" in methods else None)
    recv, send = ctx.Pipe(duplex=False)
    proc = ctx.Process(target=_oracle_worker, args=(k, r, reps, send), daemon=True)
    proc.start()
    send.close()
    try:
        if not recv.poll(budget_ms / 1000):
            return None
        timings = recv.recv()
    except EOFError:
        return None
    finally:
        if proc.is_alive():
            proc.terminate()
        proc.join()
    return int(statistics.median(timings))


def cmd_bench(args) -> int:
    _check_k(args.k)
    if args.reps < 1:
        raise UsageError("--reps must be >= 1")
    if abs(args.r) > MAX_ABS_R:
        raise UsageError(f"|--r| must be <= {MAX_ABS_R}")
    if args.time_budget_ms < 1:
        raise UsageError("--time-budget-ms must be >= 1")
    closed = int(statistics.median(_time_reps(lambda: closedpower.matrix_power_closed(args.k, args.r), args.reps)))
    oracle = bench_oracle(args.k, args.r, args.reps, args.time_budget_ms)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["method", "k", "r", "median_ns"])
    writer.writerow(["closed", args.k, args.r, closed])
    writer.writerow(["oracle", args.k, args.r, "timeout" if oracle is None else oracle])
    return EXIT_OK


# -- parser -------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "pretty"), default="pretty")

    parser = _Parser(prog="loopchain", description="Closed-form powers of the loop-chain adjacency matrix.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("power", parents=[common], help="print A^r via the closed form")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="recompute by binary exponentiation and compare")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("charpoly", parents=[common], help="characteristic polynomial of A")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="compare with Faddeev-LeVerrier on the matrix")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("det", parents=[common], help="determinant of A")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="compare with Gauss-Jordan elimination")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("walks", parents=[common], help="count walks between two vertices")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--from", dest="source", type=int, required=True)
    p.add_argument("--to", dest="target", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--closed", action="store_true", help="use the closed-form entry (and cross-check when enumerable)")
    p.add_argument("--cap", type=int, default=graphfam.DEFAULT_WALK_CAP, help="enumeration length cap")
    p.set_defaults(func=cmd_walks)

    p = sub.add_parser("verify", parents=[common], help="run every closed form against its oracle")
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--r-max", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="time closed form vs dense exponentiation (CSV)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--time-budget-ms", type=int, default=30000, help="oracle is reported as 'timeout' past this")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    # F_r has ~0.21 r digits; the default int->str cap is 4300 digits
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"loopchain {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
