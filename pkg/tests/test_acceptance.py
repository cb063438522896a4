"""Exit criteria. Every comparison is exact; timings use perf_counter."""
import csv
import io
import json
import re
import time

import jsonschema

from loopchain import cli
from loopchain.closedpower import det_closed, entry_closed, matrix_power_closed
from loopchain.exmatrix import ExactMatrix, IntPolynomial, char_poly, mat_det, mat_mul, mat_pow, poly_pow
from loopchain.fib import binet_exact, fib, fib_naive
from loopchain.graphfam import LoopChainGraph, WalkQuery, build_adjacency, count_walks
from loopchain.spectral import JordanDecomposition, transform_inverse, transform_matrix

GOLDEN = IntPolynomial((-1, -1, 1))


def blocks(m: ExactMatrix):
    rows = m.to_int_rows()
    return [(rows[t][t], rows[t][t + 1], rows[t + 1][t], rows[t + 1][t + 1]) for t in range(0, m.rows, 2)]


def best_time(fn, reps=20):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def test_1_golden_worked_examples(criterion):
    criterion["label"] = "1 worked examples k=3, r=4/-4/-5"
    expected = {4: (2, 3, 3, 5), -4: (5, -3, -3, 2), -5: (-8, 5, 5, -3)}
    worst = 0.0
    for r, blk in expected.items():
        m = matrix_power_closed(3, r)
        assert blocks(m) == [blk] * 3
        assert m.nonzero_count() == 12
        worst = max(worst, best_time(lambda: matrix_power_closed(3, r)))
    criterion["detail"] = f"slowest {worst * 1e3:.3f} ms"
    assert worst < 1e-3


def test_2_characteristic_polynomials(criterion):
    criterion["label"] = "2 characteristic polynomials n=2..8 and k<=5"
    t0 = time.perf_counter()
    printed = {
        1: [-1, -1, 1],
        2: [1, 2, -1, -2, 1],
        3: [-1, -3, 0, 5, 0, -3, 1],
        4: [1, 4, 2, -8, -5, 8, 2, -4, 1],
    }
    for k, coeffs in printed.items():
        assert char_poly(build_adjacency(k)).int_coefficients() == coeffs
        assert poly_pow(GOLDEN, k).int_coefficients() == coeffs
    for k in range(1, 6):
        assert char_poly(build_adjacency(k)) == poly_pow(GOLDEN, k)
    elapsed = time.perf_counter() - t0
    criterion["detail"] = f"{elapsed:.3f} s"
    assert elapsed < 1


def test_3_determinant(criterion):
    criterion["label"] = "3 det(A) = (-1)^k for k=1..16"
    t0 = time.perf_counter()
    for k in range(1, 17):
        assert det_closed(k) == (-1) ** k
        assert mat_det(build_adjacency(k)) == (-1) ** k
    elapsed = time.perf_counter() - t0
    criterion["detail"] = f"{elapsed:.3f} s"
    assert elapsed < 1


def test_4_similarity(criterion):
    criterion["label"] = "4 T T^-1 = I, T J T^-1 = A (k<=8), T J^r T^-1 = A^r (k<=4, |r|<=8)"
    t0 = time.perf_counter()
    for k in range(1, 9):
        d = JordanDecomposition.of(k)
        assert mat_mul(d.t, d.t_inv) == ExactMatrix.identity(2 * k)
        assert mat_mul(mat_mul(d.t, d.j), d.t_inv) == build_adjacency(k)
        assert d.t == transform_matrix(k) and d.t_inv == transform_inverse(k)
    for k in range(1, 5):
        d = JordanDecomposition.of(k)
        a = build_adjacency(k)
        for r in range(-8, 9):
            assert d.power(r) == mat_pow(a, r)
    elapsed = time.perf_counter() - t0
    criterion["detail"] = f"{elapsed:.3f} s"
    assert elapsed < 10


def test_5_oracle_sweep(criterion):
    criterion["label"] = "5 closed = binary exponentiation (k<=5, |r|<=12); entries = walk counts (k<=3, r<=12)"
    t0 = time.perf_counter()
    for k in range(1, 6):
        a = build_adjacency(k)
        for r in range(-12, 13):
            assert matrix_power_closed(k, r) == mat_pow(a, r)
    for k in range(1, 4):
        g = LoopChainGraph(k)
        for r in range(0, 13):
            for i in range(1, g.n + 1):
                for j in range(1, g.n + 1):
                    assert entry_closed(k, i, j, r) == count_walks(g, WalkQuery(i, j, r))
    elapsed = time.perf_counter() - t0
    criterion["detail"] = f"{elapsed:.3f} s"
    assert elapsed < 60


def test_6_fibonacci_engine(criterion):
    criterion["label"] = "6 fast doubling, negafibonacci, exact Binet"
    t0 = time.perf_counter()
    for n in range(-1000, 1001):
        assert fib(n) == fib_naive(n)
    for n in range(0, 301):
        assert fib(-n) == (-1) ** (n + 1) * fib(n)
    for n in range(-200, 201):
        v = binet_exact(n)
        assert v.irr == 0 and v.rat == fib(n)
    elapsed = time.perf_counter() - t0
    criterion["detail"] = f"{elapsed:.3f} s"
    assert elapsed < 5


def test_7_performance(criterion, capsys):
    criterion["label"] = "7 k=100 r=100000 under 1 s; closed >= 100x faster than dense at k=50 r=1000"
    t0 = time.perf_counter()
    m = matrix_power_closed(100, 100000)
    big = time.perf_counter() - t0
    assert m.rows == 200 and m[0, 1] == fib(100000)
    assert big < 1

    assert cli.main(["bench", "--k", "50", "--r", "1000", "--reps", "5", "--time-budget-ms", "120000"]) == 0
    rows = {r["method"]: r for r in csv.DictReader(io.StringIO(capsys.readouterr().out))}
    closed_ns, oracle_ns = int(rows["closed"]["median_ns"]), int(rows["oracle"]["median_ns"])
    ratio = oracle_ns / closed_ns
    criterion["detail"] = f"k=100 r=1e5 in {big * 1e3:.1f} ms; speedup {ratio:.0f}x"
    assert ratio >= 100


def test_8_cli_contract(criterion, capsys):
    criterion["label"] = "8 verify exits 0; malformed flags exit 2; JSON decimal-string schema"
    assert cli.main(["verify", "--k-max", "4", "--r-max", "8"]) == 0
    capsys.readouterr()
    for bad in (["power", "--k"], ["power", "--k", "1", "--r", "1", "--nope"], ["walks", "--k", "1"]):
        assert cli.main(bad) == 2
    capsys.readouterr()
    assert cli.main(["power", "--k", "3", "--r", "-300", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    jsonschema.validate(doc, cli.OUTPUT_SCHEMA)
    assert len(doc["matrix"]) == 6 and all(len(row) == 6 for row in doc["matrix"])
    assert all(re.fullmatch(r"-?(0|[1-9][0-9]*)", x) for row in doc["matrix"] for x in row)
