"""The loop-chain graph family and a brute-force walk counter.

Graph ``k`` has ``n = 2k`` vertices, numbered from 1.  Component ``i`` is the
edge ``{2i-1, 2i}`` plus a loop at ``2i``.

Two loop conventions coexist here and they disagree on purpose:

* in the adjacency matrix a loop puts a 1 on the diagonal, so row sums are
  1 (odd rows) and 2 (even rows);
* for vertex degree a loop counts twice, so odd vertices have degree 1 and
  even vertices degree 3.

A walk that goes around the loop uses exactly one edge of its length.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exactnum import ONE, ZERO
from .exmatrix import ExactMatrix

DEFAULT_WALK_CAP = 24


class WalkCapExceeded(ValueError):
    """Walk length is beyond what exhaustive enumeration is allowed to do."""


@dataclass(frozen=True)
class LoopChainGraph:
    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")

    @property
    def n(self) -> int:
        return 2 * self.k

    def check_vertex(self, v: int):
        if not 1 <= v <= self.n:
            raise IndexError(f"vertex {v} out of range 1..{self.n}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Walk successors of ``v``; an even vertex lists itself once (its loop)."""
        self.check_vertex(v)
        if v % 2:
            return (v + 1,)
        return (v - 1, v)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return 1 if v % 2 else 3

    def component(self, v: int) -> int:
        self.check_vertex(v)
        return (v + 1) // 2


@dataclass(frozen=True)
class WalkQuery:
    source: int
    target: int
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError(f"walk length must be non-negative, got {self.length}")


def build_adjacency(g: LoopChainGraph | int) -> ExactMatrix:
    if isinstance(g, int):
        g = LoopChainGraph(g)
    n = g.n
    entries = [ZERO] * (n * n)
    for i in range(1, n, 2):  # 1-based odd i
        r = i - 1
        entries[r * n + r + 1] = ONE
        entries[(r + 1) * n + r] = ONE
        entries[(r + 1) * n + r + 1] = ONE
    return ExactMatrix._wrap(n, n, tuple(entries))


def degree(g: LoopChainGraph, v: int) -> int:
    return g.degree(v)


def count_walks(g: LoopChainGraph, q: WalkQuery, cap: int = DEFAULT_WALK_CAP) -> int:
    """Count walks of exactly ``q.length`` edges by exhaustive recursion."""
    g.check_vertex(q.source)
    g.check_vertex(q.target)
    if q.length > cap:
        raise WalkCapExceeded(
            f"walk length {q.length} exceeds enumeration cap {cap}; use matrix powers"
        )

    def extend(v: int, remaining: int) -> int:
        if remaining == 0:
            return 1 if v == q.target else 0
        return sum(extend(w, remaining - 1) for w in g.neighbors(v))

    return extend(q.source, q.length)
