"""Growth of the smallest homogeneous pair of strong cliques around a seed.

Starting from strongly adjacent ``a0, a1`` that lie on a square ``a0 a1 b1 b0``,
vertices that are mixed on A are forced into B and vice versa until the pair
is homogeneous or a contradiction shows no such pair exists.  Every vertex
outside ``A u B`` carries a class tag:

=========  ==========================================================
``TA``     mixed on B, queued for A
``TB``     mixed on A, queued for B
``NA``     strongly complete to A, strongly anticomplete to B
``NB``     strongly complete to B, strongly anticomplete to A
``NAB``    strongly complete to both
(untagged) strongly anticomplete to both
=========  ==========================================================

Adding ``v`` to a side only touches ``v``'s neighbours plus the vertices that
were strongly complete to that side; the latter either stay (and are then
strong neighbours of ``v``) or leave their class for good, which keeps a
whole run linear in the number of adjacent pairs.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .exceptions import DomainError
from .structure import CliquePair
from .trigraph import Trigraph

__all__ = ["StepCounter", "SchposcState", "find_seed_square", "schposc"]

_A, _B, _TA, _TB, _NA, _NB, _NAB = range(1, 8)
_N0 = 0


@dataclass
class StepCounter:
    """Counts elementary operations (list/set element inspections)."""

    steps: int = 0


class _Quit(Exception):
    pass


def _check_seed(G: Trigraph, a0: int, a1: int) -> None:
    if not G.is_strongly_adjacent(a0, a1):
        raise DomainError(f"seed ({a0}, {a1}) is not strongly adjacent")


def find_seed_square(
    G: Trigraph, a0: int, a1: int, counter: StepCounter | None = None
) -> tuple[int, int] | None:
    """Least ``(b0, b1)`` (by b0, then b1) such that ``a0 a1 b1 b0`` is a square."""
    _check_seed(G, a0, a1)
    code = G.code
    steps = 0
    b1_ok = bytearray(G.n)
    for v in G.neighbors(a1):
        steps += 1
        if v != a0 and code(v, a0) <= 0:
            b1_ok[v] = 1
    result = None
    for b0 in G.neighbors(a0):
        steps += 1
        if b0 == a1 or code(b0, a1) > 0:
            continue
        for b1 in G.neighbors(b0):
            steps += 1
            if b1_ok[b1]:
                result = (b0, b1)
                break
        if result:
            break
    if counter is not None:
        counter.steps += steps
    return result


class SchposcState:
    """Mutable bookkeeping for one growth run.  Not reusable."""

    def __init__(self, G: Trigraph, counter: StepCounter | None = None, check: bool = False):
        self.G = G
        n = G.n
        self.tag = bytearray(n)
        self.str_a = [0] * n
        self.adj_a = [0] * n
        self.str_b = [0] * n
        self.adj_b = [0] * n
        self.A: list[int] = []
        self.B: list[int] = []
        self.queue_a: list[int] = []
        self.queue_b: list[int] = []
        # insertion-ordered dicts give O(1) removal during scans
        self.cls = {_NA: {}, _NB: {}, _NAB: {}}
        self.counter = counter
        self.check = check
        self.steps = 0

    # -- classification ------------------------------------------------------

    def _classify(self, u: int) -> int:
        na, nb = len(self.A), len(self.B)
        rel_a = 1 if self.str_a[u] == na else (-1 if self.adj_a[u] == 0 else 0)
        rel_b = 1 if self.str_b[u] == nb else (-1 if self.adj_b[u] == 0 else 0)
        if rel_a == 0 and rel_b == 0:
            raise _Quit
        if rel_a == 0:
            return _TB
        if rel_b == 0:
            return _TA
        if rel_a == 1:
            return _NAB if rel_b == 1 else _NA
        return _NB if rel_b == 1 else _N0

    def _retag(self, u: int, new: int) -> None:
        old = self.tag[u]
        if old in self.cls:
            del self.cls[old][u]
        self.tag[u] = new
        if new in self.cls:
            self.cls[new][u] = None
        elif new == _TA:
            heapq.heappush(self.queue_a, u)
        elif new == _TB:
            heapq.heappush(self.queue_b, u)

    # -- growth --------------------------------------------------------------

    def start(self, a0: int, a1: int, b0: int, b1: int) -> None:
        G = self.G
        if G.code(b0, b1) != 1:
            raise _Quit
        self.A = [a0, a1]
        self.B = [b0, b1]
        for v in self.A:
            self.tag[v] = _A
        for v in self.B:
            self.tag[v] = _B
        touched = []
        for side_str, side_adj, members in (
            (self.str_a, self.adj_a, self.A),
            (self.str_b, self.adj_b, self.B),
        ):
            for v in members:
                row = G._rows[v]
                for u in G.neighbors(v):
                    self.steps += 1
                    side_adj[u] += 1
                    if row[u] == 1:
                        side_str[u] += 1
                    touched.append(u)
        for u in sorted(set(touched)):
            self.steps += 1
            if self.tag[u] == _N0:
                self._retag(u, self._classify(u))

    def _insert(self, v: int, into_a: bool) -> None:
        G = self.G
        row = G._rows[v]
        if into_a:
            side, side_str, side_adj = self.A, self.str_a, self.adj_a
            own, other_only, forced, lost = _A, _NB, _TB, _NA
        else:
            side, side_str, side_adj = self.B, self.str_b, self.adj_b
            own, other_only, forced, lost = _B, _NA, _TA, _NB
        if side_str[v] != len(side):
            # v is not strongly adjacent to every member: side is no longer a strong clique
            raise _Quit
        self._retag(v, own)
        side.append(v)
        for u in G.neighbors(v):
            self.steps += 1
            side_adj[u] += 1
            if row[u] == 1:
                side_str[u] += 1
            t = self.tag[u]
            if t == _N0 or t == other_only:
                # was strongly anticomplete to this side, now adjacent to v
                if t == _N0:
                    raise _Quit
                self._retag(u, forced)
        # vertices that were strongly complete to this side stay only if strongly adjacent to v
        for t in (lost, _NAB):
            for u in list(self.cls[t]):
                self.steps += 1
                if row[u] != 1:
                    if t == lost:
                        raise _Quit
                    self._retag(u, forced)
        if self.check:
            self._check_invariants()

    def run(self) -> CliquePair:
        while self.queue_a or self.queue_b:
            if self.queue_b:
                self._insert(heapq.heappop(self.queue_b), into_a=False)
            else:
                self._insert(heapq.heappop(self.queue_a), into_a=True)
        return CliquePair(self.A, self.B)

    def _check_invariants(self) -> None:
        G = self.G
        am = sum(1 << v for v in self.A)
        bm = sum(1 << v for v in self.B)
        for u in range(G.n):
            t = self.tag[u]
            if t in (_A, _B):
                continue
            rel = []
            for m in (am, bm):
                if G.strong_mask(u) & m == m:
                    rel.append(1)
                elif G.adjacent_mask(u) & m == 0:
                    rel.append(-1)
                else:
                    rel.append(0)
            if t in (_TA, _TB):
                continue
            expected = {_NA: [1, -1], _NB: [-1, 1], _NAB: [1, 1], _N0: [-1, -1]}[t]
            assert rel == expected, f"vertex {u}: tag {t} but relation {rel}"


def schposc(
    G: Trigraph,
    a0: int,
    a1: int,
    *,
    counter: StepCounter | None = None,
    check: bool = False,
) -> CliquePair | None:
    """Smallest homogeneous pair of strong cliques with ``a0, a1`` in A.

    Returns ``None`` when ``a0 a1`` lies on no square or when no such pair
    exists.  The result is square-connected.  Queued vertices are inserted
    B-side first, each queue in ascending index order; the output does not
    depend on this order.

    ``counter`` accumulates elementary steps; ``check`` re-verifies every
    class tag after each insertion.
    """
    seed = find_seed_square(G, a0, a1, counter)
    if seed is None:
        return None
    state = SchposcState(G, counter, check)
    try:
        state.start(a0, a1, *seed)
        result = state.run()
    except _Quit:
        result = None
    if counter is not None:
        counter.steps += state.steps
    return result
