"""Brute-force reference implementations for desk-scale cross-checking.

Nothing here reuses the fast paths: adjacency is read through ``theta`` only,
squares are found by trying every 4-subset, square-connectivity is checked
against every bipartition, and antithickenings come from enumerating set
partitions.  Every routine refuses inputs above an explicit size cap.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Literal

from .antithicken import ThickeningMap
from .exceptions import CapExceeded, DomainError, StructuralError
from .structure import CliquePair
from .trigraph import Trigraph

__all__ = [
    "enumerate_hposcs",
    "minimal_hposc_containing",
    "laminar_by_enumeration",
    "enumerate_antithickenings",
    "optimal_antithickenings",
    "find_isomorphism",
    "are_isomorphic",
    "minimal_pairs",
    "iter_trigraphs",
    "iter_trigraph_representatives",
    "random_trigraph",
]

Kind = Literal["all", "deletion_minimal", "square_connected"]

DEFAULT_HPOSC_CAP = 14
DEFAULT_PARTITION_CAP = 8
DEFAULT_ISO_CAP = 10


def _cap(what: str, n: int, cap: int) -> None:
    if n > cap:
        raise CapExceeded(what, n, cap)


class _Tables:
    """Per-trigraph pair codes read through ``theta`` once."""

    def __init__(self, G: Trigraph):
        n = self.n = G.n
        self.t = [[0] * n for _ in range(n)]
        for u in range(n):
            for v in range(u + 1, n):
                self.t[u][v] = self.t[v][u] = int(G.theta(u, v))

    def adjacent(self, u: int, v: int) -> bool:
        return self.t[u][v] >= 0

    def antiadjacent(self, u: int, v: int) -> bool:
        return self.t[u][v] <= 0

    def strong(self, u: int, v: int) -> bool:
        return self.t[u][v] == 1

    def is_square(self, a, b, c, d) -> bool:
        return (
            self.adjacent(a, b) and self.adjacent(b, c) and self.adjacent(c, d)
            and self.adjacent(d, a) and self.antiadjacent(a, c) and self.antiadjacent(b, d)
        )

    def squares(self, verts) -> list[frozenset[int]]:
        out = []
        for w, x, y, z in itertools.combinations(sorted(verts), 4):
            if self.is_square(w, x, y, z) or self.is_square(w, x, z, y) or self.is_square(w, y, x, z):
                out.append(frozenset((w, x, y, z)))
        return out

    def strong_cliques(self) -> list[tuple[int, ...]]:
        out = []

        def grow(clique: tuple[int, ...], start: int) -> None:
            for v in range(start, self.n):
                if all(self.strong(u, v) for u in clique):
                    c = clique + (v,)
                    out.append(c)
                    grow(c, v + 1)

        grow((), 0)
        return out

    def relation(self, v: int, S) -> int:
        """+1 strongly complete, -1 strongly anticomplete, 0 otherwise."""
        if all(self.strong(v, s) for s in S):
            return 1
        if all(self.t[v][s] == -1 for s in S):
            return -1
        return 0


def _is_dm(T: _Tables, A, B, squares) -> bool:
    if not squares:
        return False
    return all(T.relation(a, B) == 0 for a in A) and all(T.relation(b, A) == 0 for b in B)


def _side_crossed(side, squares) -> bool:
    side = list(side)
    if len(side) < 2:
        return True
    first, rest = side[0], side[1:]
    # every bipartition, enumerated as the subsets of `rest` joined with `first`
    for r in range(len(rest)):
        for extra in itertools.combinations(rest, r):
            half = {first, *extra}
            other = set(side) - half
            if not any(sq & half and sq & other for sq in squares):
                return False
    return True


def _is_sc(T: _Tables, A, B, squares) -> bool:
    return _side_crossed(A, squares) and _side_crossed(B, squares)


def enumerate_hposcs(G: Trigraph, kind: Kind = "all", cap: int = DEFAULT_HPOSC_CAP) -> list[CliquePair]:
    """All homogeneous pairs of strong cliques of the requested kind.

    Each unordered pair is reported once, oriented with the smallest vertex
    in A, sorted by (A, B).
    """
    if kind not in ("all", "deletion_minimal", "square_connected"):
        raise DomainError(f"unknown kind {kind!r}")
    _cap("enumerate_hposcs", G.n, cap)
    T = _Tables(G)
    cliques = T.strong_cliques()
    uniform = {}
    for c in cliques:
        cs = set(c)
        uniform[c] = frozenset(v for v in range(G.n) if v not in cs and T.relation(v, c) != 0)
    all_squares = T.squares(range(G.n))
    out = []
    for A in cliques:
        for B in cliques:
            if B[0] <= A[0] or (len(A) == 1 and len(B) == 1):
                continue
            if set(A) & set(B):
                continue
            outside = set(range(G.n)) - set(A) - set(B)
            if not (outside <= uniform[A] and outside <= uniform[B]):
                continue
            if kind != "all":
                both = set(A) | set(B)
                squares = [sq for sq in all_squares if sq <= both]
                ok = _is_dm(T, A, B, squares) if kind == "deletion_minimal" else _is_sc(T, A, B, squares)
                if not ok:
                    continue
            out.append(CliquePair(A, B))
    out.sort(key=lambda p: (p.A, p.B))
    return out


def minimal_pairs(pairs: list[CliquePair]) -> list[CliquePair]:
    """Inclusion-minimal members of ``pairs`` (orientation-insensitive)."""
    return [p for p in pairs if not any(q != p and p.contains(q) for q in pairs)]


def minimal_hposc_containing(
    G: Trigraph, a0: int, a1: int, cap: int = DEFAULT_HPOSC_CAP
) -> CliquePair | None:
    """Inclusion-minimal HPOSC with ``{a0, a1}`` in A, for a seed on a square.

    Absent when no square ``a0 a1 b1 b0`` exists or no HPOSC holds the seed
    in one side.  Raises :class:`StructuralError` if the minimum is not unique.
    """
    if a0 == a1 or not G.is_strongly_adjacent(a0, a1):
        raise DomainError(f"seed ({a0}, {a1}) is not strongly adjacent")
    _cap("minimal_hposc_containing", G.n, cap)
    T = _Tables(G)
    others = [v for v in range(G.n) if v not in (a0, a1)]
    if not any(T.is_square(a0, a1, b1, b0) for b0, b1 in itertools.permutations(others, 2)):
        return None
    candidates = []
    for P in enumerate_hposcs(G, "all", cap):
        for A, B in ((P.A, P.B), (P.B, P.A)):
            if a0 in A and a1 in A:
                candidates.append(CliquePair(A, B))
    minimal = [
        p for p in candidates
        if not any(q != p and set(q.A) <= set(p.A) and set(q.B) <= set(p.B) for q in candidates)
    ]
    if not minimal:
        return None
    if len(minimal) > 1:
        raise StructuralError(f"no unique minimal pair around ({a0}, {a1}): {minimal}")
    return minimal[0]


def laminar_by_enumeration(G: Trigraph, cap: int = DEFAULT_HPOSC_CAP) -> bool:
    return not enumerate_hposcs(G, "square_connected", cap)


def _clique_partitions(T: _Tables) -> Iterator[list[list[int]]]:
    parts: list[list[int]] = []

    def place(v: int):
        if v == T.n:
            yield [list(p) for p in parts]
            return
        for p in parts:
            if all(T.strong(u, v) for u in p):
                p.append(v)
                yield from place(v + 1)
                p.pop()
        parts.append([v])
        yield from place(v + 1)
        parts.pop()

    yield from place(0)


def enumerate_antithickenings(
    G: Trigraph, cap: int = DEFAULT_PARTITION_CAP
) -> list[tuple[Trigraph, ThickeningMap]]:
    """Every partition of V(G) into strong cliques that yields a valid quotient.

    Part pairs that are uniformly strong or strongly anti keep that value;
    mixed pairs become semiedges and must form a matching over the parts.
    """
    _cap("enumerate_antithickenings", G.n, cap)
    T = _Tables(G)
    out = []
    for parts in _clique_partitions(T):
        k = len(parts)
        strong, semi = [], []
        semi_deg = [0] * k
        ok = True
        for i in range(k):
            for j in range(i + 1, k):
                vals = {T.t[u][v] for u in parts[i] for v in parts[j]}
                if vals == {1}:
                    strong.append((i, j))
                elif vals == {-1}:
                    continue
                else:
                    semi.append((i, j))
                    semi_deg[i] += 1
                    semi_deg[j] += 1
                    if semi_deg[i] > 1 or semi_deg[j] > 1:
                        ok = False
                        break
            if not ok:
                break
        if ok:
            out.append((Trigraph(k, strong, semi), ThickeningMap(G.n, tuple(map(tuple, parts)))))
    return out


def optimal_antithickenings(
    G: Trigraph, cap: int = DEFAULT_PARTITION_CAP
) -> list[tuple[Trigraph, ThickeningMap]]:
    """Laminar antithickenings with the maximum number of vertices."""
    candidates = enumerate_antithickenings(G, cap)
    by_size: dict[int, list] = {}
    for q, m in candidates:
        by_size.setdefault(q.n, []).append((q, m))
    for size in sorted(by_size, reverse=True):
        found = [(q, m) for q, m in by_size[size] if laminar_by_enumeration(q, max(cap, q.n))]
        if found:
            return found
    return []


def find_isomorphism(G1: Trigraph, G2: Trigraph, cap: int = DEFAULT_ISO_CAP) -> list[int] | None:
    """A bijection ``f`` with ``theta2(f(u), f(v)) == theta1(u, v)``, or None."""
    _cap("are_isomorphic", max(G1.n, G2.n), cap)
    if G1.n != G2.n:
        return None
    T1, T2 = _Tables(G1), _Tables(G2)
    n = G1.n

    def signature(T: _Tables, v: int) -> tuple[int, int]:
        row = T.t[v]
        return (
            sum(1 for u in range(n) if u != v and row[u] == 1),
            sum(1 for u in range(n) if u != v and row[u] == 0),
        )

    sig1 = [signature(T1, v) for v in range(n)]
    sig2 = [signature(T2, v) for v in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None
    order = sorted(range(n), key=lambda v: (-sig1[v][0], -sig1[v][1], v))
    image = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or sig2[w] != sig1[v]:
                continue
            if all(T2.t[w][image[u]] == T1.t[v][u] for u in order[:i]):
                image[v], used[w] = w, True
                if extend(i + 1):
                    return True
                image[v], used[w] = -1, False
        return False

    return image if extend(0) else None


def are_isomorphic(G1: Trigraph, G2: Trigraph, cap: int = DEFAULT_ISO_CAP) -> bool:
    return find_isomorphism(G1, G2, cap) is not None


# -- catalogs ----------------------------------------------------------------


def _matchings(pairs: list[tuple[int, int]], start: int = 0, used: frozenset = frozenset()):
    yield ()
    for i in range(start, len(pairs)):
        u, v = pairs[i]
        if u in used or v in used:
            continue
        for rest in _matchings(pairs, i + 1, used | {u, v}):
            yield ((u, v),) + rest


def _fill(n: int, semi: tuple[tuple[int, int], ...]) -> Iterator[Trigraph]:
    free = [p for p in itertools.combinations(range(n), 2) if p not in semi]
    for bits in range(1 << len(free)):
        strong = [p for i, p in enumerate(free) if bits >> i & 1]
        yield Trigraph(n, strong, semi)


def iter_trigraphs(n: int) -> Iterator[Trigraph]:
    """Every trigraph on ``0..n-1`` (semiedges forming a matching)."""
    pairs = list(itertools.combinations(range(n), 2))
    for semi in _matchings(pairs):
        yield from _fill(n, semi)


def iter_trigraph_representatives(n: int) -> Iterator[Trigraph]:
    """Trigraphs covering every isomorphism class on ``n`` vertices.

    Semiedges are fixed to ``(0,1), (2,3), ...``; every trigraph is isomorphic
    to one whose matching has that shape.
    """
    for k in range(n // 2 + 1):
        yield from _fill(n, tuple((2 * i, 2 * i + 1) for i in range(k)))


def random_trigraph(n: int, rng: random.Random, p_strong: float = 0.5, p_semi: float = 0.15) -> Trigraph:
    """Independent pair values, with semiedges thinned to a matching."""
    strong, semi = [], []
    matched: set[int] = set()
    for u, v in itertools.combinations(range(n), 2):
        r = rng.random()
        if r < p_semi and u not in matched and v not in matched:
            semi.append((u, v))
            matched |= {u, v}
        elif r < p_semi + p_strong:
            strong.append((u, v))
    return Trigraph(n, strong, semi)
