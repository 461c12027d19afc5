"""Trigraph representation and the global predicates used to classify degeneracy.

A trigraph on vertices ``0..n-1`` assigns every unordered pair of distinct
vertices one of three values: strongly adjacent, semiadjacent or strongly
antiadjacent.  Semiadjacent pairs (semiedges) must form a matching.

Internally each vertex carries two bitmasks (strong neighbours and all
adjacent neighbours) plus a dense row of codes, so pair lookups are O(1) and
neighbourhood scans are O(deg).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator, Sequence

from .exceptions import DomainError

__all__ = [
    "AdjacencyValue",
    "STRONG",
    "SEMI",
    "STRONG_ANTI",
    "Trigraph",
    "Classification",
    "theta",
    "complement",
    "is_connected",
    "is_strong_clique",
    "is_strong_stable",
    "is_claw_free",
    "is_cobipartite",
    "is_quasi_line",
    "has_stable_triple",
    "classify",
    "induced",
    "iter_bits",
    "mask_of",
]


class AdjacencyValue(IntEnum):
    STRONG_ANTI = -1
    SEMI = 0
    STRONG = 1

    def __neg__(self) -> "AdjacencyValue":
        return AdjacencyValue(-int(self))

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @classmethod
    def from_symbol(cls, token: str) -> "AdjacencyValue":
        try:
            return _FROM_SYMBOL[token]
        except KeyError:
            raise DomainError(f"unknown adjacency symbol {token!r}") from None


STRONG = AdjacencyValue.STRONG
SEMI = AdjacencyValue.SEMI
STRONG_ANTI = AdjacencyValue.STRONG_ANTI

_SYMBOLS = {STRONG: "strong", SEMI: "semi", STRONG_ANTI: "strong-anti"}
_FROM_SYMBOL = {v: k for k, v in _SYMBOLS.items()}


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Trigraph:
    """Immutable trigraph on vertices ``0..n-1``.

    Build one from lists of strong and semi pairs; every pair not listed is
    strongly antiadjacent.

    >>> g = Trigraph(3, strong=[(0, 1), (1, 2)], semi=[(0, 2)])
    >>> g.theta(2, 0)
    <AdjacencyValue.SEMI: 0>
    """

    __slots__ = ("n", "m", "_rows", "_strong", "_adj", "_mate", "_strong_nbrs", "_nbrs")

    def __init__(
        self,
        n: int,
        strong: Iterable[tuple[int, int]] = (),
        semi: Iterable[tuple[int, int]] = (),
    ):
        if n < 0:
            raise DomainError("vertex count must be non-negative")
        self.n = n
        rows = [[-1] * n for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        mate = [-1] * n
        for value, pairs in ((1, strong), (0, semi)):
            for u, v in pairs:
                u, v = int(u), int(v)
                if u == v:
                    raise DomainError(f"self-pair ({u}, {v})")
                if not (0 <= u < n and 0 <= v < n):
                    raise DomainError(f"pair ({u}, {v}) out of range for n={n}")
                key = (min(u, v), max(u, v))
                if key in seen:
                    raise DomainError(f"pair {key} given twice")
                seen.add(key)
                if value == 0:
                    for w in (u, v):
                        if mate[w] != -1:
                            raise DomainError(
                                f"semiedges must form a matching: vertex {w} "
                                f"is semiadjacent to {mate[w]} and {u + v - w}"
                            )
                    mate[u], mate[v] = v, u
                rows[u][v] = rows[v][u] = value
        for v in range(n):
            rows[v][v] = 0
        self._rows = rows
        self._mate = mate
        self._finish()

    def _finish(self) -> None:
        n, rows = self.n, self._rows
        strong = [0] * n
        adj = [0] * n
        for u in range(n):
            row = rows[u]
            s = a = 0
            for v in range(n):
                if v == u:
                    continue
                if row[v] == 1:
                    s |= 1 << v
                    a |= 1 << v
                elif row[v] == 0:
                    a |= 1 << v
            strong[u], adj[u] = s, a
        self._strong = strong
        self._adj = adj
        self._strong_nbrs = [tuple(iter_bits(s)) for s in strong]
        self._nbrs = [tuple(iter_bits(a)) for a in adj]
        self.m = sum(bin(a).count("1") for a in adj) // 2

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "Trigraph":
        """Build from a symmetric square matrix of codes in {-1, 0, 1}.

        The diagonal is ignored.
        """
        n = len(matrix)
        strong, semi = [], []
        for u in range(n):
            if len(matrix[u]) != n:
                raise DomainError("matrix must be square")
            for v in range(u + 1, n):
                a, b = int(matrix[u][v]), int(matrix[v][u])
                if a != b:
                    raise DomainError(f"matrix not symmetric at ({u}, {v})")
                if a == 1:
                    strong.append((u, v))
                elif a == 0:
                    semi.append((u, v))
                elif a != -1:
                    raise DomainError(f"invalid code {a} at ({u}, {v})")
        return cls(n, strong, semi)

    def to_matrix(self) -> list[list[int]]:
        """Dense code matrix with a zero diagonal."""
        return [list(row) for row in self._rows]

    # -- pair queries -------------------------------------------------------

    def _check_pair(self, u: int, v: int) -> None:
        if u == v:
            raise DomainError(f"theta is undefined on the self-pair ({u}, {v})")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise DomainError(f"pair ({u}, {v}) out of range for n={self.n}")

    def theta(self, u: int, v: int) -> AdjacencyValue:
        self._check_pair(u, v)
        return AdjacencyValue(self._rows[u][v])

    def code(self, u: int, v: int) -> int:
        """Raw code of the pair without validation (hot paths only)."""
        return self._rows[u][v]

    def is_adjacent(self, u: int, v: int) -> bool:
        self._check_pair(u, v)
        return self._rows[u][v] >= 0

    def is_antiadjacent(self, u: int, v: int) -> bool:
        self._check_pair(u, v)
        return self._rows[u][v] <= 0

    def is_strongly_adjacent(self, u: int, v: int) -> bool:
        self._check_pair(u, v)
        return self._rows[u][v] == 1

    def is_strongly_antiadjacent(self, u: int, v: int) -> bool:
        self._check_pair(u, v)
        return self._rows[u][v] == -1

    # -- neighbourhoods -----------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Adjacent (strong or semi) vertices, ascending."""
        return self._nbrs[v]

    def strong_neighbors(self, v: int) -> tuple[int, ...]:
        return self._strong_nbrs[v]

    def semi_mate(self, v: int) -> int | None:
        w = self._mate[v]
        return None if w < 0 else w

    def strong_mask(self, v: int) -> int:
        return self._strong[v]

    def adjacent_mask(self, v: int) -> int:
        return self._adj[v]

    def antiadjacent_mask(self, v: int) -> int:
        """Vertices other than ``v`` that are semi- or strongly antiadjacent to it."""
        return self.full_mask & ~self._strong[v] & ~(1 << v)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    # -- pair listings ------------------------------------------------------

    def pairs(self) -> Iterator[tuple[int, int, AdjacencyValue]]:
        """Adjacent pairs ``(u, v, value)`` with ``u < v``, ascending."""
        for u in range(self.n):
            for v in self._nbrs[u]:
                if v > u:
                    yield u, v, AdjacencyValue(self._rows[u][v])

    def strong_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, t in self.pairs() if t == STRONG]

    def semiedges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, t in self.pairs() if t == SEMI]

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Trigraph):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.n, tuple(map(tuple, self._rows))))

    def __repr__(self) -> str:
        return (
            f"Trigraph(n={self.n}, strong={self.strong_edges()!r}, "
            f"semi={self.semiedges()!r})"
        )


@dataclass(frozen=True)
class Classification:
    connected: bool
    claw_free: bool
    quasi_line: bool
    cobipartite: bool
    alpha_ge_3: bool
    degenerate: bool
    laminar: bool | None = None

    def failed_criterion(self) -> str | None:
        """Human-readable reason the trigraph is degenerate, if it is."""
        if not self.degenerate:
            return None
        if not self.claw_free:
            return "not claw-free"
        if not self.quasi_line:
            return "claw-free with alpha <= 2 but not quasi-line"
        return "cobipartite with alpha <= 2"


def theta(G: Trigraph, u: int, v: int) -> AdjacencyValue:
    return G.theta(u, v)


def complement(G: Trigraph) -> Trigraph:
    """Negate every pair; semiedges stay semiedges."""
    strong, semi = [], []
    for u in range(G.n):
        row = G._rows[u]
        for v in range(u + 1, G.n):
            if row[v] == -1:
                strong.append((u, v))
            elif row[v] == 0:
                semi.append((u, v))
    return Trigraph(G.n, strong, semi)


def is_connected(G: Trigraph) -> bool:
    if G.n == 0:
        raise DomainError("connectivity is undefined on the empty trigraph")
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= G._adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == G.full_mask


def _as_mask(G: Trigraph, S: Iterable[int]) -> int:
    m = 0
    for v in S:
        if not 0 <= v < G.n:
            raise DomainError(f"vertex {v} out of range for n={G.n}")
        m |= 1 << v
    return m


def is_strong_clique(G: Trigraph, S: Iterable[int]) -> bool:
    mask = _as_mask(G, S)
    return all(mask & ~(1 << v) & ~G._strong[v] == 0 for v in iter_bits(mask))


def is_strong_stable(G: Trigraph, S: Iterable[int]) -> bool:
    mask = _as_mask(G, S)
    return all(mask & G._adj[v] == 0 for v in iter_bits(mask))


def _has_stable_triple_in(G: Trigraph, mask: int) -> bool:
    anti = [G.antiadjacent_mask(v) & mask for v in range(G.n)]
    for x in iter_bits(mask):
        later = anti[x] >> (x + 1) << (x + 1)
        for y in iter_bits(later):
            if (anti[y] & later) >> (y + 1):
                return True
    return False


def is_claw_free(G: Trigraph) -> bool:
    """No vertex has three pairwise antiadjacent vertices among its neighbours."""
    return not any(_has_stable_triple_in(G, G._adj[v]) for v in range(G.n))


def has_stable_triple(G: Trigraph) -> bool:
    return _has_stable_triple_in(G, G.full_mask)


def _is_cobipartite_mask(G: Trigraph, mask: int) -> bool:
    # Two strong cliques cover `mask` iff the graph of non-strong pairs on it is bipartite.
    color: dict[int, int] = {}
    for start in iter_bits(mask):
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in iter_bits(mask & ~G._strong[x] & ~(1 << x)):
                if y not in color:
                    color[y] = color[x] ^ 1
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def is_cobipartite(G: Trigraph) -> bool:
    return _is_cobipartite_mask(G, G.full_mask)


def is_quasi_line(G: Trigraph) -> bool:
    return all(_is_cobipartite_mask(G, G._adj[v]) for v in range(G.n))


def classify(G: Trigraph) -> Classification:
    claw_free = is_claw_free(G)
    quasi_line = claw_free and is_quasi_line(G)
    cobipartite = is_cobipartite(G)
    alpha3 = has_stable_triple(G)
    degenerate = not ((quasi_line and not cobipartite) or (claw_free and alpha3))
    return Classification(
        connected=is_connected(G) if G.n else False,
        claw_free=claw_free,
        quasi_line=quasi_line,
        cobipartite=cobipartite,
        alpha_ge_3=alpha3,
        degenerate=degenerate,
    )


def induced(G: Trigraph, S: Iterable[int]) -> tuple[Trigraph, tuple[int, ...]]:
    """Subtrigraph on ``S`` renumbered in ascending original order.

    Returns the subtrigraph and the tuple mapping new indices to old ones.
    """
    verts = tuple(sorted(set(S)))
    if not verts:
        raise DomainError("induced subtrigraph needs a nonempty vertex set")
    _as_mask(G, verts)
    strong, semi = [], []
    for i, u in enumerate(verts):
        row = G._rows[u]
        for j in range(i + 1, len(verts)):
            t = row[verts[j]]
            if t == 1:
                strong.append((i, j))
            elif t == 0:
                semi.append((i, j))
    return Trigraph(len(verts), strong, semi), verts
