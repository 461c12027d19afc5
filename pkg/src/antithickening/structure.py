"""Squares, homogeneous sets and homogeneous pairs of strong cliques (HPOSCs).

Everything here is a pure classifier over an immutable :class:`Trigraph`.
Vertex sets are passed as any iterable of indices; pairs as :class:`CliquePair`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from ._unionfind import DisjointSet
from .exceptions import DomainError
from .trigraph import (
    SEMI,
    STRONG,
    STRONG_ANTI,
    AdjacencyValue,
    Trigraph,
    is_strong_clique,
    iter_bits,
    mask_of,
)

__all__ = [
    "CliquePair",
    "is_square",
    "iter_squares",
    "contains_square",
    "is_homogeneous_set",
    "is_hposc",
    "is_deletion_minimal",
    "is_square_connected",
    "have_skew_intersection",
    "set_relation",
]


@dataclass(frozen=True)
class CliquePair:
    """Ordered pair ``(A, B)`` of disjoint nonempty vertex sets.

    Both sides are normalised to ascending tuples.
    """

    A: tuple[int, ...]
    B: tuple[int, ...]

    def __post_init__(self):
        a = tuple(sorted(set(self.A)))
        b = tuple(sorted(set(self.B)))
        if not a or not b:
            raise DomainError("both sides of a clique pair must be nonempty")
        if set(a) & set(b):
            raise DomainError(f"sides of a clique pair must be disjoint: {a} / {b}")
        object.__setattr__(self, "A", a)
        object.__setattr__(self, "B", b)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.A + self.B))

    @property
    def mask_a(self) -> int:
        return mask_of(self.A)

    @property
    def mask_b(self) -> int:
        return mask_of(self.B)

    def swapped(self) -> "CliquePair":
        return CliquePair(self.B, self.A)

    def canonical(self) -> "CliquePair":
        """Orientation with the smallest vertex on the A side."""
        return self if self.A[0] < self.B[0] else self.swapped()

    def contains(self, other: "CliquePair") -> bool:
        """True if ``other`` sits inside this pair, in either orientation."""
        sa, sb = set(self.A), set(self.B)
        return (sa.issuperset(other.A) and sb.issuperset(other.B)) or (
            sa.issuperset(other.B) and sb.issuperset(other.A)
        )

    def __len__(self) -> int:
        return len(self.A) + len(self.B)


def _square_codes(G: Trigraph, v1: int, v2: int, v3: int, v4: int) -> bool:
    c = G.code
    return (
        c(v1, v2) >= 0
        and c(v2, v3) >= 0
        and c(v3, v4) >= 0
        and c(v4, v1) >= 0
        and c(v1, v3) <= 0
        and c(v2, v4) <= 0
    )


def is_square(G: Trigraph, v1: int, v2: int, v3: int, v4: int) -> bool:
    """Whether ``v1 v2 v3 v4`` in this cyclic order is a square.

    The diagonals ``v1v3`` and ``v2v4`` must be antiadjacent and the four
    cycle pairs adjacent.
    """
    if len({v1, v2, v3, v4}) != 4:
        raise DomainError("a square needs four distinct vertices")
    for v in (v1, v2, v3, v4):
        if not 0 <= v < G.n:
            raise DomainError(f"vertex {v} out of range")
    return _square_codes(G, v1, v2, v3, v4)


def iter_squares(G: Trigraph, S: Iterable[int] | None = None) -> Iterator[tuple[int, int, int, int]]:
    """Every square inside ``S`` exactly once, in canonical lexicographic order.

    The canonical witness starts at the square's smallest vertex and walks in
    the direction of its smaller cycle neighbour (``v2 < v4``).
    """
    verts = sorted(set(range(G.n) if S is None else S))
    mask = mask_of(verts)
    for v1 in verts:
        above = mask >> (v1 + 1) << (v1 + 1)
        nbrs = G.adjacent_mask(v1) & above
        antis = G.antiadjacent_mask(v1) & above
        for v2 in iter_bits(nbrs):
            for v3 in iter_bits(antis & G.adjacent_mask(v2)):
                for v4 in iter_bits(nbrs & G.adjacent_mask(v3) & G.antiadjacent_mask(v2)):
                    if v4 > v2:
                        yield (v1, v2, v3, v4)


def contains_square(G: Trigraph, S: Iterable[int] | None = None) -> tuple[int, int, int, int] | None:
    return next(iter_squares(G, S), None)


def set_relation(G: Trigraph, X: Iterable[int], Y: Iterable[int]) -> AdjacencyValue:
    """STRONG if X is strongly complete to Y, STRONG_ANTI if strongly
    anticomplete, SEMI otherwise (the "mixed" case)."""
    ym = mask_of(Y)
    complete = anti = True
    for x in X:
        if G.strong_mask(x) & ym != ym:
            complete = False
        if G.adjacent_mask(x) & ym:
            anti = False
        if not complete and not anti:
            return SEMI
    if complete:
        return STRONG
    return STRONG_ANTI if anti else SEMI


def _uniform_to(G: Trigraph, v: int, mask: int) -> bool:
    return G.strong_mask(v) & mask == mask or G.adjacent_mask(v) & mask == 0


def is_homogeneous_set(G: Trigraph, X: Iterable[int]) -> bool:
    xm = mask_of(X)
    size = bin(xm).count("1")
    if not 2 <= size < G.n:
        return False
    return all(_uniform_to(G, v, xm) for v in iter_bits(G.full_mask & ~xm))


def is_hposc(G: Trigraph, P: CliquePair) -> bool:
    if len(P.A) == 1 and len(P.B) == 1:
        return False
    for v in P.A + P.B:
        if not 0 <= v < G.n:
            raise DomainError(f"vertex {v} out of range")
    if not (is_strong_clique(G, P.A) and is_strong_clique(G, P.B)):
        return False
    am, bm = P.mask_a, P.mask_b
    outside = G.full_mask & ~(am | bm)
    return all(_uniform_to(G, v, am) and _uniform_to(G, v, bm) for v in iter_bits(outside))


def is_deletion_minimal(G: Trigraph, P: CliquePair) -> bool:
    if not is_hposc(G, P):
        return False
    am, bm = P.mask_a, P.mask_b
    if any(_uniform_to(G, v, bm) for v in P.A) or any(_uniform_to(G, v, am) for v in P.B):
        return False
    return contains_square(G, P.vertices) is not None


def is_square_connected(G: Trigraph, P: CliquePair) -> bool:
    """Every bipartition of A (and of B) is crossed by a square in A u B.

    Checked as connectivity of each side under "lies in a common square".
    """
    if not is_hposc(G, P):
        raise DomainError(f"{P} is not a homogeneous pair of strong cliques")
    # A and B are strong cliques, so any square inside A u B has its two
    # A-vertices adjacent on the cycle: a a' b' b with a~b, a'~b', a!~b', a'!~b.
    dsu = DisjointSet(G.n)
    c = G.code
    A, B = P.A, P.B
    for i, a in enumerate(A):
        for a2 in A[i + 1:]:
            for b in B:
                if c(a, b) < 0 or c(a2, b) > 0:
                    continue
                for b2 in B:
                    if b2 != b and c(a2, b2) >= 0 and c(a, b2) <= 0:
                        dsu.union(a, a2)
                        dsu.union(b, b2)
    return all(dsu.connected(A[0], a) for a in A) and all(dsu.connected(B[0], b) for b in B)


def have_skew_intersection(P1: CliquePair, P2: CliquePair) -> bool:
    """A part of one pair meets both parts of the other."""
    a1, b1, a2, b2 = set(P1.A), set(P1.B), set(P2.A), set(P2.B)
    return bool(
        (a1 & a2 and a1 & b2)
        or (b1 & a2 and b1 & b2)
        or (a2 & a1 and a2 & b1)
        or (b2 & a1 and b2 & b1)
    )
