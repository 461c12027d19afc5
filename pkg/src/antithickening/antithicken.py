"""Thickening maps and the optimal antithickening of a claw-free trigraph.

The pipeline grows a square-connected homogeneous pair of strong cliques
around every strongly adjacent seed, merges overlapping pairs, and contracts
each merged pair to a semiedge.  On connected non-degenerate input the result
is the unique laminar antithickening with the most vertices.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from .exceptions import DomainError, InputRejected, StructuralError
from .schposc import StepCounter, schposc
from .structure import CliquePair, is_hposc, set_relation
from .trigraph import STRONG, Classification, Trigraph, classify, is_connected, is_strong_clique

__all__ = [
    "ThickeningMap",
    "AntithickeningResult",
    "verify_thickening",
    "compose_thickenings",
    "find_square_connected_pair",
    "is_laminar",
    "collect_maximal_schposcs",
    "contract_pairs",
    "optimal_antithickening",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ThickeningMap:
    """Map from each vertex of a thin trigraph to a part of a thick one.

    ``parts[v]`` is the set of vertices of the thick trigraph (which has
    ``target_n`` vertices) that vertex ``v`` expands to.  The parts must
    partition ``0..target_n-1``.
    """

    target_n: int
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        parts = tuple(tuple(sorted(p)) for p in self.parts)
        seen: set[int] = set()
        for i, p in enumerate(parts):
            if not p:
                raise DomainError(f"part {i} is empty")
            for v in p:
                if not 0 <= v < self.target_n:
                    raise DomainError(f"part {i} has vertex {v} out of range")
                if v in seen:
                    raise DomainError(f"vertex {v} appears in two parts")
                seen.add(v)
        if len(seen) != self.target_n:
            missing = sorted(set(range(self.target_n)) - seen)
            raise DomainError(f"parts do not cover vertices {missing}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def identity(cls, n: int) -> "ThickeningMap":
        return cls(n, tuple((v,) for v in range(n)))

    @property
    def source_n(self) -> int:
        return len(self.parts)

    def labels(self) -> list[int]:
        """For every thick vertex, the thin vertex whose part contains it."""
        out = [0] * self.target_n
        for i, p in enumerate(self.parts):
            for v in p:
                out[v] = i
        return out

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self.parts[v]


@dataclass(frozen=True)
class AntithickeningResult:
    reduced: Trigraph
    map: ThickeningMap
    contracted_pairs: tuple[CliquePair, ...]
    classification: Classification | None = field(default=None, compare=False)

    @property
    def is_identity(self) -> bool:
        return not self.contracted_pairs


def verify_thickening(Gp: Trigraph, I: ThickeningMap, G: Trigraph) -> bool:
    """Whether ``I`` is a thickening from ``Gp`` to ``G``."""
    if I.target_n != G.n or I.source_n != Gp.n:
        raise DomainError(
            f"map arity {I.source_n}->{I.target_n} does not match trigraphs {Gp.n}->{G.n}"
        )
    if not all(is_strong_clique(G, p) for p in I.parts):
        return False
    for u in range(Gp.n):
        for v in range(u + 1, Gp.n):
            if set_relation(G, I.parts[u], I.parts[v]) != Gp.code(u, v):
                return False
    return True


def compose_thickenings(I1: ThickeningMap, I2: ThickeningMap) -> ThickeningMap:
    """Compose ``I1: G'' -> G'`` with ``I2: G' -> G`` into ``G'' -> G``."""
    if I1.target_n != I2.source_n:
        raise DomainError(f"cannot compose: {I1.target_n} != {I2.source_n}")
    return ThickeningMap(
        I2.target_n,
        tuple(tuple(sorted(v for w in p for v in I2.parts[w])) for p in I1.parts),
    )


def _strong_seeds(G: Trigraph):
    for u in range(G.n):
        for v in G.strong_neighbors(u):
            if v > u:
                yield u, v


def find_square_connected_pair(G: Trigraph) -> CliquePair | None:
    """First SCHPOSC over strongly adjacent seeds in ascending order, if any."""
    for u, v in _strong_seeds(G):
        P = schposc(G, u, v)
        if P is not None:
            return P
    return None


def is_laminar(G: Trigraph) -> bool:
    """No square-connected homogeneous pair of strong cliques.  O(m^2)."""
    return find_square_connected_pair(G) is None


class _PairForest:
    """Disjoint sets of collected pairs with a role parity per link.

    Every collected SCHPOSC gets an id whose own frame has A on side 0.
    ``parity[i]`` says whether id ``i``'s frame is swapped relative to its
    parent's; a vertex's side in its root's frame is its recorded side xor
    the accumulated parity.
    """

    def __init__(self, G: Trigraph):
        self.G = G
        self.owner = [-1] * G.n
        self.side = bytearray(G.n)
        self.parent: list[int] = []
        self.parity: list[int] = []
        self.masks: dict[int, list[int]] = {}

    def find(self, i: int) -> tuple[int, int]:
        p = 0
        path = []
        while self.parent[i] != i:
            path.append(i)
            p ^= self.parity[i]
            i = self.parent[i]
        root = i
        # path compression, keeping parities relative to the root
        acc = p
        for j in path:
            nxt_par = self.parity[j]
            self.parent[j] = root
            self.parity[j] = acc
            acc ^= nxt_par
        return root, p

    def add(self, P: CliquePair) -> None:
        new_sides = [(v, 0) for v in P.A] + [(v, 1) for v in P.B]
        flips: dict[int, int] = {}
        for v, s in new_sides:
            if self.owner[v] < 0:
                continue
            root, p = self.find(self.owner[v])
            f = self.side[v] ^ p ^ s
            if flips.setdefault(root, f) != f:
                raise StructuralError(
                    f"degenerate structure: {P} has skew intersection with a collected pair"
                )
        nid = len(self.parent)
        self.parent.append(nid)
        self.parity.append(0)
        masks = [P.mask_a, P.mask_b]
        root = nid
        for other, f in sorted(flips.items()):
            om = self.masks.pop(other)
            if f:
                om = [om[1], om[0]]
            self.parent[other] = root
            self.parity[other] = f
            masks = [masks[0] | om[0], masks[1] | om[1]]
        if masks[0] & masks[1]:
            raise StructuralError("degenerate structure: merged sides overlap")
        for m in masks:
            if not _mask_is_strong_clique(self.G, m):
                raise StructuralError("degenerate structure: merged side is not a strong clique")
        self.masks[root] = masks
        for v, s in new_sides:
            if self.owner[v] < 0:
                self.owner[v] = nid
                self.side[v] = s

    def pairs(self) -> list[CliquePair]:
        groups: dict[int, int] = {}
        for i in range(len(self.parent)):
            root, _ = self.find(i)
            groups.setdefault(root, i)
        out = []
        for root, first in sorted(groups.items(), key=lambda kv: kv[1]):
            _, p = self.find(first)
            a, b = self.masks[root]
            if p:
                a, b = b, a
            out.append(CliquePair(_bits(a), _bits(b)))
        return out


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _mask_is_strong_clique(G: Trigraph, mask: int) -> bool:
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if mask & ~low & ~G.strong_mask(v):
            return False
        m ^= low
    return True


def collect_maximal_schposcs(G: Trigraph, counter: StepCounter | None = None) -> list[CliquePair]:
    """Pairwise disjoint square-connected pairs covering every such pair of ``G``.

    Seeds are all strongly adjacent ``(u, v)``, ``u < v``, ascending.  Each
    SCHPOSC found is merged, with role alignment, into every collected pair it
    meets.  Raises :class:`StructuralError` if a merge is impossible, which
    only happens on degenerate input.
    """
    forest = _PairForest(G)
    for u, v in _strong_seeds(G):
        P = schposc(G, u, v, counter=counter)
        if P is not None:
            forest.add(P)
    return forest.pairs()


def contract_pairs(G: Trigraph, pairs: Sequence[CliquePair]) -> tuple[Trigraph, ThickeningMap]:
    """Contract each pair ``(A_i, B_i)`` to a semiedge ``a_i b_i``.

    Untouched vertices come first in ascending order, then ``a_1, b_1, a_2, ...``.
    """
    used = 0
    for P in pairs:
        pm = P.mask_a | P.mask_b
        if used & pm:
            raise StructuralError("contracted pairs must be disjoint")
        used |= pm
        if not is_hposc(G, P):
            raise StructuralError(f"{P} is not a homogeneous pair of strong cliques")
    untouched = [v for v in range(G.n) if not used >> v & 1]
    parts: list[tuple[int, ...]] = [(v,) for v in untouched]
    for P in pairs:
        parts.append(P.A)
        parts.append(P.B)
    k = len(parts)
    label = [0] * G.n
    for i, p in enumerate(parts):
        for v in p:
            label[v] = i
    strong_cnt: dict[tuple[int, int], int] = {}
    adj_cnt: dict[tuple[int, int], int] = {}
    for u, v, t in G.pairs():
        i, j = label[u], label[v]
        if i == j:
            continue
        key = (i, j) if i < j else (j, i)
        adj_cnt[key] = adj_cnt.get(key, 0) + 1
        if t == STRONG:
            strong_cnt[key] = strong_cnt.get(key, 0) + 1
    partner = {}
    base = len(untouched)
    for idx in range(len(pairs)):
        a, b = base + 2 * idx, base + 2 * idx + 1
        partner[a], partner[b] = b, a
    strong, semi = [], []
    for (i, j), adj in sorted(adj_cnt.items()):
        total = len(parts[i]) * len(parts[j])
        if strong_cnt.get((i, j), 0) == total:
            strong.append((i, j))
            continue
        # mixed: only allowed between a contracted pair's two sides, or an original semiedge
        if partner.get(i) == j or (i < base and j < base):
            semi.append((i, j))
        else:
            raise StructuralError(
                f"parts {parts[i]} and {parts[j]} are neither strongly complete nor strongly anticomplete"
            )
    for i, j in partner.items():
        if i < j and (i, j) not in semi:
            raise StructuralError(f"pair {parts[i]} / {parts[j]} is not mixed")
    reduced = Trigraph(k, strong, semi)
    return reduced, ThickeningMap(G.n, tuple(parts))


def optimal_antithickening(
    G: Trigraph,
    force: bool = False,
    recheck: bool = True,
    counter: StepCounter | None = None,
) -> AntithickeningResult:
    """The optimal antithickening of a connected trigraph.

    Degenerate input is rejected unless ``force`` is set; the forced output
    comes from the same deterministic pipeline but need not be unique.
    ``recheck`` re-verifies the map and the laminarity of the output.
    """
    if G.n == 0 or not is_connected(G):
        raise InputRejected("connected input required")
    cls = None
    if not force:
        cls = classify(G)
        if cls.degenerate:
            raise InputRejected(
                f"degenerate input ({cls.failed_criterion()}); use force to run anyway",
                classification=cls,
            )
    pairs = collect_maximal_schposcs(G, counter)
    log.debug("collected %d maximal pairs", len(pairs))
    reduced, imap = contract_pairs(G, pairs)
    if recheck:
        if not verify_thickening(reduced, imap, G):
            raise StructuralError("contraction did not produce a valid thickening map")
        if not is_laminar(reduced):
            raise StructuralError("reduced trigraph is not laminar")
    return AntithickeningResult(reduced, imap, tuple(pairs), cls)
