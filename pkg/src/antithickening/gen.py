"""Instance generators: the thickening operator and named fixture families.

Fixture vertex numbering
------------------------
``C4S`` / ``C6S``
    Cycles ``0-1-...-(k-1)-0`` with strong cycle edges.
``C6SEMI``
    ``C6S`` with the pair ``(0, 1)`` turned semi.
``T8``
    ``C6SEMI`` thickened with parts ``{0,1}`` (from vertex 0) and ``{2,3}``
    (from vertex 1) joined by the crossed pattern; vertices 2..5 of
    ``C6SEMI`` become 4..7.
``DM8``
    A standalone pair ``A = {0..3}``, ``B = {4..7}``: deletion-minimal, but
    its two squares never cross the split ``{0,1} | {2,3}``.
``C4_JOIN_C5``
    ``C4S`` on 0..3 strongly complete to a strong 5-cycle on 4..8.
``TRI``
    A strong triangle.
``CM(k)``
    :func:`gen_cliques_matching`; ``a_i = i`` and ``b_i = k + i``.
"""

from __future__ import annotations

import itertools
import random
from typing import Mapping, NamedTuple, Sequence

from .antithicken import ThickeningMap, is_laminar
from .exceptions import DomainError, SamplingBudgetExceeded
from .structure import CliquePair, contains_square, is_square_connected
from .trigraph import STRONG, STRONG_ANTI, AdjacencyValue, Trigraph, classify, is_connected

__all__ = [
    "CROSSED",
    "STAIRCASE",
    "ThickenResult",
    "thicken",
    "gen_cliques_matching",
    "gen_named",
    "NAMED",
    "gen_random_laminar_base",
    "pattern_is_square_connected",
    "random_square_connected_pattern",
    "random_thickening_spec",
]

S, A_ = int(STRONG), int(STRONG_ANTI)

CROSSED = ((S, A_), (A_, S))
"""Smallest square-containing cross-pattern."""

STAIRCASE = ((S, S), (A_, S))
"""A mixed 2x2 half-graph pattern with no square."""


class ThickenResult(NamedTuple):
    graph: Trigraph
    map: ThickeningMap
    square_containing: dict[tuple[int, int], bool]


def _coerce(entry) -> int:
    if isinstance(entry, str):
        return int(AdjacencyValue.from_symbol(entry))
    value = int(entry)
    if value not in (-1, 0, 1):
        raise DomainError(f"invalid pattern entry {entry!r}")
    return value


def thicken(
    Gp: Trigraph,
    sizes: Sequence[int] | Mapping[int, int] | None = None,
    patterns: Mapping[tuple[int, int], Sequence[Sequence]] | None = None,
) -> ThickenResult:
    """Expand every vertex ``v`` of ``Gp`` into a strong clique of ``sizes[v]`` vertices.

    Strong and strongly anti pairs become strongly complete / anticomplete
    part pairs.  Each semiedge ``(u, v)`` needs a ``sizes[u] x sizes[v]``
    pattern of strong / strong-anti entries that is neither all strong nor
    all anti; a semiedge between two singleton parts may be left without a
    pattern and stays a semiedge.  Parts are numbered consecutively in vertex
    order.
    """
    n = Gp.n
    if sizes is None:
        size = [1] * n
    elif isinstance(sizes, Mapping):
        size = [int(sizes.get(v, 1)) for v in range(n)]
    else:
        size = [int(s) for s in sizes]
    if len(size) != n or any(s < 1 for s in size):
        raise DomainError("every vertex needs a part size >= 1")
    patterns = dict(patterns or {})
    offsets = list(itertools.accumulate([0] + size))
    parts = tuple(tuple(range(offsets[v], offsets[v + 1])) for v in range(n))
    strong: list[tuple[int, int]] = []
    semi: list[tuple[int, int]] = []
    for p in parts:
        strong.extend(itertools.combinations(p, 2))
    report: dict[tuple[int, int], bool] = {}
    for u in range(n):
        for v in range(u + 1, n):
            t = Gp.code(u, v)
            if t == 1:
                strong.extend(itertools.product(parts[u], parts[v]))
            elif t == 0:
                pat = patterns.pop((u, v), None)
                if pat is None and (v, u) in patterns:
                    pat = [list(col) for col in zip(*patterns.pop((v, u)))]
                if pat is None:
                    if size[u] == size[v] == 1:
                        semi.append((parts[u][0], parts[v][0]))
                        report[(u, v)] = False
                        continue
                    raise DomainError(f"semiedge ({u}, {v}) needs a cross-pattern")
                rows = [[_coerce(e) for e in row] for row in pat]
                if len(rows) != size[u] or any(len(r) != size[v] for r in rows):
                    raise DomainError(f"pattern for ({u}, {v}) must be {size[u]}x{size[v]}")
                flat = [e for r in rows for e in r]
                if size[u] == size[v] == 1 and flat == [0]:
                    semi.append((parts[u][0], parts[v][0]))
                    report[(u, v)] = False
                    continue
                if 0 in flat:
                    raise DomainError(f"pattern for ({u}, {v}) has a semi entry")
                if all(e == 1 for e in flat) or all(e == -1 for e in flat):
                    raise DomainError(f"pattern for ({u}, {v}) is uniform; a semiedge must stay mixed")
                for i, x in enumerate(parts[u]):
                    for j, y in enumerate(parts[v]):
                        if rows[i][j] == 1:
                            strong.append((x, y))
                report[(u, v)] = contains_square(_pair_trigraph(rows)) is not None
    if patterns:
        raise DomainError(f"patterns given for non-semiedges: {sorted(patterns)}")
    G = Trigraph(offsets[-1], strong, semi)
    return ThickenResult(G, ThickeningMap(G.n, parts), report)


def _pair_trigraph(rows: Sequence[Sequence[int]]) -> Trigraph:
    """Two strong cliques joined by ``rows`` (entries +1 / -1)."""
    p, q = len(rows), len(rows[0])
    strong = list(itertools.combinations(range(p), 2))
    strong += list(itertools.combinations(range(p, p + q), 2))
    strong += [(i, p + j) for i in range(p) for j in range(q) if rows[i][j] == 1]
    return Trigraph(p + q, strong)


def pattern_is_square_connected(rows: Sequence[Sequence[int]]) -> bool:
    """Whether the pair of cliques joined by ``rows`` is square-connected."""
    rows = [[_coerce(e) for e in r] for r in rows]
    p, q = len(rows), len(rows[0])
    if p < 2 or q < 2:
        return False
    G = _pair_trigraph(rows)
    return is_square_connected(G, CliquePair(range(p), range(p, p + q)))


def random_square_connected_pattern(p: int, q: int, rng: random.Random, budget: int = 1000):
    for _ in range(budget):
        rows = tuple(tuple(rng.choice((S, A_)) for _ in range(q)) for _ in range(p))
        if pattern_is_square_connected(rows):
            return rows
    raise SamplingBudgetExceeded(f"no square-connected {p}x{q} pattern in {budget} draws")


def random_thickening_spec(
    Gp: Trigraph, rng: random.Random, max_size: int = 3, keep_prob: float = 0.2
) -> tuple[list[int], dict[tuple[int, int], tuple]]:
    """Part sizes and square-connected patterns for every semiedge of ``Gp``.

    Vertices not on a semiedge keep size 1; each semiedge is left alone with
    probability ``keep_prob``, otherwise both ends grow to 2..max_size.
    """
    sizes = [1] * Gp.n
    patterns = {}
    for u, v in Gp.semiedges():
        if rng.random() < keep_prob:
            continue
        sizes[u] = rng.randint(2, max_size)
        sizes[v] = rng.randint(2, max_size)
        patterns[(u, v)] = random_square_connected_pattern(sizes[u], sizes[v], rng)
    return sizes, patterns


def gen_cliques_matching(k: int) -> Trigraph:
    """Two strong k-cliques joined by a strong perfect matching."""
    if k < 2:
        raise DomainError("k must be at least 2")
    strong = list(itertools.combinations(range(k), 2))
    strong += list(itertools.combinations(range(k, 2 * k), 2))
    strong += [(i, k + i) for i in range(k)]
    return Trigraph(2 * k, strong)


def _cycle(k: int, offset: int = 0) -> list[tuple[int, int]]:
    return [(offset + i, offset + (i + 1) % k) for i in range(k)]


def _c6semi() -> Trigraph:
    return Trigraph(6, _cycle(6)[1:], [(0, 1)])


def _t8() -> Trigraph:
    return thicken(_c6semi(), [2, 2, 1, 1, 1, 1], {(0, 1): CROSSED}).graph


def _dm8() -> Trigraph:
    a, b = range(4), range(4, 8)
    cross_strong = [(0, 4), (1, 5), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 7)]
    strong = list(itertools.combinations(a, 2)) + list(itertools.combinations(b, 2)) + cross_strong
    return Trigraph(8, strong)


def _c4_join_c5() -> Trigraph:
    strong = _cycle(4) + _cycle(5, 4) + [(i, j) for i in range(4) for j in range(4, 9)]
    return Trigraph(9, strong)


NAMED = {
    "C4S": lambda: Trigraph(4, _cycle(4)),
    "C6S": lambda: Trigraph(6, _cycle(6)),
    "C6SEMI": _c6semi,
    "T8": _t8,
    "DM8": _dm8,
    "C4_JOIN_C5": _c4_join_c5,
    "TRI": lambda: Trigraph(3, _cycle(3)),
}


def gen_named(name: str) -> Trigraph:
    try:
        return NAMED[name.upper()]()
    except KeyError:
        raise DomainError(f"unknown fixture {name!r}; choose from {sorted(NAMED)}") from None


def _circular_interval(n: int, rng: random.Random) -> list[tuple[int, int]]:
    edges = set()
    for _ in range(rng.randint(n // 2, n)):
        start = rng.randrange(n)
        length = rng.randint(2, max(2, n // 3))
        arc = [(start + i) % n for i in range(length)]
        for u, v in itertools.combinations(arc, 2):
            edges.add((min(u, v), max(u, v)))
    return sorted(edges)


def _line_graph(n: int, rng: random.Random) -> list[tuple[int, int]]:
    h = rng.randint(max(3, n // 2), n)
    all_pairs = list(itertools.combinations(range(h), 2))
    if len(all_pairs) < n:
        return []
    root_edges = rng.sample(all_pairs, n)
    return [
        (i, j)
        for i, j in itertools.combinations(range(n), 2)
        if set(root_edges[i]) & set(root_edges[j])
    ]


def gen_random_laminar_base(n: int, seed: int, budget: int = 5000) -> Trigraph:
    """Connected, non-degenerate, laminar trigraph on ``n`` vertices.

    Rejection sampling: a circular-interval or line-graph skeleton, then up
    to ``n // 4`` of its strong edges (a matching) turned semi.  Deterministic
    in ``(n, seed)``.
    """
    if n < 4:
        raise DomainError("n must be at least 4")
    rng = random.Random(seed)
    for _ in range(budget):
        skeleton = _circular_interval if rng.random() < 0.5 else _line_graph
        edges = skeleton(n, rng)
        if not edges:
            continue
        perm = list(range(n))
        rng.shuffle(perm)
        edges = sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges)
        semi, matched = [], set()
        target = rng.randint(0, n // 4)
        for u, v in rng.sample(edges, len(edges)):
            if len(semi) >= target:
                break
            if u not in matched and v not in matched:
                semi.append((u, v))
                matched |= {u, v}
        strong = [e for e in edges if e not in semi]
        G = Trigraph(n, strong, semi)
        if not is_connected(G) or classify(G).degenerate:
            continue
        if is_laminar(G):
            return G
    raise SamplingBudgetExceeded(f"no laminar base with n={n}, seed={seed} within {budget} attempts")
