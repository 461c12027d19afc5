"""Shared trigraph catalogs and strategies for the test suite."""

import itertools
import random
from functools import lru_cache

from hypothesis import assume
from hypothesis import strategies as st

from antithickening import Trigraph, is_connected, thicken
from antithickening import oracle

FIXTURE_NAMES = ("C4S", "C6S", "C6SEMI", "T8", "DM8", "C4_JOIN_C5", "TRI")

# seeds for the sampled n in {6, 7} catalog; fixed so every run sees the same graphs
SAMPLE_SEED = 20240611
SAMPLES_PER_N = 300


@st.composite
def trigraphs(draw, min_n=1, max_n=7, connected=False):
    """Random trigraph with a valid semiedge matching."""
    n = draw(st.integers(min_n, max_n))
    strong, semi, used = [], [], set()
    for u, v in itertools.combinations(range(n), 2):
        t = draw(st.sampled_from((1, 1, 0, -1, -1)))
        if t == 0 and (u in used or v in used):
            t = -1
        if t == 1:
            strong.append((u, v))
        elif t == 0:
            semi.append((u, v))
            used |= {u, v}
    G = Trigraph(n, strong, semi)
    if connected:
        assume(is_connected(G))
    return G


@lru_cache(maxsize=None)
def connected_catalog(max_n: int = 5) -> tuple:
    return tuple(
        G for n in range(1, max_n + 1) for G in oracle.iter_trigraphs(n) if is_connected(G)
    )


@lru_cache(maxsize=None)
def sampled_catalog(n: int, count: int = SAMPLES_PER_N, seed: int = SAMPLE_SEED) -> tuple:
    """Connected trigraphs on n vertices, reproducible from (n, seed).

    Every other sample is a random trigraph on n - 2 vertices whose first
    semiedge is blown up into two 2-cliques with a random mixed pattern, so
    the catalog is not dominated by pair-free graphs.
    """
    rng = random.Random(seed * 31 + n)
    out = []
    while len(out) < count:
        if len(out) % 2 == 0:
            G = oracle.random_trigraph(n, rng, p_strong=rng.choice((0.4, 0.55, 0.7)))
        else:
            base = oracle.random_trigraph(n - 2, rng, p_semi=0.3)
            semis = list(base.semiedges())
            if not semis:
                continue
            u, v = semis[0]
            sizes = [1] * base.n
            sizes[u] = sizes[v] = 2
            while True:
                pat = [[rng.choice((1, -1)) for _ in range(2)] for _ in range(2)]
                if len({e for row in pat for e in row}) == 2:
                    break
            G = thicken(base, sizes, {(u, v): pat}).graph
        if is_connected(G):
            out.append(G)
    return tuple(out)


def thickened_instance(seed: int, n_range=(5, 9)):
    """(base, thickened graph, map) from a laminar base, or None if unusable.

    Every thickened semiedge gets a square-connected pattern.
    """
    from antithickening import classify, gen_random_laminar_base
    from antithickening.gen import random_thickening_spec

    rng = random.Random(seed)
    base = gen_random_laminar_base(rng.randint(*n_range), seed)
    sizes, patterns = random_thickening_spec(base, random.Random(seed + 10_007))
    res = thicken(base, sizes, patterns)
    G = res.graph
    if not is_connected(G) or classify(G).degenerate:
        return None
    return base, G, res.map


@st.composite
def thickened_instances(draw):
    inst = draw(st.integers(0, 10**6).map(thickened_instance))
    assume(inst is not None)
    return inst
