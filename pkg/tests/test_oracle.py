import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from antithickening import (
    CapExceeded,
    CliquePair,
    Trigraph,
    compose_thickenings,
    gen_cliques_matching,
    gen_named,
    verify_thickening,
)
from antithickening import oracle
from antithickening.structure import contains_square

from catalogs import trigraphs

A0, A1, A2, B0, B1, B2 = range(6)


def relabel(G, perm):
    return Trigraph(
        G.n,
        [(perm[u], perm[v]) for u, v in G.strong_edges()],
        [(perm[u], perm[v]) for u, v in G.semiedges()],
    )


class TestEnumerateHposcs:
    def test_c6s(self):
        assert oracle.enumerate_hposcs(gen_named("C6S"), "square_connected") == []

    def test_cm3(self):
        sc = oracle.enumerate_hposcs(gen_cliques_matching(3), "square_connected")
        mins = oracle.minimal_pairs(sc)
        expect = [CliquePair([i, j], [i + 3, j + 3]) for i, j in itertools.combinations(range(3), 2)]
        assert set(mins) == set(expect) and len(mins) == 3
        assert CliquePair([A0, A1, A2], [B0, B1, B2]) in sc
        assert all(len(P) == 4 for P in mins)

    def test_dm8(self):
        sc = oracle.enumerate_hposcs(gen_named("DM8"), "square_connected")
        assert CliquePair(range(4), range(4, 8)) not in sc
        assert CliquePair([0, 1], [4, 5]) in sc
        assert CliquePair([2, 3], [6, 7]) in sc
        dm = oracle.enumerate_hposcs(gen_named("DM8"), "deletion_minimal")
        assert CliquePair(range(4), range(4, 8)) in dm

    def test_kinds_nested(self):
        for name in ("T8", "DM8", "C4S"):
            G = gen_named(name)
            a = set(oracle.enumerate_hposcs(G, "all"))
            d = set(oracle.enumerate_hposcs(G, "deletion_minimal"))
            s = set(oracle.enumerate_hposcs(G, "square_connected"))
            assert s <= d <= a

    def test_cap(self):
        with pytest.raises(CapExceeded):
            oracle.enumerate_hposcs(gen_cliques_matching(8), cap=14)
        assert oracle.enumerate_hposcs(gen_cliques_matching(8), "square_connected", cap=16)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            oracle.enumerate_hposcs(gen_named("C6S"), "some")


class TestMinimalContaining:
    def test_examples(self):
        assert oracle.minimal_hposc_containing(gen_cliques_matching(3), A0, A1) == CliquePair([A0, A1], [B0, B1])
        assert oracle.minimal_hposc_containing(gen_named("C6S"), 0, 1) is None
        assert oracle.minimal_hposc_containing(gen_named("T8"), 0, 1) == CliquePair([0, 1], [2, 3])
        assert oracle.minimal_hposc_containing(gen_cliques_matching(3), A0, B0) is None

    def test_needs_square_on_the_seed(self):
        # seed 0,1 is complete to B={4}; the only square lives on 2,3 / 4,5
        G = Trigraph(
            6,
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 5),
             (0, 4), (1, 4), (2, 4), (3, 5), (0, 5), (1, 5)],
        )
        assert contains_square(G) is not None
        assert oracle.minimal_hposc_containing(G, 0, 1) is None


class TestLaminar:
    def test_examples(self):
        assert oracle.laminar_by_enumeration(gen_named("C6S"))
        assert not oracle.laminar_by_enumeration(gen_named("T8"))
        assert oracle.laminar_by_enumeration(gen_named("C6SEMI"))


class TestAntithickenings:
    @given(trigraphs(max_n=6))
    def test_singletons_present(self, G):
        found = oracle.enumerate_antithickenings(G)
        assert any(I.parts == tuple((v,) for v in range(G.n)) and Q == G for Q, I in found)

    @given(trigraphs(max_n=6))
    def test_every_result_is_a_thickening(self, G):
        for Q, I in oracle.enumerate_antithickenings(G):
            assert verify_thickening(Q, I, G)

    def test_c4s_two_optima(self):
        found = oracle.enumerate_antithickenings(gen_named("C4S"))
        partitions = {I.parts for _, I in found}
        assert ((0, 2), (1, 3)) not in partitions
        assert ((0, 1), (2, 3)) in partitions and ((0, 3), (1, 2)) in partitions
        opt = oracle.optimal_antithickenings(gen_named("C4S"))
        assert {I.parts for _, I in opt} == {((0, 1), (2, 3)), ((0, 3), (1, 2))}
        assert all(Q == Trigraph(2, semi=[(0, 1)]) for Q, _ in opt)

    def test_t8(self):
        found = oracle.enumerate_antithickenings(gen_named("T8"))
        c6semi = gen_named("C6SEMI")
        assert any(oracle.are_isomorphic(Q, c6semi) for Q, _ in found)
        opt = oracle.optimal_antithickenings(gen_named("T8"))
        assert len(opt) == 1 and oracle.are_isomorphic(opt[0][0], c6semi)

    def test_chains_compose(self):
        # G'' -> G' -> G along two enumerated antithickenings
        G = gen_named("T8")
        for Q1, I2 in oracle.enumerate_antithickenings(G)[:40]:
            for Q2, I1 in oracle.enumerate_antithickenings(Q1)[:10]:
                assert verify_thickening(Q2, compose_thickenings(I1, I2), G)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            oracle.enumerate_antithickenings(gen_cliques_matching(5))


class TestIsomorphism:
    def test_examples(self):
        T8 = gen_named("T8")
        assert oracle.are_isomorphic(T8, T8)
        assert not oracle.are_isomorphic(gen_named("C6S"), gen_named("C6SEMI"))
        assert oracle.are_isomorphic(gen_cliques_matching(2), gen_named("C4S"))

    @given(trigraphs(max_n=7), st.integers(0, 2**16))
    def test_relabelled_copy(self, G, seed):
        perm = list(range(G.n))
        random.Random(seed).shuffle(perm)
        H = relabel(G, perm)
        f = oracle.find_isomorphism(G, H)
        assert f is not None
        for u, v in itertools.combinations(range(G.n), 2):
            assert H.theta(f[u], f[v]) == G.theta(u, v)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            oracle.are_isomorphic(gen_cliques_matching(6), gen_cliques_matching(6))


class TestCatalogs:
    def test_counts(self):
        # sum over matchings M of 2^(C(n,2) - |M|)
        assert sum(1 for _ in oracle.iter_trigraphs(3)) == 8 + 3 * 4
        assert sum(1 for _ in oracle.iter_trigraphs(5)) == 9984

    def test_representatives_cover_n6(self):
        reps = list(oracle.iter_trigraph_representatives(6))
        assert len(reps) == 61440
        assert len(set(reps)) == len(reps)

    def test_random_trigraph_deterministic(self):
        a = oracle.random_trigraph(7, random.Random(5))
        b = oracle.random_trigraph(7, random.Random(5))
        assert a == b
