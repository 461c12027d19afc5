import itertools

import pytest
from hypothesis import given, settings

from antithickening import (
    CliquePair,
    DomainError,
    InputRejected,
    StructuralError,
    ThickeningMap,
    Trigraph,
    collect_maximal_schposcs,
    compose_thickenings,
    contract_pairs,
    find_square_connected_pair,
    gen_cliques_matching,
    gen_named,
    is_laminar,
    optimal_antithickening,
    set_relation,
    thicken,
    verify_thickening,
)
from antithickening import oracle
from antithickening.trigraph import SEMI, STRONG, STRONG_ANTI

from catalogs import thickened_instances, trigraphs

T8_MAP = ThickeningMap(8, ((0, 1), (2, 3), (4,), (5,), (6,), (7,)))


class TestThickeningMap:
    def test_partition_enforced(self):
        with pytest.raises(DomainError):
            ThickeningMap(3, ((0,), (1,)))
        with pytest.raises(DomainError):
            ThickeningMap(3, ((0, 1), (1, 2)))
        with pytest.raises(DomainError):
            ThickeningMap(2, ((0,), ()))

    def test_labels(self):
        assert T8_MAP.labels() == [0, 0, 1, 1, 2, 3, 4, 5]
        assert T8_MAP.source_n == 6 and T8_MAP[1] == (2, 3)


class TestVerify:
    def test_identity(self):
        for name in ("C6S", "T8", "DM8"):
            G = gen_named(name)
            assert verify_thickening(G, ThickeningMap.identity(G.n), G)

    def test_t8(self):
        assert verify_thickening(gen_named("C6SEMI"), T8_MAP, gen_named("T8"))

    def test_t8_flipped_pairs(self):
        T8, C6SEMI = gen_named("T8"), gen_named("C6SEMI")
        # one flip leaves a staircase, still mixed, so the map stays valid
        one = Trigraph(8, list(T8.strong_edges()) + [(0, 3)])
        assert verify_thickening(C6SEMI, T8_MAP, one)
        # both flips make the parts strongly complete while v0 v1 is semi
        both = Trigraph(8, list(T8.strong_edges()) + [(0, 3), (1, 2)])
        assert not verify_thickening(C6SEMI, T8_MAP, both)

    def test_arity(self):
        with pytest.raises(DomainError):
            verify_thickening(gen_named("C6S"), ThickeningMap.identity(5), gen_named("C6S"))


class TestCompose:
    def test_identity_laws(self):
        assert compose_thickenings(ThickeningMap.identity(6), T8_MAP) == T8_MAP
        assert compose_thickenings(T8_MAP, ThickeningMap.identity(8)) == T8_MAP

    def test_arity(self):
        with pytest.raises(DomainError):
            compose_thickenings(T8_MAP, T8_MAP)

    def test_transitive(self):
        # C6SEMI -> T8, then thicken T8 further: the composite is a thickening too
        T8 = gen_named("T8")
        res = thicken(T8, [1, 1, 1, 1, 2, 1, 1, 1])
        I = compose_thickenings(T8_MAP, res.map)
        assert verify_thickening(gen_named("C6SEMI"), I, res.graph)


class TestLaminar:
    def test_examples(self):
        assert is_laminar(gen_named("C6S"))
        assert not is_laminar(gen_named("T8"))
        assert not is_laminar(gen_cliques_matching(4))
        assert find_square_connected_pair(gen_named("T8")) == CliquePair([0, 1], [2, 3])

    @given(trigraphs(min_n=4, max_n=7))
    def test_agrees_with_oracle(self, G):
        assert is_laminar(G) == oracle.laminar_by_enumeration(G)


class TestCollect:
    def test_examples(self):
        assert collect_maximal_schposcs(gen_named("C6S")) == []
        assert collect_maximal_schposcs(gen_named("T8")) == [CliquePair([0, 1], [2, 3])]
        assert collect_maximal_schposcs(gen_cliques_matching(3)) == [CliquePair([0, 1, 2], [3, 4, 5])]

    def test_skew_on_degenerate_input(self):
        with pytest.raises(StructuralError, match="degenerate structure"):
            collect_maximal_schposcs(gen_named("C4S"))


class TestContract:
    def test_t8(self):
        T8 = gen_named("T8")
        Q, I = contract_pairs(T8, [CliquePair([0, 1], [2, 3])])
        assert oracle.are_isomorphic(Q, gen_named("C6SEMI"))
        assert verify_thickening(Q, I, T8)

    def test_empty(self):
        G = gen_named("C6SEMI")
        assert contract_pairs(G, []) == (G, ThickeningMap.identity(6))

    def test_whole_cm3(self):
        Q, _ = contract_pairs(gen_cliques_matching(3), [CliquePair([0, 1, 2], [3, 4, 5])])
        assert Q == Trigraph(2, semi=[(0, 1)])

    def test_rejects_non_hposc(self):
        with pytest.raises(StructuralError):
            contract_pairs(gen_named("C6S"), [CliquePair([0, 1], [3, 4])])

    def test_rejects_overlap(self):
        G = gen_cliques_matching(3)
        with pytest.raises(StructuralError):
            contract_pairs(G, [CliquePair([0, 1], [3, 4]), CliquePair([1, 2], [4, 5])])

    def test_rejects_uniform_pair(self):
        # both sides strongly complete: contracting would need a strong edge, not a semiedge
        G = Trigraph(4, list(itertools.combinations(range(4), 2)))
        with pytest.raises(StructuralError):
            contract_pairs(G, [CliquePair([0, 1], [2, 3])])


class TestOptimal:
    def test_c6s_fixed_point(self):
        r = optimal_antithickening(gen_named("C6S"))
        assert r.reduced == gen_named("C6S") and r.is_identity
        assert r.map == ThickeningMap.identity(6)

    def test_t8(self):
        r = optimal_antithickening(gen_named("T8"))
        assert oracle.are_isomorphic(r.reduced, gen_named("C6SEMI"))
        assert (0, 1) in r.map.parts and (2, 3) in r.map.parts
        a, b = r.map.parts.index((0, 1)), r.map.parts.index((2, 3))
        assert r.reduced.theta(a, b) is SEMI

    def test_cm5_forced(self):
        r = optimal_antithickening(gen_cliques_matching(5), force=True)
        assert r.reduced == Trigraph(2, semi=[(0, 1)])

    def test_rejections(self):
        with pytest.raises(InputRejected, match="connected input required"):
            optimal_antithickening(Trigraph(4, [(0, 1), (2, 3)]))
        with pytest.raises(InputRejected) as info:
            optimal_antithickening(gen_named("C4S"))
        assert info.value.classification.degenerate
        assert "cobipartite" in str(info.value)
        with pytest.raises(InputRejected):
            optimal_antithickening(gen_named("C4_JOIN_C5"))

    def test_forced_c4s_reports_skew(self):
        with pytest.raises(StructuralError, match="degenerate structure"):
            optimal_antithickening(gen_named("C4S"), force=True)

    @settings(max_examples=60)
    @given(thickened_instances())
    def test_soundness_and_idempotence(self, inst):
        _, G, _ = inst
        r = optimal_antithickening(G)
        assert verify_thickening(r.reduced, r.map, G)
        assert is_laminar(r.reduced)
        again = optimal_antithickening(r.reduced)
        assert again.is_identity and again.reduced == r.reduced

    @settings(max_examples=40)
    @given(thickened_instances())
    def test_oracle_pairs_inside_contracted_pairs(self, inst):
        _, G, _ = inst
        r = optimal_antithickening(G)
        if G.n > 12:
            return
        for P in oracle.enumerate_hposcs(G, "square_connected", cap=12):
            assert any(Q.contains(P) for Q in r.contracted_pairs), P

    @settings(max_examples=60)
    @given(thickened_instances())
    def test_semiedges_map_to_semiedges_or_pairs(self, inst):
        _, G, _ = inst
        r = optimal_antithickening(G)
        pairs = {frozenset((P.A, P.B)) for P in r.contracted_pairs}
        for u, v in r.reduced.semiedges():
            X, Y = r.map[u], r.map[v]
            if len(X) == len(Y) == 1:
                assert G.theta(X[0], Y[0]) is SEMI
            else:
                assert frozenset((X, Y)) in pairs

    @settings(max_examples=60)
    @given(thickened_instances())
    def test_cross_relations_uniform(self, inst):
        _, G, _ = inst
        r = optimal_antithickening(G)
        for P, Q in itertools.combinations(r.contracted_pairs, 2):
            for X in (P.A, P.B):
                for Y in (Q.A, Q.B):
                    assert set_relation(G, X, Y) in (STRONG, STRONG_ANTI)
