"""Construction and transform tests: parameter validation, fixed vertex
indexing, edge classes, and the spoke contraction round-trip."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from gpgdiam.core_graphs import (
    INNER,
    OUTER,
    SPOKE,
    CirculantParams,
    GpgParams,
    build_circulant,
    build_gpg,
    contract_spokes,
    derive_case,
    expand_to_gpg,
    normalize_s,
)

SWEEP = settings(max_examples=150, deadline=None)

valid_params = st.integers(min_value=5, max_value=64).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(min_value=2, max_value=(n - 1) // 2))
)


class TestNormalizeS:
    def test_reflects_large_skip(self):
        assert normalize_s(10, 7) == 3

    def test_keeps_skip_already_in_range(self):
        assert normalize_s(12, 5) == 5

    def test_rejects_half_ring(self):
        with pytest.raises(ValueError):
            normalize_s(10, 5)

    def test_rejects_skip_below_two(self):
        with pytest.raises(ValueError):
            normalize_s(10, 1)

    def test_rejects_skip_above_n_minus_two(self):
        with pytest.raises(ValueError):
            normalize_s(10, 9)

    @SWEEP
    @given(valid_params)
    def test_result_always_in_canonical_range(self, params):
        n, s = params
        for candidate in (s, n - s):
            norm = normalize_s(n, candidate)
            assert 2 <= norm <= (n - 1) // 2
            assert norm in (candidate, n - candidate)


class TestParams:
    def test_ring_too_small(self):
        with pytest.raises(ValueError):
            GpgParams(4, 2)

    def test_skip_out_of_range(self):
        with pytest.raises(ValueError):
            GpgParams(12, 6)
        with pytest.raises(ValueError):
            CirculantParams(11, 1)

    def test_valid_pair_accepted(self):
        p = GpgParams(12, 5)
        assert (p.n, p.s) == (12, 5)


class TestDeriveCase:
    def test_quotient_and_remainder(self):
        d = derive_case(29, 12)
        assert (d.lam, d.gamma, d.a, d.b) == (2, 5, 2, 2)

    def test_zero_remainder_leaves_secondary_split_unset(self):
        d = derive_case(12, 3)
        assert (d.lam, d.gamma) == (4, 0)
        assert d.a is None and d.b is None

    @SWEEP
    @given(valid_params)
    def test_division_identities(self, params):
        n, s = params
        d = derive_case(n, s)
        assert n == d.lam * s + d.gamma
        assert 0 <= d.gamma < s
        if d.gamma > 0:
            assert s == d.a * d.gamma + d.b
            assert 0 <= d.b < d.gamma


class TestBuildGpg:
    def test_petersen_shape(self):
        g = build_gpg(GpgParams(5, 2))
        assert g.vertex_count == 10
        assert g.edge_count == 15
        assert all(g.degree(v) == 3 for v in range(10))

    def test_every_edge_is_classified(self):
        g = build_gpg(GpgParams(7, 3))
        classes = [g.edge_classes[e] for e in g.edges()]
        assert classes.count(OUTER) == 7
        assert classes.count(INNER) == 7
        assert classes.count(SPOKE) == 7

    def test_spokes_join_rings(self):
        g = build_gpg(GpgParams(12, 5))
        for i in range(12):
            assert 12 + i in g.neighbors(i)

    def test_inner_chords_split_into_gcd_cycles(self):
        # skip 2 on a 6-ring: the chord edges form two disjoint triangles
        g = build_gpg(GpgParams(6, 2))
        inner_adj = {v: [] for v in range(6, 12)}
        for (u, v), cls in g.edge_classes.items():
            if cls == INNER:
                inner_adj[u].append(v)
                inner_adj[v].append(u)
        seen = set()
        components = 0
        for start in inner_adj:
            if start in seen:
                continue
            components += 1
            stack = [start]
            while stack:
                cur = stack.pop()
                if cur in seen:
                    continue
                seen.add(cur)
                stack.extend(inner_adj[cur])
        assert components == math.gcd(6, 2) == 2

    @SWEEP
    @given(valid_params)
    def test_always_cubic(self, params):
        n, s = params
        g = build_gpg(GpgParams(n, s))
        assert g.vertex_count == 2 * n
        assert g.edge_count == 3 * n
        assert all(g.degree(v) == 3 for v in range(2 * n))

    def test_large_skip_builds_the_same_graph_after_normalization(self):
        # v_i v_{i+7} and v_i v_{i+3} name the same chord set on a 10-ring
        n, big = 10, 7
        manual = set()
        for i in range(n):
            manual.add(tuple(sorted((i, (i + 1) % n))))
            manual.add(tuple(sorted((n + i, n + (i + big) % n))))
            manual.add((i, n + i))
        g = build_gpg(GpgParams(n, normalize_s(n, big)))
        assert set(g.edges()) == manual


class TestBuildCirculant:
    def test_chord_neighbors(self):
        g = build_circulant(CirculantParams(10, 4))
        assert g.neighbors(0) == (1, 4, 6, 9)

    def test_complete_graph_case(self):
        g = build_circulant(CirculantParams(5, 2))
        assert g.edge_count == 10
        assert all(g.degree(v) == 4 for v in range(5))

    def test_vertex_and_edge_counts(self):
        g = build_circulant(CirculantParams(12, 5))
        assert g.vertex_count == 12
        assert g.edge_count == 24

    def test_ring_and_chord_classes(self):
        g = build_circulant(CirculantParams(12, 5))
        classes = [g.edge_classes[e] for e in g.edges()]
        assert classes.count(OUTER) == 12
        assert classes.count(INNER) == 12

    @SWEEP
    @given(valid_params)
    def test_always_four_regular(self, params):
        n, s = params
        g = build_circulant(CirculantParams(n, s))
        assert all(g.degree(v) == 4 for v in range(n))
        for v in range(n):
            assert set(g.neighbors(v)) == {
                (v + 1) % n,
                (v - 1) % n,
                (v + s) % n,
                (v - s) % n,
            }


class TestTransforms:
    @pytest.mark.parametrize("n,s", [(12, 5), (5, 2), (10, 4)])
    def test_contraction_matches_direct_construction(self, n, s):
        p = GpgParams(n, s)
        contracted = contract_spokes(build_gpg(p), p)
        direct = build_circulant(CirculantParams(n, s))
        assert contracted.adjacency == direct.adjacency
        assert contracted.edge_classes == direct.edge_classes

    def test_contraction_rejects_foreign_graph(self):
        with pytest.raises(ValueError):
            contract_spokes(build_circulant(CirculantParams(12, 5)), GpgParams(12, 5))

    def test_expansion_is_construction(self):
        assert (
            expand_to_gpg(CirculantParams(12, 5)).adjacency
            == build_gpg(GpgParams(12, 5)).adjacency
        )

    def test_expand_five_two_gives_petersen(self):
        g = expand_to_gpg(CirculantParams(5, 2))
        assert g.vertex_count == 10
        assert all(g.degree(v) == 3 for v in range(10))

    def test_round_trip(self):
        p = CirculantParams(10, 4)
        back = contract_spokes(expand_to_gpg(p), GpgParams(10, 4))
        assert back.adjacency == build_circulant(p).adjacency

    @SWEEP
    @given(valid_params)
    def test_contraction_equality_everywhere(self, params):
        n, s = params
        p = GpgParams(n, s)
        assert (
            contract_spokes(build_gpg(p), p).adjacency
            == build_circulant(CirculantParams(n, s)).adjacency
        )


def test_adjacency_graph_is_undirected_and_loop_free():
    g = build_gpg(GpgParams(9, 4))
    for u in range(g.vertex_count):
        for v in g.neighbors(u):
            assert u != v
            assert u in g.neighbors(v)
