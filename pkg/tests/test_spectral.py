import random

import pytest
from hypothesis import given, settings

from zerospec.exceptions import DisconnectedError, HypergraphError
from zerospec.hypergraph import (
    Hypergraph,
    gen_complete,
    gen_cored_star,
    gen_power,
    gen_random_connected,
)
from zerospec.linalg import composition_length
from zerospec.spectral import (
    ZeroSpectrum,
    count_first_laplacian,
    count_first_signless,
    count_H,
    count_N,
    enumerate_bipartitions,
    enumerate_eigenvectors,
    is_odd_bipartite,
    is_odd_colorable,
    zero_spectrum_report,
)

from conftest import TRIANGLE, brute_exponents, connected_hypergraphs

SINGLE3 = Hypergraph(n=3, m=3, edges=((1, 2, 3),))
SINGLE4 = Hypergraph(n=4, m=4, edges=((1, 2, 3, 4),))


def alphas(H, kind, cap=None):
    return [v.alpha for v in enumerate_eigenvectors(H, kind, cap)]


class TestReport:
    def test_c3_power4(self, c3_power4):
        rep = zero_spectrum_report(c3_power4)
        assert rep.divisors == (1, 1, 2) and rep.r_m == 3 and rep.r_bar == 2
        assert (rep.count_L, rep.countH_L, rep.countN_L) == (32, 8, 24)
        assert (rep.count_Q, rep.countH_Q, rep.countN_Q) == (32, 0, 32)
        assert rep.odd_colorable and not rep.odd_bipartite
        assert rep.module_structure == (2, 4, 4)
        assert rep.composition_length == 1 + 2 + 2
        assert (rep.even_bipartitions, rep.odd_bipartitions) == (8, 0)

    def test_complete_5_3(self):
        rep = zero_spectrum_report(gen_complete(5, 3))
        assert rep.count_L == 1 and rep.countH_L == 1
        assert rep.module_structure == () and rep.composition_length == 0

    @pytest.mark.parametrize("t, m", [(1, 3), (2, 3), (2, 4), (3, 4), (2, 6), (4, 5)])
    def test_cored_star(self, t, m):
        H = gen_cored_star(t, m)
        rep = zero_spectrum_report(H)
        assert rep.count_L == m ** (H.n - 1 - t)
        if m % 2 == 0:
            assert rep.countH_L == 2 ** (H.n - 1 - t)
            assert rep.odd_bipartite and rep.count_Q == rep.count_L

    def test_disconnected_rejected(self):
        H = Hypergraph(n=6, m=3, edges=((1, 2, 3), (4, 5, 6)))
        with pytest.raises(DisconnectedError):
            zero_spectrum_report(H)
        with pytest.raises(DisconnectedError):
            count_first_laplacian(H)

    def test_odd_m_bipartition_fields_undefined(self):
        rep = zero_spectrum_report(SINGLE3)
        assert rep.even_bipartitions is None and rep.odd_bipartitions is None


class TestCounts:
    def test_first_laplacian(self, c3_power4, triangle):
        assert count_first_laplacian(c3_power4) == 32
        assert count_first_laplacian(SINGLE3) == len(brute_exponents(SINGLE3, 0)) == 3
        assert count_first_laplacian(triangle) == 1

    def test_first_signless(self, c3_power4):
        assert count_first_signless(gen_complete(5, 4)) == 0
        assert count_first_signless(c3_power4) == 32
        assert count_first_signless(SINGLE4) == len(brute_exponents(SINGLE4, 2)) == 16

    def test_count_H(self, c3_power4):
        assert count_H(c3_power4, "laplacian") == 8
        assert count_H(c3_power4, "signless") == 0
        H5 = gen_random_connected(7, 5, extra_edges=2, rng=random.Random(3))
        assert count_H(H5, "laplacian") == 1

    def test_count_N(self, c3_power4):
        assert count_N(c3_power4, "laplacian") == 24
        assert count_N(c3_power4, "signless") == 32
        assert count_N(SINGLE3, "laplacian") == 2
        assert count_N(SINGLE3, "signless") == 0

    def test_bad_kind(self, c3_power4):
        with pytest.raises(ValueError):
            count_H(c3_power4, "adjacency")

    def test_counts_are_big_integers(self):
        # 36 vertices, m = 6: count = 6^(35 - 7) overflows 64 bits
        H = gen_cored_star(7, 6)
        n = H.n
        assert count_first_laplacian(H) == 6 ** (n - 1 - 7)
        assert count_first_laplacian(H) > 2**64


class TestDecisions:
    def test_odd_colorable(self, c3_power4):
        ok, y = is_odd_colorable(c3_power4)
        assert ok and y[0] == 0
        assert all(sum(y[v - 1] for v in e) % 4 == 2 for e in c3_power4.edges)
        assert is_odd_colorable(gen_complete(5, 4)) == (False, None)
        assert is_odd_colorable(SINGLE3) == (False, None)

    def test_witness_is_deterministic(self, c3_power4):
        assert is_odd_colorable(c3_power4) == is_odd_colorable(c3_power4)

    def test_odd_bipartite(self, c3_power4, triangle):
        ok, bip = is_odd_bipartite(gen_cored_star(3, 4))
        assert ok and 1 in bip.V0
        H = gen_cored_star(3, 4)
        assert all(len(set(e) & set(bip.V1)) % 2 == 1 for e in H.edges)
        assert is_odd_bipartite(c3_power4) == (False, None)
        assert is_odd_bipartite(triangle) == (False, None)

    def test_odd_bipartite_requires_even_m(self):
        with pytest.raises(HypergraphError):
            is_odd_bipartite(SINGLE3)


class TestEnumeration:
    def test_single_edge_m3(self):
        assert sorted(alphas(SINGLE3, "laplacian")) == [(0, 0, 0), (0, 1, 2), (0, 2, 1)]

    def test_triangle(self, triangle):
        assert alphas(triangle, "laplacian") == [(0, 0, 0)]
        assert alphas(triangle, "signless") == []

    def test_complete_signless_empty(self):
        assert alphas(gen_complete(5, 4), "signless") == []

    def test_odd_m_signless_empty(self):
        assert alphas(SINGLE3, "signless") == []

    def test_cap(self, c3_power4):
        assert len(alphas(c3_power4, "laplacian", cap=5)) == 5

    def test_bipartitions_single_edge(self):
        even = list(enumerate_bipartitions(SINGLE4, "even"))
        odd = list(enumerate_bipartitions(SINGLE4, "odd"))
        assert len(even) == 4 and len(odd) == 4
        assert any(b.V1 == () for b in even)
        assert all(1 in b.V0 for b in even + odd)
        assert all(len(b.V1) % 2 == 0 for b in even)
        assert all(len(b.V1) % 2 == 1 for b in odd)

    def test_bipartitions_c3_power4(self, c3_power4):
        assert list(enumerate_bipartitions(c3_power4, "odd")) == []
        assert len(list(enumerate_bipartitions(c3_power4, "even"))) == 8

    def test_bipartitions_need_even_m(self):
        with pytest.raises(HypergraphError):
            list(enumerate_bipartitions(SINGLE3, "even"))


@settings(max_examples=120, deadline=None)
@given(connected_hypergraphs(ms=(2, 3, 4), max_n=8))
def test_counts_match_exhaustive_enumeration(H):
    lap = brute_exponents(H, 0)
    assert sorted(alphas(H, "laplacian")) == lap
    assert count_first_laplacian(H) == len(lap)
    if H.m % 2 == 0:
        sig = brute_exponents(H, H.m // 2)
        assert sorted(alphas(H, "signless")) == sig
        assert count_first_signless(H) == len(sig)
        h = H.m // 2
        assert count_H(H, "laplacian") == sum(all(a in (0, h) for a in y) for y in lap)
        assert count_H(H, "signless") == sum(all(a in (0, h) for a in y) for y in sig)
        assert len(list(enumerate_bipartitions(H, "even"))) == count_H(H, "laplacian")
        assert len(list(enumerate_bipartitions(H, "odd"))) == count_H(H, "signless")
    else:
        assert count_first_signless(H) == 0
        assert count_H(H, "laplacian") == 1


@settings(max_examples=100, deadline=None)
@given(connected_hypergraphs(ms=(2, 3, 4, 6), max_n=8, budget=50_000))
def test_structural_properties(H):
    zs = ZeroSpectrum(H)
    rep = zs.report()
    m = H.m
    assert 1 <= rep.r_m <= H.n - 1
    assert all(m % d == 0 for d in rep.divisors)
    assert all(b % a == 0 for a, b in zip(rep.divisors, rep.divisors[1:]))
    assert rep.composition_length == (
        sum(composition_length(d) for d in rep.divisors if d != 1)
        + (H.n - 1 - rep.r_m) * composition_length(m)
    )
    assert rep.countH_L & (rep.countH_L - 1) == 0
    assert rep.countH_Q in (0, rep.countH_L)
    assert rep.count_Q in (0, rep.count_L)
    if m % 2:
        assert rep.countH_L == 1 and rep.countH_Q == 0 and rep.count_Q == 0
    else:
        assert rep.r_bar == sum(d % 2 for d in rep.divisors)

    lap = set(alphas(H, "laplacian", cap=2000))
    if len(lap) == rep.count_L:
        zero = (0,) * H.n
        assert zero in lap
        sample = sorted(lap)[:20]
        for a in sample:
            for b in sample:
                assert tuple((x + y) % m for x, y in zip(a, b)) in lap
        sig = alphas(H, "signless", cap=2000)
        if sig:
            base = sig[0]
            shifted = {tuple((x - y) % m for x, y in zip(s, base)) for s in sig}
            assert shifted == lap


@pytest.mark.parametrize("m, colorable", [(4, True), (6, False), (8, True)])
def test_generalized_power_law(m, colorable):
    H = gen_power(TRIANGLE, m)
    rep = zero_spectrum_report(H)
    assert rep.odd_colorable is colorable
    assert rep.odd_bipartite is False


def test_generalized_power_of_bipartite_graph_is_odd_bipartite():
    square = [(1, 2), (2, 3), (3, 4), (1, 4)]
    for m in (4, 6):
        assert zero_spectrum_report(gen_power(square, m)).odd_bipartite


@pytest.mark.parametrize("seed", range(5))
def test_report_independent_of_edge_order(seed):
    rng = random.Random(seed)
    H = gen_random_connected(6, 4, extra_edges=3, rng=rng)
    edges = list(H.edges)
    rng.shuffle(edges)
    assert zero_spectrum_report(H) == zero_spectrum_report(Hypergraph(H.n, H.m, tuple(edges)))


def test_power_of_path():
    # bipartite base graph with m = 6: odd-bipartite, so the signless counts mirror the Laplacian ones
    rep = zero_spectrum_report(gen_power([(1, 2), (2, 3)], 6))
    assert rep.odd_bipartite and rep.odd_colorable
    assert rep.count_Q == rep.count_L and rep.countH_Q == rep.countH_L
    assert rep.countN_L == rep.count_L - rep.countH_L
