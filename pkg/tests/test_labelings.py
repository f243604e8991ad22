import itertools
from collections import Counter
from math import comb

import pytest

from conftest import brute_partitions
from shiish.arrangement import build_ish, build_shi
from shiish.geometry import ceilings, enumerate_regions, recession_dim, signs_of
from shiish.graph import Graph, all_graphs, chain_graph, complete_graph, empty_graph, parse_graph, random_graphs
from shiish.labelings import (
    IshCeilingDiagram,
    ShiCeilingDiagram,
    ceiling_partition,
    count_by_ceiling_partition,
    count_by_ceiling_partition_and_dof,
    diagram_ceilings,
    diagram_signs,
    diagram_to_region,
    dof,
    dominant_bijection,
    enumerate_diagrams,
    enumerate_ish_diagrams,
    enumerate_shi_diagrams,
    formula_census,
    ish_ceiling_partition,
    ish_dof,
    ish_filter,
    ish_filter_witness,
    ish_interior_point,
    ish_poset,
    labeling_census,
    narayana,
    permutations,
    region_to_diagram,
    shi_ceiling_partition,
    shi_dof,
    shi_poset,
    stirling_identity_check,
    witness_permutation,
)
from shiish.partitions import EndpointPair, SetPartition, enumerate_g_partitions, from_endpoint, is_g_partition, stirling2, to_endpoint

K3, K8 = complete_graph(3), complete_graph(8)
CHAIN3 = chain_graph(3)
W8 = (5, 1, 2, 8, 6, 3, 4, 7)
SHI_W8 = ShiCeilingDiagram(W8, SetPartition.from_arcs(8, [(1, 4), (2, 5), (6, 8)]))
ISH_W8 = IshCeilingDiagram(W8, (0, 0, 0, 1, 0, 0, 3, 5))

SMALL_GRAPHS = list(all_graphs(3)) + random_graphs(4, 4, seed=3)


def count_down_sets(poset):
    """Brute force over all subsets."""
    els = list(poset.elements)
    total = 0
    for mask in range(1 << len(els)):
        s = {els[i] for i in range(len(els)) if mask >> i & 1}
        if all(y in s for x in s for y in els if poset.leq(y, x)):
            total += 1
    return total


# --- posets -----------------------------------------------------------------


@pytest.mark.parametrize("g", SMALL_GRAPHS, ids=str)
def test_posets_are_partial_orders(g):
    for w in permutations(g.n):
        assert shi_poset(g, w).is_partial_order()
        assert ish_poset(g, w).is_partial_order()


@pytest.mark.parametrize("g", SMALL_GRAPHS, ids=str)
def test_shi_poset_size_is_noninversions_in_g(g):
    for w in permutations(g.n):
        count = sum(1 for i, j in itertools.combinations(range(g.n), 2) if w[i] < w[j] and g.has_edge(w[i], w[j]))
        assert len(shi_poset(g, w).elements) == count


def test_shi_poset_w8_ideal():
    poset = shi_poset(K8, W8)
    ceiling_arcs = [(1, 4), (2, 5), (6, 8)]
    assert all(a in poset.elements for a in ceiling_arcs)
    ideal = poset.down_closure(ceiling_arcs)
    assert sorted(poset.maximal(ideal)) == ceiling_arcs
    assert {poset.hyperplane(a) for a in ceiling_arcs} == {(5, 8), (1, 6), (3, 7)}


def test_ish_poset_column_heights():
    poset = ish_poset(K8, W8)
    heights = Counter(j for _, j in poset.elements)
    right_of_one = W8[W8.index(1) + 1:]
    assert dict(heights) == {j: j - 1 for j in right_of_one}


def test_decreasing_permutation_has_empty_shi_poset():
    assert shi_poset(complete_graph(5), (5, 4, 3, 2, 1)).elements == []


@pytest.mark.parametrize("g", SMALL_GRAPHS, ids=str)
def test_antichains_count_ideals_and_filters(g):
    for w in permutations(g.n):
        for poset in (shi_poset(g, w), ish_poset(g, w)):
            assert len(list(poset.antichains())) == count_down_sets(poset)


# --- diagrams ---------------------------------------------------------------


def test_diagram_totals_k3():
    assert sum(len(enumerate_shi_diagrams(K3, w)) for w in permutations(3)) == 16
    assert sum(len(enumerate_ish_diagrams(K3, w)) for w in permutations(3)) == 16


def test_identity_empty_graph():
    g, ident = empty_graph(4), (1, 2, 3, 4)
    assert len(enumerate_shi_diagrams(g, ident)) == len(enumerate_ish_diagrams(g, ident)) == 1


@pytest.mark.parametrize("g", SMALL_GRAPHS, ids=str)
def test_shi_diagrams_are_nonnesting_arc_sets(g):
    """Ideals of the Shi poset <-> valid nonnesting partitions of positions."""
    for w in permutations(g.n):
        listed = {d.pi for d in enumerate_shi_diagrams(g, w)}
        brute = {p for p in (SetPartition(g.n, b) for b in brute_partitions(g.n)) if ShiCeilingDiagram(w, p).is_valid(g)}
        assert listed == brute


@pytest.mark.parametrize("g", SMALL_GRAPHS, ids=str)
def test_ish_diagrams_are_increasing_eps(g):
    """Filters of the Ish poset <-> eps vectors obeying the diagram rules."""
    for w in permutations(g.n):
        listed = [d.eps for d in enumerate_ish_diagrams(g, w)]
        assert len(listed) == len(set(listed))
        brute = {e for e in itertools.product(range(g.n), repeat=g.n) if IshCeilingDiagram(w, e).is_valid(g)}
        assert set(listed) == brute


# --- statistics -------------------------------------------------------------


def test_shi_w8_example():
    assert SHI_W8.is_valid(K8)
    assert shi_dof(SHI_W8) == 2
    assert str(shi_ceiling_partition(SHI_W8)) == "(135,678)"


def test_ish_w8_example():
    assert ISH_W8.is_valid(K8)
    assert ish_dof(ISH_W8) == 2
    assert str(ish_ceiling_partition(ISH_W8)) == "(135,847)"


def test_shi_w8_region_recession():
    region = diagram_to_region(SHI_W8, build_shi(K8))
    assert recession_dim(region) == 2


def test_dof_extremes():
    n = 5
    ident = tuple(range(1, n + 1))
    assert shi_dof(ShiCeilingDiagram(ident, SetPartition.singletons(n))) == n
    assert shi_dof(ShiCeilingDiagram(ident, SetPartition(n, (tuple(ident),)))) == 1
    assert ish_dof(IshCeilingDiagram((3, 1, 2, 4, 5), (0,) * n)) == n


def test_empty_ceiling_partition():
    ident = (1, 2, 3)
    assert str(shi_ceiling_partition(ShiCeilingDiagram(ident, SetPartition.singletons(3)))) == "(∅,∅)"
    assert ish_ceiling_partition(IshCeilingDiagram(ident, (0, 0, 0))) == EndpointPair(3, (), ())


@pytest.mark.parametrize("g", [complete_graph(4), chain_graph(4), parse_graph("4;1-3,2-4,3-4")], ids=str)
def test_ish_relatively_bounded_criterion(g):
    for d in enumerate_diagrams(g, "ish"):
        assert (ish_dof(d) == 1) == (d.w[0] == 1 and d.eps[-1] != 0)


@pytest.mark.parametrize("g", SMALL_GRAPHS, ids=str)
@pytest.mark.parametrize("kind", ["shi", "ish"])
def test_ceiling_partitions_are_g_partitions(g, kind):
    for d in enumerate_diagrams(g, kind):
        e = ceiling_partition(d)
        assert is_g_partition(from_endpoint(e), g)
        assert len(e.alpha) == d.c


# --- bijection --------------------------------------------------------------


@pytest.mark.parametrize("g", list(all_graphs(3)) + [complete_graph(4), parse_graph("4;1-2,2-4")], ids=str)
@pytest.mark.parametrize("kind", ["shi", "ish"])
def test_roundtrip(g, kind):
    arr = build_shi(g) if kind == "shi" else build_ish(g)
    regions = enumerate_regions(arr)
    diagrams = list(enumerate_diagrams(g, kind))
    assert len(diagrams) == len(regions)
    by_signs = {r.signs: r for r in regions}
    for d in diagrams:
        r = diagram_to_region(d, arr)
        assert r.signs in by_signs
        cs = ceilings(by_signs[r.signs])
        assert cs == diagram_ceilings(d, arr)
        assert region_to_diagram(by_signs[r.signs], arr, cs) == d
    assert len({diagram_signs(d, arr) for d in diagrams}) == len(regions)


def test_dominant_ceilingless_pair():
    arr = build_shi(K3)
    d = ShiCeilingDiagram((1, 2, 3), SetPartition.singletons(3))
    r = diagram_to_region(d, arr)
    assert r.signs == "++++++"
    assert region_to_diagram(r) == d


def test_kind_mismatch_and_ties():
    with pytest.raises(ValueError):
        diagram_to_region(ISH_W8, build_shi(K3))
    with pytest.raises(ValueError):
        witness_permutation((0, 1, 1))
    assert witness_permutation((0, 2, 1)) == (2, 3, 1)


# --- Ish witnesses ----------------------------------------------------------


def test_filter_witness_empty():
    assert ish_filter_witness([], (1, 2, 3, 4)) == (0, 0, 0, 0)


def test_filter_witness_single_generator():
    g, ident = complete_graph(5), (1, 2, 3, 4, 5)
    poset = ish_poset(g, ident)
    f = poset.up_closure([(2, 4)])
    assert ish_filter_witness(f, ident) == (0, 0, 0, -2, -2)


def _weak_checks(d, g, z):
    """z lies on each ceiling and weakly below every hyperplane of the filter."""
    on_ceilings = all(z[0] - z[j - 1] == i for i, j in d.ceilings())
    below = all(z[0] - z[j - 1] <= i for i, j in ish_filter(d, g))
    return on_ceilings and below


def test_filter_witness_w8_weak_properties():
    z = ish_filter_witness(ish_filter(ISH_W8, K8), W8)
    assert _weak_checks(ISH_W8, K8, z)


def test_filter_witness_can_leave_the_closure():
    # x_1 - x_3 > 2 holds on the ISH_W8 region, the formula gives x_1 - x_3 = 1
    z = ish_filter_witness(ish_filter(ISH_W8, K8), W8)
    arr = build_ish(K8)
    signs = diagram_signs(ISH_W8, arr)
    off = [str(h) for h, s in zip(arr, signs) if (h.value(z) < 0 if s == "+" else h.value(z) > 0)]
    assert off == ["x1-x3=2", "x1-x6=2"]


@pytest.mark.parametrize("g", [complete_graph(4), chain_graph(4), parse_graph("4;1-4,2-3"), complete_graph(5)], ids=str)
def test_interior_point_is_strict(g):
    arr = build_ish(g)
    for d in enumerate_diagrams(g, "ish"):
        x = ish_interior_point(d, g)
        assert signs_of(arr, x) == diagram_signs(d, arr)
        assert _weak_checks(d, g, ish_filter_witness(ish_filter(d, g), d.w))


def test_interior_point_w8():
    arr = build_ish(K8)
    assert signs_of(arr, ish_interior_point(ISH_W8, K8)) == diagram_signs(ISH_W8, arr)


# --- dominant regions -------------------------------------------------------


def test_dominant_k3():
    pairs = dominant_bijection(K3)
    assert Counter(c for _, _, c in pairs) == Counter({0: 1, 1: 3, 2: 1})
    for shi, ish, c in pairs:
        assert shi.c == ish.c == c


def test_dominant_empty():
    assert len(dominant_bijection(empty_graph(3))) == 1


@pytest.mark.parametrize("n", range(2, 7))
def test_dominant_counts(n):
    kn = Counter(c for _, _, c in dominant_bijection(complete_graph(n)))
    assert [kn[c] for c in range(n)] == [narayana(n, c) for c in range(n)]
    ch = Counter(c for _, _, c in dominant_bijection(chain_graph(n)))
    assert [ch[c] for c in range(n)] == [comb(n - 1, c) for c in range(n)]


def test_narayana_values():
    assert [narayana(4, c) for c in range(4)] == [1, 6, 6, 1]
    # row sums are Catalan numbers
    assert sum(narayana(6, c) for c in range(6)) == 132


def test_dominant_bijection_moves_dof():
    moved = [(shi, ish) for shi, ish, _ in dominant_bijection(K3) if dof(shi) != dof(ish)]
    assert moved


# --- counting formulas ------------------------------------------------------


def test_count_examples():
    assert count_by_ceiling_partition(K3, EndpointPair(3, (1,), (2,))) == 3
    assert count_by_ceiling_partition(K3, EndpointPair(3, (), ())) == 6
    assert count_by_ceiling_partition(K3, EndpointPair(3, (1, 2), (2, 3))) == 1
    assert count_by_ceiling_partition(CHAIN3, EndpointPair(3, (1,), (3,))) == 0
    for arc in [(1, 2), (1, 3), (2, 3)]:
        e = EndpointPair(3, (arc[0],), (arc[1],))
        assert [count_by_ceiling_partition_and_dof(K3, e, d) for d in (1, 2, 3)] == [1, 2, 0]


@pytest.mark.parametrize("n", range(2, 6))
@pytest.mark.parametrize("kind", ["shi", "ish"])
def test_per_partition_counts_match_diagrams(n, kind):
    g = complete_graph(n)
    seen = Counter()
    for d in enumerate_diagrams(g, kind):
        seen[(ceiling_partition(d), dof(d))] += 1
    for p in enumerate_g_partitions(g):
        e = to_endpoint(p)
        total = sum(seen[(e, d)] for d in range(1, n + 1))
        assert total == count_by_ceiling_partition(g, e)
        for d in range(1, n + 1):
            assert seen[(e, d)] == count_by_ceiling_partition_and_dof(g, e, d)


@pytest.mark.parametrize("n", range(1, 6))
def test_dof_formula_sums_to_total(n):
    g = complete_graph(n)
    for p in enumerate_g_partitions(g):
        e = to_endpoint(p)
        assert sum(count_by_ceiling_partition_and_dof(g, e, d) for d in range(1, n + 1)) == count_by_ceiling_partition(g, e)


def test_censuses():
    shi = labeling_census(K3, "shi")
    assert +shi.cd == Counter({(0, 3): 6, (1, 1): 3, (1, 2): 6, (2, 1): 1})
    chain = labeling_census(CHAIN3, "ish")
    assert +chain.cd == Counter({(0, 3): 6, (1, 1): 2, (1, 2): 4, (2, 1): 1})
    assert labeling_census(complete_graph(4), "shi").total == 125


@pytest.mark.parametrize("g", list(all_graphs(4)), ids=str)
def test_formula_census_matches_labelings(g):
    f = formula_census(g)
    assert +f.cd == +labeling_census(g, "shi").cd == +labeling_census(g, "ish").cd


def test_stirling_identity():
    assert [stirling2(3, k) for k in (1, 2, 3)] == [1, 3, 1]
    assert 16 == 1 * 1 + 3 * 3 + 1 * 6
    assert all(stirling_identity_check(n) for n in range(1, 11))


def test_invalid_graph_size():
    with pytest.raises(ValueError):
        Graph(2, frozenset({(1, 3)}))
