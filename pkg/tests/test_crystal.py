import pytest
from hypothesis import given
from hypothesis import strategies as st

from reference_data import FIGURE1_COMPONENTS, FIGURE1_ISOLATED, SSYT_COMPONENT_EDGES
from svcrystal.crystal import (
    bender_knuth,
    build_crystal_graph,
    connected_components,
    e_svt,
    epsilon,
    evacuation,
    f_string,
    f_svt,
    is_highest_weight,
    isomorphism_to_ssyt_crystal,
    k_bender_knuth,
    k_evacuation,
    lusztig_involution,
    phi,
    reading_word_operator,
    reduce_signs,
    signature,
)
from svcrystal.tableaux import enumerate_svt, parse_svt

NODES_32_4 = enumerate_svt((3, 2), 4, max_excess=2)


def edge_set(G, nodes):
    names = {str(T) for T in nodes}
    return {e for e in G.edge_labels() if e[0] in names}


def test_reduce_signs_cancels_minus_plus_pairs():
    sig = reduce_signs([("-", "a"), ("+", "b"), ("+", "c"), ("-", "d"), ("-", "e"), ("+", "f")])
    assert sig.plus == ("c",)
    assert sig.minus == ("d",)
    with pytest.raises(ValueError):
        reduce_signs([("*", "x")])


def test_column_signature_counts_a_column_once():
    # the second column holds 1 and 2 and contributes nothing
    T = parse_svt("1{1,2}/2", 3)
    assert signature(T, 1).plus == () and signature(T, 1).minus == ()
    assert f_svt(T, 1) is None and e_svt(T, 1) is None


def test_f_moves_letters_between_boxes():
    assert str(f_svt(parse_svt("1{1,2}/3", 3), 1)) == "{1,2}2/3"
    assert str(f_svt(parse_svt("1{1,2}/2", 3), 2)) == "1{1,3}/2"
    assert f_svt(parse_svt("{1,2}{2,3}/3", 3), 2) is None


def test_seven_components(svt_21_3):
    G = build_crystal_graph((2, 1), 3)
    comps = connected_components(G)
    assert len(comps) == 7
    sizes = sorted(len(c.nodes) for c in comps)
    assert sizes == [1, 3, 3, 3, 3, 6, 8]
    ssyt = [c for c in comps if c.highest.is_ssyt()]
    assert len(ssyt) == 1 and len(ssyt[0].nodes) == 8
    assert edge_set(G, ssyt[0].nodes) == SSYT_COMPONENT_EDGES


def test_positive_excess_components_edge_for_edge():
    G = build_crystal_graph((2, 1), 3)
    drawn = []
    for comp in connected_components(G):
        if comp.highest.is_ssyt():
            continue
        edges = edge_set(G, comp.nodes)
        drawn.append(edges)
        if not edges:
            assert [str(T) for T in comp.nodes] == [FIGURE1_ISOLATED]
    key = lambda es: sorted(es)  # noqa: E731
    assert sorted(drawn, key=key) == sorted(FIGURE1_COMPONENTS, key=key)


@pytest.mark.parametrize("shape,n", [((2, 1), 3), ((2, 2), 3), ((3, 1), 3), ((2, 1), 4), ((2, 1, 1), 4)])
def test_components_are_tableau_crystals(shape, n):
    for comp in connected_components(build_crystal_graph(shape, n)):
        mapping = isomorphism_to_ssyt_crystal(comp.highest)
        assert set(mapping) == set(comp.nodes)
        assert all(S.weight() == T.weight() for T, S in mapping.items())


@given(st.sampled_from(NODES_32_4), st.integers(1, 3))
def test_crystal_axioms(T, i):
    F, E = f_svt(T, i), e_svt(T, i)
    if F is not None:
        assert e_svt(F, i) == T and F.excess == T.excess
    if E is not None:
        assert f_svt(E, i) == T
    wt = T.weight()
    assert phi(T, i) - epsilon(T, i) == wt[i - 1] - wt[i]
    assert len(f_string(T, i)) == phi(T, i) + 1


@given(st.sampled_from(NODES_32_4), st.integers(1, 3), st.sampled_from(["f", "e"]))
def test_reading_word_rules_agree(T, i, kind):
    op = f_svt if kind == "f" else e_svt
    for order in ("far-eastern", "middle-eastern"):
        assert reading_word_operator(T, i, kind, order) == op(T, i)


def test_unknown_reading_order():
    with pytest.raises(ValueError):
        reading_word_operator(parse_svt("1", 2), 1, "f", "western")


def test_bender_knuth_involution_and_weight():
    for T in enumerate_svt((3, 2), 3, max_excess=0):
        for i in (1, 2):
            S = bender_knuth(T, i)
            assert bender_knuth(S, i) == T
            assert S.weight()[i - 1] == T.weight()[i]
        assert evacuation(evacuation(T)) == T
    with pytest.raises(ValueError):
        bender_knuth(parse_svt("1{1,2}", 2), 1)


def test_k_bender_knuth_examples():
    assert str(k_bender_knuth(parse_svt("1{1,2}/3", 3), 2)) == "1{1,3}/2"
    T = parse_svt("1{2,3}/2", 3)
    assert str(k_bender_knuth(T, 1)) == "1{1,3}/2"
    assert str(k_evacuation(T)) == "{1,2}2/3"


def test_k_evacuation_differs_from_lusztig():
    T = parse_svt("1{2,3}/2", 3)
    assert str(lusztig_involution(T)) == "1{2,3}/2"
    assert str(lusztig_involution(parse_svt("1{1,2}/2", 3))) == "2{2,3}/3"
    assert k_evacuation(T) != lusztig_involution(T)


@given(st.sampled_from(enumerate_svt((2, 2), 4, max_excess=2)))
def test_k_bender_knuth_is_weight_swapping_involution(T):
    for i in range(1, 4):
        S = k_bender_knuth(T, i)
        assert k_bender_knuth(S, i) == T
        assert S.excess == T.excess
        wt, ws = T.weight(), S.weight()
        assert ws[i - 1] == wt[i] and ws[i] == wt[i - 1]
    assert k_evacuation(k_evacuation(T)) == T


def test_lusztig_involution_properties():
    n = 3
    for T in enumerate_svt((2, 1), n):
        star = lusztig_involution(T)
        assert lusztig_involution(star) == T
        assert lusztig_involution(T, choose="max") == star
        if is_highest_weight(T):
            assert all(f_svt(star, i) is None for i in range(1, n))
        for i in range(1, n):
            F = f_svt(T, i)
            if F is not None:
                assert lusztig_involution(F) == e_svt(star, n - i)


def test_graph_exports_are_deterministic():
    G = build_crystal_graph((2,), 3, with_k_edges=True)
    dot = G.to_dot("g")
    assert dot == build_crystal_graph((2,), 3, with_k_edges=True).to_dot("g")
    assert "style=dashed" in dot and 'label="K1"' in dot
    data = G.to_json()
    assert data["schema"] == "svcrystal.crystal-graph/1"
    assert len(data["nodes"]) == 17
    with pytest.raises(ValueError):
        build_crystal_graph((2, 1), 3, with_k_edges=True)


def test_max_excess_truncates_graph():
    G = build_crystal_graph((2, 1), 3, max_excess=0)
    assert len(G.nodes) == 8 and len(G.edges) == 8
