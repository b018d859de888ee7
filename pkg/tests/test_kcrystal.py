import pytest
from hypothesis import given
from hypothesis import strategies as st

from reference_data import FIGURE2_EDGES, FIGURE3_EDGES
from svcrystal.crystal import build_crystal_graph, connected_components
from svcrystal.kcrystal import (
    check_H1,
    check_H2,
    check_K1,
    check_K2,
    check_K3,
    check_string_intersections,
    e_K,
    e_K_literal,
    f_K,
    i_k_strings,
    k_character,
    k_demazure,
    k_demazure_by_definition,
    lascoux_for_word,
    parse_shape_spec,
    row_demazure_bound,
    shape_kind,
)
from svcrystal.tableaux import enumerate_svt, parse_svt

SHAPES = [((1,), 3), ((2,), 3), ((3,), 3), ((2,), 4), ((1, 1), 3), ((1, 1), 4), ((1, 1, 1), 4)]


def test_row_and_column_k_graphs():
    assert build_crystal_graph((2,), 3, with_k_edges=True).edge_labels() == FIGURE2_EDGES
    assert build_crystal_graph((1, 1), 4, with_k_edges=True).edge_labels() == FIGURE3_EDGES


@pytest.mark.parametrize("shape,n", SHAPES)
def test_k_edges_connect_everything(shape, n):
    G = build_crystal_graph(shape, n, with_k_edges=True)
    adjacent = {str(T): set() for T in G.nodes}
    for s, t, _, _ in G.edge_labels():
        adjacent[s].add(t)
        adjacent[t].add(s)
    start = next(iter(adjacent))
    seen, stack = {start}, [start]
    while stack:
        for y in adjacent[stack.pop()] - seen:
            seen.add(y)
            stack.append(y)
    assert seen == set(adjacent)
    assert len(connected_components(G)) > 1 or len(G.nodes) == n


def test_shape_specs():
    assert parse_shape_spec("row:3") == (3,)
    assert parse_shape_spec("column:2") == (1, 1)
    assert parse_shape_spec("2,1") == (2, 1)
    for bad in ["row:0", "diag:2"]:
        with pytest.raises(ValueError):
            parse_shape_spec(bad)
    assert shape_kind((1,)) == "row"
    with pytest.raises(ValueError):
        shape_kind((2, 1))


def test_f_K_on_row_and_column():
    assert str(f_K(parse_svt("12", 3), 2)) == "1{2,3}"
    assert str(f_K(parse_svt("11", 3), 1)) == "1{1,2}"
    assert f_K(parse_svt("12", 3), 1) is None
    assert str(f_K(parse_svt("1/3", 4), 1)) == "{1,2}/3"
    with pytest.raises(ValueError):
        f_K(parse_svt("12/3", 3), 1)


@pytest.mark.parametrize("shape,n", SHAPES)
def test_e_K_is_partial_inverse(shape, n):
    for T in enumerate_svt(shape, n):
        for i in range(1, n):
            S = f_K(T, i)
            if S is not None:
                assert e_K(S, i) == T
            R = e_K(T, i)
            if R is not None:
                assert f_K(R, i) == T


def test_literal_raising_is_not_inverse():
    T = parse_svt("{1,2}2", 3)
    assert e_K(T, 1) is None
    assert str(e_K_literal(T, 1)) == "12"
    assert f_K(parse_svt("12", 3), 1) is None


def test_row_demazure_example():
    D = k_demazure((2,), 3, (1,))
    assert {str(T) for T in D.nodes} == {"11", "12", "1{1,2}", "22", "{1,2}2"}
    assert k_character(D).to_text() == "b*x1^2*x2 + b*x1*x2^2 + x1^2 + x1*x2 + x2^2"
    assert k_character(D) == lascoux_for_word((2,), 3, (1,))


WORDS = [(), (1,), (2,), (1, 2), (2, 1), (1, 2, 1), (2, 1, 2), (1, 1), (2, 1, 1, 2)]


@pytest.mark.parametrize("shape,n", [((1,), 3), ((2,), 3), ((1, 1), 3), ((3,), 3)])
@pytest.mark.parametrize("word", WORDS)
def test_demazure_routes_and_characters(shape, n, word):
    D = k_demazure(shape, n, word)
    assert D.nodes == k_demazure_by_definition(shape, n, word).nodes
    assert k_character(D) == lascoux_for_word(shape, n, word)


def test_demazure_word_letters_checked():
    with pytest.raises(ValueError):
        k_demazure((2,), 3, (3,))


@given(st.lists(st.integers(1, 3), max_size=5))
def test_row_bound(word):
    D = k_demazure((2,), 4, word)
    bound = row_demazure_bound(word, 4)
    expected = {T for T in enumerate_svt((2,), 4) if max(T.letters()) <= bound}
    assert D.nodes == expected


@pytest.mark.parametrize("shape,n", SHAPES)
def test_operator_relations(shape, n):
    for check in (check_K1, check_K2, check_K3, check_H1, check_H2, check_string_intersections):
        assert check(shape, n) == []


def test_strings_partition_the_crystal():
    nodes = enumerate_svt((2,), 3)
    seen = []
    for head, top, bottom in i_k_strings((2,), 3, 1):
        seen += [head, *top, *bottom] if head not in top + bottom else [*top, *bottom]
    assert sorted(map(str, set(seen))) == sorted(map(str, nodes))
