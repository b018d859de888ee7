import pytest
from hypothesis import given
from hypothesis import strategies as st

from reference_data import SINGLE_ROW_311_EDGES
from svcrystal.crystal import e_svt, f_svt, k_bender_knuth
from svcrystal.expansions import (
    lenart_table,
    phi_single_row,
    phi_single_row_inverse,
    pieri_check,
    psi_hook,
    rsk_insert_word,
    schur_expansion,
    tensor_operator,
    uncrowd,
    vertical_pieri_check,
)
from svcrystal.poly import grothendieck_from_tableaux
from svcrystal.tableaux import enumerate_svt, parse_svt, partitions_in_box


def test_expansion_of_21():
    table = schur_expansion((2, 1), 3)
    assert table.multiplicities == {(2, 1): 1, (2, 1, 1): 2, (2, 2): 1, (2, 2, 1): 2, (2, 2, 2): 1}
    data = table.to_json()
    assert data["schema"] == "svcrystal.expansion/1"
    assert data["terms"][0] == {"mu": [2, 1], "M": 1, "beta_power": 0}
    assert table.polynomial() == grothendieck_from_tableaux((2, 1), 3)


@pytest.mark.parametrize("lam", [p for p in partitions_in_box(2, 3) if p])
@pytest.mark.parametrize("n", [3, 4])
def test_highest_weight_count_equals_flagged_count(lam, n):
    table = schur_expansion(lam, n)
    assert table.multiplicities == lenart_table(lam, n)
    assert table.polynomial() == grothendieck_from_tableaux(lam, n)


def _row_label(T):
    return "[" + ",".join(str(c[0]) if len(c) == 1 else "{" + ",".join(map(str, c)) + "}" for c in T.rows[0]) + "]"


def test_single_row_component_of_311():
    start = parse_svt("11{1,2,3}", 3)
    seen, frontier, edges = {start}, [start], set()
    while frontier:
        T = frontier.pop()
        for i in (1, 2):
            S = f_svt(T, i)
            if S is not None:
                edges.add((_row_label(T), _row_label(S), i))
                if S not in seen:
                    seen.add(S)
                    frontier.append(S)
    assert edges == SINGLE_ROW_311_EDGES
    assert phi_single_row(start) == ((1, 1), (1, 2, 3))


@pytest.mark.parametrize("k,n", [(2, 3), (3, 3), (3, 4)])
def test_single_row_map_is_a_crystal_isomorphism(k, n):
    for T in enumerate_svt((k,), n):
        row, col = phi_single_row(T)
        assert phi_single_row_inverse(row, col, n) == T
        for i in range(1, n):
            for kind in ("f", "e"):
                S = (f_svt if kind == "f" else e_svt)(T, i)
                assert tensor_operator(row, col, i, kind) == (None if S is None else phi_single_row(S))


def test_single_row_inverse_rejects_non_images():
    with pytest.raises(ValueError):
        phi_single_row_inverse((2,), (1,), 3)
    with pytest.raises(ValueError):
        phi_single_row_inverse((1,), (2, 2), 3)


@given(st.sampled_from(enumerate_svt((3,), 4)))
def test_hook_map_is_rsk_of_row_then_column(T):
    row, col = phi_single_row(T)
    assert psi_hook(T) == rsk_insert_word(list(row) + list(reversed(col)), T.n)


def test_uncrowding_example_and_f3():
    T = parse_svt("{1,2}3{3,4}/{3,5}{5,6}", 6)
    S, F = uncrowd(T)
    assert str(S) == "133/24/35/5/6"
    assert str(F) == ".../../12/2/4"
    fT = f_svt(T, 3)
    assert str(fT) == "{1,2}{3,4}4/{3,5}{5,6}"
    S3, F3 = uncrowd(fT)
    assert str(S3) == "134/24/35/5/6" and S3 == f_svt(S, 3) and F3 == F


def test_k_bender_knuth_does_not_commute_with_uncrowding():
    T = parse_svt("1{1,2}/3", 3)
    S, F = uncrowd(T)
    assert (str(S), str(F)) == ("11/2/3", ".././2")
    K = k_bender_knuth(T, 2)
    assert str(K) == "1{1,3}/2"
    SK, FK = uncrowd(K)
    assert (str(SK), str(FK)) == ("11/23", "../.1")
    assert SK.shape != S.shape


@given(st.sampled_from(enumerate_svt((2, 1), 4)), st.integers(1, 3))
def test_uncrowding_is_equivariant(T, i):
    S, F = uncrowd(T)
    fT = f_svt(T, i)
    fS = f_svt(S, i)
    if fT is None:
        assert fS is None
    else:
        assert uncrowd(fT) == (fS, F)


def test_uncrowding_is_a_bijection():
    images = {uncrowd(T) for T in enumerate_svt((2, 2), 3)}
    assert len(images) == len(enumerate_svt((2, 2), 3))


@pytest.mark.parametrize("shape", [(1,), (2,), (1, 1), (2, 1), (2, 2)])
def test_pieri_rules(shape):
    assert pieri_check(shape, 3)
    assert vertical_pieri_check(shape, 2, 3)
