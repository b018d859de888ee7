"""K-crystal operators on single rows and single columns, and K-Demazure crystals.

``f_i^K`` adds ``i+1`` to the rightmost box containing ``i`` and is undefined
when ``i`` is absent or ``i+1`` is already present; ``e_i^K`` is its partial
inverse, removing ``i+1`` from the box holding both ``i`` and ``i+1``.  These operators are only
defined for shapes ``k Lambda_1`` (a row) and ``Lambda_k`` (a column).

The K-Demazure crystal of ``w = s_{i_1} ... s_{i_l}`` is built from
``{u_lambda}`` by, for ``j = l, l-1, ..., 1``, adding ``f^K_{i_j}`` of
every element and closing under ``f_{i_j}``.  Its character is the Lascoux
polynomial ``L_{w lambda}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .crystal import e_svt, epsilon, f_svt, phi
from .perms import act_on_composition, demazure_product, reduced_words
from .poly import BetaPolynomial, lascoux_polynomial
from .tableaux import SetValuedTableau, enumerate_svt, highest_weight_tableau, validate_partition

__all__ = [
    "shape_kind",
    "f_K",
    "e_K",
    "e_K_literal",
    "row_demazure_bound",
    "KDemazureCrystal",
    "k_demazure",
    "k_demazure_by_definition",
    "k_character",
    "lascoux_for_word",
    "i_k_strings",
    "check_K1",
    "check_K2",
    "check_K3",
    "check_H1",
    "check_H2",
    "check_string_intersections",
    "parse_shape_spec",
]


def shape_kind(shape: Sequence[int]) -> str:
    """``"row"`` for ``k Lambda_1``, ``"column"`` for ``Lambda_k`` (a single box is both; reported as ``"row"``).

    Raises:
        ValueError: for any other shape.
    """
    lam = validate_partition(shape)
    if len(lam) == 1:
        return "row"
    if lam and all(p == 1 for p in lam):
        return "column"
    raise ValueError(f"K-crystal operators are only defined for a single row or column, not {lam}")


def parse_shape_spec(spec: str) -> tuple[int, ...]:
    """``row:k`` gives ``(k,)``, ``column:k`` gives ``(1,)*k``; a plain partition ``2,1`` is also accepted."""
    spec = spec.strip()
    if ":" in spec:
        kind, k = spec.split(":", 1)
        k = int(k)
        if k < 1:
            raise ValueError("shape size must be positive")
        if kind == "row":
            return (k,)
        if kind in ("column", "col"):
            return (1,) * k
        raise ValueError(f"unknown shape kind {kind!r}")
    return validate_partition(int(x) for x in spec.split(",") if x.strip())


def _check(T: SetValuedTableau, i: int) -> None:
    if T.is_skew():
        raise ValueError("K-crystal operators need a straight shape")
    shape_kind(T.shape)
    if not 1 <= i < T.n:
        raise ValueError(f"index {i} outside 1..{T.n - 1}")


def f_K(T: SetValuedTableau, i: int) -> SetValuedTableau | None:
    """Add ``i+1`` to the rightmost box containing ``i``; ``None`` if ``i`` is missing or ``i+1`` present."""
    _check(T, i)
    letters = T.letters()
    if i not in letters or i + 1 in letters:
        return None
    pos = max((p for p, cell in T.items() if i in cell), key=lambda p: (p[1], -p[0]))
    return T.with_cells({pos: set(T.cell(*pos)) | {i + 1}})


def e_K(T: SetValuedTableau, i: int) -> SetValuedTableau | None:
    """Inverse of :func:`f_K`: delete ``i+1`` from the box holding both ``i`` and ``i+1``.

    Defined only when the result ``S`` satisfies ``f_K(S, i) == T``, i.e. the
    box is the only one containing ``i+1`` and the rightmost containing ``i``.
    """
    _check(T, i)
    for pos, cell in T.items():
        if i in cell and i + 1 in cell:
            S = T.with_cells({pos: set(cell) - {i + 1}})
            return S if f_K(S, i) == T else None
    return None


def e_K_literal(T: SetValuedTableau, i: int) -> SetValuedTableau | None:
    """Delete ``i+1`` from the box holding both letters, with no further condition.

    This is not always inverse to :func:`f_K` (``{1,2}2`` maps to ``12``
    although ``f_K(12, 1)`` is undefined); kept for comparison.
    """
    _check(T, i)
    for pos, cell in T.items():
        if i in cell and i + 1 in cell:
            return T.with_cells({pos: set(cell) - {i + 1}})
    return None


@dataclass(frozen=True)
class KDemazureCrystal:
    shape: tuple[int, ...]
    n: int
    word: tuple[int, ...]
    nodes: frozenset[SetValuedTableau]

    def sorted_nodes(self) -> list[SetValuedTableau]:
        return sorted(self.nodes, key=SetValuedTableau.sort_key)

    def to_json(self) -> dict:
        return {
            "schema": "svcrystal.k-demazure/1",
            "shape": list(self.shape),
            "n": self.n,
            "word": list(self.word),
            "nodes": [str(T) for T in self.sorted_nodes()],
            "character": k_character(self).to_json(),
        }


def _f_saturate(S: set[SetValuedTableau], i: int) -> set[SetValuedTableau]:
    out = set(S)
    frontier = list(S)
    while frontier:
        T = f_svt(frontier.pop(), i)
        if T is not None and T not in out:
            out.add(T)
            frontier.append(T)
    return out


def k_demazure(shape: Sequence[int], n: int, word: Sequence[int]) -> KDemazureCrystal:
    """K-Demazure crystal of ``s_{i_1} ... s_{i_l}``, built from the rightmost letter."""
    lam = validate_partition(shape)
    shape_kind(lam)
    word = tuple(word)
    if any(not 1 <= i < n for i in word):
        raise ValueError(f"word letters must lie in 1..{n - 1}")
    S = {highest_weight_tableau(lam, n)}
    for i in reversed(word):
        S |= {T for T in (f_K(b, i) for b in S) if T is not None}
        S = _f_saturate(S, i)
    return KDemazureCrystal(lam, n, word, frozenset(S))


def _raise_fully(T: SetValuedTableau, i: int) -> SetValuedTableau:
    while True:
        U = e_svt(T, i)
        if U is None:
            break
        T = U
    while True:
        U = e_K(T, i)
        if U is None:
            return T
        T = U


def k_demazure_by_definition(shape: Sequence[int], n: int, word: Sequence[int]) -> KDemazureCrystal:
    """Elements ``b`` with ``(e^K_{i_l})^max e_{i_l}^max ... (e^K_{i_1})^max e_{i_1}^max b = u_lambda``."""
    lam = validate_partition(shape)
    shape_kind(lam)
    u = highest_weight_tableau(lam, n)
    nodes = set()
    for T in enumerate_svt(lam, n):
        b = T
        for i in word:
            b = _raise_fully(b, i)
        if b == u:
            nodes.add(T)
    return KDemazureCrystal(lam, n, tuple(word), frozenset(nodes))


def k_character(D: KDemazureCrystal) -> BetaPolynomial:
    """``sum beta^{excess(T)} x^{wt(T)}`` over the crystal."""
    terms: dict = {}
    for T in D.nodes:
        key = (T.excess, T.weight())
        terms[key] = terms.get(key, 0) + 1
    return BetaPolynomial(D.n, terms)


def lascoux_for_word(shape: Sequence[int], n: int, word: Sequence[int]) -> BetaPolynomial:
    """``L_{w lambda}`` where ``w`` is the Demazure product of ``word``."""
    lam = validate_partition(shape)
    w = reduced_words(demazure_product(word, n))[0]
    a = act_on_composition(w, lam + (0,) * (n - len(lam)))
    return lascoux_polynomial(a, n)


# -- strings -------------------------------------------------------------------


def i_k_strings(shape: Sequence[int], n: int, i: int) -> list[tuple[SetValuedTableau, list[SetValuedTableau], list[SetValuedTableau]]]:
    """Decompose the crystal into ``i``-K-strings.

    Each string is ``(b, [b, f_i b, ...], [f^K_i b, f_i f^K_i b, ...])`` where
    the head ``b`` has ``epsilon_i(b) = 0`` and ``e^K_i b = None``; the second
    list is empty when ``f^K_i b`` is undefined.

    Raises:
        AssertionError: if the strings do not partition the node set.
    """
    nodes = enumerate_svt(shape, n)
    strings = []
    covered: list[SetValuedTableau] = []
    for b in nodes:
        if epsilon(b, i) or e_K(b, i) is not None:
            continue
        top = _chain(b, i)
        k = f_K(b, i)
        bottom = _chain(k, i) if k is not None else []
        strings.append((b, top, bottom))
        covered.extend(top + bottom)
    if len(covered) != len(set(covered)) or set(covered) != set(nodes):
        raise AssertionError("i-K-strings do not partition the crystal")
    return strings


def _chain(b: SetValuedTableau, i: int) -> list[SetValuedTableau]:
    out = [b]
    while True:
        nxt = f_svt(out[-1], i)
        if nxt is None:
            return out
        out.append(nxt)


# -- property checks -----------------------------------------------------------
# Each returns a list of counterexample descriptions (empty when the property holds).


def check_K1(shape: Sequence[int], n: int) -> list[str]:
    """Connected with ordinary and K edges; ``u_lambda`` is the only node killed by every ``e_i`` and ``e_i^K``."""
    nodes = enumerate_svt(shape, n)
    index = {T: k for k, T in enumerate(nodes)}
    parent = list(range(len(nodes)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    problems = []
    u = highest_weight_tableau(shape, n)
    for T in nodes:
        for i in range(1, n):
            for op in (f_svt, f_K):
                S = op(T, i)
                if S is not None:
                    parent[find(index[T])] = find(index[S])
        killed = all(e_svt(T, i) is None and e_K(T, i) is None for i in range(1, n))
        if killed != (T == u):
            problems.append(f"{T}: killed by all raising operators = {killed}")
    if len({find(k) for k in range(len(nodes))}) != 1:
        problems.append("graph with K edges is disconnected")
    return problems


def check_K2(shape: Sequence[int], n: int, max_length: int | None = None) -> list[str]:
    """K-Demazure crystals agree over all reduced words of every permutation."""
    from .perms import all_permutations

    problems = []
    for w in all_permutations(n):
        words = reduced_words(w)
        if max_length is not None and len(words[0]) > max_length:
            continue
        sets = {k_demazure(shape, n, word).nodes for word in words}
        if len(sets) != 1:
            problems.append(f"w={w}: {len(sets)} different K-Demazure crystals")
    return problems


def check_K3(shape: Sequence[int], n: int) -> list[str]:
    """``k_character(w) = L_{w lambda}`` for every permutation (one reduced word each), and both constructions agree."""
    from .perms import all_permutations

    problems = []
    for w in all_permutations(n):
        word = reduced_words(w)[0]
        D = k_demazure(shape, n, word)
        if k_character(D) != lascoux_for_word(shape, n, word):
            problems.append(f"w={w}: character differs from the Lascoux polynomial")
        if D.nodes != k_demazure_by_definition(shape, n, word).nodes:
            problems.append(f"w={w}: recursive and defining constructions differ")
    return problems


def check_H1(shape: Sequence[int], n: int) -> list[str]:
    """``f^K_i f^K_i = 0``, ``e^K_i e^K_i = 0``, and ``e^K_i`` inverts ``f^K_i``."""
    problems = []
    for T in enumerate_svt(shape, n):
        for i in range(1, n):
            F = f_K(T, i)
            if F is not None and (f_K(F, i) is not None or e_K(F, i) != T):
                problems.append(f"{T}, i={i}")
            E = e_K(T, i)
            if E is not None and (e_K(E, i) is not None or f_K(E, i) != T):
                problems.append(f"{T}, i={i}")
    return problems


def check_H2(shape: Sequence[int], n: int) -> list[str]:
    """If ``e_i T`` is defined or ``f_i T`` is not, then ``f^K_i T`` is undefined."""
    problems = []
    for T in enumerate_svt(shape, n):
        for i in range(1, n):
            if (e_svt(T, i) is not None or f_svt(T, i) is None) and f_K(T, i) is not None:
                problems.append(f"{T}, i={i}")
    return problems


def check_string_intersections(shape: Sequence[int], n: int, max_length: int | None = None) -> list[str]:
    """Each K-Demazure crystal meets each ``i``-K-string in nothing, everything, or the head.

    Also checks ``phi_i(f^K_i b) = phi_i(b) - 1`` on string heads.
    """
    from .perms import all_permutations

    problems = []
    strings = {i: i_k_strings(shape, n, i) for i in range(1, n)}
    for i, items in strings.items():
        for b, top, bottom in items:
            if bottom and phi(bottom[0], i) != phi(b, i) - 1:
                problems.append(f"phi_{i} fails on head {b}")
    for w in all_permutations(n):
        word = reduced_words(w)[0]
        if max_length is not None and len(word) > max_length:
            continue
        D = k_demazure(shape, n, word).nodes
        for i, items in strings.items():
            for b, top, bottom in items:
                S = set(top) | set(bottom)
                meet = S & D
                if meet and meet != S and meet != {b}:
                    problems.append(f"w={w}, i={i}, head {b}: intersection of size {len(meet)}")
    return problems


def row_demazure_bound(word: Sequence[int], n: int) -> int:
    """``w(1)``: the row K-Demazure crystal of ``w`` consists of the tableaux with maximum ``<= w(1)``.

    ``w`` is the Demazure product of ``word``, so non-reduced words are allowed.
    """
    return demazure_product(word, n)[0]
