"""Crystal operators on set-valued tableaux and the associated involutions.

The operators ``e_i`` and ``f_i`` use a column-by-column signature rule: a
column contributes ``+`` if it contains ``i`` but not ``i+1`` and ``-`` if it
contains ``i+1`` but not ``i``.  Adjacent ``-+`` pairs cancel, leaving a
reduced word ``+...+-...-``.  ``f_i`` acts on the box ``b`` holding ``i`` in
the column of the rightmost uncancelled ``+``:

* if the box ``b->`` to the right of ``b`` also holds ``i``, remove ``i``
  from ``b->`` and add ``i+1`` to ``b``;
* otherwise replace ``i`` by ``i+1`` in ``b``.

``e_i`` is the mirror image using the leftmost uncancelled ``-``.  ``None``
plays the role of the crystal's zero element throughout.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .tableaux import (
    Position,
    SetValuedTableau,
    enumerate_svt,
    highest_weight_tableau,
    validate_partition,
)

__all__ = [
    "Signature",
    "reduce_signs",
    "signature",
    "f_svt",
    "e_svt",
    "phi",
    "epsilon",
    "f_string",
    "e_string",
    "reading_word_operator",
    "CrystalGraph",
    "Component",
    "build_crystal_graph",
    "connected_components",
    "is_highest_weight",
    "isomorphism_to_ssyt_crystal",
    "bender_knuth",
    "evacuation",
    "k_bender_knuth",
    "k_evacuation",
    "lusztig_involution",
    "GRAPH_SCHEMA",
]

GRAPH_SCHEMA = "svcrystal.crystal-graph/1"


# ---------------------------------------------------------------------------
# Signature rule
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Signature:
    """Uncancelled signs, each tagged with the position that produced it.

    ``plus`` and ``minus`` are listed left to right; ``len(plus)`` is
    ``phi_i`` and ``len(minus)`` is ``epsilon_i``.
    """

    plus: tuple
    minus: tuple


def reduce_signs(seq: Iterable[tuple[str, object]]) -> Signature:
    """Cancel ``-+`` pairs in a sequence of ``(sign, tag)`` items.

    Each ``+`` cancels against the nearest uncancelled ``-`` to its left, so
    what survives reads ``+...+-...-``.
    """
    plus: list = []
    minus: list = []
    for sign, tag in seq:
        if sign == "-":
            minus.append(tag)
        elif sign == "+":
            if minus:
                minus.pop()
            else:
                plus.append(tag)
        else:
            raise ValueError(f"unknown sign {sign!r}")
    return Signature(tuple(plus), tuple(minus))


def _check_index(T: SetValuedTableau, i: int) -> None:
    if not 1 <= i < T.n:
        raise ValueError(f"index {i} outside 1..{T.n - 1}")


def signature(T: SetValuedTableau, i: int) -> Signature:
    """Reduced ``i``-signature of ``T``; tags are 0-indexed column numbers."""
    _check_index(T, i)
    seq = []
    for c, column in enumerate(T.columns()):
        letters = {x for _, cell in column for x in cell}
        has_i, has_next = i in letters, i + 1 in letters
        if has_i and not has_next:
            seq.append(("+", c))
        elif has_next and not has_i:
            seq.append(("-", c))
    return reduce_signs(seq)


def _row_in_column(T: SetValuedTableau, c: int, letter: int) -> int:
    for r, cell in T.columns()[c]:
        if letter in cell:
            return r
    raise AssertionError("letter not found in column")  # pragma: no cover


def _raise_lower_at(T: SetValuedTableau, pos: Position, i: int, lower: bool) -> SetValuedTableau:
    """The local move of ``f_i`` (``lower=True``) or ``e_i`` at box ``pos``."""
    r, c = pos
    b = set(T.cell(r, c))
    if lower:
        nb = T.cell(r, c + 1)
        if nb is not None and i in nb:
            return T.with_cells({(r, c): b | {i + 1}, (r, c + 1): set(nb) - {i}})
        return T.with_cells({(r, c): (b - {i}) | {i + 1}})
    nb = T.cell(r, c - 1)
    if nb is not None and i + 1 in nb:
        return T.with_cells({(r, c): b | {i}, (r, c - 1): set(nb) - {i + 1}})
    return T.with_cells({(r, c): (b - {i + 1}) | {i}})


def f_svt(T: SetValuedTableau, i: int) -> SetValuedTableau | None:
    """Lowering operator ``f_i``; ``None`` when there is no uncancelled ``+``."""
    sig = signature(T, i)
    if not sig.plus:
        return None
    c = sig.plus[-1]
    return _raise_lower_at(T, (_row_in_column(T, c, i), c), i, lower=True)


def e_svt(T: SetValuedTableau, i: int) -> SetValuedTableau | None:
    """Raising operator ``e_i``; ``None`` when there is no uncancelled ``-``."""
    sig = signature(T, i)
    if not sig.minus:
        return None
    c = sig.minus[0]
    return _raise_lower_at(T, (_row_in_column(T, c, i + 1), c), i, lower=False)


def phi(T: SetValuedTableau, i: int) -> int:
    return len(signature(T, i).plus)


def epsilon(T: SetValuedTableau, i: int) -> int:
    return len(signature(T, i).minus)


def f_string(T: SetValuedTableau, i: int) -> list[SetValuedTableau]:
    """``[T, f_i T, f_i^2 T, ...]`` until the zero element."""
    out = [T]
    while (nxt := f_svt(out[-1], i)) is not None:
        out.append(nxt)
    return out


def e_string(T: SetValuedTableau, i: int) -> list[SetValuedTableau]:
    out = [T]
    while (nxt := e_svt(out[-1], i)) is not None:
        out.append(nxt)
    return out


def _reading_letters(T: SetValuedTableau, order: str) -> list[tuple[int, Position]]:
    """Letters of ``T`` in a tensor-product reading order.

    ``"far-eastern"`` reads columns left to right, each bottom to top;
    ``"middle-eastern"`` reads rows bottom to top, each left to right.
    Within a box the letters are read in decreasing order, as if the box
    were a column.
    """
    if order == "far-eastern":
        boxes = sorted(T.positions(), key=lambda p: (p[1], -p[0]))
    elif order == "middle-eastern":
        boxes = sorted(T.positions(), key=lambda p: (-p[0], p[1]))
    else:
        raise ValueError(f"unknown reading order {order!r}")
    return [(x, pos) for pos in boxes for x in reversed(T.cell(*pos))]


def reading_word_operator(
    T: SetValuedTableau, i: int, kind: str, order: str
) -> SetValuedTableau | None:
    """``e_i``/``f_i`` computed from the signature of a reading word.

    Used to cross-check the column rule: the box is located through the
    reading word and the same local move is applied.
    """
    _check_index(T, i)
    seq = []
    for x, pos in _reading_letters(T, order):
        if x == i:
            seq.append(("+", pos))
        elif x == i + 1:
            seq.append(("-", pos))
    sig = reduce_signs(seq)
    if kind == "f":
        return _raise_lower_at(T, sig.plus[-1], i, lower=True) if sig.plus else None
    if kind == "e":
        return _raise_lower_at(T, sig.minus[0], i, lower=False) if sig.minus else None
    raise ValueError(f"unknown operator kind {kind!r}")


# ---------------------------------------------------------------------------
# Crystal graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CrystalGraph:
    """Crystal graph on an explicit node set.

    Edges are ``(source, target, i, kind)`` with node indices into ``nodes``
    and ``kind`` either ``"ordinary"`` or ``"K"``.
    """

    shape: tuple[int, ...]
    n: int
    nodes: tuple[SetValuedTableau, ...]
    edges: tuple[tuple[int, int, int, str], ...]

    def index(self) -> dict[SetValuedTableau, int]:
        return {T: k for k, T in enumerate(self.nodes)}

    def edge_labels(self, kind: str | None = None) -> set[tuple[str, str, int, str]]:
        """Edges as ``(str(source), str(target), i, kind)``."""
        return {
            (str(self.nodes[s]), str(self.nodes[t]), i, k)
            for s, t, i, k in self.edges
            if kind is None or k == kind
        }

    def to_json(self) -> dict:
        return {
            "schema": GRAPH_SCHEMA,
            "shape": list(self.shape),
            "n": self.n,
            "nodes": [{"id": k, "label": str(T), "tableau": T.to_json()} for k, T in enumerate(self.nodes)],
            "edges": [
                {"source": s, "target": t, "i": i, "kind": kind} for s, t, i, kind in self.edges
            ],
        }

    def to_dot(self, name: str = "crystal") -> str:
        """DOT text: ordinary edges solid, K edges dashed, colored by index."""
        palette = ["blue", "red", "darkgreen", "purple", "orange", "brown", "teal", "magenta"]
        lines = [f"digraph {name} {{", "  node [shape=box, fontname=monospace];"]
        for k, T in enumerate(self.nodes):
            lines.append(f'  n{k} [label="{T}"];')
        for s, t, i, kind in self.edges:
            color = palette[(i - 1) % len(palette)]
            style = "dashed" if kind == "K" else "solid"
            label = f"{i}" if kind == "ordinary" else f"K{i}"
            lines.append(f'  n{s} -> n{t} [label="{label}", color={color}, style={style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1)


def build_crystal_graph(
    shape: Sequence[int],
    n: int,
    with_k_edges: bool = False,
    max_excess: int | None = None,
) -> CrystalGraph:
    """Crystal graph on all set-valued tableaux of ``shape`` with entries ``<= n``.

    K edges are only defined for a single row or a single column.
    """
    shape = validate_partition(shape)
    if with_k_edges:
        from .kcrystal import f_K, shape_kind

        shape_kind(shape)  # raises for unsupported shapes
    nodes = tuple(enumerate_svt(shape, n, max_excess))
    index = {T: k for k, T in enumerate(nodes)}
    edges = []
    for k, T in enumerate(nodes):
        for i in range(1, n):
            target = f_svt(T, i)
            if target is not None and target in index:
                edges.append((k, index[target], i, "ordinary"))
            if with_k_edges:
                target = f_K(T, i)
                if target is not None and target in index:
                    edges.append((k, index[target], i, "K"))
    return CrystalGraph(shape, n, nodes, tuple(edges))


@dataclass(frozen=True)
class Component:
    nodes: tuple[SetValuedTableau, ...]
    highest: SetValuedTableau
    lowest: SetValuedTableau


def is_highest_weight(T: SetValuedTableau) -> bool:
    return all(e_svt(T, i) is None for i in range(1, T.n))


def connected_components(G: CrystalGraph) -> list[Component]:
    """Components of the ordinary-edge graph with their extremal nodes.

    Components are ordered by their first node in the graph's node order.

    Raises:
        AssertionError: if a component does not have exactly one
            highest-weight and one lowest-weight node.
    """
    parent = list(range(len(G.nodes)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    has_in = [False] * len(G.nodes)
    has_out = [False] * len(G.nodes)
    for s, t, _, kind in G.edges:
        if kind != "ordinary":
            continue
        has_out[s] = has_in[t] = True
        parent[find(s)] = find(t)
    groups: dict[int, list[int]] = {}
    for k in range(len(G.nodes)):
        groups.setdefault(find(k), []).append(k)
    comps = []
    for members in sorted(groups.values(), key=lambda m: m[0]):
        tops = [k for k in members if not has_in[k]]
        bottoms = [k for k in members if not has_out[k]]
        if len(tops) != 1 or len(bottoms) != 1:
            raise AssertionError(
                f"component of {G.nodes[members[0]]} has {len(tops)} highest and "
                f"{len(bottoms)} lowest weight nodes"
            )
        comps.append(
            Component(tuple(G.nodes[k] for k in members), G.nodes[tops[0]], G.nodes[bottoms[0]])
        )
    return comps


def isomorphism_to_ssyt_crystal(
    highest: SetValuedTableau,
) -> dict[SetValuedTableau, SetValuedTableau]:
    """Map the component of ``highest`` onto the tableau crystal ``B(mu)``.

    ``mu`` is the weight of ``highest``.  The map is built by following the
    same ``f_i`` from both highest-weight nodes; it raises if the two graphs
    disagree anywhere, so a returned map is a labeled-graph isomorphism.
    """
    if not is_highest_weight(highest):
        raise ValueError("start node is not of highest weight")
    n = highest.n
    wt = highest.weight()
    if any(wt[k] < wt[k + 1] for k in range(len(wt) - 1)):
        raise AssertionError(f"highest weight {wt} is not a partition")
    start = highest_weight_tableau(validate_partition(wt), n)
    mapping = {highest: start}
    used = {start}
    queue = deque([highest])
    while queue:
        a = queue.popleft()
        b = mapping[a]
        for i in range(1, n):
            for op in (f_svt, e_svt):
                na, nb = op(a, i), op(b, i)
                if (na is None) != (nb is None):
                    raise AssertionError(f"operator {op.__name__}_{i} disagrees at {a} ~ {b}")
                if na is None:
                    continue
                if na in mapping:
                    if mapping[na] != nb:
                        raise AssertionError(f"inconsistent image for {na}")
                    continue
                if nb in used:
                    raise AssertionError(f"map is not injective at {nb}")
                mapping[na] = nb
                used.add(nb)
                queue.append(na)
    return mapping


# ---------------------------------------------------------------------------
# Involutions
# ---------------------------------------------------------------------------


def _require_ssyt(T: SetValuedTableau) -> None:
    if not T.is_ssyt():
        raise ValueError("Bender-Knuth involutions need single-entry cells")


def bender_knuth(T: SetValuedTableau, i: int) -> SetValuedTableau:
    """Bender-Knuth involution ``t_i`` on a semistandard tableau.

    In each row the free ``i`` (no ``i+1`` directly below) and free ``i+1``
    (no ``i`` directly above) form a contiguous run; their counts are swapped.
    """
    _require_ssyt(T)
    _check_index(T, i)
    updates: dict[Position, tuple[int]] = {}
    for r in range(len(T.shape)):
        free = []
        for c in range(T.inner_row(r), T.shape[r]):
            x = T.cell(r, c)[0]
            if x == i:
                below = T.cell(r + 1, c)
                if below is None or below[0] != i + 1:
                    free.append((c, x))
            elif x == i + 1:
                above = T.cell(r - 1, c)
                if above is None or above[0] != i:
                    free.append((c, x))
        if not free:
            continue
        cols = [c for c, _ in free]
        if cols != list(range(cols[0], cols[0] + len(cols))):
            raise AssertionError("free letters are not contiguous")  # pragma: no cover
        p = sum(1 for _, x in free if x == i)
        q = len(free) - p
        for k, c in enumerate(cols):
            updates[(r, c)] = (i if k < q else i + 1,)
    return T.with_cells(updates)


def _evacuate(T: SetValuedTableau, op: Callable[[SetValuedTableau, int], SetValuedTableau]) -> SetValuedTableau:
    # t_1 (t_2 t_1) ... (t_{n-1} ... t_1): the rightmost factor acts first.
    for k in range(T.n - 1, 0, -1):
        for j in range(1, k + 1):
            T = op(T, j)
    return T


def evacuation(T: SetValuedTableau) -> SetValuedTableau:
    """Schutzenberger evacuation written as a product of Bender-Knuth moves."""
    _require_ssyt(T)
    return _evacuate(T, bender_knuth)


def k_bender_knuth(T: SetValuedTableau, i: int) -> SetValuedTableau:
    """K-theoretic Bender-Knuth involution ``K_i``.

    A box is free if it holds ``i`` while the box below lacks ``i+1``, or it
    holds ``i+1`` while the box above lacks ``i`` (a box holding both is
    free).  In every row the sequence of free boxes, recorded by type
    (``i``, both, ``i+1``), is reversed and ``i`` and ``i+1`` are exchanged
    in each type; letters other than ``i, i+1`` stay put.
    """
    _check_index(T, i)
    return _k_bender_knuth_letters(T, i, i + 1)


def _k_bender_knuth_letters(T, a, b, order=None):
    """``K`` acting on letters ``a < b`` that are adjacent in the alphabet.

    Works on any tableau-like object exposing ``cell``/``shape``/``inner_row``
    and ``with_cells``; the alphabet order only matters through ``a`` and
    ``b`` being consecutive, so it is not needed here.
    """
    updates = {}
    for r in range(len(T.shape)):
        free: list[tuple[int, str]] = []
        for c in range(T.inner_row(r), T.shape[r]):
            cell = T.cell(r, c)
            has_a, has_b = a in cell, b in cell
            if has_a and has_b:
                free.append((c, "both"))
            elif has_a:
                below = T.cell(r + 1, c)
                if below is None or b not in below:
                    free.append((c, "a"))
            elif has_b:
                above = T.cell(r - 1, c)
                if above is None or a not in above:
                    free.append((c, "b"))
        if not free:
            continue
        swap = {"a": "b", "b": "a", "both": "both"}
        new_types = [swap[t] for _, t in reversed(free)]
        for (c, _), t in zip(free, new_types):
            rest = [x for x in T.cell(r, c) if x != a and x != b]
            if t in ("a", "both"):
                rest.append(a)
            if t in ("b", "both"):
                rest.append(b)
            updates[(r, c)] = rest
    return T.with_cells(updates) if updates else T


def k_evacuation(T: SetValuedTableau) -> SetValuedTableau:
    """``K_1 (K_2 K_1) ... (K_{n-1} ... K_1)`` applied to ``T``."""
    return _evacuate(T, k_bender_knuth)


def _path_to_highest(T: SetValuedTableau, choose: str) -> tuple[list[int], SetValuedTableau]:
    path: list[int] = []
    indices = list(range(1, T.n))
    if choose == "max":
        indices.reverse()
    while True:
        for i in indices:
            up = e_svt(T, i)
            if up is not None:
                path.append(i)
                T = up
                break
        else:
            return path, T


def _lowest(T: SetValuedTableau) -> SetValuedTableau:
    while True:
        for i in range(1, T.n):
            down = f_svt(T, i)
            if down is not None:
                T = down
                break
        else:
            return T


def lusztig_involution(
    T: SetValuedTableau,
    G: CrystalGraph | None = None,
    choose: str = "min",
) -> SetValuedTableau:
    """Lusztig involution on the connected component of ``T``.

    If ``T = f_{a_1} ... f_{a_k} u`` with ``u`` of highest weight, the image
    is ``e_{n-a_1} ... e_{n-a_k}`` applied to the lowest-weight node of the
    component.  ``choose`` selects which raising path is followed (the
    result does not depend on it).
    """
    if G is not None and T not in set(G.nodes):
        raise ValueError("tableau is not a node of the given graph")
    path, top = _path_to_highest(T, choose)
    S = _lowest(top)
    n = T.n
    for a in reversed(path):
        S = e_svt(S, n - a)
        if S is None:
            raise AssertionError("mirrored path left the component")  # pragma: no cover
    return S
