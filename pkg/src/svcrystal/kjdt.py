"""K-jeu de taquin for set-valued tableaux by K-Bender-Knuth infusion.

A layered tableau ``U | T`` fills a straight shape with an inner tableau
``U`` over a barred alphabet and a skew tableau ``T`` over ``1..n``.  Barred
letters are stored as negative integers (``-k`` is ``k``-bar) and every
layered tableau carries its current total order on letters.

``b_a`` acts on a letter ``a`` and its successor ``b`` in the current order:
apply the K-Bender-Knuth involution to ``a < b``, then exchange the labels
``a`` and ``b`` and their places in the order.  Infusion applies, for each
inner letter from the largest down, ``b`` once per outer letter; afterwards
every outer letter precedes every inner letter.  Restricting to the outer
(unbarred) letters gives the rectification ``rect_U(T)``, which depends on
``U``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .crystal import Signature, _k_bender_knuth_letters, reduce_signs
from .tableaux import SetValuedTableau, validate_partition

__all__ = [
    "LayeredTableau",
    "bar",
    "letter_text",
    "layer",
    "b_step",
    "k_infusion",
    "rectify",
    "rectify_trace",
    "unbarred_signatures",
    "unbarred_signature_counts",
    "two_box_rule",
    "two_box_rule_direct",
    "rectification_order_for_two_boxes",
    "naive_two_box_slides",
    "kjdt_table",
    "infusion_is_involution",
]

Letter = int
Position = tuple[int, int]


def bar(k: int) -> Letter:
    """The barred letter ``k``-bar."""
    if k < 1:
        raise ValueError("barred letters are indexed from 1")
    return -k


def letter_text(x: Letter) -> str:
    return f"{-x}̄" if x < 0 else str(x)


@dataclass(frozen=True)
class LayeredTableau:
    """Straight-shape set-valued tableau over the ordered alphabet ``order``.

    Cells are stored sorted by the current order and validated as
    semistandard (row: max <= min; column: max < min).
    """

    shape: tuple[int, ...]
    rows: tuple[tuple[tuple[Letter, ...], ...], ...]
    order: tuple[Letter, ...]
    _rank: Mapping[Letter, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        shape = validate_partition(self.shape)
        order = tuple(int(x) for x in self.order)
        if len(set(order)) != len(order):
            raise ValueError("order repeats a letter")
        rank = {x: k for k, x in enumerate(order)}
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_rank", rank)
        rows = []
        for row in self.rows:
            new_row = []
            for cell in row:
                cell = tuple(cell)
                if not cell:
                    raise ValueError("cells must be nonempty")
                if any(x not in rank for x in cell):
                    raise ValueError(f"cell {cell} uses letters outside the alphabet")
                if len(set(cell)) != len(cell):
                    raise ValueError(f"cell {cell} repeats a letter")
                new_row.append(tuple(sorted(cell, key=rank.__getitem__)))
            rows.append(tuple(new_row))
        object.__setattr__(self, "rows", tuple(rows))
        if len(self.rows) != len(shape) or any(len(r) != p for r, p in zip(self.rows, shape)):
            raise ValueError("rows do not match shape")
        for (r, c), cell in self.items():
            right = self.cell(r, c + 1)
            if right is not None and rank[cell[-1]] > rank[right[0]]:
                raise ValueError(f"row condition fails at {(r, c)}")
            below = self.cell(r + 1, c)
            if below is not None and rank[cell[-1]] >= rank[below[0]]:
                raise ValueError(f"column condition fails at {(r, c)}")

    # the interface used by the generic K-Bender-Knuth helper
    inner = ()

    def inner_row(self, r: int) -> int:
        return 0

    def cell(self, r: int, c: int) -> tuple[Letter, ...] | None:
        if 0 <= r < len(self.shape) and 0 <= c < self.shape[r]:
            return self.rows[r][c]
        return None

    def items(self) -> Iterable[tuple[Position, tuple[Letter, ...]]]:
        for r, row in enumerate(self.rows):
            for c, cell in enumerate(row):
                yield (r, c), cell

    def with_cells(self, updates: Mapping[Position, Iterable[Letter]]) -> LayeredTableau:
        rows = [list(row) for row in self.rows]
        for (r, c), cell in updates.items():
            rows[r][c] = tuple(cell)
        return LayeredTableau(self.shape, tuple(tuple(r) for r in rows), self.order)

    def relabel(self, mapping: Mapping[Letter, Letter], order: Sequence[Letter]) -> LayeredTableau:
        rows = tuple(tuple(tuple(mapping.get(x, x) for x in cell) for cell in row) for row in self.rows)
        return LayeredTableau(self.shape, rows, tuple(order))

    def restrict(self, letters: Iterable[Letter]) -> dict[Position, tuple[Letter, ...]]:
        """Cells meeting ``letters``, cut down to those letters."""
        keep = set(letters)
        out = {}
        for pos, cell in self.items():
            part = tuple(x for x in cell if x in keep)
            if part:
                out[pos] = part
        return out

    def __str__(self) -> str:
        def fmt(cell):
            if len(cell) == 1:
                return letter_text(cell[0])
            return "{" + ",".join(letter_text(x) for x in cell) + "}"

        return "/".join("".join(fmt(cell) for cell in row) for row in self.rows)

    def to_json(self) -> dict:
        enc = lambda x: x if x > 0 else f"bar{-x}"  # noqa: E731
        return {
            "shape": list(self.shape),
            "order": [enc(x) for x in self.order],
            "rows": [[[enc(x) for x in cell] for cell in row] for row in self.rows],
        }


def layer(U: SetValuedTableau, T: SetValuedTableau) -> LayeredTableau:
    """``U | T``: ``U`` (barred, on the inner shape of ``T``) inside the skew tableau ``T``."""
    if U.is_skew():
        raise ValueError("the rectification order must have straight shape")
    inner = tuple(T.inner)
    if validate_partition(U.shape) != inner:
        raise ValueError(f"U has shape {U.shape}, expected the inner shape {inner}")
    m, n = U.n, T.n
    rows = []
    for r, p in enumerate(T.shape):
        row = []
        for c in range(p):
            cell = U.cell(r, c) if r < len(inner) and c < inner[r] else None
            row.append(tuple(bar(x) for x in cell) if cell is not None else T.cell(r, c))
        rows.append(tuple(row))
    order = tuple(bar(k) for k in range(1, m + 1)) + tuple(range(1, n + 1))
    return LayeredTableau(T.shape, tuple(rows), order)


def b_step(L: LayeredTableau, a: Letter) -> LayeredTableau:
    """``b_a``: K-Bender-Knuth on ``a`` and its successor, then swap their labels and order."""
    k = L.order.index(a)
    if k + 1 >= len(L.order):
        raise ValueError(f"letter {letter_text(a)} has no successor")
    b = L.order[k + 1]
    moved = _k_bender_knuth_letters(L, a, b)
    order = list(L.order)
    order[k], order[k + 1] = b, a
    return moved.relabel({a: b, b: a}, order)


def k_infusion(
    L: LayeredTableau,
    inner_size: int | None = None,
    observer: Callable[[LayeredTableau, Letter], None] | None = None,
) -> LayeredTableau:
    """Push the first ``inner_size`` letters of the order past all the others.

    ``inner_size`` defaults to the number of barred letters.  ``observer`` is
    called after every ``b`` step with the new tableau and the moving letter.
    """
    if inner_size is None:
        inner_size = sum(1 for x in L.order if x < 0)
    inner = L.order[:inner_size]
    outer_count = len(L.order) - inner_size
    for a in reversed(inner):
        for _ in range(outer_count):
            L = b_step(L, a)
            if observer is not None:
                observer(L, a)
    return L


def _unbarred_part(L: LayeredTableau, n: int) -> SetValuedTableau:
    cells = L.restrict(range(1, n + 1))
    shape = []
    for r in range(len(L.shape)):
        length = sum(1 for (rr, _) in cells if rr == r)
        if length:
            shape.append(length)
    shape = validate_partition(shape)
    if set(cells) != {(r, c) for r, p in enumerate(shape) for c in range(p)}:
        raise AssertionError("unbarred letters do not fill a straight shape")  # pragma: no cover
    return SetValuedTableau.from_cells([[cells[(r, c)] for c in range(p)] for r, p in enumerate(shape)], n)


def rectify(T: SetValuedTableau, U: SetValuedTableau) -> SetValuedTableau:
    """``rect_U(T)``: infuse ``U | T`` and keep the unbarred letters."""
    if not T.is_skew():
        if U.num_cells:
            raise ValueError("U must be empty for a straight-shape tableau")
        return T
    return _unbarred_part(k_infusion(layer(U, T)), T.n)


def rectify_trace(T: SetValuedTableau, U: SetValuedTableau) -> list[tuple[str, LayeredTableau]]:
    """Every intermediate layered tableau, labelled by the moving barred letter."""
    L = layer(U, T)
    trace: list[tuple[str, LayeredTableau]] = [("start", L)]
    k_infusion(L, observer=lambda M, a: trace.append((letter_text(a), M)))
    return trace


def unbarred_signatures(L: LayeredTableau, n: int) -> tuple[Signature, ...]:
    """Reduced ``j``-signatures (``1 <= j < n``) of the unbarred letters, tagged by column."""
    cells = L.restrict(range(1, n + 1))
    width = L.shape[0] if L.shape else 0
    column_letters = [set() for _ in range(width)]
    for (_, c), cell in cells.items():
        column_letters[c].update(cell)
    out = []
    for j in range(1, n):
        seq = []
        for c, letters in enumerate(column_letters):
            if j in letters and j + 1 not in letters:
                seq.append(("+", c))
            elif j + 1 in letters and j not in letters:
                seq.append(("-", c))
        out.append(reduce_signs(seq))
    return tuple(out)


def unbarred_signature_counts(L: LayeredTableau, n: int) -> tuple[tuple[int, int], ...]:
    """``(phi_j, epsilon_j)`` for ``1 <= j < n``: the reduced signs ``+^phi -^epsilon``."""
    return tuple((len(s.plus), len(s.minus)) for s in unbarred_signatures(L, n))


# -- two boxes -----------------------------------------------------------------


def rectification_order_for_two_boxes(T: Sequence[int], S: Sequence[int]) -> int:
    """Number ``k`` of barred letters in the single-box order used for ``T * S``.

    If ``min S < min T``, ``k`` counts the ``i`` in ``S`` below ``min T``;
    otherwise it counts the ``j`` in ``T`` with ``j <= min S``.
    """
    if min(S) < min(T):
        return sum(1 for i in S if i < min(T))
    return sum(1 for j in T if j <= min(S))


def _two_box_skew(T: Sequence[int], S: Sequence[int], n: int) -> SetValuedTableau:
    return SetValuedTableau.from_cells([[sorted(S)], [sorted(T)]], n, inner=(1,))


def two_box_rule(T: Sequence[int], S: Sequence[int], n: int) -> SetValuedTableau:
    """Rectify ``T * S`` (``S`` above-right, ``T`` below-left) with the single-box order ``{1..k}``-bar."""
    k = rectification_order_for_two_boxes(T, S)
    U = SetValuedTableau.from_cells([[list(range(1, k + 1))]], k)
    return rectify(_two_box_skew(T, S, n), U)


def _slide_pair(A: Sequence[int], B: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...], str]:
    """Fill a hole whose right neighbour is ``A`` and lower neighbour is ``B``.

    Returns ``(moved, left_behind, source)`` where ``source`` is ``"right"`` or
    ``"below"``.
    """
    if min(A) < min(B):
        moved = tuple(a for a in sorted(A) if a < min(B))
        return moved, tuple(a for a in sorted(A) if a not in moved), "right"
    moved = tuple(b for b in sorted(B) if b <= min(A))
    return moved, tuple(b for b in sorted(B) if b not in moved), "below"


def two_box_rule_direct(T: Sequence[int], S: Sequence[int], n: int) -> SetValuedTableau:
    """The closed form of :func:`two_box_rule`.

    With ``A = S`` and ``B = T``: if ``min A < min B`` the hole receives the
    letters of ``A`` below ``min B``; otherwise it receives the letters of
    ``B`` that are ``<= min A``.  Emptied boxes disappear.
    """
    moved, rest, source = _slide_pair(S, T)
    if source == "right":
        rows = [[moved] + ([rest] if rest else []), [sorted(T)]]
    else:
        rows = [[moved, sorted(S)]] + ([[rest]] if rest else [])
    return SetValuedTableau.from_cells(rows, n)


def naive_two_box_slides(T: SetValuedTableau) -> SetValuedTableau:
    """Rectify by sliding every hole with the two-box formula.

    Holes are taken from the inner corner in the lowest row.  A hole with two
    neighbours takes letters as in :func:`two_box_rule_direct` and travels on
    only when the neighbour it drew from is emptied; a hole with one
    neighbour takes that box whole.  This is not a valid K-rectification in
    general; it is kept to exhibit the failure.
    """
    n = T.n
    inner = list(T.inner)
    cells: dict[Position, tuple[int, ...]] = dict(T.items())
    while inner:
        r = len(inner) - 1
        while inner[r] == 0:
            r -= 1
        c = inner[r] - 1
        inner[r] -= 1
        while inner and inner[-1] == 0:
            inner.pop()
        hole = (r, c)
        while True:
            right, below = (hole[0], hole[1] + 1), (hole[0] + 1, hole[1])
            A, B = cells.get(right), cells.get(below)
            if A is None and B is None:
                break
            if A is None or B is None:
                src = right if A is not None else below
                cells[hole] = cells.pop(src)
                hole = src
                continue
            moved, rest, source = _slide_pair(A, B)
            src = right if source == "right" else below
            cells[hole] = moved
            if rest:
                cells[src] = rest
                break
            del cells[src]
            hole = src
    shape = []
    for row in range(len(T.shape)):
        length = sum(1 for (rr, _) in cells if rr == row)
        if length:
            shape.append(length)
    return SetValuedTableau.from_cells([[cells[(r, c)] for c in range(p)] for r, p in enumerate(shape)], n)


def kjdt_table(n: int = 3) -> dict:
    """All two-box rectifications over ``[1, n]``: rows ``T``, columns ``S``."""
    from itertools import combinations

    subsets = [s for k in range(1, n + 1) for s in combinations(range(1, n + 1), k)]
    return {
        "subsets": [list(s) for s in subsets],
        "entries": [[two_box_rule(T, S, n) for S in subsets] for T in subsets],
    }


def infusion_is_involution(L: LayeredTableau) -> bool:
    """Does infusing twice (swapping the roles of the two alphabets) return ``L``?"""
    inner_size = sum(1 for x in L.order if x < 0)
    once = k_infusion(L, inner_size)
    twice = k_infusion(once, len(L.order) - inner_size)
    return twice == L
