"""Excited Young diagrams.

An excited Young diagram of ``lambda`` is a set of cells in the ``n x
(lambda_1 + n)`` rectangle reachable from the Young diagram of ``lambda`` by
elementary moves.  Cells are 1-indexed ``(row, column)`` pairs.  The map
``theta`` sends the letter ``i`` in box ``(r, c)`` of a set-valued tableau to
the cell ``(i, i + c - r)``; it is a weight-preserving bijection onto the
excited Young diagrams.

The elementary moves are named by the local 2x2 or 2x3 pattern they
rewrite, anchored at the pattern's top-left cell ``(r, c)``:

========  ===========================================  =========================================
type      before                                       after
========  ===========================================  =========================================
``1``     ``(r,c)``                                    ``(r+1,c+1)``
``2``     ``(r,c)``                                    ``(r,c), (r+1,c+1)``
``1'``    ``(r,c), (r,c+1), (r+1,c+2)``                ``(r,c), (r+1,c+1), (r+1,c+2)``
``2'``    ``(r,c), (r,c+1)``                           ``(r,c), (r,c+1), (r+1,c)``
========  ===========================================  =========================================

Every other cell of the pattern window must be empty.  ``excite`` goes left
to right in the table, ``emit`` right to left.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..crystal import reduce_signs
from ..tableaux import SetValuedTableau, validate_partition

__all__ = [
    "ExcitedYoungDiagram",
    "young_diagram",
    "theta",
    "theta_inverse",
    "elementary_move",
    "enumerate_eyd",
    "eyd_signature",
    "eyd_crystal_op",
    "MOVE_TYPES",
]

Cell = tuple[int, int]

# (window cells, filled before, filled after) relative to the anchor (0, 0).
_PATTERNS: dict[str, tuple[frozenset, frozenset, frozenset]] = {
    "1": (
        frozenset({(0, 0), (0, 1), (1, 0), (1, 1)}),
        frozenset({(0, 0)}),
        frozenset({(1, 1)}),
    ),
    "2": (
        frozenset({(0, 0), (0, 1), (1, 0), (1, 1)}),
        frozenset({(0, 0)}),
        frozenset({(0, 0), (1, 1)}),
    ),
    "1'": (
        frozenset({(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)}),
        frozenset({(0, 0), (0, 1), (1, 2)}),
        frozenset({(0, 0), (1, 1), (1, 2)}),
    ),
    "2'": (
        frozenset({(0, 0), (0, 1), (1, 0), (1, 1)}),
        frozenset({(0, 0), (0, 1)}),
        frozenset({(0, 0), (0, 1), (1, 0)}),
    ),
}
MOVE_TYPES = tuple(_PATTERNS)


@dataclass(frozen=True)
class ExcitedYoungDiagram:
    """A cell set inside the ``n x (lambda_1 + n)`` rectangle."""

    lam: tuple[int, ...]
    n: int
    cells: frozenset[Cell]

    def __post_init__(self) -> None:
        lam = validate_partition(self.lam)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "cells", frozenset((int(r), int(c)) for r, c in self.cells))
        width = self.width
        for r, c in self.cells:
            if not (1 <= r <= self.n and 1 <= c <= width):
                raise ValueError(f"cell {(r, c)} outside the {self.n} x {width} rectangle")

    @property
    def width(self) -> int:
        return (self.lam[0] if self.lam else 0) + self.n

    def sort_key(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.cells))

    def weight(self) -> tuple[int, ...]:
        wt = [0] * self.n
        for r, _ in self.cells:
            wt[r - 1] += 1
        return tuple(wt)

    def row(self, i: int) -> list[int]:
        return sorted(c for r, c in self.cells if r == i)

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "n": self.n, "cells": [list(c) for c in self.sort_key()]}

    def render(self) -> str:
        """ASCII picture: ``#`` for cells, ``.`` elsewhere."""
        return "\n".join(
            "".join("#" if (r, c) in self.cells else "." for c in range(1, self.width + 1))
            for r in range(1, self.n + 1)
        )


def young_diagram(lam: Sequence[int], n: int) -> ExcitedYoungDiagram:
    lam = validate_partition(lam)
    if len(lam) > n:
        raise ValueError("shape has more rows than n")
    return ExcitedYoungDiagram(lam, n, frozenset((r + 1, c + 1) for r, p in enumerate(lam) for c in range(p)))


def theta(T: SetValuedTableau) -> ExcitedYoungDiagram:
    """``{(i, i + c - r) : i in T(r, c)}``."""
    if T.is_skew():
        raise ValueError("theta needs a straight shape")
    cells = {(x, x + c - r) for (r, c), cell in T.items() for x in cell}
    return ExcitedYoungDiagram(T.shape, T.n, frozenset(cells))


def theta_inverse(E: ExcitedYoungDiagram) -> SetValuedTableau:
    """Rebuild the tableau by splitting each diagonal among its boxes.

    Letters on the diagonal of content ``d`` are ``{i : (i, i + d) in E}``;
    they increase down the diagonal, so each box receives a consecutive run.
    All splits are searched and exactly one must give a valid tableau.

    Raises:
        ValueError: if no split, or more than one split, is valid.
    """
    lam, n = E.lam, E.n
    diagonals: dict[int, list[int]] = {}
    for i, col in E.cells:
        diagonals.setdefault(col - i, []).append(i)
    for letters in diagonals.values():
        letters.sort()
    boxes = [(r, c) for r, p in enumerate(lam) for c in range(p)]
    per_diag: dict[int, int] = {}
    for r, c in boxes:
        per_diag[c - r] = per_diag.get(c - r, 0) + 1
    if set(diagonals) - set(per_diag):
        raise ValueError("cells on a diagonal with no boxes")
    remaining_boxes = dict(per_diag)
    pointer = {d: 0 for d in per_diag}
    filled: dict[tuple[int, int], tuple[int, ...]] = {}
    solutions: list[dict] = []

    def rec(k: int) -> None:
        if len(solutions) > 1:
            return
        if k == len(boxes):
            if all(pointer[d] == len(diagonals.get(d, [])) for d in per_diag):
                solutions.append(dict(filled))
            return
        r, c = boxes[k]
        d = c - r
        letters = diagonals.get(d, [])
        start = pointer[d]
        remaining_boxes[d] -= 1
        max_take = len(letters) - start - remaining_boxes[d]
        for take in range(1, max_take + 1):
            cell = tuple(letters[start : start + take])
            left = filled.get((r, c - 1))
            above = filled.get((r - 1, c))
            if left is not None and left[-1] > cell[0]:
                continue
            if above is not None and above[-1] >= cell[0]:
                continue
            filled[(r, c)] = cell
            pointer[d] = start + take
            rec(k + 1)
            pointer[d] = start
            del filled[(r, c)]
        remaining_boxes[d] += 1

    rec(0)
    if len(solutions) != 1:
        raise ValueError(f"cell set is not the image of a unique tableau ({len(solutions)} candidates)")
    sol = solutions[0]
    return SetValuedTableau.from_cells([[sol[(r, c)] for c in range(p)] for r, p in enumerate(lam)], n)


def elementary_move(
    E: ExcitedYoungDiagram, cell: Cell, move: str, direction: str = "excite"
) -> ExcitedYoungDiagram | None:
    """Apply one elementary move anchored at ``cell``; ``None`` if the pattern does not match."""
    try:
        window, before, after = _PATTERNS[move]
    except KeyError:
        raise ValueError(f"unknown move type {move!r}") from None
    if direction == "emit":
        before, after = after, before
    elif direction != "excite":
        raise ValueError(f"unknown direction {direction!r}")
    r0, c0 = cell
    absolute = {(r0 + dr, c0 + dc) for dr, dc in window}
    if any(not (1 <= r <= E.n and 1 <= c <= E.width) for r, c in absolute):
        return None
    current = {(r - r0, c - c0) for r, c in absolute if (r, c) in E.cells}
    if current != set(before):
        return None
    cells = (E.cells - {(r0 + dr, c0 + dc) for dr, dc in before}) | {(r0 + dr, c0 + dc) for dr, dc in after}
    return ExcitedYoungDiagram(E.lam, E.n, frozenset(cells))


def enumerate_eyd(lam: Sequence[int], n: int, moves: Iterable[str] = ("1", "2")) -> list[ExcitedYoungDiagram]:
    """Breadth-first closure of the Young diagram under the given excitations."""
    start = young_diagram(lam, n)
    moves = tuple(moves)
    seen = {start}
    queue = deque([start])
    while queue:
        E = queue.popleft()
        for cell in sorted(E.cells):
            for move in moves:
                nxt = elementary_move(E, cell, move, "excite")
                if nxt is not None and nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return sorted(seen, key=ExcitedYoungDiagram.sort_key)


def eyd_signature(E: ExcitedYoungDiagram, i: int):
    """Reduced ``i``-signature read along rows ``i`` and ``i+1`` from left to right.

    A cell ``(i, x)`` is matched when ``(i+1, x)`` or ``(i+1, x+1)`` is
    present, and a cell ``(i+1, y)`` is matched when ``(i, y)`` or
    ``(i, y-1)`` is present.  Unmatched cells in row ``i`` read ``+`` and
    unmatched cells in row ``i+1`` read ``-``, ordered by column.  Tags are
    the cells themselves.
    """
    if not 1 <= i < E.n:
        raise ValueError(f"index {i} outside 1..{E.n - 1}")
    cells = E.cells
    seq = []
    for x in E.row(i):
        if (i + 1, x) not in cells and (i + 1, x + 1) not in cells:
            seq.append((x, "+", (i, x)))
    for y in E.row(i + 1):
        if (i, y) not in cells and (i, y - 1) not in cells:
            seq.append((y, "-", (i + 1, y)))
    seq.sort()
    return reduce_signs((sign, tag) for _, sign, tag in seq)


def eyd_crystal_op(E: ExcitedYoungDiagram, i: int, kind: str) -> ExcitedYoungDiagram | None:
    """``f_i`` or ``e_i`` on an excited Young diagram.

    ``f_i`` acts at the rightmost unmatched cell ``(i, x)``: when ``(i, x+1)``
    is present it performs the Type 1' excitation anchored at ``(i, x)``,
    otherwise the Type 1 excitation of ``(i, x)``.  ``e_i`` acts at the
    leftmost unmatched cell ``(i+1, y)`` with the corresponding emissions.
    """
    sig = eyd_signature(E, i)
    if kind == "f":
        if not sig.plus:
            return None
        _, x = sig.plus[-1]
        move = "1'" if (i, x + 1) in E.cells else "1"
        out = elementary_move(E, (i, x), move, "excite")
    elif kind == "e":
        if not sig.minus:
            return None
        _, y = sig.minus[0]
        if (i + 1, y - 1) in E.cells:
            move, anchor = "1'", (i, y - 2)
        else:
            move, anchor = "1", (i, y - 1)
        out = elementary_move(E, anchor, move, "emit")
    else:
        raise ValueError(f"unknown operator kind {kind!r}")
    if out is None:
        raise AssertionError(f"Type {move} move unavailable where the signature requires it")
    return out
