"""Shapes, weights and set-valued tableaux.

A set-valued tableau fills each box of a Young diagram (English convention)
with a nonempty set of positive integers such that, writing ``A`` for a box,
``B`` for the box to its right and ``C`` for the box below it,
``max A <= min B`` and ``max A < min C``.  A semistandard Young tableau is
the special case in which every box holds a single integer.

Tableaux may be skew: an optional ``inner`` partition marks the boxes that
are absent.  Straight shapes (``inner == ()``) are the common case.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

Cell = tuple[int, ...]
Position = tuple[int, int]

__all__ = [
    "Cell",
    "Position",
    "SetValuedTableau",
    "IncreasingTableau",
    "SkewShape",
    "validate_partition",
    "strip_zeros",
    "conjugate",
    "partitions_in_box",
    "partition_size",
    "count_ssyt",
    "enumerate_svt",
    "enumerate_flagged_increasing",
    "highest_weight_tableau",
    "weight",
    "parse_svt",
]


# ---------------------------------------------------------------------------
# Partitions and skew shapes
# ---------------------------------------------------------------------------


def validate_partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Return ``parts`` as a tuple with trailing zeros stripped.

    Raises:
        ValueError: if the parts are negative or not weakly decreasing.
    """
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise ValueError(f"partition parts must be nonnegative: {p}")
    if any(p[k] < p[k + 1] for k in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {p}")
    return strip_zeros(p)


def strip_zeros(parts: Sequence[int]) -> tuple[int, ...]:
    """Drop trailing zeros from a weakly decreasing sequence."""
    p = list(parts)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def partition_size(parts: Sequence[int]) -> int:
    return sum(parts)


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    """Transpose a partition."""
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > c) for c in range(parts[0]))


def partitions_in_box(rows: int, cols: int) -> list[tuple[int, ...]]:
    """All partitions fitting inside a ``rows x cols`` rectangle, by size then lex."""
    out = []
    for parts in itertools.product(range(cols, -1, -1), repeat=rows):
        if all(parts[k] >= parts[k + 1] for k in range(rows - 1)):
            out.append(strip_zeros(parts))
    return sorted(set(out), key=lambda p: (sum(p), p))


def count_ssyt(shape: Sequence[int], n: int) -> int:
    """Number of semistandard tableaux of ``shape`` with entries ``<= n``.

    Uses the hook-content formula, independent of any enumeration.
    """
    shape = validate_partition(shape)
    if len(shape) > n:
        return 0
    conj = conjugate(shape)
    total = Fraction(1)
    for r, length in enumerate(shape):
        for c in range(length):
            hook = (length - c - 1) + (conj[c] - r - 1) + 1
            total *= Fraction(n + c - r, hook)
    assert total.denominator == 1
    return int(total)


@dataclass(frozen=True, slots=True)
class SkewShape:
    """A skew shape ``outer / inner`` with ``inner`` contained in ``outer``."""

    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        outer = validate_partition(self.outer)
        inner = validate_partition(self.inner)
        if len(inner) > len(outer) or any(inner[r] > outer[r] for r in range(len(inner))):
            raise ValueError(f"inner shape {inner} not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def inner_row(self, r: int) -> int:
        return self.inner[r] if r < len(self.inner) else 0

    def cells(self) -> list[Position]:
        """Cells in row-major order (0-indexed)."""
        return [(r, c) for r, length in enumerate(self.outer) for c in range(self.inner_row(r), length)]

    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def is_horizontal_strip(self) -> bool:
        """True when no column holds two cells."""
        return all(
            self.outer[r + 1] <= self.inner_row(r) for r in range(len(self.outer) - 1)
        )

    def is_vertical_strip(self) -> bool:
        """True when no row holds two cells."""
        return all(self.outer[r] - self.inner_row(r) <= 1 for r in range(len(self.outer)))


# ---------------------------------------------------------------------------
# Set-valued tableaux
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class SetValuedTableau:
    """A (possibly skew) semistandard set-valued tableau with entries in ``[1, n]``.

    Attributes:
        shape: Outer partition.
        n: Upper bound for the entries.
        rows: ``rows[r]`` lists the cells of row ``r`` from column ``inner[r]``
            to ``shape[r] - 1``; every cell is a strictly increasing tuple.
        inner: Inner partition of a skew shape (empty for straight shapes).
    """

    shape: tuple[int, ...]
    n: int
    rows: tuple[tuple[Cell, ...], ...]
    inner: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        shape = validate_partition(self.shape)
        inner = validate_partition(self.inner)
        rows = tuple(tuple(tuple(int(x) for x in cell) for cell in row) for row in self.rows)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "rows", rows)
        self._validate()

    # -- construction -------------------------------------------------------

    @classmethod
    def from_cells(
        cls,
        cells: Sequence[Sequence[Iterable[int]]],
        n: int,
        inner: Sequence[int] = (),
    ) -> SetValuedTableau:
        """Build from a list of rows of cells; cells may be ints or iterables."""
        inner = validate_partition(inner)
        rows = []
        for r, row in enumerate(cells):
            norm = []
            for cell in row:
                if isinstance(cell, int):
                    norm.append((cell,))
                else:
                    norm.append(tuple(sorted(cell)))
            rows.append(tuple(norm))
        ir = lambda r: inner[r] if r < len(inner) else 0  # noqa: E731
        shape = tuple(ir(r) + len(row) for r, row in enumerate(rows))
        return cls(shape=shape, n=n, rows=tuple(rows), inner=inner)

    def _validate(self) -> None:
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if len(self.inner) > len(self.shape) or any(
            self.inner[r] > self.shape[r] for r in range(len(self.inner))
        ):
            raise ValueError(f"inner shape {self.inner} not contained in {self.shape}")
        if len(self.rows) != len(self.shape):
            raise ValueError("number of rows does not match shape")
        for r, row in enumerate(self.rows):
            if len(row) != self.shape[r] - self.inner_row(r):
                raise ValueError(f"row {r} has wrong length")
            for cell in row:
                if not cell:
                    raise ValueError("cells must be nonempty")
                if any(cell[k] >= cell[k + 1] for k in range(len(cell) - 1)):
                    raise ValueError(f"cell {cell} is not strictly increasing")
                if cell[0] < 1 or cell[-1] > self.n:
                    raise ValueError(f"cell {cell} has entries outside [1, {self.n}]")
        for (r, c), cell in self.items():
            right = self.cell(r, c + 1)
            if right is not None and cell[-1] > right[0]:
                raise ValueError(f"row condition fails at {(r, c)}")
            below = self.cell(r + 1, c)
            if below is not None and cell[-1] >= below[0]:
                raise ValueError(f"column condition fails at {(r, c)}")

    # -- access -------------------------------------------------------------

    def inner_row(self, r: int) -> int:
        return self.inner[r] if r < len(self.inner) else 0

    def cell(self, r: int, c: int) -> Cell | None:
        """The cell at row ``r``, column ``c`` (0-indexed) or ``None``."""
        if r < 0 or r >= len(self.shape):
            return None
        lo = self.inner_row(r)
        if c < lo or c >= self.shape[r]:
            return None
        return self.rows[r][c - lo]

    def items(self) -> Iterator[tuple[Position, Cell]]:
        """Row-major iteration over ``((r, c), cell)``."""
        for r, row in enumerate(self.rows):
            lo = self.inner_row(r)
            for k, cell in enumerate(row):
                yield (r, lo + k), cell

    def positions(self) -> list[Position]:
        return [pos for pos, _ in self.items()]

    def columns(self) -> list[list[tuple[int, Cell]]]:
        """For each column index, the ``(row, cell)`` pairs top to bottom."""
        width = self.shape[0] if self.shape else 0
        cols: list[list[tuple[int, Cell]]] = [[] for _ in range(width)]
        for (r, c), cell in self.items():
            cols[c].append((r, cell))
        return cols

    def letters(self) -> set[int]:
        return {x for _, cell in self.items() for x in cell}

    @property
    def num_cells(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def excess(self) -> int:
        return sum(len(cell) - 1 for _, cell in self.items())

    def weight(self) -> tuple[int, ...]:
        """``weight()[i-1]`` counts the cells containing ``i``."""
        wt = [0] * self.n
        for _, cell in self.items():
            for x in cell:
                wt[x - 1] += 1
        return tuple(wt)

    def is_ssyt(self) -> bool:
        return all(len(cell) == 1 for _, cell in self.items())

    def is_skew(self) -> bool:
        return bool(self.inner)

    def with_cells(self, updates: Mapping[Position, Iterable[int]]) -> SetValuedTableau:
        """Return a copy with the given cells replaced (and revalidated)."""
        rows = [list(row) for row in self.rows]
        for (r, c), cell in updates.items():
            rows[r][c - self.inner_row(r)] = tuple(sorted(cell))
        return SetValuedTableau(self.shape, self.n, tuple(tuple(row) for row in rows), self.inner)

    def with_n(self, n: int) -> SetValuedTableau:
        return SetValuedTableau(self.shape, n, self.rows, self.inner)

    def sort_key(self) -> tuple[Cell, ...]:
        """Row-major tuple of cells; the canonical enumeration order."""
        return tuple(cell for _, cell in self.items())

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        data: dict = {
            "shape": list(self.shape),
            "n": self.n,
            "cells": [[list(cell) for cell in row] for row in self.rows],
        }
        if self.inner:
            data["inner"] = list(self.inner)
        return data

    @classmethod
    def from_json(cls, data: Mapping | str) -> SetValuedTableau:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            shape = tuple(data["shape"])
            n = int(data["n"])
            cells = data["cells"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed tableau record: {exc}") from exc
        inner = tuple(data.get("inner", ()))
        return cls(
            shape=shape,
            n=n,
            rows=tuple(tuple(tuple(cell) for cell in row) for row in cells),
            inner=inner,
        )

    def __str__(self) -> str:
        out = []
        for r, row in enumerate(self.rows):
            text = "." * self.inner_row(r)
            for cell in row:
                if len(cell) == 1 and cell[0] < 10:
                    text += str(cell[0])
                else:
                    text += "{" + ",".join(map(str, cell)) + "}"
            out.append(text)
        return "/".join(out)

    def pretty(self) -> str:
        """Multi-line rendering, one row per line."""
        return "\n".join(str(self).split("/"))


_TOKEN = re.compile(r"\{[^}]*\}|\.|\d")


def parse_svt(text: str, n: int | None = None) -> SetValuedTableau:
    """Parse the compact notation used by ``str(T)``.

    Rows are separated by ``/``; a cell is a single digit or a braced,
    comma-separated set; ``.`` marks a box of the inner shape. ``n`` defaults
    to the largest entry.

    >>> str(parse_svt("1{1,2}/3"))
    '1{1,2}/3'
    """
    text = text.strip()
    rows: list[list[Cell]] = []
    inner: list[int] = []
    if text:
        for row_text in text.split("/"):
            row_text = row_text.replace(" ", "")
            tokens = _TOKEN.findall(row_text)
            if "".join(tokens) != row_text:
                raise ValueError(f"cannot parse row {row_text!r}")
            skip = 0
            row: list[Cell] = []
            for tok in tokens:
                if tok == ".":
                    if row:
                        raise ValueError("inner-shape markers must precede cells")
                    skip += 1
                elif tok.startswith("{"):
                    body = tok[1:-1]
                    row.append(tuple(sorted(int(x) for x in body.split(",") if x)))
                else:
                    row.append((int(tok),))
            rows.append(row)
            inner.append(skip)
    bound = max((x for row in rows for cell in row for x in cell), default=0)
    if n is None:
        n = bound
    return SetValuedTableau.from_cells(rows, n=n, inner=strip_zeros(inner))


def weight(T: SetValuedTableau) -> tuple[int, ...]:
    """Weight of ``T`` as a weak composition of length ``T.n``."""
    return T.weight()


def highest_weight_tableau(shape: Sequence[int], n: int) -> SetValuedTableau:
    """The tableau ``u_lambda`` whose row ``i`` is filled with ``i``."""
    shape = validate_partition(shape)
    if len(shape) > n:
        raise ValueError("shape has more rows than n")
    return SetValuedTableau.from_cells([[r + 1] * length for r, length in enumerate(shape)], n)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def enumerate_svt(
    shape: Sequence[int],
    n: int,
    max_excess: int | None = None,
    inner: Sequence[int] = (),
) -> list[SetValuedTableau]:
    """All set-valued tableaux of ``shape`` (or ``shape/inner``) with entries ``<= n``.

    The result is sorted lexicographically by the row-major sequence of cells.
    ``max_excess`` caps the total number of extra letters.
    """
    skew = SkewShape(tuple(shape), tuple(inner))
    shape, inner = skew.outer, skew.inner
    positions = skew.cells()
    cap = max_excess if max_excess is not None else 10**9
    # Column heights below each cell bound its maximum entry.
    conj = conjugate(shape)
    filled: dict[Position, Cell] = {}
    results: list[SetValuedTableau] = []

    def rec(k: int, budget: int) -> None:
        if k == len(positions):
            rows = tuple(
                tuple(filled[(r, c)] for c in range(skew.inner_row(r), shape[r]))
                for r in range(len(shape))
            )
            results.append(SetValuedTableau(shape, n, rows, inner))
            return
        r, c = positions[k]
        lo = 1
        left = filled.get((r, c - 1))
        if left is not None:
            lo = max(lo, left[-1])
        above = filled.get((r - 1, c))
        if above is not None:
            lo = max(lo, above[-1] + 1)
        below_count = conj[c] - r - 1
        hi = n - below_count
        if lo > hi:
            return
        values = range(lo, hi + 1)
        for size in range(1, min(len(values), budget + 1) + 1):
            for combo in itertools.combinations(values, size):
                filled[(r, c)] = combo
                rec(k + 1, budget - (size - 1))
        filled.pop((r, c), None)

    rec(0, cap)
    results.sort(key=SetValuedTableau.sort_key)
    return results


# ---------------------------------------------------------------------------
# Increasing tableaux
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class IncreasingTableau:
    """A (possibly skew) filling by integers strictly increasing along rows and columns.

    ``rows[r]`` lists the entries of row ``r`` starting at column ``inner[r]``.
    """

    shape: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]
    inner: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        shape = validate_partition(self.shape)
        inner = validate_partition(self.inner)
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "rows", rows)
        if len(rows) != len(shape):
            raise ValueError("number of rows does not match shape")
        for r, row in enumerate(rows):
            if len(row) != shape[r] - self.inner_row(r):
                raise ValueError(f"row {r} has wrong length")
        for (r, c), x in self.items():
            right = self.entry(r, c + 1)
            below = self.entry(r + 1, c)
            if (right is not None and right <= x) or (below is not None and below <= x):
                raise ValueError(f"not strictly increasing at {(r, c)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], inner: Sequence[int] = ()) -> IncreasingTableau:
        inner = validate_partition(inner)
        shape = tuple((inner[r] if r < len(inner) else 0) + len(row) for r, row in enumerate(rows))
        return cls(shape, tuple(tuple(row) for row in rows), inner)

    def inner_row(self, r: int) -> int:
        return self.inner[r] if r < len(self.inner) else 0

    def entry(self, r: int, c: int) -> int | None:
        if r < 0 or r >= len(self.shape):
            return None
        lo = self.inner_row(r)
        if c < lo or c >= self.shape[r]:
            return None
        return self.rows[r][c - lo]

    def items(self) -> Iterator[tuple[Position, int]]:
        for r, row in enumerate(self.rows):
            lo = self.inner_row(r)
            for k, x in enumerate(row):
                yield (r, lo + k), x

    def columns(self) -> list[list[int]]:
        width = self.shape[0] if self.shape else 0
        cols: list[list[int]] = [[] for _ in range(width)]
        for (_, c), x in self.items():
            cols[c].append(x)
        return cols

    def is_flagged(self) -> bool:
        """Every entry in row ``i`` (1-indexed) is at most ``i - 1``."""
        return all(x <= r for (r, _), x in self.items())

    def to_json(self) -> dict:
        data: dict = {"shape": list(self.shape), "rows": [list(row) for row in self.rows]}
        if self.inner:
            data["inner"] = list(self.inner)
        return data

    @classmethod
    def from_json(cls, data: Mapping | str) -> IncreasingTableau:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(tuple(data["shape"]), tuple(tuple(r) for r in data["rows"]), tuple(data.get("inner", ())))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed increasing tableau record: {exc}") from exc

    def __str__(self) -> str:
        out = []
        for r, row in enumerate(self.rows):
            text = "." * self.inner_row(r)
            text += "".join(str(x) if x < 10 else "{" + str(x) + "}" for x in row)
            out.append(text)
        return "/".join(out)


def enumerate_flagged_increasing(shape: SkewShape) -> list[IncreasingTableau]:
    """All increasing tableaux of skew shape ``mu/lambda`` whose row ``i`` entries are ``<= i-1``."""
    cells = shape.cells()
    filled: dict[Position, int] = {}
    results: list[IncreasingTableau] = []

    def rec(k: int) -> None:
        if k == len(cells):
            rows = tuple(
                tuple(filled[(r, c)] for c in range(shape.inner_row(r), shape.outer[r]))
                for r in range(len(shape.outer))
            )
            results.append(IncreasingTableau(shape.outer, rows, shape.inner))
            return
        r, c = cells[k]
        lo = 1
        if (r, c - 1) in filled:
            lo = max(lo, filled[(r, c - 1)] + 1)
        if (r - 1, c) in filled:
            lo = max(lo, filled[(r - 1, c)] + 1)
        for x in range(lo, r + 1):  # flag: row r (0-indexed) allows labels <= r
            filled[(r, c)] = x
            rec(k + 1)
        filled.pop((r, c), None)

    rec(0)
    return results
