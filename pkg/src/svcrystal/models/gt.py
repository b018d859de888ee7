"""Marked Gelfand-Tsetlin patterns.

A Gelfand-Tsetlin pattern for ``lambda`` with ``n`` rows is a chain
``() = lambda^(0) c lambda^(1) c ... c lambda^(n) = lambda`` of interlacing
partitions (each ``lambda^(j) / lambda^(j-1)`` is a horizontal strip, and
``lambda^(j)`` has at most ``j`` parts).  Rows are stored padded with zeros
to length ``j``.

Position ``(i, j)`` with ``2 <= j <= n`` and ``1 <= i <= j - 1`` may be
marked when ``lambda^(j)_{i+1} < lambda^(j-1)_i``.  A marked pattern
corresponds to the set-valued tableau obtained by filling
``lambda^(j) / lambda^(j-1)`` with ``j`` and, for each mark ``(i, j)``,
adding ``j`` to the last box of row ``i`` of the tableau built so far.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from ..poly import BetaPolynomial
from ..tableaux import SetValuedTableau, validate_partition

__all__ = [
    "MarkedGTPattern",
    "enumerate_gt",
    "allowed_marks",
    "enumerate_marked_gt",
    "marked_gt_to_svt",
    "svt_to_marked_gt",
    "single_variable_grothendieck",
    "grothendieck_via_gt",
]


@dataclass(frozen=True)
class MarkedGTPattern:
    """``rows[j]`` is ``lambda^(j)`` padded to length ``j``; ``marks`` holds ``(i, j)`` pairs."""

    rows: tuple[tuple[int, ...], ...]
    marks: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "marks", frozenset((int(i), int(j)) for i, j in self.marks))
        for j, row in enumerate(rows):
            if len(row) != j:
                raise ValueError(f"row {j} must have length {j}")
            validate_partition(row)
        for j in range(1, len(rows)):
            hi, lo = rows[j], rows[j - 1]
            for k in range(j - 1):
                if not hi[k + 1] <= lo[k] <= hi[k]:
                    raise ValueError(f"rows {j - 1} and {j} do not interlace")
        bad = self.marks - set(allowed_marks(rows))
        if bad:
            raise ValueError(f"marks {sorted(bad)} are not allowed")

    @property
    def n(self) -> int:
        return len(self.rows) - 1

    @property
    def shape(self) -> tuple[int, ...]:
        return validate_partition(self.rows[-1])

    def weight(self) -> tuple[int, ...]:
        wt = []
        for j in range(1, self.n + 1):
            base = sum(self.rows[j]) - sum(self.rows[j - 1])
            wt.append(base + sum(1 for _, jj in self.marks if jj == j))
        return tuple(wt)

    @property
    def excess(self) -> int:
        return len(self.marks)

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows[1:]], "marks": sorted(list(m) for m in self.marks)}

    def render(self) -> str:
        """Triangular layout, top row ``lambda^(n)``; marked entries are boxed as ``[x]``."""
        lines = []
        width = 5
        for j in range(self.n, 0, -1):
            entries = []
            for i, x in enumerate(self.rows[j], start=1):
                text = f"[{x}]" if (i, j) in self.marks else f" {x} "
                entries.append(text.center(width))
            lines.append(" " * ((self.n - j) * width // 2) + "".join(entries))
        return "\n".join(line.rstrip() for line in lines)


def enumerate_gt(shape: Sequence[int], n: int) -> list[tuple[tuple[int, ...], ...]]:
    """All unmarked patterns (as row tuples) with top row ``shape``."""
    lam = validate_partition(shape)
    if len(lam) > n:
        return []
    top = lam + (0,) * (n - len(lam))
    out: list[tuple[tuple[int, ...], ...]] = []

    def rec(chain: list[tuple[int, ...]]) -> None:
        upper = chain[-1]
        j = len(upper)
        if j == 0:
            out.append(tuple(reversed(chain)))
            return
        ranges = [range(upper[k + 1], upper[k] + 1) for k in range(j - 1)]

        def build(k: int, acc: list[int]) -> None:
            if k == j - 1:
                chain.append(tuple(acc))
                rec(chain)
                chain.pop()
                return
            for x in ranges[k]:
                acc.append(x)
                build(k + 1, acc)
                acc.pop()

        build(0, [])

    rec([top])
    return sorted(out)


def allowed_marks(rows: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """Positions ``(i, j)`` with ``lambda^(j)_{i+1} < lambda^(j-1)_i``."""
    out = []
    for j in range(2, len(rows)):
        for i in range(1, j):
            if rows[j][i] < rows[j - 1][i - 1]:
                out.append((i, j))
    return out


def enumerate_marked_gt(shape: Sequence[int], n: int) -> list[MarkedGTPattern]:
    out = []
    for rows in enumerate_gt(shape, n):
        slots = allowed_marks(rows)
        for k in range(len(slots) + 1):
            for chosen in combinations(slots, k):
                out.append(MarkedGTPattern(rows, frozenset(chosen)))
    return out


def marked_gt_to_svt(P: MarkedGTPattern) -> SetValuedTableau:
    lam = P.shape
    cells: dict[tuple[int, int], list[int]] = {}
    for j in range(1, P.n + 1):
        prev = P.rows[j - 1] + (0,)
        for i, j2 in sorted(P.marks):
            if j2 == j:
                cells[(i - 1, prev[i - 1] - 1)].append(j)
        for r, length in enumerate(P.rows[j]):
            for c in range(prev[r], length):
                cells[(r, c)] = [j]
    return SetValuedTableau.from_cells([[cells[(r, c)] for c in range(p)] for r, p in enumerate(lam)], P.n)


def svt_to_marked_gt(T: SetValuedTableau) -> MarkedGTPattern:
    """Inverse of :func:`marked_gt_to_svt`.

    Raises:
        ValueError: if an extra letter is not in the last box of its row at
            the time it is added.
    """
    if T.is_skew():
        raise ValueError("expected a straight shape")
    n = T.n
    rows = [()]
    for j in range(1, n + 1):
        row = [sum(1 for c in range(T.shape[r]) if T.cell(r, c)[0] <= j) if r < len(T.shape) else 0 for r in range(j)]
        rows.append(tuple(row))
    marks = set()
    for (r, c), cell in T.items():
        for x in cell[1:]:
            prev = rows[x - 1]
            if r >= len(prev) or c != prev[r] - 1:
                raise ValueError(f"letter {x} at {(r, c)} is not in the last box of its row")
            marks.add((r + 1, x))
    return MarkedGTPattern(tuple(rows), frozenset(marks))


def single_variable_grothendieck(
    upper: Sequence[int], lower: Sequence[int], j: int, n: int
) -> BetaPolynomial:
    """``G_{upper/lower}(x_j) = x_j^{|upper|-|lower|} prod_i (1 + beta x_j [upper_{i+1} != lower_i])``.

    The product runs over ``1 <= i <= l(lower)``; ``upper/lower`` must be a
    horizontal strip.
    """
    upper, lower = validate_partition(upper), validate_partition(lower)
    xj = BetaPolynomial.x(j, n)
    out = xj ** (sum(upper) - sum(lower))
    padded = list(upper) + [0] * (len(lower) + 1)
    for i in range(len(lower)):
        if padded[i + 1] != lower[i]:
            out = out * (1 + BetaPolynomial.beta(n) * xj)
    return out


def grothendieck_via_gt(shape: Sequence[int], n: int, form: str = "marked") -> BetaPolynomial:
    """Grothendieck polynomial from Gelfand-Tsetlin data.

    Forms:
        ``marked``: ``sum beta^{|M|} x^{wt(Lambda, M)}`` over marked patterns.
        ``product``: ``sum_Lambda prod_j G_{lambda^(j)/lambda^(j-1)}(x_j)``.
        ``tokuyama``: ``sum_Lambda x^{wt(Lambda)} prod_j (1 + beta x_j)^{m_j}``
            where ``m_j`` counts the allowed marks in row ``j``.
    """
    total = BetaPolynomial.zero(n)
    if form == "marked":
        terms: dict = {}
        for P in enumerate_marked_gt(shape, n):
            key = (P.excess, P.weight())
            terms[key] = terms.get(key, 0) + 1
        return BetaPolynomial(n, terms)
    for rows in enumerate_gt(shape, n):
        if form == "product":
            term = BetaPolynomial.one(n)
            for j in range(1, n + 1):
                term = term * single_variable_grothendieck(rows[j], rows[j - 1], j, n)
        elif form == "tokuyama":
            wt = [sum(rows[j]) - sum(rows[j - 1]) for j in range(1, n + 1)]
            term = BetaPolynomial.monomial(wt)
            slots = allowed_marks(rows)
            for j in range(1, n + 1):
                m = sum(1 for _, jj in slots if jj == j)
                term = term * (1 + BetaPolynomial.beta(n) * BetaPolynomial.x(j, n)) ** m
        else:
            raise ValueError(f"unknown form {form!r}")
        total = total + term
    return total
