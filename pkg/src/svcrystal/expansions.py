"""Schur expansions of Grothendieck polynomials and the bijections behind them.

* ``schur_expansion`` counts highest-weight set-valued tableaux by weight.
* ``lenart_coefficients`` counts flagged increasing tableaux, an independent
  description of the same numbers.
* ``uncrowd`` is a weight-preserving bijection from set-valued tableaux to
  pairs (semistandard tableau, flagged increasing tableau) that commutes
  with the crystal operators.
* ``phi_single_row`` splits a one-row set-valued tableau into a row tensor a
  column; ``psi_hook`` is the corresponding hook-shaped tableau.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Sequence

from .crystal import build_crystal_graph, connected_components, reduce_signs
from .poly import BetaPolynomial, grothendieck_from_tableaux, schur_from_tableaux
from .tableaux import (
    IncreasingTableau,
    SetValuedTableau,
    SkewShape,
    enumerate_flagged_increasing,
    strip_zeros,
    validate_partition,
)

__all__ = [
    "ExpansionTable",
    "schur_expansion",
    "lenart_coefficients",
    "lenart_table",
    "rsk_row_insert",
    "rsk_insert_word",
    "phi_single_row",
    "phi_single_row_inverse",
    "psi_hook",
    "tensor_operator",
    "uncrowd",
    "pieri_check",
    "vertical_pieri_check",
    "EXPANSION_SCHEMA",
]

EXPANSION_SCHEMA = "svcrystal.expansion/1"


@dataclass(frozen=True)
class ExpansionTable:
    """Multiplicities ``M[mu]`` in ``G_lambda = sum beta^{|mu|-|lambda|} M[mu] s_mu``."""

    lam: tuple[int, ...]
    n: int
    multiplicities: dict[tuple[int, ...], int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.multiplicities.values())

    def polynomial(self) -> BetaPolynomial:
        """Evaluate the right-hand side of the expansion in ``n`` variables."""
        out = BetaPolynomial.zero(self.n)
        size = sum(self.lam)
        for mu, m in self.multiplicities.items():
            power = sum(mu) - size
            out = out + schur_from_tableaux(mu, self.n) * BetaPolynomial.monomial((), beta=power, coeff=m, n=self.n)
        return out

    def to_json(self) -> dict:
        size = sum(self.lam)
        return {
            "schema": EXPANSION_SCHEMA,
            "lambda": list(self.lam),
            "n": self.n,
            "terms": [
                {"mu": list(mu), "M": m, "beta_power": sum(mu) - size}
                for mu, m in sorted(self.multiplicities.items(), key=lambda kv: (sum(kv[0]), kv[0]))
            ],
        }

    def to_text(self) -> str:
        lines = [f"G_{list(self.lam)} in {self.n} variables:"]
        for term in self.to_json()["terms"]:
            lines.append(f"  mu={term['mu']}  M={term['M']}  beta^{term['beta_power']}")
        return "\n".join(lines)


def schur_expansion(shape: Sequence[int], n: int) -> ExpansionTable:
    """Count highest-weight nodes of the set-valued crystal by weight."""
    lam = validate_partition(shape)
    counts: dict[tuple[int, ...], int] = {}
    for comp in connected_components(build_crystal_graph(lam, n)):
        mu = strip_zeros(comp.highest.weight())
        counts[mu] = counts.get(mu, 0) + 1
    return ExpansionTable(lam, n, counts)


def lenart_coefficients(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of flagged increasing tableaux of shape ``mu/lambda``."""
    return len(enumerate_flagged_increasing(SkewShape(tuple(mu), tuple(lam))))


def lenart_table(lam: Sequence[int], n: int) -> dict[tuple[int, ...], int]:
    """All nonzero ``lenart_coefficients(lam, mu)`` with at most ``n`` rows.

    Row ``r`` of ``mu/lambda`` holds at most ``r-1`` labels, which bounds the
    candidate ``mu``.
    """
    lam = validate_partition(lam)
    if len(lam) > n:
        return {}
    padded = lam + (0,) * (n - len(lam))
    out = {}
    ranges = [range(padded[r], padded[r] + r + 1) for r in range(n)]
    for mu in product(*ranges):
        if any(mu[r] < mu[r + 1] for r in range(n - 1)):
            continue
        mu = strip_zeros(mu)
        count = lenart_coefficients(lam, mu)
        if count:
            out[mu] = count
    return out


# ---------------------------------------------------------------------------
# RSK, single rows and hooks
# ---------------------------------------------------------------------------


def _insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Row-insert ``x`` in place; return the new cell."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return r, 0
        row = rows[r]
        for c, y in enumerate(row):
            if y > x:
                row[c], x = x, y
                break
        else:
            row.append(x)
            return r, len(row) - 1
        r += 1


def _ssyt_rows(P: SetValuedTableau) -> list[list[int]]:
    if P.is_skew() or not P.is_ssyt():
        raise ValueError("expected a straight-shape semistandard tableau")
    return [[cell[0] for cell in row] for row in P.rows]


def _from_rows(rows: list[list[int]], n: int) -> SetValuedTableau:
    return SetValuedTableau.from_cells(rows, n)


def rsk_row_insert(P: SetValuedTableau, x: int) -> tuple[SetValuedTableau, tuple[int, int]]:
    """Schensted row insertion of ``x`` into ``P``; returns the new tableau and new cell."""
    rows = _ssyt_rows(P)
    cell = _insert(rows, x)
    return _from_rows(rows, max(P.n, x)), cell


def rsk_insert_word(word: Sequence[int], n: int) -> SetValuedTableau:
    rows: list[list[int]] = []
    for x in word:
        _insert(rows, x)
    return _from_rows(rows, n)


def _single_row_cells(T: SetValuedTableau) -> tuple:
    if len(T.shape) > 1 or T.is_skew():
        raise ValueError("expected a single-row tableau")
    return T.rows[0] if T.shape else ()


def phi_single_row(T: SetValuedTableau) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a one-row set-valued tableau into ``(row, column)``.

    The row keeps the maximum of each of the first ``s-1`` cells; every other
    entry goes, in increasing order, into the column.
    """
    cells = _single_row_cells(T)
    if not cells:
        return (), ()
    row = tuple(cell[-1] for cell in cells[:-1])
    column = [x for cell in cells[:-1] for x in cell[:-1]] + list(cells[-1])
    return row, tuple(column)


def phi_single_row_inverse(row: Sequence[int], column: Sequence[int], n: int) -> SetValuedTableau:
    """Inverse of :func:`phi_single_row`.

    Each row entry ``r_j`` closes cell ``j``, which also collects the column
    entries in ``[r_{j-1}, r_j)``; the last cell takes the column entries
    ``>= r_{s-1}``.

    Raises:
        ValueError: when ``(row, column)`` is not in the image.
    """
    row, column = list(row), list(column)
    if not column:
        if row:
            raise ValueError("a nonempty row needs a nonempty column")
        return SetValuedTableau.from_cells([], n)
    if any(row[k] > row[k + 1] for k in range(len(row) - 1)):
        raise ValueError("row factor must be weakly increasing")
    if any(column[k] >= column[k + 1] for k in range(len(column) - 1)):
        raise ValueError("column factor must be strictly increasing")
    cells = []
    prev = None
    for r in row:
        cells.append([x for x in column if (prev is None or x >= prev) and x < r] + [r])
        prev = r
    last = [x for x in column if prev is None or x >= prev]
    if not last:
        raise ValueError("pair is outside the image: last cell would be empty")
    cells.append(last)
    used = sum(len(c) for c in cells) - len(row)
    if used != len(column):
        raise ValueError("pair is outside the image: column entries left over")
    return SetValuedTableau.from_cells([cells], n)


def psi_hook(T: SetValuedTableau) -> SetValuedTableau:
    """Hook tableau: cell minima along the first row, all other entries down the first column."""
    cells = _single_row_cells(T)
    if not cells:
        return SetValuedTableau.from_cells([], T.n)
    first = [cell[0] for cell in cells]
    rest = sorted(x for cell in cells for x in cell[1:])
    return SetValuedTableau.from_cells([first] + [[x] for x in rest], T.n)


def tensor_operator(
    row: Sequence[int], column: Sequence[int], i: int, kind: str
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """``e_i``/``f_i`` on ``row (x) column`` by the signature rule.

    The word reads the row left to right followed by the column bottom to
    top; the letter at the rightmost uncancelled ``+`` (for ``f``) or the
    leftmost uncancelled ``-`` (for ``e``) changes.
    """
    letters = [(x, ("r", k)) for k, x in enumerate(row)]
    letters += [(x, ("c", k)) for k, x in reversed(list(enumerate(column)))]
    seq = [("+" if x == i else "-", tag) for x, tag in letters if x in (i, i + 1)]
    sig = reduce_signs(seq)
    if kind == "f":
        if not sig.plus:
            return None
        (which, k), new = sig.plus[-1], i + 1
    elif kind == "e":
        if not sig.minus:
            return None
        (which, k), new = sig.minus[0], i
    else:
        raise ValueError(f"unknown operator kind {kind!r}")
    row, column = list(row), list(column)
    (row if which == "r" else column)[k] = new
    return tuple(row), tuple(column)


# ---------------------------------------------------------------------------
# Uncrowding
# ---------------------------------------------------------------------------


def uncrowd(T: SetValuedTableau) -> tuple[SetValuedTableau, IncreasingTableau]:
    """Map a set-valued tableau of shape ``lambda`` to ``(S, F)``.

    ``S`` is semistandard of some shape ``mu`` and ``F`` is a flagged
    increasing tableau of shape ``mu/lambda``.  Rows are processed from the
    bottom: with ``(S', F')`` the image of the rows below the top row ``R``
    and ``R -> row (x) column``, ``S`` is ``S'`` with the row and then the
    column (read bottom to top) inserted.  Row ``k+1`` of ``F`` copies row
    ``k`` of ``F'`` and, if ``S`` grew there by one more cell, appends ``k``.
    """
    if T.is_skew():
        raise ValueError("uncrowding needs a straight shape")
    rows: list[list[int]] = []
    flag_rows: list[list[int]] = []
    for r in range(len(T.shape) - 1, -1, -1):
        sub = SetValuedTableau.from_cells([T.rows[r]], T.n)
        row, column = phi_single_row(sub)
        for x in row:
            _insert(rows, x)
        for x in reversed(column):
            _insert(rows, x)
        lam_here = T.shape[r:]
        mu = [len(rr) for rr in rows]
        if mu[0] != lam_here[0]:
            raise AssertionError("first row of the insertion tableau grew")  # pragma: no cover
        new_flag: list[list[int]] = [[]]
        for k in range(1, len(mu)):
            copied = list(flag_rows[k - 1]) if k - 1 < len(flag_rows) else []
            inner = lam_here[k] if k < len(lam_here) else 0
            extra = mu[k] - inner - len(copied)
            if extra not in (0, 1):
                raise AssertionError("row of F grew by more than one cell")  # pragma: no cover
            new_flag.append(copied + [k] * extra)
        flag_rows = new_flag
    S = _from_rows(rows, T.n)
    F = IncreasingTableau(S.shape, tuple(tuple(r) for r in flag_rows), T.shape) if rows else IncreasingTableau((), ())
    return S, F


# ---------------------------------------------------------------------------
# Pieri rules
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _groth(shape: tuple[int, ...], n: int) -> BetaPolynomial:
    return grothendieck_from_tableaux(shape, n)


def _vertical_strips(lam: tuple[int, ...], n: int) -> list[tuple[int, ...]]:
    """All ``nu`` with ``nu/lam`` a nonempty vertical strip and at most ``n`` rows."""
    padded = list(lam) + [0] * (n - len(lam))
    out = []
    for adds in product((0, 1), repeat=n):
        nu = [p + a for p, a in zip(padded, adds)]
        if any(adds) and all(nu[k] >= nu[k + 1] for k in range(n - 1)):
            out.append(strip_zeros(nu))
    return out


def _columns(nu: Sequence[int], lam: Sequence[int]) -> int:
    cells = SkewShape(tuple(nu), tuple(lam)).cells()
    return len({c for _, c in cells})


def vertical_pieri_check(shape: Sequence[int], ell: int, n: int) -> bool:
    """Check ``G_{1^l} G_lambda = sum beta^{|nu/lambda|-l} C(c(nu/lambda)-1, |nu/lambda|-l) G_nu``.

    The sum runs over vertical strips ``nu/lambda`` with at most ``n`` rows;
    ``c`` counts nonempty columns.
    """
    lam = validate_partition(shape)
    if len(lam) > n or not 1 <= ell <= n:
        raise ValueError("shape or column length does not fit in n variables")
    lhs = _groth((1,) * ell, n) * _groth(lam, n)
    rhs = BetaPolynomial.zero(n)
    for nu in _vertical_strips(lam, n):
        m = sum(nu) - sum(lam)
        if m < ell:
            continue
        coeff = comb(_columns(nu, lam) - 1, m - ell)
        if coeff:
            rhs = rhs + _groth(nu, n) * BetaPolynomial.monomial((), beta=m - ell, coeff=coeff, n=n)
    return lhs == rhs


def pieri_check(shape: Sequence[int], n: int) -> bool:
    """Check ``G_1 G_lambda = sum beta^{|nu/lambda|-1} G_nu`` over boxes added at distinct addable corners."""
    lam = validate_partition(shape)
    if len(lam) > n:
        raise ValueError("shape has more rows than variables")
    padded = list(lam) + [0] * (n - len(lam))
    corners = [r for r in range(n) if r == 0 or padded[r - 1] > padded[r]]
    lhs = _groth((1,), n) * _groth(lam, n)
    rhs = BetaPolynomial.zero(n)
    for k in range(1, len(corners) + 1):
        for chosen in combinations(corners, k):
            nu = list(padded)
            for r in chosen:
                nu[r] += 1
            rhs = rhs + _groth(strip_zeros(nu), n) * BetaPolynomial.monomial((), beta=k - 1, n=n)
    return lhs == rhs
