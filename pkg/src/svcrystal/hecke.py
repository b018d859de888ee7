"""Hecke insertion, two-line arrays and truncated stable Grothendieck polynomials.

A two-line array is a list of pairs ``(k, a)`` with ``k`` weakly increasing
and, within each block of equal ``k``, the letters ``a`` strictly
decreasing.  Block ``k`` is therefore the factor ``f_k`` of a decreasing
factorization ``f_1 f_2 ... f_m``; letter ``a`` stands for ``s_a``.

Column Hecke insertion of ``a`` into an increasing tableau ``P`` inserts
the letter ``x = a`` into the first column and proceeds column by column:

* if ``x`` is at least every entry of the column, append ``x`` at the
  bottom if the result is increasing (recording ``k`` in a new box of
  ``Q``); otherwise leave ``P`` unchanged and add ``k`` to the last box of
  the row of ``Q`` containing the column's bottom entry.  Stop.
* otherwise let ``y`` be the smallest entry greater than ``x``; replace ``y``
  by ``x`` when that keeps ``P`` increasing, and insert ``y`` into the next
  column either way.

The recording tableau ``Q`` is a semistandard set-valued tableau and the
map is a bijection onto pairs of the same shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from .crystal import e_svt, f_svt
from .perms import coxeter_length, demazure_product, reduced_words
from .poly import BetaPolynomial
from .tableaux import IncreasingTableau, SetValuedTableau

__all__ = [
    "TwoLineArray",
    "hecke_insert",
    "hecke_reverse",
    "insertion_tableau",
    "reading_word",
    "hecke_element",
    "hecke_equivalent",
    "equivalence_classes_by_relations",
    "to_decreasing_factorization",
    "from_decreasing_factorization",
    "enumerate_arrays",
    "stable_grothendieck_truncated",
    "stanley_truncated",
    "array_crystal_op",
    "format_factorization",
    "parse_factorization",
]


@dataclass(frozen=True)
class TwoLineArray:
    """Pairs ``(k, a)``: ``k`` weakly increasing, ``a`` strictly decreasing inside each ``k`` block."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = tuple((int(k), int(a)) for k, a in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        for k, a in pairs:
            if k < 1 or a < 1:
                raise ValueError("array entries must be positive")
        for (k1, a1), (k2, a2) in zip(pairs, pairs[1:]):
            if k2 < k1:
                raise ValueError("top row must be weakly increasing")
            if k1 == k2 and a2 >= a1:
                raise ValueError(f"letters in block {k1} must be strictly decreasing")

    @classmethod
    def from_rows(cls, top: Sequence[int], bottom: Sequence[int]) -> TwoLineArray:
        if len(top) != len(bottom):
            raise ValueError("rows of a two-line array must have equal length")
        return cls(tuple(zip(top, bottom)))

    @classmethod
    def parse(cls, text: str) -> TwoLineArray:
        """Two whitespace-separated rows, separated by a newline or ``/``."""
        parts = [p for p in text.replace("/", "\n").splitlines() if p.strip()]
        if len(parts) == 0:
            return cls(())
        if len(parts) != 2:
            raise ValueError("expected two rows")
        return cls.from_rows([int(x) for x in parts[0].split()], [int(x) for x in parts[1].split()])

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.pairs)

    @property
    def bottom(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __str__(self) -> str:
        return " ".join(map(str, self.top)) + " / " + " ".join(map(str, self.bottom))

    def to_json(self) -> dict:
        return {"top": list(self.top), "bottom": list(self.bottom)}


# -- insertion ----------------------------------------------------------------


def _is_increasing_at(P: list[list[int]], r: int, c: int, value: int) -> bool:
    """Would placing ``value`` at ``(r, c)`` respect its left and upper neighbours?"""
    if c > 0:
        if r >= len(P) or len(P[r]) < c:
            return False
        if P[r][c - 1] >= value:
            return False
    if r > 0 and P[r - 1][c] >= value:
        return False
    return True


def _column(P: list[list[int]], c: int) -> list[int]:
    return [row[c] for row in P if len(row) > c]


def _insert_letter(P: list[list[int]], Q: list[list[list[int]]], x: int, k: int) -> None:
    c = 0
    while True:
        col = _column(P, c)
        if all(x >= y for y in col):
            r = len(col)
            if (not col or x > col[-1]) and _is_increasing_at(P, r, c, x):
                if r == len(P):
                    P.append([])
                    Q.append([])
                P[r].append(x)
                Q[r].append([k])
            else:
                Q[r - 1][-1].append(k)
            return
        r = min(i for i, y in enumerate(col) if y > x)
        y = col[r]
        if (r == 0 or P[r - 1][c] < x) and (c == 0 or P[r][c - 1] < x):
            P[r][c] = x
        x = y
        c += 1


def _freeze(P: list[list[int]], Q: list[list[list[int]]], m: int) -> tuple[IncreasingTableau, SetValuedTableau]:
    return IncreasingTableau.from_rows(P), SetValuedTableau.from_cells(Q, m)


def hecke_insert(
    array: TwoLineArray | Sequence[tuple[int, int]], m: int | None = None
) -> tuple[IncreasingTableau, SetValuedTableau]:
    """Column Hecke insertion of the bottom row, recording the top row.

    ``m`` bounds the entries of ``Q`` (default: the largest top entry).
    """
    if not isinstance(array, TwoLineArray):
        array = TwoLineArray(tuple(array))
    P: list[list[int]] = []
    Q: list[list[list[int]]] = []
    for k, a in array.pairs:
        _insert_letter(P, Q, a, k)
    if m is None:
        m = max(array.top, default=0)
    return _freeze(P, Q, m)


def insertion_tableau(word: Sequence[int]) -> IncreasingTableau:
    """``P`` of ``word`` (each letter recorded with its own label)."""
    P: list[list[int]] = []
    Q: list[list[list[int]]] = []
    for k, a in enumerate(word, start=1):
        _insert_letter(P, Q, a, k)
    return IncreasingTableau.from_rows(P)


def hecke_reverse(P: IncreasingTableau, Q: SetValuedTableau) -> TwoLineArray:
    """Inverse of :func:`hecke_insert`.

    Repeatedly take the rightmost box of ``Q`` holding its largest label
    ``k``.  If the box holds only ``k``, delete the box from both tableaux and
    start with its entry ``y`` of ``P``; otherwise drop ``k`` from the box and
    start with the entry ``y`` of ``P`` in that box without deleting it.  Then
    move left one column at a time: let ``x`` be the largest entry below
    ``y`` in the column, replace ``x`` by ``y`` when the result is increasing,
    and continue with ``x``.  The letter leaving the first column is paired
    with ``k``.

    Raises:
        ValueError: if the shapes differ, or the pair is not the image of any
            array.
    """
    if P.shape != Q.shape or Q.is_skew() or P.inner:
        raise ValueError("P and Q must have the same straight shape")
    Pm = [list(row) for row in P.rows]
    Qm = [[list(cell) for cell in row] for row in Q.rows]
    out: list[tuple[int, int]] = []
    while Qm:
        k = max(cell[-1] for row in Qm for cell in row)
        r, c = max(
            ((r, c) for r, row in enumerate(Qm) for c, cell in enumerate(row) if cell[-1] == k),
            key=lambda rc: (rc[1], -rc[0]),
        )
        y = Pm[r][c]
        if len(Qm[r][c]) == 1:
            if c != len(Pm[r]) - 1 or (r + 1 < len(Pm) and len(Pm[r + 1]) > c):
                raise ValueError("pair is not in the image of Hecke insertion")
            Pm[r].pop()
            Qm[r].pop()
            if not Pm[r]:
                Pm.pop()
                Qm.pop()
        else:
            Qm[r][c].pop()
        for cc in range(c - 1, -1, -1):
            col = _column(Pm, cc)
            smaller = [i for i, v in enumerate(col) if v < y]
            if not smaller:
                raise ValueError("pair is not in the image of Hecke insertion")
            i = smaller[-1]
            x = col[i]
            right_ok = len(Pm[i]) <= cc + 1 or Pm[i][cc + 1] > y
            below_ok = i + 1 >= len(Pm) or len(Pm[i + 1]) <= cc or Pm[i + 1][cc] > y
            if right_ok and below_ok:
                Pm[i][cc] = y
            y = x
        out.append((k, y))
    out.reverse()
    try:
        array = TwoLineArray(tuple(out))
    except ValueError:
        raise ValueError("pair is not in the image of Hecke insertion") from None
    if hecke_insert(array, Q.n) != (P, Q):
        raise ValueError("pair is not in the image of Hecke insertion")
    return array


# -- the 0-Hecke monoid --------------------------------------------------------


def reading_word(P: IncreasingTableau) -> tuple[int, ...]:
    """Columns from right to left, each read top to bottom; equivalent to any word inserting to ``P``."""
    return tuple(x for col in reversed(P.columns()) for x in col)


def hecke_element(word: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    """Normal form of ``word`` in the 0-Hecke monoid: its Demazure product in ``S_n``."""
    if n is None:
        n = max(word, default=0) + 1
    return demazure_product(word, n)


def hecke_equivalent(u: Sequence[int], v: Sequence[int]) -> bool:
    """0-Hecke equivalence of two words.

    Equal insertion tableaux imply equivalence, but not conversely
    (``13`` and ``31`` insert to different tableaux), so the test compares
    Demazure products.
    """
    n = max(list(u) + list(v), default=0) + 1
    return demazure_product(u, n) == demazure_product(v, n)


def equivalence_classes_by_relations(max_len: int, max_letter: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Union-find closure of all words of length ``<= max_len`` under the defining relations.

    Returns a map from each word to a class representative.  The relations are
    ``pp = p``, ``pqp = qpq`` and ``pq = qp`` for ``|p - q| > 1``, applied to
    factors anywhere in a word; only words within the length bound are used.
    """
    letters = range(1, max_letter + 1)
    words = [w for L in range(max_len + 1) for w in product(letters, repeat=L)]
    parent = {w: w for w in words}

    def find(w):
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for w in words:
        L = len(w)
        for i in range(L):
            if i + 1 < L:
                p, q = w[i], w[i + 1]
                if p == q:
                    union(w, w[:i] + (p,) + w[i + 2 :])
                elif abs(p - q) > 1:
                    union(w, w[:i] + (q, p) + w[i + 2 :])
            if i + 2 < L:
                p, q, r = w[i], w[i + 1], w[i + 2]
                if p == r and p != q:
                    union(w, w[:i] + (q, p, q) + w[i + 3 :])
    return {w: find(w) for w in words}


# -- decreasing factorizations -------------------------------------------------


def to_decreasing_factorization(array: TwoLineArray, m: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Factor ``k`` is the block of letters with top entry ``k``; ``m`` defaults to the largest top entry."""
    if m is None:
        m = max(array.top, default=0)
    factors: list[list[int]] = [[] for _ in range(m)]
    for k, a in array.pairs:
        if k > m:
            raise ValueError(f"top entry {k} exceeds {m}")
        factors[k - 1].append(a)
    return tuple(tuple(f) for f in factors)


def from_decreasing_factorization(factors: Sequence[Sequence[int]]) -> TwoLineArray:
    """Inverse of :func:`to_decreasing_factorization`.

    Raises:
        ValueError: if a factor is not strictly decreasing.
    """
    pairs = []
    for k, factor in enumerate(factors, start=1):
        if any(factor[i] <= factor[i + 1] for i in range(len(factor) - 1)):
            raise ValueError(f"factor {tuple(factor)} is not strictly decreasing")
        pairs.extend((k, a) for a in factor)
    return TwoLineArray(tuple(pairs))


def format_factorization(factors: Sequence[Sequence[int]]) -> str:
    return "".join("(" + " ".join(map(str, f)) + ")" for f in factors)


def parse_factorization(text: str) -> tuple[tuple[int, ...], ...]:
    """Parse ``(2 1)(1)``; an empty factor is ``()``."""
    text = text.strip()
    if not text:
        return ()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError("factors must be parenthesized")
    return tuple(tuple(int(x) for x in body.split()) for body in text[1:-1].split(")("))


# -- generating functions ------------------------------------------------------


def enumerate_arrays(m: int, n: int, max_len: int | None = None) -> Iterable[TwoLineArray]:
    """All arrays with top entries ``<= m``, letters in ``[1, n-1]`` and length ``<= max_len``."""
    subsets = [s for L in range(n) for s in combinations(range(n - 1, 0, -1), L)]
    for choice in product(subsets, repeat=m):
        if max_len is not None and sum(map(len, choice)) > max_len:
            continue
        yield from_decreasing_factorization(choice)


def stable_grothendieck_truncated(w: Sequence[int], m: int, max_len: int | None = None) -> BetaPolynomial:
    """``sum beta^{len(a) - l(w)} x^k`` over arrays with ``a`` equivalent to ``w``.

    ``w`` is a permutation in one-line notation.  Only arrays with top entries
    ``<= m`` and length ``<= max_len`` are included; with ``max_len=None`` the
    result is the exact specialization to ``m`` variables.
    """
    w = tuple(w)
    n = len(w)
    ell = coxeter_length(w)
    terms: dict = {}
    for array in enumerate_arrays(m, n, max_len):
        if demazure_product(array.bottom, n) != w:
            continue
        exps = [0] * m
        for k in array.top:
            exps[k - 1] += 1
        key = (len(array) - ell, tuple(exps))
        terms[key] = terms.get(key, 0) + 1
    return BetaPolynomial(m, terms)


def stanley_truncated(w: Sequence[int], m: int) -> BetaPolynomial:
    """Stanley symmetric function in ``m`` variables from reduced words of ``w``.

    Sums ``x_{k_1} ... x_{k_l}`` over reduced words ``a`` and weakly increasing
    ``k`` with ``k_i < k_{i+1}`` whenever ``a_i < a_{i+1}``.
    """
    terms: dict = {}
    for word in reduced_words(tuple(w)):
        L = len(word)

        def rec(i: int, lo: int, exps: list[int]) -> None:
            if i == L:
                key = (0, tuple(exps))
                terms[key] = terms.get(key, 0) + 1
                return
            start = lo if i == 0 or word[i - 1] > word[i] else lo + 1
            for k in range(start, m + 1):
                exps[k - 1] += 1
                rec(i + 1, k, exps)
                exps[k - 1] -= 1

        rec(0, 1, [0] * m)
    return BetaPolynomial(m, terms)


def array_crystal_op(array: TwoLineArray, i: int, kind: str, m: int | None = None) -> TwoLineArray | None:
    """Transport ``f_i``/``e_i`` on the recording tableau back to arrays (``P`` is unchanged)."""
    if m is None:
        m = max(max(array.top, default=0), i + 1)
    P, Q = hecke_insert(array, m)
    op = {"f": f_svt, "e": e_svt}.get(kind)
    if op is None:
        raise ValueError(f"unknown operator kind {kind!r}")
    Q2 = op(Q, i)
    return None if Q2 is None else hecke_reverse(P, Q2)
