"""Permutations, words in simple transpositions, and the 0-Hecke (Demazure) product.

A word ``(i_1, ..., i_l)`` stands for ``s_{i_1} s_{i_2} ... s_{i_l}``.
Permutations are tuples in one-line notation, ``w[j-1] = w(j)``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

__all__ = [
    "permutation_of_word",
    "coxeter_length",
    "is_reduced",
    "demazure_product",
    "reduced_words",
    "longest_word",
    "act_on_composition",
    "sorting_word",
    "all_permutations",
]


def _check_letters(word: Sequence[int], n: int) -> None:
    for i in word:
        if not 1 <= i < n:
            raise ValueError(f"letter {i} outside 1..{n - 1}")


def permutation_of_word(word: Sequence[int], n: int) -> tuple[int, ...]:
    """One-line notation of the product ``s_{i_1} ... s_{i_l}`` in ``S_n``."""
    _check_letters(word, n)
    w = list(range(1, n + 1))
    for i in word:  # w <- w * s_i swaps positions i, i+1
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def coxeter_length(w: Sequence[int]) -> int:
    """Number of inversions."""
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


def is_reduced(word: Sequence[int], n: int) -> bool:
    return coxeter_length(permutation_of_word(word, n)) == len(word)


def demazure_product(word: Sequence[int], n: int) -> tuple[int, ...]:
    """The 0-Hecke monoid element of ``word``: ``w * s_i = w s_i`` if that is longer, else ``w``."""
    _check_letters(word, n)
    w = list(range(1, n + 1))
    for i in word:
        if w[i - 1] < w[i]:
            w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


@lru_cache(maxsize=None)
def reduced_words(w: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """All reduced words of ``w``, sorted lexicographically."""
    if all(w[k] < w[k + 1] for k in range(len(w) - 1)):
        return ((),)
    out = []
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:  # right descent
            v = list(w)
            v[i - 1], v[i] = v[i], v[i - 1]
            out.extend(word + (i,) for word in reduced_words(tuple(v)))
    return tuple(sorted(out))


def longest_word(n: int) -> tuple[int, ...]:
    """A reduced word for the longest element ``w_0`` of ``S_n``: ``(1)(2 1)(3 2 1)...``."""
    word: list[int] = []
    for k in range(1, n):
        word.extend(range(k, 0, -1))
    return tuple(word)


def act_on_composition(word: Sequence[int], a: Sequence[int]) -> tuple[int, ...]:
    """``w . a`` for ``w = s_{i_1} ... s_{i_l}``; ``s_i`` swaps entries ``i`` and ``i+1``."""
    a = list(a)
    _check_letters(word, len(a))
    for i in reversed(word):
        a[i - 1], a[i] = a[i], a[i - 1]
    return tuple(a)


def sorting_word(a: Sequence[int]) -> tuple[int, ...]:
    """A reduced word for the minimal permutation ``w(a)`` with ``a = w(a) . sort(a)``.

    ``sort(a)`` is the decreasing rearrangement of ``a``.
    """
    b = list(a)
    word: list[int] = []
    while True:
        for k in range(len(b) - 1):
            if b[k] < b[k + 1]:
                word.append(k + 1)
                b[k], b[k + 1] = b[k + 1], b[k]
                break
        else:
            return tuple(word)


def all_permutations(n: int) -> list[tuple[int, ...]]:
    """``S_n`` sorted by length, then lexicographically."""
    from itertools import permutations

    return sorted(permutations(range(1, n + 1)), key=lambda w: (coxeter_length(w), w))
