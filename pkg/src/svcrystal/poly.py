"""Exact polynomials in ``x_1..x_n`` with coefficients in ``Z[beta]``.

The operators are

* ``partial_i f = (f - s_i f) / (x_i - x_{i+1})`` (divided difference),
* ``pi_i f = partial_i(x_i f)`` (Demazure operator),
* ``varpi_i f = pi_i((1 + beta x_{i+1}) f)`` (Demazure-Lascoux operator).

Words of operators act right to left: ``apply_word(f, [2, 1], "varpi")`` is
``varpi_2(varpi_1(f))``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .perms import longest_word, sorting_word
from .tableaux import enumerate_svt, validate_partition

__all__ = [
    "BetaPolynomial",
    "divided_difference",
    "demazure",
    "demazure_lascoux",
    "apply_word",
    "key_polynomial",
    "lascoux_polynomial",
    "grothendieck_from_tableaux",
    "schur_from_tableaux",
    "grothendieck_from_operators",
    "schur_from_operators",
    "POLY_SCHEMA",
    "parse_polynomial",
    "polynomial_from_terms",
]

POLY_SCHEMA = "svcrystal.polynomial/1"

Term = tuple[int, tuple[int, ...]]  # (beta exponent, x exponents)


@dataclass(frozen=True)
class BetaPolynomial:
    """Sparse polynomial; ``terms`` maps ``(beta_exp, x_exps)`` to a nonzero integer."""

    n: int
    terms: Mapping[Term, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[Term, int] = {}
        for (b, exps), coeff in self.terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.n:
                raise ValueError(f"exponent vector {exps} does not have length {self.n}")
            if b < 0 or any(e < 0 for e in exps):
                raise ValueError("exponents must be nonnegative")
            if coeff:
                clean[(int(b), exps)] = clean.get((int(b), exps), 0) + int(coeff)
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> BetaPolynomial:
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> BetaPolynomial:
        return cls(n, {(0, (0,) * n): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], beta: int = 0, coeff: int = 1, n: int | None = None) -> BetaPolynomial:
        """``coeff * beta^beta * x^exps``, padding ``exps`` with zeros up to ``n``."""
        n = len(exps) if n is None else n
        if len(exps) > n:
            if any(exps[n:]):
                raise ValueError("monomial uses variables beyond x_n")
            exps = exps[:n]
        return cls(n, {(beta, tuple(exps) + (0,) * (n - len(exps))): coeff})

    @classmethod
    def x(cls, i: int, n: int) -> BetaPolynomial:
        exps = [0] * n
        exps[i - 1] = 1
        return cls(n, {(0, tuple(exps)): 1})

    @classmethod
    def beta(cls, n: int) -> BetaPolynomial:
        return cls(n, {(1, (0,) * n): 1})

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other: BetaPolynomial | int) -> BetaPolynomial:
        if isinstance(other, int):
            return BetaPolynomial(self.n, {(0, (0,) * self.n): other})
        if other.n != self.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")
        return other

    def __add__(self, other: BetaPolynomial | int) -> BetaPolynomial:
        other = self._coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BetaPolynomial(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> BetaPolynomial:
        return BetaPolynomial(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: BetaPolynomial | int) -> BetaPolynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> BetaPolynomial:
        return self._coerce(other) - self

    def __mul__(self, other: BetaPolynomial | int) -> BetaPolynomial:
        if isinstance(other, int):
            return BetaPolynomial(self.n, {k: v * other for k, v in self.terms.items()})
        other = self._coerce(other)
        out: dict[Term, int] = {}
        for (b1, e1), c1 in self.terms.items():
            for (b2, e2), c2 in other.terms.items():
                key = (b1 + b2, tuple(p + q for p, q in zip(e1, e2)))
                out[key] = out.get(key, 0) + c1 * c2
        return BetaPolynomial(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BetaPolynomial:
        out = BetaPolynomial.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = self._coerce(other)
        if not isinstance(other, BetaPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- structure ----------------------------------------------------------

    def swap(self, i: int) -> BetaPolynomial:
        """``s_i f``: exchange ``x_i`` and ``x_{i+1}``."""
        out = {}
        for (b, e), c in self.terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[(b, tuple(e))] = c
        return BetaPolynomial(self.n, out)

    def extend(self, n: int) -> BetaPolynomial:
        """The same polynomial viewed in ``n >= self.n`` variables."""
        if n < self.n:
            raise ValueError("cannot shrink the variable set")
        pad = (0,) * (n - self.n)
        return BetaPolynomial(n, {(b, e + pad): c for (b, e), c in self.terms.items()})

    def at_beta_zero(self) -> BetaPolynomial:
        return BetaPolynomial(self.n, {k: v for k, v in self.terms.items() if k[0] == 0})

    def beta_degree(self) -> int:
        return max((b for b, _ in self.terms), default=0)

    def is_symmetric(self) -> bool:
        return all(self.swap(i) == self for i in range(1, self.n))

    def coefficient(self, exps: Sequence[int], beta: int = 0) -> int:
        return self.terms.get((beta, tuple(exps)), 0)

    def sorted_terms(self) -> list[tuple[int, tuple[int, ...], int]]:
        """``(beta, exps, coeff)`` ordered by total x-degree, exponents, then beta."""
        keys = sorted(self.terms, key=lambda k: (sum(k[1]), k[1], k[0]))
        return [(b, e, self.terms[(b, e)]) for b, e in keys]

    def num_terms(self) -> int:
        return len(self.terms)

    # -- rendering ----------------------------------------------------------

    def to_text(self, symbol: str = "b", var: str = "x") -> str:
        """Computer-algebra style rendering.

        Monomials in ``x`` are listed in decreasing degree-reverse-lexicographic
        order; each carries its coefficient in ``Z[symbol]``, e.g.
        ``2*b*x1^2*x2 + x1*x2``.
        """
        if not self.terms:
            return "0"
        groups: dict[tuple[int, ...], dict[int, int]] = {}
        for (b, e), c in self.terms.items():
            groups.setdefault(e, {})[b] = c

        def order(e: tuple[int, ...]) -> tuple:
            return (sum(e), tuple(-x for x in reversed(e)))

        pieces: list[tuple[bool, str]] = []
        for e in sorted(groups, key=order, reverse=True):
            mono = "*".join(
                f"{var}{k + 1}" + (f"^{p}" if p > 1 else "") for k, p in enumerate(e) if p
            )
            coeffs = groups[e]
            if len(coeffs) == 1:
                ((b, c),) = coeffs.items()
                negative = c < 0
                factors = []
                if abs(c) != 1 or (b == 0 and not mono):
                    factors.append(str(abs(c)))
                if b:
                    factors.append(symbol + (f"^{b}" if b > 1 else ""))
                if mono:
                    factors.append(mono)
                pieces.append((negative, "*".join(factors)))
            else:
                inner = BetaPolynomial(1, {(0, (b,)): c for b, c in coeffs.items()}).to_text(var=symbol)
                inner = inner.replace(f"{symbol}1", symbol)
                pieces.append((False, f"({inner})" + (f"*{mono}" if mono else "")))
        text = ("-" if pieces[0][0] else "") + pieces[0][1]
        for negative, body in pieces[1:]:
            text += (" - " if negative else " + ") + body
        return text

    def __str__(self) -> str:
        return self.to_text()

    def to_json(self) -> dict:
        return {
            "schema": POLY_SCHEMA,
            "n": self.n,
            "terms": [{"beta": b, "x": list(e), "coeff": c} for b, e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> BetaPolynomial:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), {(t["beta"], tuple(t["x"])): t["coeff"] for t in data["terms"]})


# ---------------------------------------------------------------------------
# Operators
# ---------------------------------------------------------------------------


def _check_op_index(f: BetaPolynomial, i: int) -> None:
    if not 1 <= i < f.n:
        raise ValueError(f"operator index {i} outside 1..{f.n - 1}")


def divided_difference(f: BetaPolynomial, i: int, check: bool = False) -> BetaPolynomial:
    """``partial_i f``, computed monomial by monomial.

    For ``p > q``, ``(x_i^p x_{i+1}^q - x_i^q x_{i+1}^p)/(x_i - x_{i+1})`` is
    ``sum_{k=0}^{p-q-1} x_i^{p-1-k} x_{i+1}^{q+k}``; ``p < q`` is the negative
    of the swapped case and ``p == q`` contributes nothing.  With
    ``check=True`` the quotient is multiplied back and compared with
    ``f - s_i f``.
    """
    _check_op_index(f, i)
    out: dict[Term, int] = {}
    for (b, e), c in f.terms.items():
        p, q = e[i - 1], e[i]
        if p == q:
            continue
        sign = 1 if p > q else -1
        hi, lo = max(p, q), min(p, q)
        for k in range(hi - lo):
            ne = list(e)
            ne[i - 1], ne[i] = hi - 1 - k, lo + k
            key = (b, tuple(ne))
            out[key] = out.get(key, 0) + sign * c
    result = BetaPolynomial(f.n, out)
    if check:
        lhs = (BetaPolynomial.x(i, f.n) - BetaPolynomial.x(i + 1, f.n)) * result
        if lhs != f - f.swap(i):
            raise ArithmeticError("divided difference is not exact")
    return result


def demazure(f: BetaPolynomial, i: int) -> BetaPolynomial:
    """``pi_i f = partial_i(x_i f)``."""
    _check_op_index(f, i)
    return divided_difference(BetaPolynomial.x(i, f.n) * f, i)


def demazure_lascoux(f: BetaPolynomial, i: int, beta_on: bool = True) -> BetaPolynomial:
    """``varpi_i f = pi_i((1 + beta x_{i+1}) f)``; plain ``pi_i`` when ``beta_on`` is false."""
    _check_op_index(f, i)
    if not beta_on:
        return demazure(f, i)
    factor = BetaPolynomial.one(f.n) + BetaPolynomial.beta(f.n) * BetaPolynomial.x(i + 1, f.n)
    return demazure(factor * f, i)


_OPERATORS = {
    "partial": divided_difference,
    "pi": demazure,
    "varpi": demazure_lascoux,
}


def apply_word(f: BetaPolynomial, word: Sequence[int], kind: str) -> BetaPolynomial:
    """Apply the operators of ``word`` right to left; ``kind`` is ``partial``, ``pi`` or ``varpi``."""
    try:
        op = _OPERATORS[kind]
    except KeyError:
        raise ValueError(f"unknown operator kind {kind!r}") from None
    for i in word:
        _check_op_index(f, i)
    for i in reversed(word):
        f = op(f, i)
    return f


def _sorted_monomial(a: Sequence[int], n: int | None) -> tuple[BetaPolynomial, tuple[int, ...]]:
    a = tuple(a)
    n = len(a) if n is None else n
    if len(a) > n:
        if any(a[n:]):
            raise ValueError("composition longer than the number of variables")
        a = a[:n]
    a = a + (0,) * (n - len(a))
    lam = tuple(sorted(a, reverse=True))
    return BetaPolynomial.monomial(lam), sorting_word(a)


def key_polynomial(a: Sequence[int], n: int | None = None) -> BetaPolynomial:
    """``kappa_a = pi_{w(a)} x^{sort(a)}``."""
    mono, word = _sorted_monomial(a, n)
    return apply_word(mono, word, "pi")


def lascoux_polynomial(a: Sequence[int], n: int | None = None) -> BetaPolynomial:
    """``L_a = varpi_{w(a)} x^{sort(a)}``."""
    mono, word = _sorted_monomial(a, n)
    return apply_word(mono, word, "varpi")


def _tableau_sum(shape: Sequence[int], n: int, max_excess: int | None) -> BetaPolynomial:
    terms: dict[Term, int] = {}
    for T in enumerate_svt(shape, n, max_excess):
        key = (T.excess, T.weight())
        terms[key] = terms.get(key, 0) + 1
    return BetaPolynomial(n, terms)


def grothendieck_from_tableaux(shape: Sequence[int], n: int) -> BetaPolynomial:
    """``sum_T beta^{excess(T)} x^{wt(T)}`` over set-valued tableaux."""
    return _tableau_sum(validate_partition(shape), n, None)


def schur_from_tableaux(shape: Sequence[int], n: int) -> BetaPolynomial:
    """``sum_T x^{wt(T)}`` over semistandard tableaux."""
    return _tableau_sum(validate_partition(shape), n, 0)


def _padded_monomial(shape: Sequence[int], n: int) -> BetaPolynomial:
    shape = validate_partition(shape)
    if len(shape) > n:
        return BetaPolynomial.zero(n)
    return BetaPolynomial.monomial(shape, n=n)


def grothendieck_from_operators(shape: Sequence[int], n: int) -> BetaPolynomial:
    """``varpi_{w_0} x^lambda``."""
    f = _padded_monomial(shape, n)
    return apply_word(f, longest_word(n), "varpi") if f else f


def schur_from_operators(shape: Sequence[int], n: int) -> BetaPolynomial:
    """``pi_{w_0} x^lambda``."""
    f = _padded_monomial(shape, n)
    return apply_word(f, longest_word(n), "pi") if f else f


def polynomial_from_terms(n: int, terms: Iterable[tuple[int, Sequence[int], int]]) -> BetaPolynomial:
    """Build from ``(beta, exps, coeff)`` triples."""
    return BetaPolynomial(n, {(b, tuple(e)): c for b, e, c in terms})


def parse_polynomial(text: str, n: int, symbol: str = "b", var: str = "x") -> BetaPolynomial:
    """Parse an expanded sum such as ``2*b*x1^2*x2 - x3 + 1``.

    Only expanded input is accepted: factors are integers, ``symbol[^k]`` and
    ``{var}i[^k]`` joined by ``*``.
    """
    import re

    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ValueError("empty polynomial")
    tokens = re.findall(r"[+-]?[^+-]+", compact)
    if "".join(tokens) != compact:
        raise ValueError(f"cannot parse {text!r}")
    total = BetaPolynomial.zero(n)
    for tok in tokens:
        sign = -1 if tok.startswith("-") else 1
        body = tok.lstrip("+-")
        coeff, beta_exp, exps = sign, 0, [0] * n
        for factor in body.split("*"):
            base, _, power = factor.partition("^")
            k = int(power) if power else 1
            if base.isdigit():
                coeff *= int(base) ** k
            elif base == symbol:
                beta_exp += k
            elif base.startswith(var) and base[len(var):].isdigit():
                idx = int(base[len(var):])
                if not 1 <= idx <= n:
                    raise ValueError(f"variable {base} outside x1..x{n}")
                exps[idx - 1] += k
            else:
                raise ValueError(f"unknown factor {factor!r}")
        total = total + BetaPolynomial(n, {(beta_exp, tuple(exps)): coeff})
    return total
