"""Exhaustive verification suites.

Each suite checks an identity between independently computed objects over a
bounded range and returns a :class:`SuiteResult`.  Suites stop at the first
counterexample unless they are collecting statistics.  The command-line
``verify`` subcommand and the test suite both call into this module.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from .crystal import (
    bender_knuth,
    build_crystal_graph,
    connected_components,
    e_svt,
    epsilon,
    evacuation,
    f_svt,
    isomorphism_to_ssyt_crystal,
    k_bender_knuth,
    k_evacuation,
    lusztig_involution,
    phi,
    reading_word_operator,
)
from .expansions import lenart_table, schur_expansion
from .hecke import enumerate_arrays, hecke_element, hecke_insert, hecke_reverse, reading_word
from .kcrystal import check_H1, check_H2, check_K1, check_K2, check_K3, check_string_intersections
from .kjdt import (
    infusion_is_involution,
    k_infusion,
    layer,
    rectify,
    two_box_rule,
    two_box_rule_direct,
    unbarred_signature_counts,
)
from .models.eyd import enumerate_eyd, eyd_crystal_op, theta, theta_inverse
from .models.gt import enumerate_marked_gt, grothendieck_via_gt, marked_gt_to_svt, svt_to_marked_gt
from .poly import BetaPolynomial, apply_word, grothendieck_from_tableaux
from .tableaux import enumerate_svt, partitions_in_box

__all__ = ["SuiteResult", "SUITES", "VERIFY_SCHEMA", "run_suite", "run_all", "skew_corpus"]

VERIFY_SCHEMA = "svcrystal.verify/1"


@dataclass
class SuiteResult:
    suite: str
    passed: bool = True
    checked: int = 0
    counterexample: str | None = None
    stats: dict = field(default_factory=dict)
    seconds: float = 0.0

    def fail(self, message: str) -> None:
        """Record a failure; only the first counterexample is kept."""
        if self.passed:
            self.passed = False
            self.counterexample = message

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "schema": VERIFY_SCHEMA,
            "suite": self.suite,
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": self.counterexample,
            "stats": dict(sorted(self.stats.items())),
        }
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def _shapes(max_part: int, n: int, rows: int = 2) -> list[tuple[int, ...]]:
    """Nonempty partitions inside ``rows x max_part`` with at most ``n`` rows."""
    return [lam for lam in partitions_in_box(min(rows, n), max_part) if lam]


# -- crystal structure ---------------------------------------------------------


def suite_components(max_part: int = 2, n: int = 3) -> SuiteResult:
    """Every component is isomorphic to an ordinary tableau crystal with a unique highest weight."""
    res = SuiteResult("components")
    for lam in _shapes(max_part, n):
        G = build_crystal_graph(lam, n)
        try:
            comps = connected_components(G)
            for comp in comps:
                mapping = isomorphism_to_ssyt_crystal(comp.highest)
                res.checked += 1
                if set(mapping) != set(comp.nodes):
                    res.fail(f"lambda={lam}: component of {comp.highest} is not a full tableau crystal")
                    return res
        except AssertionError as exc:
            res.fail(f"lambda={lam}: {exc}")
            return res
        res.stats[",".join(map(str, lam))] = {"components": len(comps), "nodes": len(G.nodes)}
    return res


def suite_crystal_axioms(max_part: int = 3, n: int = 4) -> SuiteResult:
    """``e_i`` inverts ``f_i``; ``phi - epsilon`` is the weight difference; reading-word rules agree."""
    res = SuiteResult("crystal-axioms")
    for lam in _shapes(max_part, n):
        for T in enumerate_svt(lam, n):
            wt = T.weight()
            for i in range(1, n):
                res.checked += 1
                F, E = f_svt(T, i), e_svt(T, i)
                if F is not None and e_svt(F, i) != T:
                    res.fail(f"e_{i} f_{i} {T} != {T}")
                    return res
                if E is not None and f_svt(E, i) != T:
                    res.fail(f"f_{i} e_{i} {T} != {T}")
                    return res
                if phi(T, i) - epsilon(T, i) != wt[i - 1] - wt[i]:
                    res.fail(f"phi_{i} - epsilon_{i} != weight difference at {T}")
                    return res
                for order in ("far-eastern", "middle-eastern"):
                    if reading_word_operator(T, i, "f", order) != F or reading_word_operator(T, i, "e", order) != E:
                        res.fail(f"{order} reading rule disagrees with the column rule at {T}, i={i}")
                        return res
    return res


def suite_involutions(max_part: int = 3, n: int = 4) -> SuiteResult:
    """Bender-Knuth, K-Bender-Knuth, both evacuations and Lusztig's involution square to the identity."""
    res = SuiteResult("involutions")
    for lam in partitions_in_box(min(3, n), max_part):
        if not lam:
            continue
        nodes = enumerate_svt(lam, n)
        for T in nodes:
            res.checked += 1
            for i in range(1, n):
                if T.is_ssyt() and bender_knuth(bender_knuth(T, i), i) != T:
                    res.fail(f"t_{i} is not an involution at {T}")
                    return res
                K = k_bender_knuth(T, i)
                if k_bender_knuth(K, i) != T or K.weight()[i - 1] != T.weight()[i] or K.excess != T.excess:
                    res.fail(f"K_{i} fails at {T}")
                    return res
            if T.is_ssyt() and evacuation(evacuation(T)) != T:
                res.fail(f"evacuation is not an involution at {T}")
                return res
            if k_evacuation(k_evacuation(T)) != T:
                res.fail(f"K-evacuation is not an involution at {T}")
                return res
        if sum(lam) <= 4:
            for T in nodes:
                star = lusztig_involution(T)
                if lusztig_involution(star) != T or lusztig_involution(T, choose="max") != star:
                    res.fail(f"Lusztig involution fails at {T}")
                    return res
                for i in range(1, n):
                    F = f_svt(T, i)
                    if F is not None and lusztig_involution(F) != e_svt(star, n - i):
                        res.fail(f"(f_{i} b)* != e_{n - i}(b*) at {T}")
                        return res
    return res


def suite_braid(n: int = 4) -> SuiteResult:
    """Braid and commutation relations of the three operator families on a fixed polynomial family."""
    res = SuiteResult("braid")
    x = [BetaPolynomial.x(k, n) for k in range(1, n + 1)]
    b = BetaPolynomial.beta(n)
    samples = [
        x[0] ** 3 * x[1],
        x[0] ** 2 * x[2] + b * x[1] * x[3] ** 2,
        (1 + b * x[0]) * x[1] ** 2 * x[3] - 2 * x[2] ** 3,
        x[0] * x[1] * x[2] + x[3] ** 4,
    ]
    for kind in ("partial", "pi", "varpi"):
        for f in samples:
            for i in range(1, n):
                for j in range(1, n):
                    res.checked += 1
                    if abs(i - j) == 1:
                        lhs, rhs = apply_word(f, (i, j, i), kind), apply_word(f, (j, i, j), kind)
                    elif abs(i - j) > 1:
                        lhs, rhs = apply_word(f, (i, j), kind), apply_word(f, (j, i), kind)
                    else:
                        twice = apply_word(f, (i, i), kind)
                        lhs, rhs = twice, (BetaPolynomial.zero(n) if kind == "partial" else apply_word(f, (i,), kind))
                    if lhs != rhs:
                        res.fail(f"{kind}: relation for ({i},{j}) fails on {f}")
                        return res
    return res


# -- expansions and models -----------------------------------------------------


def suite_schur_expansion(max_part: int = 3, n: int = 3) -> SuiteResult:
    """``G_lambda = sum beta^{|mu|-|lambda|} M s_mu`` and ``M`` equals the flagged increasing count."""
    res = SuiteResult("schur-expansion")
    for lam in _shapes(max_part, n):
        res.checked += 1
        table = schur_expansion(lam, n)
        if table.polynomial() != grothendieck_from_tableaux(lam, n):
            res.fail(f"lambda={lam}, n={n}: expansion does not sum to G_lambda")
            return res
        lenart = lenart_table(lam, n)
        if table.multiplicities != lenart:
            res.fail(f"lambda={lam}, n={n}: highest-weight counts {table.multiplicities} != flagged counts {lenart}")
            return res
    return res


def suite_models(max_part: int = 3, n: int = 3) -> SuiteResult:
    """Set-valued tableaux, excited Young diagrams and marked patterns: counts, bijections, equivariance."""
    res = SuiteResult("models")
    for lam in _shapes(max_part, n):
        svts = enumerate_svt(lam, n)
        eyds = enumerate_eyd(lam, n)
        gts = enumerate_marked_gt(lam, n)
        res.stats[",".join(map(str, lam))] = len(svts)
        if not len(svts) == len(eyds) == len(gts):
            res.fail(f"lambda={lam}, n={n}: counts {len(svts)}, {len(eyds)}, {len(gts)}")
            return res
        images = set()
        for T in svts:
            res.checked += 1
            E = theta(T)
            images.add(E)
            if E.weight() != T.weight() or len(E.cells) - sum(lam) != T.excess or theta_inverse(E) != T:
                res.fail(f"theta fails at {T}")
                return res
            for i in range(1, n):
                for kind, op in (("f", f_svt), ("e", e_svt)):
                    S = op(T, i)
                    if eyd_crystal_op(E, i, kind) != (None if S is None else theta(S)):
                        res.fail(f"theta does not commute with {kind}_{i} at {T}")
                        return res
            P = svt_to_marked_gt(T)
            if P.weight() != T.weight() or P.excess != T.excess or marked_gt_to_svt(P) != T:
                res.fail(f"marked pattern bijection fails at {T}")
                return res
        if images != set(eyds):
            res.fail(f"lambda={lam}: theta is not onto the excited diagrams")
            return res
        G = grothendieck_from_tableaux(lam, n)
        for form in ("marked", "product", "tokuyama"):
            if grothendieck_via_gt(lam, n, form) != G:
                res.fail(f"lambda={lam}, n={n}: {form} pattern form differs from G_lambda")
                return res
    return res


# -- Hecke insertion ------------------------------------------------------------


def suite_hecke(max_letter: int = 3, max_len: int = 5) -> SuiteResult:
    """Reverse insertion inverts insertion; the reading word of ``P`` is equivalent to the input word."""
    res = SuiteResult("hecke")
    n = max_letter + 1
    for array in enumerate_arrays(max_letter, n, max_len):
        res.checked += 1
        P, Q = hecke_insert(array, max_letter)
        if hecke_reverse(P, Q) != array:
            res.fail(f"reverse insertion fails on {array}")
            return res
        if hecke_element(reading_word(P), n) != hecke_element(array.bottom, n):
            res.fail(f"reading word of P is not equivalent to the word of {array}")
            return res
    return res


# -- K-jeu de taquin -----------------------------------------------------------


def skew_corpus(max_part: int = 3, max_size: int = 5, alphabets=(2, 3), m: int = 2, max_excess: int = 1):
    """``(T, U, n)``: skew set-valued tableaux with every straight rectification order ``U`` over ``[1, m]``."""
    shapes = []
    box = partitions_in_box(max_part, max_part)
    for lam in box:
        for mu in box:
            if mu and mu != lam and sum(lam) <= max_size and len(mu) <= len(lam) and all(
                a <= b for a, b in zip(mu, lam)
            ):
                shapes.append((lam, mu))
    for lam, mu in shapes:
        for n in alphabets:
            Ts = enumerate_svt(lam, n, inner=mu, max_excess=max_excess)
            for U in enumerate_svt(mu, m, max_excess=max_excess):
                for T in Ts:
                    yield T, U, n


def suite_kjdt_table(n: int = 3) -> SuiteResult:
    """Two-box rectification by infusion agrees with the closed-form rule."""
    from itertools import combinations

    res = SuiteResult("kjdt-table")
    subsets = [s for k in range(1, n + 1) for s in combinations(range(1, n + 1), k)]
    for T in subsets:
        for S in subsets:
            res.checked += 1
            a, b = two_box_rule(T, S, n), two_box_rule_direct(T, S, n)
            if a != b:
                res.fail(f"T={set(T)}, S={set(S)}: infusion {a} != rule {b}")
                return res
    return res


def suite_kjdt_signatures(max_part: int = 3, max_size: int = 5) -> SuiteResult:
    """Reduced signature counts of the unbarred letters are constant along every rectification.

    Also records (without failing on them) the involution property of
    infusion and the commutation of rectification with ``f_i``.
    """
    res = SuiteResult("kjdt-signatures")
    stats = {"cases": 0, "signature_violations": 0, "semistandard_cases": 0, "semistandard_violations": 0,
             "f_checks": 0, "f_mismatches": 0, "involution_failures": 0}
    for T, U, n in skew_corpus(max_part, max_size):
        stats["cases"] += 1
        res.checked += 1
        L = layer(U, T)
        start = unbarred_signature_counts(L, n)
        broken: list = []

        def watch(M, a, start=start, n=n, broken=broken):
            if not broken and unbarred_signature_counts(M, n) != start:
                broken.append(M)

        k_infusion(L, observer=watch)
        ssyt = T.is_ssyt() and U.is_ssyt()
        stats["semistandard_cases"] += ssyt
        if broken:
            stats["signature_violations"] += 1
            stats["semistandard_violations"] += ssyt
            res.fail(
                f"T={T}, U={U}, n={n}: counts {start} become {unbarred_signature_counts(broken[0], n)} at {broken[0]}"
            )
        if not infusion_is_involution(L):
            stats["involution_failures"] += 1
        R = rectify(T, U)
        for i in range(1, n):
            stats["f_checks"] += 1
            fT, fR = f_svt(T, i), f_svt(R, i)
            if (fT is None) != (fR is None) or (fT is not None and rectify(fT, U) != fR):
                stats["f_mismatches"] += 1
    res.stats = stats
    return res


# -- K-crystals -----------------------------------------------------------------


def kcrystal_shapes(max_row: int = 3, max_n_row: int = 4, max_n_column: int = 5) -> list[tuple[tuple[int, ...], int]]:
    out = [((k,), n) for k in range(1, max_row + 1) for n in range(2, max_n_row + 1)]
    out += [((1,) * k, n) for n in range(3, max_n_column + 1) for k in range(2, n)]
    return out


def suite_kcrystal(max_row: int = 3, max_n_row: int = 4, max_n_column: int = 5) -> SuiteResult:
    """Connectivity, word independence, Lascoux characters, operator relations and string intersections."""
    res = SuiteResult("kcrystal")
    checks: list[tuple[str, Callable]] = [
        ("K1", check_K1),
        ("K2", check_K2),
        ("K3", check_K3),
        ("H1", check_H1),
        ("H2", check_H2),
        ("strings", check_string_intersections),
    ]
    for shape, n in kcrystal_shapes(max_row, max_n_row, max_n_column):
        for name, check in checks:
            res.checked += 1
            problems = check(shape, n)
            if problems:
                res.fail(f"{name} for shape {shape}, n={n}: {problems[0]}")
                return res
    return res


# -- registry -------------------------------------------------------------------

# name -> (function, mapping of CLI bound names to keyword arguments)
SUITES: dict[str, tuple[Callable[..., SuiteResult], dict[str, str]]] = {
    "components": (suite_components, {"max": "max_part", "n": "n"}),
    "crystal-axioms": (suite_crystal_axioms, {"max": "max_part", "n": "n"}),
    "involutions": (suite_involutions, {"max": "max_part", "n": "n"}),
    "braid": (suite_braid, {"n": "n"}),
    "schur-expansion": (suite_schur_expansion, {"max": "max_part", "n": "n"}),
    "models": (suite_models, {"max": "max_part", "n": "n"}),
    "hecke": (suite_hecke, {"max": "max_letter", "max_len": "max_len"}),
    "kjdt-table": (suite_kjdt_table, {"n": "n"}),
    "kjdt-signatures": (suite_kjdt_signatures, {"max": "max_part", "max_len": "max_size"}),
    "kcrystal": (suite_kcrystal, {"max": "max_row", "n": "max_n_column"}),
}


def run_suite(name: str, **bounds) -> SuiteResult:
    """Run one suite; ``bounds`` use the CLI names (``max``, ``n``, ``max_len``) and ``None`` means default."""
    try:
        func, names = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    kwargs = {names[k]: v for k, v in bounds.items() if v is not None and k in names}
    start = time.perf_counter()
    result = func(**kwargs)
    result.seconds = time.perf_counter() - start
    return result


def run_all() -> list[SuiteResult]:
    """Every suite at its default bounds."""
    return [run_suite(name) for name in SUITES]
