"""Command-line front end.

Every JSON document written by this tool carries a ``schema`` field.  Output
goes to standard output unless ``--output`` is given; relative output paths
and the files written by ``reproduce`` are placed in the directory named by
the ``SVCRYSTAL_OUTPUT_DIR`` environment variable (default: the current
directory).  Invalid input produces a JSON error record on standard error and
exit status 2; a failed verification exits with status 1.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .crystal import CrystalGraph, build_crystal_graph, connected_components
from .expansions import schur_expansion
from .hecke import TwoLineArray, hecke_insert, hecke_reverse
from .kcrystal import k_character, k_demazure, parse_shape_spec
from .kjdt import kjdt_table, rectify, rectify_trace
from .models.eyd import enumerate_eyd, theta_inverse
from .models.gt import enumerate_marked_gt, grothendieck_via_gt, marked_gt_to_svt
from .poly import BetaPolynomial, apply_word
from .tableaux import IncreasingTableau, SetValuedTableau, enumerate_svt, parse_svt, validate_partition
from .verify import SUITES, run_suite

OUTPUT_DIR_ENV = "SVCRYSTAL_OUTPUT_DIR"
ERROR_SCHEMA = "svcrystal.error/1"
REPRODUCIBLE = ("figure1", "figure2", "figure3", "table1", "appendix-a")


class UsageError(ValueError):
    """Raised for malformed command lines; reported as a JSON error record."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(message)


@dataclass
class CommandConfig:
    """Normalized options shared by all subcommands."""

    subcommand: str
    shape: tuple[int, ...] | None = None
    n: int | None = None
    format: str = "json"
    bounds: dict = field(default_factory=dict)
    output: str | None = None


# -- helpers ------------------------------------------------------------------


def output_dir() -> Path:
    return Path(os.environ.get(OUTPUT_DIR_ENV) or ".")


def _dumps(data) -> str:
    return json.dumps(data, indent=1, sort_keys=True, ensure_ascii=False) + "\n"


def _parse_shape(text: str) -> tuple[int, ...]:
    try:
        return validate_partition(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"bad shape {text!r}: {exc}") from None


def _parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    parts = text.split(",") if "," in text else list(text.replace(" ", ""))
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"bad word {text!r}") from None


def _parse_increasing(text: str) -> IncreasingTableau:
    """Rows separated by ``/``; entries separated by spaces, or single digits when there are none."""
    rows = []
    for part in text.split("/"):
        part = part.strip()
        tokens = part.split() if " " in part else list(part)
        try:
            rows.append([int(t) for t in tokens])
        except ValueError:
            raise UsageError(f"bad increasing tableau {text!r}") from None
    return IncreasingTableau.from_rows(rows)


def _read_tableau(path: str) -> SetValuedTableau:
    text = Path(path).read_text(encoding="utf-8")
    return SetValuedTableau.from_json(text)


# -- commands -----------------------------------------------------------------
# Each returns (text to write, exit status).


def cmd_enumerate(args) -> tuple[str, int]:
    shape = _parse_shape(args.shape)
    nodes = enumerate_svt(shape, args.n, args.max_excess)
    by_excess: dict[int, int] = {}
    for T in nodes:
        by_excess[T.excess] = by_excess.get(T.excess, 0) + 1
    data = {
        "schema": "svcrystal.enumerate/1",
        "shape": list(shape),
        "n": args.n,
        "max_excess": args.max_excess,
        "nodes": len(nodes),
        "by_excess": {str(k): v for k, v in sorted(by_excess.items())},
    }
    if args.max_excess is None:
        data["components"] = len(connected_components(build_crystal_graph(shape, args.n)))
    if not args.count_only:
        data["tableaux"] = [{"label": str(T), **T.to_json()} for T in nodes]
    if args.format == "text":
        lines = [f"shape {list(shape)}, n={args.n}: {len(nodes)} tableaux"]
        if "components" in data:
            lines.append(f"components: {data['components']}")
        lines += [f"excess {k}: {v}" for k, v in data["by_excess"].items()]
        if not args.count_only:
            lines += [str(T) for T in nodes]
        return "\n".join(lines) + "\n", 0
    return _dumps(data), 0


def cmd_crystal_graph(args) -> tuple[str, int]:
    shape = _parse_shape(args.shape)
    G = build_crystal_graph(shape, args.n, with_k_edges=args.k_edges, max_excess=args.max_excess)
    if args.format == "dot":
        return G.to_dot(), 0
    if args.format == "text":
        lines = []
        for k, comp in enumerate(connected_components(G)):
            lines.append(f"component {k}: highest {comp.highest}, lowest {comp.lowest}, {len(comp.nodes)} nodes")
        lines += [f"{s} -{'K' if kind == 'K' else ''}{i}-> {t}" for s, t, i, kind in sorted(G.edge_labels())]
        return "\n".join(lines) + "\n", 0
    return _dumps(G.to_json()), 0


def cmd_expand(args) -> tuple[str, int]:
    table = schur_expansion(_parse_shape(args.shape), args.n)
    if args.format == "text":
        return table.to_text() + "\n", 0
    return _dumps(table.to_json()), 0


def cmd_verify(args) -> tuple[str, int]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    bounds = {"max": args.max, "n": args.n, "max_len": args.max_len}
    if args.suite == "all":
        bounds = {}
    results = [run_suite(name, **bounds) for name in names]
    status = 0 if all(r.passed for r in results) else 1
    if args.format == "text":
        lines = []
        for r in results:
            line = f"{'PASS' if r.passed else 'FAIL'} {r.suite} ({r.checked} checked)"
            if r.counterexample:
                line += f": {r.counterexample}"
            lines.append(line)
        return "\n".join(lines) + "\n", status
    data = {
        "schema": "svcrystal.verify-report/1",
        "passed": status == 0,
        "suites": [r.to_json() for r in results],
    }
    return _dumps(data), status


def cmd_hecke(args) -> tuple[str, int]:
    if args.action == "insert":
        array = TwoLineArray.parse(args.array)
        P, Q = hecke_insert(array, args.m)
        data = {"schema": "svcrystal.hecke/1", "array": array.to_json(), "P": str(P), "Q": str(Q),
                "P_rows": [list(r) for r in P.rows], "Q_tableau": Q.to_json()}
        text = f"P = {P}\nQ = {Q}\n"
    else:
        if args.P is None or args.Q is None:
            raise UsageError("hecke reverse needs --P and --Q")
        P = _parse_increasing(args.P)
        Q = parse_svt(args.Q, args.m)
        array = hecke_reverse(P, Q)
        data = {"schema": "svcrystal.hecke/1", "array": array.to_json(), "P": str(P), "Q": str(Q)}
        text = f"{array}\n"
    return (text if args.format == "text" else _dumps(data)), 0


def cmd_rectify(args) -> tuple[str, int]:
    U = _read_tableau(args.order)
    T = _read_tableau(args.tableau)
    R = rectify(T, U)
    if args.format == "text":
        lines = [f"{label}: {L}" for label, L in rectify_trace(T, U)] if args.trace else []
        lines.append(str(R))
        return "\n".join(lines) + "\n", 0
    data = {"schema": "svcrystal.rectify/1", "T": str(T), "U": str(U), "result": str(R), "tableau": R.to_json()}
    if args.trace:
        data["trace"] = [{"moving": label, "tableau": str(L)} for label, L in rectify_trace(T, U)]
    return _dumps(data), 0


def _set_text(s: Sequence[int]) -> str:
    return "".join(map(str, s))


def kjdt_table_text(n: int) -> str:
    table = kjdt_table(n)
    heads = [_set_text(s) for s in table["subsets"]]
    cells = [[str(T) for T in row] for row in table["entries"]]
    width = max(len(x) for x in heads + [c for row in cells for c in row]) + 2
    lines = ["T\\S".ljust(width) + "".join(h.ljust(width) for h in heads)]
    for head, row in zip(heads, cells):
        lines.append(head.ljust(width) + "".join(c.ljust(width) for c in row))
    return "\n".join(line.rstrip() for line in lines) + "\n"


def kjdt_table_json(n: int) -> dict:
    table = kjdt_table(n)
    return {
        "schema": "svcrystal.kjdt-table/1",
        "n": n,
        "subsets": table["subsets"],
        "entries": [[str(T) for T in row] for row in table["entries"]],
    }


def cmd_kjdt(args) -> tuple[str, int]:
    if args.format == "text":
        return kjdt_table_text(args.n), 0
    return _dumps(kjdt_table_json(args.n)), 0


def cmd_kdemazure(args) -> tuple[str, int]:
    shape = parse_shape_spec(args.shape)
    D = k_demazure(shape, args.n, _parse_word(args.word))
    if args.format == "dot":
        G = build_crystal_graph(shape, args.n, with_k_edges=True)
        keep = D.nodes
        nodes = tuple(T for T in G.nodes if T in keep)
        new = {T: k for k, T in enumerate(nodes)}
        edges = tuple(
            (new[G.nodes[s]], new[G.nodes[t]], i, kind)
            for s, t, i, kind in G.edges
            if G.nodes[s] in keep and G.nodes[t] in keep
        )
        return CrystalGraph(G.shape, G.n, nodes, edges).to_dot("kdemazure"), 0
    if args.format == "text":
        lines = [str(T) for T in D.sorted_nodes()]
        lines.append(f"character: {k_character(D)}")
        return "\n".join(lines) + "\n", 0
    return _dumps(D.to_json()), 0


def cmd_gt(args) -> tuple[str, int]:
    shape = _parse_shape(args.shape)
    patterns = enumerate_marked_gt(shape, args.n)
    if args.format == "text":
        blocks = [f"{P.render()}\n  -> {marked_gt_to_svt(P)}" for P in patterns]
        blocks.append(f"generating function: {grothendieck_via_gt(shape, args.n, args.form)}")
        return "\n".join(blocks) + "\n", 0
    data = {
        "schema": "svcrystal.gt/1",
        "shape": list(shape),
        "n": args.n,
        "count": len(patterns),
        "form": args.form,
        "generating_function": grothendieck_via_gt(shape, args.n, args.form).to_json(),
    }
    if not args.count_only:
        data["patterns"] = [{**P.to_json(), "tableau": str(marked_gt_to_svt(P))} for P in patterns]
    return _dumps(data), 0


def cmd_eyd(args) -> tuple[str, int]:
    shape = _parse_shape(args.shape)
    diagrams = enumerate_eyd(shape, args.n)
    if args.format == "text":
        blocks = [f"{E.render()}\n  -> {theta_inverse(E)}" for E in diagrams]
        return "\n\n".join(blocks) + "\n", 0
    data = {"schema": "svcrystal.eyd/1", "shape": list(shape), "n": args.n, "count": len(diagrams)}
    if not args.count_only:
        data["diagrams"] = [{**E.to_json(), "tableau": str(theta_inverse(E))} for E in diagrams]
    return _dumps(data), 0


# -- reproduction -----------------------------------------------------------------


def appendix_a() -> list[tuple[str, BetaPolynomial]]:
    """The five ``varpi`` computations, labelled as the session typed them."""
    n = 4
    x1, x2 = BetaPolynomial.x(1, n), BetaPolynomial.x(2, n)
    f, g = x1**3 * x2, x1**2 * x2
    out = [(f"DL(x1^3*x2, {i}, q)", apply_word(f, (i,), "varpi")) for i in (1, 2, 3)]
    out += [(f"DL(x1^2*x2, [{a},{b}], q)", apply_word(g, (a, b), "varpi")) for a, b in ((2, 1), (1, 2))]
    return out


def appendix_a_text() -> str:
    return "".join(f"{label}\n{poly.to_text(symbol='q')}\n" for label, poly in appendix_a())


def reproduce_files(target: str) -> dict[str, str]:
    """File name -> contents for one reproducible target."""
    if target == "figure1":
        return {"figure1.dot": build_crystal_graph((2, 1), 3).to_dot("figure1")}
    if target == "figure2":
        return {"figure2.dot": build_crystal_graph((2,), 3, with_k_edges=True).to_dot("figure2")}
    if target == "figure3":
        return {"figure3.dot": build_crystal_graph((1, 1), 4, with_k_edges=True).to_dot("figure3")}
    if target == "table1":
        return {"table1.txt": kjdt_table_text(3), "table1.json": _dumps(kjdt_table_json(3))}
    if target == "appendix-a":
        data = {
            "schema": "svcrystal.appendix-a/1",
            "values": [{"input": label, "output": poly.to_text(symbol="q")} for label, poly in appendix_a()],
        }
        return {"appendix-a.txt": appendix_a_text(), "appendix-a.json": _dumps(data)}
    raise UsageError(f"unknown target {target!r}; choose from all, {', '.join(REPRODUCIBLE)}")


def cmd_reproduce(args) -> tuple[str, int]:
    targets = REPRODUCIBLE if args.target == "all" else (args.target,)
    files: dict[str, str] = {}
    for target in targets:
        files.update(reproduce_files(target))
    base = output_dir()
    base.mkdir(parents=True, exist_ok=True)
    for name, content in files.items():
        (base / name).write_text(content, encoding="utf-8")
    if args.format == "text" and args.target == "appendix-a":
        return appendix_a_text(), 0
    manifest = {"schema": "svcrystal.reproduce/1", "targets": list(targets), "files": sorted(files)}
    return _dumps(manifest), 0


# -- argument parsing ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="svcrystal", description="Crystals on set-valued tableaux and related models.")
    parser.add_argument("--output", help=f"write to this file (relative paths resolve against ${OUTPUT_DIR_ENV})")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def shaped(name: str, help: str, formats=("json", "text")) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--shape", required=True, help="partition such as 2,1")
        p.add_argument("--n", type=int, required=True, help="largest entry")
        p.add_argument("--format", choices=formats, default="json")
        return p

    p = shaped("enumerate", "list set-valued tableaux")
    p.add_argument("--max-excess", type=int)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = shaped("crystal-graph", "crystal graph as JSON, DOT or text", ("json", "dot", "text"))
    p.add_argument("--max-excess", type=int)
    p.add_argument("--k-edges", action="store_true", help="add K edges (single rows and columns only)")
    p.set_defaults(func=cmd_crystal_graph)

    p = shaped("expand", "Schur expansion of a Grothendieck polynomial")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", help=f"all, or one of: {', '.join(SUITES)}")
    p.add_argument("--max", type=int, help="size bound (largest part, letter or row length, by suite)")
    p.add_argument("--n", type=int, help="number of variables")
    p.add_argument("--max-len", type=int, help="length or size bound")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hecke", help="Hecke insertion and its inverse")
    p.add_argument("action", choices=("insert", "reverse"))
    p.add_argument("--array", help='two-line array, e.g. "1 1 2 / 3 1 2"')
    p.add_argument("--P", help="increasing tableau, rows separated by /")
    p.add_argument("--Q", help="set-valued recording tableau, e.g. 1{1,2}/2")
    p.add_argument("--m", type=int, help="bound on recording labels")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_hecke)

    p = sub.add_parser("rectify", help="K-rectification of a skew tableau")
    p.add_argument("--order", required=True, help="JSON file with the straight rectification order U")
    p.add_argument("tableau", help="JSON file with the skew tableau T")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_rectify)

    p = sub.add_parser("kjdt", help="two-box K-jeu de taquin table")
    p.add_argument("action", choices=("table",))
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_kjdt)

    p = sub.add_parser("kdemazure", help="K-Demazure crystal of a row or column")
    p.add_argument("--shape", required=True, help="row:k, column:k, or a partition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", default="", help="letters of a word, e.g. 1 or 2,1")
    p.add_argument("--format", choices=("json", "dot", "text"), default="json")
    p.set_defaults(func=cmd_kdemazure)

    p = shaped("gt", "marked Gelfand-Tsetlin patterns")
    p.add_argument("--form", choices=("marked", "product", "tokuyama"), default="marked")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_gt)

    p = shaped("eyd", "excited Young diagrams")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_eyd)

    p = sub.add_parser("reproduce", help="write reference figures, table and polynomial outputs")
    p.add_argument("target", help=f"all, or one of: {', '.join(REPRODUCIBLE)}")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_reproduce)
    return parser


def _parse_shape_option(subcommand: str, text: str) -> tuple[int, ...]:
    if subcommand != "kdemazure":
        return _parse_shape(text)
    try:
        return parse_shape_spec(text)
    except ValueError as exc:
        raise UsageError(f"bad shape {text!r}: {exc}") from None


def config_from_args(args: argparse.Namespace) -> CommandConfig:
    shape = getattr(args, "shape", None)
    bounds = {k: getattr(args, k) for k in ("max_excess", "max", "max_len", "m") if getattr(args, k, None) is not None}
    return CommandConfig(
        subcommand=args.subcommand,
        shape=_parse_shape_option(args.subcommand, shape) if shape else None,
        n=getattr(args, "n", None),
        format=getattr(args, "format", "json"),
        bounds=bounds,
        output=args.output,
    )


def _error(kind: str, message: str, argv: Sequence[str]) -> int:
    record = {"schema": ERROR_SCHEMA, "error": kind, "message": message, "argv": list(argv)}
    sys.stderr.write(json.dumps(record, sort_keys=True) + "\n")
    return 2


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        config = config_from_args(args)
        text, status = args.func(args)
        if config.output:
            path = Path(config.output)
            if not path.is_absolute():
                path = output_dir() / path
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
        return status
    except UsageError as exc:
        return _error("usage", str(exc), argv)
    except (ValueError, KeyError, TypeError, OSError) as exc:
        return _error(type(exc).__name__, str(exc), argv)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
