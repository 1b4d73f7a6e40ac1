"""Command-line interface.

Examples::

    lefschetz gb ideal.json
    lefschetz slp --thm12 --d 1,1,1 --a 2
    lefschetz wlp --poly "x1^4" --poly "x2^4" --poly "x1*x2" --n 2
    lefschetz --field quad:3 slp --thm12 --d 1,1,1,1,1,1,1 --a "(4/3)*s" --sum
    lefschetz matrix decompose --A "1,-1,0; 0,1,-1; 2,0,1"
    lefschetz paper-check --only lemma31,thm32
    lefschetz scan --class binomial-rows --n 4 --samples 20 --out scan.csv

Exit status: 0 when a result was computed (negative verdicts included),
1 when ``paper-check`` has a failing item, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from typing import Sequence

from .binomial import decompose_binomial_matrix
from .constructions import principal_minors
from .documents import DocumentError, IdealDocument, parse_matrix
from .field import Field
from .groebner import buchberger
from .lefschetz import DEFAULT_TRIALS, LinearForm, Mode, check_lefschetz, decide_lefschetz
from .paper_check import ITEM_KEYS, ITEMS, run_paper_check
from .parser import ParseError, parse_coefficient
from .polynomial import format_monomial
from .quotient import build_quotient
from .scan import CLASSES, append_csv, run_scan

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _global_options(defaults: bool) -> argparse.ArgumentParser:
    """Global flags, accepted before or after the subcommand."""
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global options")
    g.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    g.add_argument("--seed", type=int, default=d(None), help="seed for generic elements (default 0)")
    g.add_argument("--trials", type=int, default=d(None), help=f"random trials per decision (default {DEFAULT_TRIALS})")
    g.add_argument("--field", default=d("q"), help="coefficient field: q or quad:<m>")
    g.add_argument("--out", default=d(None), help="write output to this file (scan: CSV, appended)")
    return p


def _ideal_options(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("ideal input (a document or one of the flags)")
    g.add_argument("document", nargs="?", help="IdealDocument JSON file")
    g.add_argument("--thm12", action="store_true", help="x_n^d0 (x_n - a x_1), x_i^d_i (x_i - x_{i+1})")
    g.add_argument("--thm32j", action="store_true", help="the monomial ideal J for --d")
    g.add_argument("--ci", metavar="E1,E2,...", help="monomial complete intersection x_i^e_i")
    g.add_argument("--matrix", metavar="ROWS", help='matrix ideal I_{A,d}, rows like "1,-1;2,1"')
    g.add_argument("--products", choices=("squares", "distinct-pairs"), help="products of random linear forms")
    g.add_argument("--count", type=int, help="number of generators for --products")
    g.add_argument("--poly", action="append", help="explicit generator (repeatable)")
    g.add_argument("--d", help="exponent vector, e.g. 1,1,1")
    g.add_argument("--a", help="parameter a, e.g. 2, -1/2 or (4/3)*s")
    g.add_argument("--n", type=int, help="number of variables")


def _int_csv(text: str, name: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise InputError(f"{name} must be comma-separated integers, got {text!r}") from None


def _document(args) -> IdealDocument:
    chosen = [
        name
        for name, flag in (
            ("document", args.document),
            ("--thm12", args.thm12),
            ("--thm32j", args.thm32j),
            ("--ci", args.ci),
            ("--matrix", args.matrix),
            ("--products", args.products),
            ("--poly", args.poly),
        )
        if flag
    ]
    if len(chosen) != 1:
        raise InputError("give exactly one ideal: a document file or one of --thm12, --thm32j, --ci, --matrix, --products, --poly")
    if args.document:
        try:
            doc = IdealDocument.load(args.document)
        except OSError as exc:
            raise InputError(f"cannot read {args.document}: {exc.strerror}") from None
        # explicit command-line flags win over the document's settings
        overrides = {k: getattr(args, k) for k in ("seed", "trials") if getattr(args, k) is not None}
        if overrides:
            doc = replace(doc, config=replace(doc.config, **overrides))
        return doc
    conf = {"field": args.field, "seed": args.seed or 0, "trials": args.trials or DEFAULT_TRIALS}
    if args.n is not None:
        conf["n"] = args.n
    if args.thm12:
        if not args.d or args.a is None:
            raise InputError("--thm12 needs --d and --a")
        kind, payload = "thm12", {"d": _int_csv(args.d, "--d"), "a": args.a}
    elif args.thm32j:
        if not args.d:
            raise InputError("--thm32j needs --d")
        kind, payload = "thm32J", {"d": _int_csv(args.d, "--d")}
    elif args.ci:
        kind, payload = "monomialCI", {"exponents": _int_csv(args.ci, "--ci")}
    elif args.matrix:
        kind, payload = "matrix", {"A": args.matrix}
        if args.d:
            payload["d"] = _int_csv(args.d, "--d")
    elif args.products:
        if args.n is None or args.count is None:
            raise InputError("--products needs --n and --count")
        kind, payload = "general-products", {"count": args.count, "factors": args.products, "seed": args.seed or 0}
    else:
        if args.n is None:
            raise InputError("--poly needs --n")
        kind, payload = "explicit", {"generators": args.poly}
    return IdealDocument.from_dict({"config": conf, "kind": kind, "payload": payload})


def _monomials(monos) -> list[str]:
    return [format_monomial(m) for m in monos]


# Subcommands.  Each returns (exit code, JSON-able object, text).


def cmd_gb(args):
    gens = _document(args).generators()
    G = buchberger(gens)
    initial = _monomials(G.initial_ideal().generators)
    data = {"order": "lex", "groebner_basis": [str(g) for g in G], "initial_ideal": initial}
    lines = [f"Reduced Gröbner basis (lex), {len(G)} elements:"]
    lines += [f"  {g}" for g in G]
    lines.append(f"Initial ideal: ({', '.join(initial)})")
    return EXIT_OK, data, "\n".join(lines)


def cmd_initial(args):
    gens = _document(args).generators()
    ideal = buchberger(gens).initial_ideal()
    initial = _monomials(ideal.generators)
    data = {"order": "lex", "initial_ideal": initial, "artinian": ideal.is_artinian()}
    text = f"Initial ideal (lex): ({', '.join(initial)})\nartinian: {'yes' if ideal.is_artinian() else 'no'}"
    return EXIT_OK, data, text


def cmd_hilbert(args):
    Q = build_quotient(_document(args).generators())
    data = {"hilbert": Q.hilbert, "socle_degree": Q.socle_degree, "dimension": Q.dimension}
    text = (
        f"Hilbert function: {' '.join(map(str, Q.hilbert))}\n"
        f"socle degree: {Q.socle_degree}\ndimension: {Q.dimension}"
    )
    return EXIT_OK, data, text


def _lefschetz(args, mode: Mode):
    doc = _document(args)
    Q = build_quotient(doc.generators())
    if args.element and args.sum:
        raise InputError("use either --element or --sum")
    if args.sum:
        report = check_lefschetz(Q, LinearForm.sum_of_variables(Q.nvars), mode)
    elif args.element:
        fld = doc.config.coefficient_field
        coeffs = [parse_coefficient(c.strip(), fld) for c in args.element.split(",")]
        if len(coeffs) != Q.nvars:
            raise InputError(f"--element needs {Q.nvars} coefficients, got {len(coeffs)}")
        report = check_lefschetz(Q, LinearForm(tuple(coeffs)), mode)
    else:
        report = decide_lefschetz(Q, mode, trials=doc.config.trials, seed=doc.config.seed)
    lines = [
        f"{mode.value}: {report.verdict.value}",
        f"element: {report.element}",
        f"Hilbert function: {' '.join(map(str, report.hilbert))}",
    ]
    if not (args.sum or args.element):
        lines.append(f"trials: {report.trials} (seed {report.seed})")
    if not report.definitive:
        lines.append("note: no certificate among the random trials; this is evidence, not proof")
    bad = report.failures()
    if bad:
        lines.append("non-maximal ranks (k, s, rank, expected):")
        lines += [f"  {e.k} {e.s} {e.rank} {e.max_possible}" for e in bad]
    if args.table:
        lines.append("rank table (k, s, rank, expected):")
        lines += [f"  {e.k} {e.s} {e.rank} {e.max_possible}" for e in report.entries]
    return EXIT_OK, report.to_dict(), "\n".join(lines)


def cmd_wlp(args):
    return _lefschetz(args, Mode.WLP)


def cmd_slp(args):
    return _lefschetz(args, Mode.SLP)


def _matrix_input(args) -> list[list]:
    fld = Field.parse(args.field)
    if args.A and args.document:
        raise InputError("give either a document or --A")
    if args.A:
        return parse_matrix(args.A, fld)
    if not args.document:
        raise InputError("give a matrix with --A or a matrix document")
    try:
        doc = IdealDocument.load(args.document)
    except OSError as exc:
        raise InputError(f"cannot read {args.document}: {exc.strerror}") from None
    if doc.kind != "matrix":
        raise InputError(f"{args.document} is a {doc.kind} document, not a matrix")
    return parse_matrix(doc.payload["A"], doc.config.coefficient_field)


def cmd_matrix(args):
    A = _matrix_input(args)
    n = len(A)
    if args.action == "minors":
        import itertools

        index_sets = [c for size in range(1, n + 1) for c in itertools.combinations(range(1, n + 1), size)]
        minors = principal_minors(A)
        rows = [{"indices": list(idx), "minor": str(m)} for idx, m in zip(index_sets, minors)]
        ok = all(minors)
        data = {"minors": rows, "all_nonzero": ok}
        lines = [f"{{{','.join(map(str, r['indices']))}}}: {r['minor']}" for r in rows]
        lines.append(f"all principal minors nonzero: {'yes' if ok else 'no'}")
        return EXIT_OK, data, "\n".join(lines)
    dec = decompose_binomial_matrix(A)
    data = {
        "permutation": [p + 1 for p in dec.permutation],
        "scalings": [str(x) for x in dec.scalings],
        "acyclic_size": dec.acyclic_size,
        "blocks": [
            {"rows": [r + 1 for r in b.rows], "size": b.size, "corner": str(b.corner)} for b in dec.blocks
        ],
        "matrix": [[str(x) for x in row] for row in dec.matrix],
    }
    lines = [
        "substitution: "
        + ", ".join(f"x{p + 1} -> ({s})*x{k + 1}" for k, (p, s) in enumerate(zip(dec.permutation, dec.scalings))),
        f"acyclic part: {dec.acyclic_size} rows",
    ]
    for b in dec.blocks:
        lines.append(f"cycle on rows {[r + 1 for r in b.rows]}: size {b.size}, corner a = {b.corner}")
    lines.append("block form:")
    lines += ["  [" + ", ".join(str(x) for x in row) + "]" for row in dec.matrix]
    return EXIT_OK, data, "\n".join(lines)


def cmd_paper_check(args):
    if args.list:
        text = "\n".join(f"{it.key:12s} {it.title}" for it in ITEMS)
        return EXIT_OK, [{"item": it.key, "title": it.title, "criterion": it.criterion} for it in ITEMS], text
    only = [k.strip() for chunk in (args.only or []) for k in chunk.split(",") if k.strip()]
    unknown = [k for k in only if k not in ITEM_KEYS]
    if unknown:
        raise InputError(f"unknown item(s) {', '.join(unknown)}; choose from {', '.join(ITEM_KEYS)}")

    def show(r):
        if not args.json and args.out is None:
            print(_result_line(r), flush=True)

    seed = args.seed or 0
    results = run_paper_check(only or None, seed=seed, on_result=show)
    ok = all(r.passed for r in results)
    data = {
        "seed": seed,
        "all_passed": ok,
        "items": [{k: v for k, v in r.to_dict().items() if k != "seconds"} for r in results],
    }
    summary = f"{sum(r.passed for r in results)}/{len(results)} items passed"
    text = summary if args.out is None else "\n".join([*map(_result_line, results), summary])
    return (EXIT_OK if ok else EXIT_FAILED), data, text


def _result_line(r) -> str:
    tag = "PASS" if r.passed else "FAIL"
    crit = f"[{r.criterion}]" if r.criterion else "[-]"
    return f"{tag} {crit:>4} {r.key:12s} {r.seconds:6.1f}s  {r.title}: {r.detail}"


def cmd_scan(args):
    d = _int_csv(args.d, "--d") if args.d else None
    rows = run_scan(args.cls, args.n, args.samples, seed=args.seed or 0, d=d, trials=args.trials or DEFAULT_TRIALS)
    if args.out:
        append_csv(rows, args.out)
    flagged = [r for r in rows if r.flagged]
    data = {"rows": [r.to_dict() for r in rows], "flagged": [r.sample_id for r in flagged]}
    counts: dict = {}
    for r in rows:
        counts[(r.wlp, r.slp)] = counts.get((r.wlp, r.slp), 0) + 1
    lines = [f"{len(rows)} samples of class {args.cls}, n={args.n}"]
    lines += [f"  WLP {w}, SLP {s}: {c}" for (w, s), c in sorted(counts.items())]
    if flagged:
        lines.append(f"flagged (binomial rows without an SLP certificate): {[r.sample_id for r in flagged]}")
    if args.out:
        lines.append(f"appended to {args.out}")
    return EXIT_OK, data, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lefschetz",
        description="Gröbner bases, Hilbert functions and Lefschetz properties of artinian algebras.",
        parents=[_global_options(True)],
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    common = _global_options(False)

    for name, func, help_text in (
        ("gb", cmd_gb, "reduced lex Gröbner basis and initial ideal"),
        ("initial", cmd_initial, "lex initial ideal"),
        ("hilbert", cmd_hilbert, "Hilbert function of the artinian quotient"),
        ("wlp", cmd_wlp, "weak Lefschetz property"),
        ("slp", cmd_slp, "strong Lefschetz property"),
    ):
        p = sub.add_parser(name, help=help_text, parents=[common])
        _ideal_options(p)
        if name in ("wlp", "slp"):
            p.add_argument("--element", metavar="C1,C2,...", help="test this linear form only")
            p.add_argument("--sum", action="store_true", help="test x1 + ... + xn only")
            p.add_argument("--table", action="store_true", help="print the full rank table")
        p.set_defaults(func=func)

    p = sub.add_parser("matrix", help="principal minors or binomial-row decomposition", parents=[common])
    p.add_argument("action", choices=("minors", "decompose"))
    p.add_argument("document", nargs="?", help="matrix IdealDocument JSON file")
    p.add_argument("--A", help='matrix rows, e.g. "1,-1;2,1"')
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("paper-check", help="run the reproduction suite", parents=[common])
    p.add_argument("--only", action="append", metavar="ITEMS", help=f"comma-separated subset of: {', '.join(ITEM_KEYS)}")
    p.add_argument("--list", action="store_true", help="list the items and exit")
    p.set_defaults(func=cmd_paper_check)

    p = sub.add_parser("scan", help="random scan of matrix ideals", parents=[common])
    p.add_argument("--class", dest="cls", required=True, choices=tuple(CLASSES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--d", help="exponent vector (default all ones)")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        Field.parse(args.field)
        if args.trials is not None and args.trials < 1:
            raise InputError("--trials must be at least 1")
        code, data, text = args.func(args)
    except (InputError, DocumentError, ParseError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    output = json.dumps(data, indent=2, sort_keys=True) if args.json else text
    if args.out is not None and args.command != "scan":
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(output + "\n")
    else:
        print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
