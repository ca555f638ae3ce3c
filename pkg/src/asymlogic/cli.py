"""Command-line front end for the asymmetric-logic toolchain.

Expression grammar (tightest first):

    !e              negation
    e & e           AND
    e @ e @ ...     IAND chain, left-grouping
    e | e           OR
    e -> e -> ...   IMPLY chain, right-grouping

``@`` and ``->`` may not mix at one nesting level; parenthesize.  Atoms are
``0``, ``1``, identifiers, and parenthesized expressions.

Truth-table files have two lines: variable names separated by spaces, then
``2**n`` bits with the first variable as the most significant row bit.

Exit codes: 0 success, 1 a law was refuted or expressions are inequivalent,
2 usage or malformed input, 3 internal error.  ``--format structured``
prints one JSON record per line instead of plain text.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .canon import (
    Unsupported,
    ion_from_tt,
    ios_from_tt,
    noi_from_tt,
    noi_to_soi,
    soi_from_tt,
    soi_to_noi,
)
from .errors import (
    ArityError,
    CapacityError,
    EvaluationError,
    NoMatchError,
    ParseError,
    ShapeError,
)
from .expr import Expr, format_expr, variables
from .laws import (
    catalog,
    classical_rules,
    demonstrations,
    demorgan_dual_expr,
    dual,
    verify_rule,
)
from .memristor import compile_noi, program_text, simulate, step_count
from .minimize import cover_text, minimize_table, minimized_noi, minimized_soi
from .parser import parse
from .semantics import TruthTable, equivalent, truth_table
from .spindiode import (
    compile_soi,
    netlist_stats,
    netlist_text,
    simulate_netlist,
)


def _split_names(text: str) -> tuple[str, ...]:
    return tuple(part for part in text.replace(",", " ").split() if part)


def load_table_file(path: str) -> TruthTable:
    with open(path, encoding="utf-8") as fh:
        lines = [line.strip() for line in fh if line.strip()]
    if len(lines) != 2:
        raise ValueError(
            f"table file {path!r} must have two lines: names, then bits"
        )
    return TruthTable.from_string(_split_names(lines[0]), lines[1])


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("expr", nargs="?", help="expression text")
    p.add_argument("--table-file", help="truth-table file (names, then bits)")
    p.add_argument(
        "--vars",
        help="variable order for an expression source, e.g. 'A,B,C'",
    )


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=("text", "structured"),
        default="text",
        help="structured prints one JSON record per line",
    )


def _source_table(args: argparse.Namespace) -> TruthTable:
    if (args.expr is None) == (args.table_file is None):
        raise ValueError("provide exactly one of: an expression, --table-file")
    if args.table_file is not None:
        if args.vars:
            raise ValueError("--vars applies only to expression sources")
        return load_table_file(args.table_file)
    e = parse(args.expr)
    order = _split_names(args.vars) if args.vars else None
    return truth_table(e, order)


def _source_expr(args: argparse.Namespace) -> Expr:
    if args.expr is None:
        raise ValueError("this command needs an expression argument")
    return parse(args.expr)


def _print_record(record: dict) -> None:
    print(json.dumps(record, sort_keys=True))


def _cmd_table(args: argparse.Namespace) -> int:
    t = _source_table(args)
    if args.format == "structured":
        _print_record({"variables": list(t.variables), "table": t.to_string()})
    else:
        print(" ".join(t.variables))
        print(t.to_string())
    return 0


def _cmd_laws(args: argparse.Namespace) -> int:
    refuted = 0
    reports = [verify_rule(rule) for rule in catalog() + classical_rules()]
    demo_reports = [(rule, verify_rule(rule)) for rule in demonstrations()]
    if args.format == "structured":
        for report in reports:
            _print_record(report.record())
        for demo, report in demo_reports:
            record = report.record()
            record["kind"] = "demonstration"
            record["expected"] = demo.expect
            _print_record(record)
    else:
        for report in reports:
            line = (
                f"{report.status:7} {report.name} "
                f"[{report.citation}] rows={report.rows}"
            )
            if report.counterexample is not None:
                line += " counterexample: " + _fmt_assignment(
                    report.counterexample
                )
            print(line)
        print("demonstrations:")
        for demo, report in demo_reports:
            line = (
                f"{report.status:7} (expected {demo.expect}) "
                f"{report.name} [{report.citation}] rows={report.rows}"
            )
            if report.counterexample is not None:
                line += " counterexample: " + _fmt_assignment(
                    report.counterexample
                )
            print(line)
        proven = sum(1 for r in reports if r.status == "Proven")
        print(f"{proven}/{len(reports)} catalog rules proven")
    refuted = sum(1 for r in reports if r.status == "Refuted")
    return 1 if refuted else 0


def _fmt_assignment(assignment: dict[str, int]) -> str:
    return " ".join(f"{k}={v}" for k, v in assignment.items())


def _cmd_canon(args: argparse.Namespace) -> int:
    t = _source_table(args)
    form = {
        "soi": soi_from_tt,
        "noi": noi_from_tt,
        "ios": ios_from_tt,
        "ion": ion_from_tt,
    }[args.form](t)
    if isinstance(form, Unsupported):
        if args.format == "structured":
            _print_record(
                {"form": args.form, "status": "unsupported",
                 "reason": form.reason}
            )
        else:
            print(f"unsupported: {form.reason}")
        return 0
    if args.format == "structured":
        _print_record(
            {"form": args.form, "status": "ok", "expr": format_expr(form)}
        )
    else:
        print(format_expr(form))
    return 0


def _cmd_convert(args: argparse.Namespace) -> int:
    e = _source_expr(args)
    result = soi_to_noi(e) if args.to == "noi" else noi_to_soi(e)
    if args.format == "structured":
        _print_record({"expr": format_expr(result)})
    else:
        print(format_expr(result))
    return 0


def _cmd_minimize(args: argparse.Namespace) -> int:
    t = _source_table(args)
    expr = minimized_soi(t) if args.form == "soi" else minimized_noi(t)
    primes, cover = minimize_table(t)
    if args.format == "structured":
        record = {
            "expr": format_expr(expr),
            "variables": list(t.variables),
            "cover": [q.trits for q in cover.cubes],
            "cost": cover.cost,
            "trace": list(cover.trace),
        }
        _print_record(record)
    else:
        print(format_expr(expr))
        if args.cover:
            sys.stdout.write(cover_text(primes, cover))
    return 0


def _build_memristor(args: argparse.Namespace):
    if args.table_file is not None:
        return compile_noi(minimized_noi(_source_table(args)))
    return compile_noi(_source_expr(args))


def _build_spindiode(args: argparse.Namespace):
    if args.table_file is not None:
        t = _source_table(args)
        return compile_soi(minimized_soi(t), inputs=t.variables)
    return compile_soi(_source_expr(args))


def _cmd_compile(args: argparse.Namespace) -> int:
    if args.target == "memristor":
        program = _build_memristor(args)
        if args.format == "structured":
            _print_record(
                {
                    "registers": program.registers,
                    "inputs": [[n, r] for n, r in program.bindings],
                    "output": program.output,
                    "steps": program_text(program).splitlines()[
                        len(program.bindings) + 2 :
                    ],
                    "counts": step_count(program),
                }
            )
        else:
            sys.stdout.write(program_text(program))
    else:
        netlist = _build_spindiode(args)
        if args.format == "structured":
            _print_record(
                {
                    "inputs": list(netlist.inputs),
                    "gates": netlist_text(netlist).splitlines()[1:-1],
                    "output": netlist.output,
                    "stats": netlist_stats(netlist),
                }
            )
        else:
            sys.stdout.write(netlist_text(netlist))
    return 0


def _bits_assignment(names: tuple[str, ...], bits: str) -> dict[str, int]:
    if len(bits) != len(names) or any(c not in "01" for c in bits):
        raise ValueError(
            f"--inputs needs {len(names)} bits over "
            f"({' '.join(names) or 'no inputs'}), got {bits!r}"
        )
    return {name: int(c) for name, c in zip(names, bits)}


def _cmd_simulate(args: argparse.Namespace) -> int:
    if args.target == "memristor":
        program = _build_memristor(args)
        names = tuple(n for n, _ in program.bindings)
        result = simulate(program, _bits_assignment(names, args.inputs))
        if args.format == "structured":
            _print_record(
                {
                    "output": result.output,
                    "state": list(result.state),
                    "trace": [list(s) for s in result.trace],
                }
            )
        else:
            print(f"output {result.output}")
    else:
        netlist = _build_spindiode(args)
        bit = simulate_netlist(
            netlist, _bits_assignment(netlist.inputs, args.inputs)
        )
        if args.format == "structured":
            _print_record({"output": bit})
        else:
            print(f"output {bit}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    verdict = equivalent(parse(args.expr1), parse(args.expr2))
    if args.format == "structured":
        record: dict = {
            "status": "equivalent" if verdict.equal else "inequivalent"
        }
        if verdict.counterexample is not None:
            record["counterexample"] = verdict.counterexample
        _print_record(record)
    else:
        if verdict.equal:
            print("equivalent")
        else:
            print("inequivalent")
            print(
                "counterexample: " + _fmt_assignment(verdict.counterexample)
            )
    return 0 if verdict.equal else 1


def _cmd_dual(args: argparse.Namespace) -> int:
    result = dual(_source_expr(args))
    if args.format == "structured":
        _print_record({"expr": format_expr(result)})
    else:
        print(format_expr(result))
    return 0


def _cmd_dmdual(args: argparse.Namespace) -> int:
    result = demorgan_dual_expr(_source_expr(args))
    if args.format == "structured":
        _print_record({"expr": format_expr(result)})
    else:
        print(format_expr(result))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asymlogic",
        description="Logic toolchain for the IAND (@) and IMPLY (->) operators",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print a truth table")
    _add_source(p)
    _add_format(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("laws", help="verify the algebraic law catalog")
    _add_format(p)
    p.set_defaults(func=_cmd_laws)

    p = sub.add_parser("canon", help="canonical form of a function")
    p.add_argument("--form", choices=("soi", "noi", "ios", "ion"),
                   required=True)
    _add_source(p)
    _add_format(p)
    p.set_defaults(func=_cmd_canon)

    p = sub.add_parser("convert", help="convert between SOI and NOI forms")
    p.add_argument("--to", choices=("noi", "soi"), required=True)
    p.add_argument("expr", help="expression in the other form")
    _add_format(p)
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("minimize", help="minimum two-level form")
    p.add_argument("--form", choices=("soi", "noi"), required=True)
    p.add_argument("--cover", action="store_true",
                   help="also print the chosen cubes")
    _add_source(p)
    _add_format(p)
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser("compile", help="compile to a hardware schedule")
    p.add_argument("--target", choices=("memristor", "spindiode"),
                   required=True)
    _add_source(p)
    _add_format(p)
    p.set_defaults(func=_cmd_compile)

    p = sub.add_parser("simulate", help="compile and run on given inputs")
    p.add_argument("--target", choices=("memristor", "spindiode"),
                   required=True)
    p.add_argument("--inputs", required=True,
                   help="one bit per input, in binding order")
    _add_source(p)
    _add_format(p)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("verify", help="check two expressions for equivalence")
    p.add_argument("expr1")
    p.add_argument("expr2")
    _add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("dual", help="classical dual of an expression")
    p.add_argument("expr", help="expression text")
    _add_format(p)
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("dmdual", help="De Morgan dual of a chain")
    p.add_argument("expr", help="expression text")
    _add_format(p)
    p.set_defaults(func=_cmd_dmdual)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return ex.code if isinstance(ex.code, int) else 2
    try:
        return args.func(args)
    except BrokenPipeError:  # e.g. piped into head; not an input error
        return 0
    except (
        ParseError,
        ShapeError,
        ArityError,
        EvaluationError,
        CapacityError,
        NoMatchError,
        ValueError,
        OSError,
    ) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    except Exception as ex:  # pragma: no cover - defensive
        print(f"internal error: {type(ex).__name__}: {ex}", file=sys.stderr)
        return 3


def entry() -> None:
    code = main()
    try:
        sys.stdout.flush()
    except BrokenPipeError:
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
    sys.exit(code)
