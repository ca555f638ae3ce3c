"""Synthesis toolchain for the asymmetric Boolean operators IAND and IMPLY.

IAND (``A @ B`` = A AND NOT B) and IMPLY (``A -> B`` = NOT A OR B) are each
functionally complete but non-commutative and non-associative, so the
familiar Boolean toolbox needs replacements: this package provides the
expression syntax, truth-table semantics, a verified law catalog with a
rewriting simplifier, canonical chain forms, exact two-level minimization,
and compilers to stateful-implication schedules and two-gate netlists.
"""

from __future__ import annotations

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
    AsymLogicError,
    CapacityError,
    EvaluationError,
    NoMatchError,
    ParseError,
    ShapeError,
)
from .expr import (
    And,
    Const,
    Expr,
    FALSE,
    IandChain,
    ImplyChain,
    Not,
    Or,
    Path,
    TRUE,
    Var,
    format_expr,
    iand_chain,
    imply_chain,
    literal_count,
    normalize_not,
    operator_count,
    variables,
)
from .laws import (
    Rule,
    RuleReport,
    SimplifyResult,
    SimplifyStep,
    catalog,
    classical_rules,
    demonstrations,
    demorgan_dual_expr,
    dual,
    export_report,
    match_pattern,
    rewrite_once,
    simplify,
    substitute,
    verify_rule,
    verify_rules,
)
from .memristor import (
    Imply,
    ImplyProgram,
    Reset,
    SimulationResult,
    compile_nand,
    compile_noi,
    program_text,
    simulate,
    step_count,
    step_semantics,
)
from .minimize import (
    CoverSolution,
    Cube,
    PrimeImplicantSet,
    cover_text,
    minimize_table,
    minimized_noi,
    minimized_soi,
    minimum_cover,
    prime_implicants,
)
from .parser import parse
from .semantics import (
    TruthTable,
    Verdict,
    classical_dual_tt,
    demorgan_dual_tt,
    equivalent,
    evaluate,
    row_assignment,
    truth_table,
)
from .spindiode import (
    Gate,
    Netlist,
    compile_soi,
    netlist_stats,
    netlist_text,
    simulate_netlist,
)

__version__ = "0.1.0"

__all__ = [
    "And",
    "ArityError",
    "AsymLogicError",
    "CapacityError",
    "Const",
    "CoverSolution",
    "Cube",
    "EvaluationError",
    "Expr",
    "FALSE",
    "Gate",
    "IandChain",
    "Imply",
    "ImplyChain",
    "ImplyProgram",
    "Netlist",
    "NoMatchError",
    "Not",
    "Or",
    "ParseError",
    "Path",
    "PrimeImplicantSet",
    "Reset",
    "Rule",
    "RuleReport",
    "ShapeError",
    "SimplifyResult",
    "SimplifyStep",
    "SimulationResult",
    "TRUE",
    "TruthTable",
    "Unsupported",
    "Var",
    "Verdict",
    "catalog",
    "classical_dual_tt",
    "classical_rules",
    "compile_nand",
    "compile_noi",
    "compile_soi",
    "cover_text",
    "demonstrations",
    "demorgan_dual_expr",
    "demorgan_dual_tt",
    "dual",
    "equivalent",
    "evaluate",
    "export_report",
    "format_expr",
    "iand_chain",
    "imply_chain",
    "ion_from_tt",
    "ios_from_tt",
    "literal_count",
    "match_pattern",
    "minimize_table",
    "minimized_noi",
    "minimized_soi",
    "minimum_cover",
    "netlist_stats",
    "netlist_text",
    "noi_from_tt",
    "noi_to_soi",
    "normalize_not",
    "operator_count",
    "parse",
    "prime_implicants",
    "program_text",
    "rewrite_once",
    "row_assignment",
    "simplify",
    "simulate",
    "simulate_netlist",
    "soi_from_tt",
    "soi_to_noi",
    "step_count",
    "step_semantics",
    "substitute",
    "truth_table",
    "variables",
    "verify_rule",
    "verify_rules",
]
