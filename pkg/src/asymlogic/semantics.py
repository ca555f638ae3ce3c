"""Truth-table semantics, the equivalence oracle, and table-level duals.

Row convention: for a variable order ``(v1, ..., vn)``, row index ``r``
assigns ``vi`` the bit ``(n-1-i)`` of ``r``, so the first variable is the
most significant bit.  Row 0 is all zeros, row ``2**n - 1`` all ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, EvaluationError
from .expr import (
    And,
    Const,
    Expr,
    IandChain,
    ImplyChain,
    Not,
    Or,
    Var,
    variables,
)

MAX_TABLE_VARS = 24

Assignment = dict[str, int]


@dataclass(frozen=True)
class TruthTable:
    """A complete function table over an explicit variable order."""

    variables: tuple[str, ...]
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "bits", tuple(self.bits))
        n = len(self.variables)
        if n > MAX_TABLE_VARS:
            raise CapacityError(
                f"semantics: truth tables support at most {MAX_TABLE_VARS} "
                f"variables, got {n}"
            )
        if len(set(self.variables)) != n:
            raise ValueError("semantics: duplicate variable in table order")
        if len(self.bits) != 1 << n:
            raise ValueError(
                f"semantics: expected {1 << n} rows for {n} variables, "
                f"got {len(self.bits)}"
            )
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("semantics: table bits must be 0 or 1")

    @classmethod
    def from_string(cls, names: tuple[str, ...], bits: str) -> "TruthTable":
        if set(bits) - {"0", "1"}:
            raise ValueError("semantics: table string must contain only 0/1")
        return cls(tuple(names), tuple(int(b) for b in bits))

    def to_string(self) -> str:
        return "".join(str(b) for b in self.bits)

    def row_assignment(self, row: int) -> Assignment:
        return row_assignment(self.variables, row)


def row_assignment(names: tuple[str, ...], row: int) -> Assignment:
    n = len(names)
    return {name: (row >> (n - 1 - i)) & 1 for i, name in enumerate(names)}


def evaluate(e: Expr, assignment: Assignment) -> int:
    """Evaluate an expression to 0 or 1 under a total assignment.

    IAND chains fold left with ``acc AND NOT x``; IMPLY chains fold right
    with ``NOT x OR acc``.
    """
    match e:
        case Const(v):
            return v
        case Var(name):
            try:
                return assignment[name]
            except KeyError:
                raise EvaluationError(
                    f"semantics: unbound variable {name!r}"
                ) from None
        case Not(child):
            return 1 - evaluate(child, assignment)
        case And(kids):
            return min(evaluate(c, assignment) for c in kids)
        case Or(kids):
            return max(evaluate(c, assignment) for c in kids)
        case IandChain(ops):
            acc = evaluate(ops[0], assignment)
            for x in ops[1:]:
                acc = acc & (1 - evaluate(x, assignment))
            return acc
        case ImplyChain(ops):
            acc = evaluate(ops[-1], assignment)
            for x in reversed(ops[:-1]):
                acc = (1 - evaluate(x, assignment)) | acc
            return acc
    raise EvaluationError(f"semantics: not an expression node: {e!r}")


def truth_table(e: Expr, names: tuple[str, ...] | None = None) -> TruthTable:
    """Tabulate an expression, defaulting to first-appearance variable order."""
    if names is None:
        names = variables(e)
    else:
        names = tuple(names)
        missing = set(variables(e)) - set(names)
        if missing:
            raise EvaluationError(
                f"semantics: variable order omits {sorted(missing)}"
            )
    n = len(names)
    if n > MAX_TABLE_VARS:
        raise CapacityError(
            f"semantics: truth tables support at most {MAX_TABLE_VARS} "
            f"variables, got {n}"
        )
    bits = tuple(evaluate(e, row_assignment(names, r)) for r in range(1 << n))
    return TruthTable(names, bits)


@dataclass(frozen=True)
class Verdict:
    """Result of an equivalence check; falsy when a counterexample exists."""

    equal: bool
    counterexample: Assignment | None = None

    def __bool__(self) -> bool:
        return self.equal


def equivalent(e1: Expr, e2: Expr) -> Verdict:
    """Exhaustively compare two expressions over their unioned variables.

    The variable order is first appearance in ``e1`` then ``e2``; the
    counterexample, if any, is the lowest-index differing row.
    """
    names: dict[str, None] = {}
    for v in variables(e1) + variables(e2):
        names.setdefault(v, None)
    order = tuple(names)
    if len(order) > MAX_TABLE_VARS:
        raise CapacityError(
            f"semantics: equivalence supports at most {MAX_TABLE_VARS} "
            f"variables, got {len(order)}"
        )
    for r in range(1 << len(order)):
        a = row_assignment(order, r)
        if evaluate(e1, a) != evaluate(e2, a):
            return Verdict(False, a)
    return Verdict(True)


def classical_dual_tt(t: TruthTable) -> TruthTable:
    """Classical dual: complement the output on the complemented input row.

    ``dual(f)(a1..an) = NOT f(NOT a1, ..., NOT an)``.  An involution.
    """
    n = len(t.variables)
    top = (1 << n) - 1
    return TruthTable(t.variables, tuple(1 - t.bits[top ^ r] for r in range(top + 1)))


def demorgan_dual_tt(t: TruthTable) -> TruthTable:
    """Operand-reversing dual: complement inputs and reverse their order.

    ``dual(f)(a1..an) = NOT f(NOT an, ..., NOT a1)``.  An involution; it maps
    the table of an IAND chain to the table of the IMPLY chain over the same
    operand list, and back.
    """
    n = len(t.variables)
    top = (1 << n) - 1
    return TruthTable(
        t.variables,
        tuple(1 - t.bits[_reverse_bits(top ^ r, n)] for r in range(top + 1)),
    )


def _reverse_bits(x: int, n: int) -> int:
    out = 0
    for _ in range(n):
        out = (out << 1) | (x & 1)
        x >>= 1
    return out
