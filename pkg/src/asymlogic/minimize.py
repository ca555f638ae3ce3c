"""Two-level minimization targeting the asymmetric chain forms.

Prime implicants come from iterative cube merging over the ON-set plus
don't-cares; covers are chosen exactly (essential cubes first, then an
exhaustive branch over the rest) with the objective ordered by total
literal count, then cube count, then ascending cube encoding.  The chosen
cubes are re-emitted as SOI or NOI terms over only their non-dash literals.

Cube notation: one trit per variable in table order ('1' plain, '0'
complemented, '-' absent), so "1-1" over (A, B, C) is the product A AND C.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import CapacityError
from .expr import Const, Expr, Not, Or, Var, normalize_not, And
from .semantics import TruthTable, truth_table
from .canon import noi_term, soi_term

MAX_MINIMIZE_VARS = 12
_ORACLE_VAR_LIMIT = 10


@dataclass(frozen=True)
class Cube:
    """A product term: one trit ('0', '1', '-') per variable, MSB first."""

    trits: str

    def __post_init__(self) -> None:
        if not self.trits or any(c not in "01-" for c in self.trits):
            raise ValueError(f"minimize: bad cube string {self.trits!r}")

    @property
    def literal_count(self) -> int:
        return sum(1 for c in self.trits if c != "-")

    def covers(self, row: int) -> bool:
        n = len(self.trits)
        for i, c in enumerate(self.trits):
            if c != "-" and ((row >> (n - 1 - i)) & 1) != int(c):
                return False
        return True

    def sort_key(self) -> tuple[int, str]:
        return (int(self.trits.replace("-", "0"), 2), self.trits)

    def literals(self, names: tuple[str, ...]) -> tuple[Expr, ...]:
        out: list[Expr] = []
        for name, c in zip(names, self.trits):
            if c == "1":
                out.append(Var(name))
            elif c == "0":
                out.append(Not(Var(name)))
        return tuple(out)


@dataclass(frozen=True)
class PrimeImplicantSet:
    variables: tuple[str, ...]
    cubes: tuple[Cube, ...]


@dataclass(frozen=True)
class CoverSolution:
    cubes: tuple[Cube, ...]
    cost: int  # total literal count
    trace: tuple[str, ...]


def _check_rows(rows: Iterable[int], n: int, what: str) -> set[int]:
    out = set()
    for r in rows:
        if not 0 <= r < (1 << n):
            raise ValueError(f"minimize: {what} row {r} out of range for n={n}")
        out.add(r)
    return out


def _trits(value: int, care: int, n: int) -> str:
    chars = []
    for i in range(n):
        bit = n - 1 - i
        if (care >> bit) & 1:
            chars.append("1" if (value >> bit) & 1 else "0")
        else:
            chars.append("-")
    return "".join(chars)


def prime_implicants(
    onset: Iterable[int],
    dc: Iterable[int] = (),
    n: int = 0,
    variables: tuple[str, ...] | None = None,
) -> PrimeImplicantSet:
    """All prime implicants of the ON-set (don't-cares may enlarge cubes).

    Cubes covering only don't-care rows are dropped.  Capacity is capped at
    12 variables; rows outside ``[0, 2**n)`` or overlapping ON/DC sets raise
    ``ValueError``.
    """
    if n > MAX_MINIMIZE_VARS:
        raise CapacityError(
            f"minimize: {n} variables exceeds the cap of {MAX_MINIMIZE_VARS}"
        )
    if n < 1:
        raise ValueError("minimize: need n >= 1")
    ons = _check_rows(onset, n, "ON")
    dcs = _check_rows(dc, n, "DC")
    if ons & dcs:
        raise ValueError(
            f"minimize: ON and DC sets overlap on rows {sorted(ons & dcs)}"
        )
    names = variables if variables is not None else tuple(
        f"x{i}" for i in range(n)
    )
    if len(names) != n:
        raise ValueError("minimize: variable list does not match n")

    full = (1 << n) - 1
    current = {(r, full) for r in ons | dcs}
    primes: set[tuple[int, int]] = set()
    while current:
        merged: set[tuple[int, int]] = set()
        nxt: set[tuple[int, int]] = set()
        by_care: dict[int, list[tuple[int, int]]] = {}
        for cube in current:
            by_care.setdefault(cube[1], []).append(cube)
        for care, group in by_care.items():
            group.sort()
            for i, a in enumerate(group):
                for b in group[i + 1 :]:
                    diff = a[0] ^ b[0]
                    if diff & (diff - 1) == 0 and diff:
                        nxt.add((a[0] & ~diff, care & ~diff))
                        merged.add(a)
                        merged.add(b)
        primes |= current - merged
        current = nxt

    cubes = [
        Cube(_trits(v, c, n))
        for v, c in primes
    ]
    cubes = [q for q in cubes if any(q.covers(r) for r in ons)]
    cubes.sort(key=Cube.sort_key)
    return PrimeImplicantSet(tuple(names), tuple(cubes))


def minimum_cover(
    primes: PrimeImplicantSet, onset: Iterable[int]
) -> CoverSolution:
    """Exact minimum cover of the ON rows by the given primes.

    Objective: least total literal count, then fewest cubes, then the
    lexicographically least tuple of cube encodings.  Essential primes
    (sole cover of some row) are taken first and recorded in the trace.
    """
    ons = sorted(set(onset))
    cubes = list(primes.cubes)
    trace: list[str] = []
    chosen: list[Cube] = []

    uncovered = set(ons)
    # iterate: picking an essential can expose new sole-cover rows
    while True:
        essentials: list[tuple[Cube, int]] = []
        for r in sorted(uncovered):
            hits = [q for q in cubes if q.covers(r)]
            if not hits:
                raise ValueError(f"minimize: ON row {r} covered by no prime")
            if len(hits) == 1 and hits[0] not in chosen:
                if all(q is not hits[0] for q, _ in essentials):
                    essentials.append((hits[0], r))
        if not essentials:
            break
        for q, r in essentials:
            chosen.append(q)
            trace.append(f"essential {q.trits}: sole cover of row {r}")
            uncovered -= {row for row in uncovered if q.covers(row)}

    if uncovered:
        rest = [q for q in cubes if q not in chosen]
        best: list[Cube] | None = None
        best_key: tuple | None = None

        def search(sel: list[Cube], left: set[int]) -> None:
            nonlocal best, best_key
            lits = sum(q.literal_count for q in sel)
            if best_key is not None and (lits, len(sel)) > best_key[:2]:
                return
            if not left:
                key = (
                    lits,
                    len(sel),
                    tuple(q.sort_key() for q in sorted(sel, key=Cube.sort_key)),
                )
                if best_key is None or key < best_key:
                    best, best_key = list(sel), key
                return
            row = min(left)
            for q in rest:
                if q in sel or not q.covers(row):
                    continue
                sel.append(q)
                search(sel, {r for r in left if not q.covers(r)})
                sel.pop()

        search([], set(uncovered))
        assert best is not None
        for q in sorted(best, key=Cube.sort_key):
            chosen.append(q)
            trace.append(f"selected {q.trits}: completes the cover")

    for q in chosen:
        if q.literal_count == 0:
            trace.append("degenerate: all-dash cube, function is constant 1")
    chosen.sort(key=Cube.sort_key)
    cost = sum(q.literal_count for q in chosen)
    return CoverSolution(tuple(chosen), cost, tuple(trace))


def minimize_table(t: TruthTable) -> tuple[PrimeImplicantSet, CoverSolution]:
    """Prime implicants and a minimum cover for a table's ON-set."""
    n = len(t.variables)
    ons = [r for r, b in enumerate(t.bits) if b]
    if not ons:
        return (
            PrimeImplicantSet(t.variables, ()),
            CoverSolution((), 0, ("empty ON-set: function is constant 0",)),
        )
    primes = prime_implicants(ons, (), n, t.variables)
    return primes, minimum_cover(primes, ons)


def _emit(
    t: TruthTable,
    term_of: Callable[[tuple[Expr, ...]], Expr],
    nand: bool,
) -> Expr:
    _, cover = minimize_table(t)
    if not cover.cubes:
        return Const(0)
    if any(q.literal_count == 0 for q in cover.cubes):
        return Const(1)
    terms = [term_of(q.literals(t.variables)) for q in cover.cubes]
    result: Expr
    if nand:
        if len(terms) == 1:
            result = normalize_not(Not(terms[0]))
        else:
            result = Not(And(tuple(terms)))
    else:
        result = terms[0] if len(terms) == 1 else Or(tuple(terms))
    if __debug__ and len(t.variables) <= _ORACLE_VAR_LIMIT:
        assert truth_table(result, t.variables).bits == t.bits, (
            "minimized form does not match its table"
        )
    return result


def minimized_soi(t: TruthTable) -> Expr:
    """Minimum-cover OR of IAND chains for a table."""
    return _emit(t, soi_term, nand=False)


def minimized_noi(t: TruthTable) -> Expr:
    """Minimum-cover NAND of IMPLY chains for a table."""
    return _emit(t, noi_term, nand=True)


def cover_text(primes: PrimeImplicantSet, cover: CoverSolution) -> str:
    """Interchange text: variable-order header line, then one cube per line."""
    lines = [" ".join(primes.variables)]
    lines.extend(q.trits for q in cover.cubes)
    return "\n".join(lines) + "\n"
