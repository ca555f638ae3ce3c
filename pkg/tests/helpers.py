"""Independent reference semantics used as a test oracle.

Chains are expanded into their defining binary pairings (IAND left, IMPLY
right) and evaluated with plain Python operators, deliberately avoiding the
production fold so the two implementations can disagree.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from asymlogic.expr import (
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


def iand2(a: int, b: int) -> int:
    return a & (1 - b)


def imply2(a: int, b: int) -> int:
    return (1 - a) | b


def naive_eval(e: Expr, env: dict[str, int]) -> int:
    match e:
        case Const(value):
            return value
        case Var(name):
            return env[name]
        case Not(child):
            return 1 - naive_eval(e.child, env)
        case And(children):
            out = 1
            for c in children:
                out &= naive_eval(c, env)
            return out
        case Or(children):
            out = 0
            for c in children:
                out |= naive_eval(c, env)
            return out
        case IandChain(operands):
            acc = naive_eval(operands[0], env)
            for x in operands[1:]:
                acc = iand2(acc, naive_eval(x, env))
            return acc
        case ImplyChain(operands):
            acc = naive_eval(operands[-1], env)
            for x in reversed(operands[:-1]):
                acc = imply2(naive_eval(x, env), acc)
            return acc
    raise TypeError(f"unknown node {type(e).__name__}")


def assignments(names: tuple[str, ...]) -> Iterator[dict[str, int]]:
    """All assignments in row order (first name is the most significant bit)."""
    for bits in product((0, 1), repeat=len(names)):
        yield dict(zip(names, bits))


def naive_table(e: Expr, names: tuple[str, ...] | None = None) -> tuple[int, ...]:
    order = names if names is not None else variables(e)
    return tuple(naive_eval(e, env) for env in assignments(order))
