"""Expression tree construction, traversal, and printing."""

from __future__ import annotations

import pytest
from hypothesis import given

from asymlogic.expr import (
    And,
    Const,
    FALSE,
    IandChain,
    ImplyChain,
    Not,
    NoPathError,
    Or,
    TRUE,
    Var,
    children,
    format_expr,
    iand_chain,
    imply_chain,
    iter_subexpressions,
    literal_count,
    normalize_not,
    operator_count,
    rebuild,
    replace_at,
    subexpr_at,
    variables,
)
from asymlogic.errors import ArityError
from asymlogic.parser import parse

from .strategies import expressions

A, B, C, D = Var("A"), Var("B"), Var("C"), Var("D")


class TestConstruction:
    def test_constants(self):
        assert TRUE == Const(1) and FALSE == Const(0)
        with pytest.raises(ValueError):
            Const(2)

    @pytest.mark.parametrize("ctor", [And, Or, IandChain, ImplyChain])
    def test_arity_minimum_two(self, ctor):
        with pytest.raises(ArityError):
            ctor((A,))
        with pytest.raises(ArityError):
            ctor(())
        assert len(children(ctor((A, B)))) == 2

    def test_nodes_are_hashable_and_comparable(self):
        assert IandChain((A, B)) == IandChain((A, B))
        assert hash(Not(A)) == hash(Not(A))
        assert And((A, B)) != Or((A, B))


class TestChainHelpers:
    def test_iand_chain_flattens_first_position_only(self):
        inner = IandChain((A, B))
        assert iand_chain((inner, C)) == IandChain((A, B, C))
        # a nested chain anywhere else keeps its own grouping
        assert iand_chain((C, inner)) == IandChain((C, inner))

    def test_imply_chain_flattens_last_position_only(self):
        inner = ImplyChain((B, C))
        assert imply_chain((A, inner)) == ImplyChain((A, B, C))
        assert imply_chain((inner, A)) == ImplyChain((inner, A))

    def test_deep_flattening(self):
        e = iand_chain((iand_chain((A, B)), C))
        assert e == IandChain((A, B, C))
        e2 = imply_chain((A, imply_chain((B, imply_chain((C, D))))))
        assert e2 == ImplyChain((A, B, C, D))


class TestTraversal:
    def test_variables_first_appearance(self):
        e = Or((IandChain((B, A)), And((C, B))))
        assert variables(e) == ("B", "A", "C")

    def test_iter_subexpressions_preorder(self):
        e = Or((Not(A), B))
        walk = list(iter_subexpressions(e))
        assert walk[0] == ((), e)
        assert ((0,), Not(A)) in walk
        assert ((0, 0), A) in walk
        assert ((1,), B) in walk

    def test_subexpr_at_and_replace_at(self):
        e = Or((Not(A), B))
        assert subexpr_at(e, (0, 0)) == A
        assert replace_at(e, (1,), C) == Or((Not(A), C))
        with pytest.raises(NoPathError):
            subexpr_at(e, (5,))
        with pytest.raises(NoPathError):
            replace_at(e, (0, 0, 0), C)

    @given(expressions())
    def test_rebuild_roundtrip(self, e):
        assert rebuild(e, children(e)) == e


class TestNormalization:
    def test_normalize_not(self):
        assert normalize_not(Not(Not(A))) == A
        assert normalize_not(Not(Const(0))) == Const(1)
        assert normalize_not(Not(Not(Not(A)))) == Not(A)
        assert normalize_not(Or((Not(Not(A)), B))) == Or((A, B))

    def test_counts(self):
        e = Or((IandChain((A, Not(B))), C))
        assert literal_count(e) == 3
        assert operator_count(e) == 3  # Or, IandChain, Not


class TestFormatting:
    @pytest.mark.parametrize(
        "e, text",
        [
            (IandChain((A, B, C)), "A @ B @ C"),
            (ImplyChain((A, B, C)), "A -> B -> C"),
            (Or((IandChain((A, B)), C)), "A @ B | C"),
            (IandChain((Or((A, B)), C)), "(A | B) @ C"),
            (And((A, Or((B, C)))), "A & (B | C)"),
            (Not(IandChain((A, B))), "!(A @ B)"),
            (Not(A), "!A"),
            (ImplyChain((IandChain((A, B)), C)), "(A @ B) -> C"),
            (IandChain((A, ImplyChain((B, C)))), "A @ (B -> C)"),
            (Or((ImplyChain((A, B)), C)), "(A -> B) | C"),
            (IandChain((A, IandChain((B, C)))), "A @ (B @ C)"),
            (Const(1), "1"),
            (And((Const(0), A)), "0 & A"),
        ],
    )
    def test_frozen_renderings(self, e, text):
        assert format_expr(e) == text

    @given(expressions())
    def test_format_parse_roundtrip(self, e):
        assert parse(format_expr(e)) == e
