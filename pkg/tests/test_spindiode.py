"""Two-input gate netlists: synthesis, folding, stats, and simulation."""

from __future__ import annotations

from itertools import product
from pathlib import Path

import pytest
from hypothesis import given, settings

from asymlogic.canon import soi_from_tt
from asymlogic.errors import EvaluationError, ShapeError
from asymlogic.expr import (
    Const,
    IandChain,
    Not,
    Or,
    Var,
    variables,
)
from asymlogic.minimize import minimized_soi
from asymlogic.semantics import TruthTable, evaluate
from asymlogic.spindiode import (
    Gate,
    Netlist,
    compile_soi,
    netlist_stats,
    netlist_text,
    simulate_netlist,
)

from .helpers import assignments
from .strategies import soi_exprs

GOLDEN = Path(__file__).parent / "golden"
CARRY = TruthTable(("A", "B", "C"), (0, 0, 0, 1, 0, 1, 1, 1))

A, B, C = Var("A"), Var("B"), Var("C")


class TestGate:
    def test_ref_names_follow_gate_ids(self):
        assert Gate(3, "OR", "g0", "g1").ref == "g3"

    def test_kind_is_validated(self):
        with pytest.raises(ValueError):
            Gate(0, "NAND", "in:A", "in:B")


class TestCompileCarry:
    def test_golden_netlist(self):
        net = compile_soi(minimized_soi(CARRY), inputs=CARRY.variables)
        assert netlist_text(net) == (GOLDEN / "carry_netlist.txt").read_text()

    def test_stats(self):
        net = compile_soi(minimized_soi(CARRY), inputs=CARRY.variables)
        assert netlist_stats(net) == {"gates": 5, "depth": 3, "iands": 3, "ors": 2}

    def test_matches_table_on_all_rows(self):
        net = compile_soi(minimized_soi(CARRY), inputs=CARRY.variables)
        for row, want in enumerate(CARRY.bits):
            assert simulate_netlist(net, CARRY.row_assignment(row)) == want


class TestCompileShapes:
    def test_two_term_canonical(self):
        t = TruthTable(("A", "B", "C"), (0, 0, 0, 0, 1, 0, 0, 1))
        net = compile_soi(soi_from_tt(t), inputs=t.variables)
        lines = netlist_text(net).splitlines()
        assert lines == [
            "inputs A B C",
            "g0 = IAND in:A in:B",
            "g1 = IAND g0 in:C",
            "g2 = IAND in:A !in:B",
            "g3 = IAND g2 !in:C",
            "g4 = OR g1 g3",
            "output g4",
        ]
        assert netlist_stats(net) == {"gates": 5, "depth": 3, "iands": 4, "ors": 1}

    def test_single_chain_uses_two_gates(self):
        net = compile_soi(IandChain((A, Not(B), Not(C))))
        assert netlist_stats(net)["gates"] == 2
        assert net.gates[0].in_b == "!in:B"
        assert net.gates[1].in_b == "!in:C"

    def test_literal_passthrough(self):
        assert compile_soi(A).gates == ()
        assert compile_soi(A).output == "in:A"
        assert compile_soi(Not(A)).output == "!in:A"
        assert simulate_netlist(compile_soi(Not(A)), {"A": 0}) == 1

    def test_or_tree_is_balanced(self):
        # eight terms pair into a three-level tree instead of a seven-deep rake
        t = TruthTable(("A", "B", "C"), (1,) * 8)
        net = compile_soi(soi_from_tt(t), inputs=t.variables)
        assert netlist_stats(net)["depth"] == 2 + 3


class TestConstantFolding:
    def test_const_one_netlist(self):
        net = compile_soi(Const(1), inputs=("A",))
        assert len(net.gates) == 1 and net.gates[0].kind == "OR"
        assert simulate_netlist(net, {"A": 0}) == 1
        assert simulate_netlist(net, {"A": 1}) == 1

    def test_const_zero_netlist(self):
        net = compile_soi(Const(0), inputs=("A",))
        assert len(net.gates) == 1 and net.gates[0].kind == "IAND"
        assert simulate_netlist(net, {"A": 0}) == 0
        assert simulate_netlist(net, {"A": 1}) == 0

    def test_const_without_inputs_is_rejected(self):
        with pytest.raises(ValueError):
            compile_soi(Const(1))

    def test_iand_with_const_one_right_is_false(self):
        # A AND NOT 1 == 0, so the term folds away entirely
        net = compile_soi(IandChain((A, Const(1))), inputs=("A",))
        assert simulate_netlist(net, {"A": 1}) == 0

    def test_iand_with_const_zero_right_is_passthrough(self):
        net = compile_soi(IandChain((A, Const(0))))
        assert net.gates == ()
        assert net.output == "in:A"

    def test_const_one_head_complements(self):
        # 1 AND NOT A == NOT A with zero gates via the inverting tap
        net = compile_soi(IandChain((Const(1), A)))
        assert net.gates == ()
        assert net.output == "!in:A"

    def test_or_drops_false_terms(self):
        e = Or((IandChain((A, Const(1))), IandChain((B, C))))
        net = compile_soi(e)
        assert netlist_stats(net) == {"gates": 1, "depth": 1, "iands": 1, "ors": 0}

    def test_or_with_true_term_is_constant(self):
        e = Or((IandChain((A, B)), Const(1)))
        net = compile_soi(e)
        for env in assignments(("A", "B")):
            assert simulate_netlist(net, env) == 1


class TestInputHandling:
    def test_declared_inputs_must_cover_variables(self):
        with pytest.raises(EvaluationError):
            compile_soi(IandChain((A, B)), inputs=("A",))

    def test_duplicate_inputs_rejected(self):
        with pytest.raises(ValueError):
            compile_soi(A, inputs=("A", "A"))

    def test_default_order_is_first_appearance(self):
        net = compile_soi(Or((IandChain((B, C)), IandChain((A, C)))))
        assert net.inputs == ("B", "C", "A")

    def test_extra_declared_inputs_are_kept(self):
        net = compile_soi(A, inputs=("A", "B"))
        assert net.inputs == ("A", "B")
        assert simulate_netlist(net, {"A": 1, "B": 0}) == 1

    def test_unbound_simulation_input(self):
        with pytest.raises(EvaluationError):
            simulate_netlist(compile_soi(A), {})

    def test_non_bit_simulation_input(self):
        with pytest.raises(EvaluationError):
            simulate_netlist(compile_soi(A), {"A": 7})


class TestShapeErrors:
    def test_nested_chain_operand(self):
        with pytest.raises(ShapeError):
            compile_soi(IandChain((A, IandChain((B, C)))))

    def test_or_of_non_terms(self):
        with pytest.raises(ShapeError):
            compile_soi(Or((A, Not(Or((B, C))))))

    def test_imply_is_not_a_sum_shape(self):
        from asymlogic.expr import ImplyChain

        with pytest.raises(ShapeError):
            compile_soi(ImplyChain((A, B)))


class TestTopology:
    @settings(max_examples=60, deadline=None)
    @given(soi_exprs)
    def test_gate_inputs_refer_backwards(self, e):
        net = compile_soi(e)
        seen = {f"in:{n}" for n in net.inputs} | {f"!in:{n}" for n in net.inputs}
        for gate in net.gates:
            assert gate.in_a in seen and gate.in_b in seen
            seen.add(gate.ref)
        assert net.output in seen

    @settings(max_examples=60, deadline=None)
    @given(soi_exprs)
    def test_simulation_matches_evaluation(self, e):
        names = variables(e)
        net = compile_soi(e, inputs=names if names else ("A",))
        for env in assignments(net.inputs):
            assert simulate_netlist(net, env) == evaluate(e, env)


class TestExhaustiveSweep:
    def test_every_three_variable_function(self):
        names = ("A", "B", "C")
        for bits in product((0, 1), repeat=8):
            t = TruthTable(names, bits)
            for build in (soi_from_tt, minimized_soi):
                net = compile_soi(build(t), inputs=names)
                for row, want in enumerate(bits):
                    assert simulate_netlist(net, t.row_assignment(row)) == want
