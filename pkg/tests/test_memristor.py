"""Stateful-implication compiler: schedules, peephole, and replay."""

from __future__ import annotations

from itertools import product
from pathlib import Path

import pytest
from hypothesis import given, settings

from asymlogic.canon import noi_from_tt
from asymlogic.errors import CapacityError, EvaluationError, ShapeError
from asymlogic.expr import (
    And,
    Const,
    ImplyChain,
    Not,
    Var,
    variables,
)
from asymlogic.memristor import (
    Imply,
    ImplyProgram,
    Reset,
    compile_nand,
    compile_noi,
    program_text,
    simulate,
    step_count,
    step_semantics,
)
from asymlogic.minimize import minimized_noi
from asymlogic.semantics import TruthTable, evaluate

from .helpers import assignments
from .strategies import noi_exprs

GOLDEN = Path(__file__).parent / "golden"
CARRY = TruthTable(("A", "B", "C"), (0, 0, 0, 1, 0, 1, 1, 1))


class TestStepSemantics:
    def test_reset(self):
        assert step_semantics((1, 1), Reset(0)) == (0, 1)

    @pytest.mark.parametrize(
        "cond, target, expected",
        [(0, 0, 1), (0, 1, 1), (1, 0, 0), (1, 1, 1)],
    )
    def test_imply_truth_table(self, cond, target, expected):
        # s <- NOT cond OR s
        state = (cond, target)
        assert step_semantics(state, Imply(0, 1)) == (cond, expected)

    def test_imply_requires_distinct_registers(self):
        with pytest.raises(ValueError):
            Imply(2, 2)


class TestProgramValidation:
    def test_input_registers_are_read_only(self):
        with pytest.raises(ValueError):
            ImplyProgram(2, (("p", 0),), 1, (Reset(0),))
        with pytest.raises(ValueError):
            ImplyProgram(2, (("p", 0),), 1, (Imply(1, 0),))

    def test_register_bounds(self):
        with pytest.raises(ValueError):
            ImplyProgram(1, (), 0, (Reset(3),))
        with pytest.raises(ValueError):
            ImplyProgram(1, (), 5, ())


class TestNand:
    def test_exact_schedule(self):
        p = compile_nand("p", "q")
        assert p.steps == (Reset(2), Imply(0, 2), Imply(1, 2))
        assert p.bindings == (("p", 0), ("q", 1))
        assert p.output == 2

    def test_counts(self):
        assert step_count(compile_nand("p", "q")) == {
            "total": 3,
            "resets": 1,
            "implies": 2,
            "registers": 3,
        }

    @pytest.mark.parametrize(
        "p_bit, q_bit, s_column, result",
        [
            (1, 1, (0, 0, 0), 0),
            (0, 0, (0, 1, 1), 1),
            (1, 0, (0, 0, 1), 1),
            (0, 1, (0, 1, 1), 1),
        ],
    )
    def test_work_register_trace(self, p_bit, q_bit, s_column, result):
        prog = compile_nand("p", "q")
        r = simulate(prog, {"p": p_bit, "q": q_bit})
        assert tuple(state[2] for state in r.trace) == s_column
        assert r.output == result

    def test_custom_work_register(self):
        p = compile_nand("p", "q", work=4)
        assert p.output == 4 and p.registers == 5
        with pytest.raises(ValueError):
            compile_nand("p", "q", work=1)

    def test_golden_text(self):
        assert program_text(compile_nand("p", "q")) == (
            GOLDEN / "nand_program.txt"
        ).read_text()

    def test_nand_noi_collapses_to_same_schedule(self):
        prog = compile_noi(Not(And((Var("p"), Var("q")))))
        assert prog.steps == (Reset(2), Imply(0, 2), Imply(1, 2))


class TestCompileNoi:
    def test_reduced_carry_golden(self):
        prog = compile_noi(minimized_noi(CARRY))
        assert program_text(prog) == (GOLDEN / "carry_program.txt").read_text()
        assert step_count(prog) == {
            "total": 13,
            "resets": 4,
            "implies": 9,
            "registers": 5,
        }

    def test_canonical_carry_is_larger_but_equal(self):
        reduced = compile_noi(minimized_noi(CARRY))
        canonical = compile_noi(noi_from_tt(CARRY))
        assert step_count(canonical)["total"] == 27
        assert step_count(reduced)["total"] < step_count(canonical)["total"]
        for env in assignments(CARRY.variables):
            row = (env["A"] << 2) | (env["B"] << 1) | env["C"]
            assert simulate(reduced, env).output == CARRY.bits[row]
            assert simulate(canonical, env).output == CARRY.bits[row]

    def test_constants(self):
        assert simulate(compile_noi(Const(0)), {}).output == 0
        assert simulate(compile_noi(Const(1)), {}).output == 1

    def test_passthrough_variable(self):
        prog = compile_noi(Var("A"))
        assert prog.steps == ()
        assert simulate(prog, {"A": 1}).output == 1
        assert simulate(prog, {"A": 0}).output == 0

    def test_single_inversion(self):
        prog = compile_noi(Not(Var("A")))
        assert step_count(prog)["total"] == 2
        assert simulate(prog, {"A": 0}).output == 1

    def test_shape_errors(self):
        with pytest.raises(ShapeError):
            compile_noi(And((Var("A"), Var("B"))))
        with pytest.raises(ShapeError):
            compile_noi(Not(And((Var("A"), And((Var("B"), Var("C")))))))
        with pytest.raises(ShapeError):
            compile_noi(Not(ImplyChain((Var("A"), And((Var("B"), Var("C")))))))

    def test_capacity(self):
        terms = tuple(
            ImplyChain((Var(f"v{i}"), Var("x"))) for i in range(17)
        )
        with pytest.raises(CapacityError):
            compile_noi(Not(And(terms)))

    def test_peephole_off_is_still_correct(self):
        noi = minimized_noi(CARRY)
        raw = compile_noi(noi, peephole=False)
        slim = compile_noi(noi)
        assert step_count(raw)["total"] > step_count(slim)["total"]
        for env in assignments(CARRY.variables):
            assert simulate(raw, env).output == simulate(slim, env).output

    @settings(max_examples=60, deadline=None)
    @given(noi_exprs)
    def test_compiled_program_matches_evaluation(self, e):
        prog = compile_noi(e)
        for env in assignments(variables(e)):
            assert simulate(prog, env).output == evaluate(e, env)

    @settings(max_examples=60, deadline=None)
    @given(noi_exprs)
    def test_inputs_never_written(self, e):
        prog = compile_noi(e)
        input_regs = {reg for _, reg in prog.bindings}
        for step in prog.steps:
            written = step.target if isinstance(step, Reset) else step.set
            assert written not in input_regs

    @settings(max_examples=30, deadline=None)
    @given(noi_exprs)
    def test_registers_only_fall_at_resets(self, e):
        # IMPLY can only raise a register, so 1 -> 0 transitions happen
        # exactly at RESET steps
        prog = compile_noi(e)
        for env in assignments(variables(e)):
            result = simulate(prog, env)
            prev = list(result.trace[0]) if result.trace else []
            for step, state in zip(prog.steps[1:], result.trace[1:]):
                for reg, (before, after) in enumerate(zip(prev, state)):
                    if before == 1 and after == 0:
                        assert isinstance(step, Reset) and step.target == reg
                prev = state

    def test_full_three_variable_sweep(self):
        names = ("A", "B", "C")
        for bits in product((0, 1), repeat=8):
            t = TruthTable(names, bits)
            prog = compile_noi(noi_from_tt(t))
            for row, want in enumerate(bits):
                env = t.row_assignment(row)
                assert simulate(prog, env).output == want


class TestSimulate:
    def test_trace_records_every_step(self):
        prog = compile_nand("p", "q")
        r = simulate(prog, {"p": 1, "q": 0})
        assert len(r.trace) == 3
        assert r.state == r.trace[-1]

    def test_unbound_input(self):
        with pytest.raises(EvaluationError):
            simulate(compile_nand("p", "q"), {"p": 1})

    def test_non_bit_input(self):
        with pytest.raises(EvaluationError):
            simulate(compile_nand("p", "q"), {"p": 2, "q": 0})
