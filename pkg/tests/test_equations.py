"""Polynomial equation systems over a chain and their interval solutions."""

from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuzzmin import (
    Chain,
    Equation,
    EquationSystem,
    Monomial,
    PointAssignment,
    Polynomial,
    Relation,
    SizeExceededError,
    eval_polynomial,
    monomial_eq_solutions,
    monomial_le_solutions,
    polynomial_eq_solutions,
    rhs_values,
    satisfies,
    solve_intervals,
    solve_points,
)
from fuzzmin.generate import random_chain_labels, random_system
from fuzzmin.oracles import grid_search_point

CH = Chain(("0", "0.2", "0.5", "1"))


def _strs(solutions):
    return [str(v) for v in solutions.vectors]


def test_monomial_normalizes_variables():
    assert Monomial((2,0, 2)).vars == (0,2)
    with pytest.raises(ValueError):
        Monomial(())
    with pytest.raises(ValueError):
        Monomial((-1,))


def test_polynomial_keeps_first_occurrence_order():
    p = Polynomial((Monomial((1,0)), Monomial((2,)), Monomial((0,1))))
    assert [m.vars for m in p.monomials] == [(0,1), (2,)]
    with pytest.raises(ValueError):
        Polynomial(())


def test_evaluation_is_max_of_mins():
    p = Polynomial((Monomial((0,1)), Monomial((2,))))
    point = PointAssignment((CH.value("0.5"), CH.value("1"), CH.value("0.2")))
    assert eval_polynomial(p, point).label == "0.5"
    with pytest.raises(ValueError):
        eval_polynomial(p, PointAssignment((CH.value("1"),)))


def test_satisfies_both_relations():
    x = Polynomial((Monomial((0,)),))
    eq_sys = EquationSystem(CH, 1, (Equation(x, Relation.EQ, CH.value("0.5")),))
    le_sys = EquationSystem(CH, 1, (Equation(x, Relation.LE, CH.value("0.5")),))
    low = PointAssignment((CH.value("0.2"),))
    exact = PointAssignment((CH.value("0.5"),))
    high = PointAssignment((CH.value("1"),))
    assert satisfies(eq_sys, exact)
    assert not satisfies(eq_sys, low)
    assert satisfies(le_sys, low) and satisfies(le_sys, exact)
    assert not satisfies(le_sys, high)
    with pytest.raises(ValueError):
        satisfies(eq_sys, PointAssignment((CH.value("0"), CH.value("0"))))


def test_system_rejects_out_of_range_variables():
    stray = Polynomial((Monomial((1,)),))
    with pytest.raises(ValueError):
        EquationSystem(CH, 1, (Equation(stray, Relation.EQ, CH.value("0")),))


def test_assignment_rejects_mixed_chains():
    other = Chain(("0", "1"))
    with pytest.raises(ValueError):
        PointAssignment((CH.value("0"), other.value("1")))


# interval families for a single monomial


def test_monomial_equality_family_by_hand():
    # x1 ∧ x2 = 0.5 in three variables: either variable can be the pinned one
    fam = monomial_eq_solutions(Monomial((0,1)), CH.value("0.5"), 3)
    assert _strs(fam) == [
        "([0.5,0.5], [0.5,1], [0,1])",
        "([0.5,1], [0.5,0.5], [0,1])",
    ]


def test_monomial_equality_family_collapses_at_the_top():
    # both variables must be exactly 1: the two cases coincide
    fam = monomial_eq_solutions(Monomial((0,1)), CH.value("1"), 2)
    assert _strs(fam) == ["([1,1], [1,1])"]


def test_monomial_bound_family_by_hand():
    fam = monomial_le_solutions(Monomial((0,1)), CH.value("0.5"), 3)
    assert _strs(fam) == [
        "([0,0.5], [0,1], [0,1])",
        "([0,1], [0,0.5], [0,1])",
    ]


def test_monomial_family_rejects_oversized_indices():
    with pytest.raises(ValueError):
        monomial_eq_solutions(Monomial((3,)), CH.value("0"), 3)


def test_polynomial_family_splits_on_the_attaining_monomial():
    # (x1 ∧ x2) ∨ x3 = 0.5: one monomial attains 0.5, the other stays below
    p = Polynomial((Monomial((0,1)), Monomial((2,))))
    fam = polynomial_eq_solutions(p, CH.value("0.5"), 3)
    assert _strs(fam) == [
        "([0,0.5], [0,1], [0.5,0.5])",
        "([0,1], [0,0.5], [0.5,0.5])",
        "([0.5,0.5], [0.5,1], [0,0.5])",
        "([0.5,1], [0.5,0.5], [0,0.5])",
    ]


# whole systems


def _system():
    eq1 = Equation(
        Polynomial((Monomial((0,1)), Monomial((2,)))), Relation.EQ, CH.value("0.5")
    )
    eq2 = Equation(Polynomial((Monomial((2,)),)), Relation.EQ, CH.value("0.2"))
    return EquationSystem(CH, 3, (eq1, eq2))


def test_interval_solver_by_hand():
    sols = solve_intervals(_system())
    assert sols.has_nonempty_vector
    assert _strs(sols) == [
        "([0,0.5], [0,1], EMPTY)",
        "([0,1], [0,0.5], EMPTY)",
        "([0.5,0.5], [0.5,1], [0.2,0.2])",
        "([0.5,1], [0.5,0.5], [0.2,0.2])",
    ]
    assert [str(v) for v in sols.nonempty_vectors()] == [
        "([0.5,0.5], [0.5,1], [0.2,0.2])",
        "([0.5,1], [0.5,0.5], [0.2,0.2])",
    ]


def test_interval_solver_cap():
    p = Polynomial((Monomial((0,)), Monomial((1,)), Monomial((2,))))
    system = EquationSystem(CH, 3, (Equation(p, Relation.EQ, CH.value("0.5")),))
    assert len(solve_intervals(system)) == 3
    with pytest.raises(SizeExceededError):
        solve_intervals(system, max_vectors=2)


def test_point_solver_walks_the_grid_in_order():
    # first hit in lex order over the rhs values, first variable most significant
    point = solve_points(_system())
    assert point is not None
    assert point.labels() == ("0.5", "0.5", "0.2")
    assert satisfies(_system(), point)


def test_point_solver_accepts_a_custom_value_pool():
    system = EquationSystem(
        CH, 1, (Equation(Polynomial((Monomial((0,)),)), Relation.EQ, CH.value("0")),)
    )
    assert solve_points(system).labels() == ("0",)
    # the default pool misses solutions only outside the rhs values, never ones in it
    widened = solve_points(system, values=(CH.value("0"), CH.value("1")))
    assert widened.labels() == ("0",)
    other = Chain(("0", "1"))
    with pytest.raises(ValueError):
        solve_points(system, values=(other.value("1"),))


def test_unsolvable_system():
    x = Polynomial((Monomial((0,)),))
    clash = EquationSystem(
        CH,
        1,
        (
            Equation(x, Relation.EQ, CH.value("0.5")),
            Equation(x, Relation.EQ, CH.value("1")),
        ),
    )
    sols = solve_intervals(clash)
    assert not sols.has_nonempty_vector
    assert solve_points(clash) is None


def test_solvers_reject_inequalities():
    system = EquationSystem(
        CH, 1, (Equation(Polynomial((Monomial((0,)),)), Relation.LE, CH.value("0.5")),)
    )
    with pytest.raises(ValueError):
        solve_intervals(system)
    with pytest.raises(ValueError):
        solve_points(system)


def test_rhs_value_pool_is_sorted_and_distinct():
    assert [v.label for v in rhs_values(_system())] == ["0.2", "0.5"]


@given(st.integers(0,2**32))
def test_solvers_agree_and_answers_check_out(seed):
    rng = random.Random(seed)
    chain = Chain(random_chain_labels(rng, rng.randint(2,4)))
    n_vars = rng.randint(1,3)
    system = random_system(rng, chain, n_vars, rng.randint(1,3), 3)

    sols = solve_intervals(system)
    point = solve_points(system)
    assert sols.has_nonempty_vector == (point is not None)

    if point is not None:
        assert satisfies(system, point)
        assert any(
            v.contains_point(point.values) for v in sols.nonempty_vectors()
        )

    # grid search over the full chain is the ground truth for solvability
    brute = grid_search_point(system, tuple(chain))
    assert (brute is None) == (point is None)
