"""Automata, word values, and the two equivalence deciders."""

from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import fuzzmin as fz
from fuzzmin import BudgetExceededError, Chain
from fuzzmin.oracles import all_words_up_to, brute_language_value

from helpers import automaton, literal_suffix_vectors, random_pair

CH2 = Chain(("0", "1"))
CH3 = Chain(("0", "0.5", "1"))

# constant language 1 over {a, b}
ALL_ONE = automaton(CH2, "ab", ["1"], ["1"], [[["1"]], [["1"]]])

# agrees with ALL_ONE up to length 1; gives 0 to "aa" and "ab"
SPLIT = automaton(
    CH2,
    "ab",
    ["1", "0"],
    ["1", "1"],
    [
        [["0", "1"], ["0", "0"]],
        [["1", "0"], ["0", "0"]],
    ],
)

# f(lambda)=1, f(a)=0.5, f(aa)=0.8, then 0 forever: not weight-monotone
NONMONO = automaton(
    Chain(("0", "0.5", "0.8", "1")),
    "a",
    ["1", "0", "0"],
    ["1", "0.5", "0.8"],
    [[["0", "1", "0"], ["0", "0", "1"], ["0", "0", "0"]]],
)


def test_construction_checks():
    with pytest.raises(ValueError):
        automaton(CH2, "aa", ["1"], ["1"], [[["1"]], [["1"]]])
    with pytest.raises(ValueError):
        fz.FuzzyAutomaton(
            CH2, (), ALL_ONE.pi, ALL_ONE.eta, ()
        )
    with pytest.raises(ValueError):
        fz.FuzzyAutomaton(
            CH2, ("a",), ALL_ONE.pi, ALL_ONE.eta, (fz.FuzzyMatrix.identity(CH2, 2),)
        )


def test_words_and_symbols():
    assert ALL_ONE.word_from_names(["a", "b", "a"]) == (0, 1, 0)
    assert ALL_ONE.format_word(()) == "λ"
    assert ALL_ONE.format_word((1, 0)) == "b a"
    with pytest.raises(ValueError):
        ALL_ONE.word_from_names(["c"])
    with pytest.raises(ValueError):
        fz.language_value(ALL_ONE, (5,))


def test_language_values_by_hand():
    assert fz.delta_word(NONMONO, ()) == fz.FuzzyMatrix.identity(NONMONO.chain, 3)
    got = [fz.language_value(NONMONO, (0,) * k).label for k in range(5)]
    assert got == ["1", "0.5", "0.8", "0", "0"]


@given(st.integers(0, 2**32), st.lists(st.integers(0, 1), max_size=4))
def test_language_value_matches_path_enumeration(seed, word):
    a1, _ = random_pair(random.Random(seed), max_states=3)
    word = tuple(s % len(a1.alphabet) for s in word)
    assert fz.language_value(a1, word) == brute_language_value(a1, word)


@given(st.integers(0, 2**32))
def test_word_matrix_is_multiplicative(seed):
    rng = random.Random(seed)
    a, _ = random_pair(rng, max_states=3)
    x = tuple(rng.randrange(len(a.alphabet)) for _ in range(rng.randint(0, 3)))
    y = tuple(rng.randrange(len(a.alphabet)) for _ in range(rng.randint(0, 3)))
    assert fz.delta_word(a, x + y) == fz.maxmin_product(
        fz.delta_word(a, x), fz.delta_word(a, y)
    )


# length bound


def test_length_bound_counts_transition_and_final_values_only():
    # initial weights stay out of the count: d = |{0.25, 0.5, 0.75}| = 3 here
    ch = Chain(("0", "0.25", "0.5", "0.75", "1"))
    a1 = automaton(ch, "a", ["1"], ["0.25"], [[["0.5"]]])
    a2 = automaton(ch, "a", ["0.75"], ["0.75"], [[["0.5"]]])
    assert fz.equivalence_length_bound(a1, a2) == 3**2 - 1
    with pytest.raises(BudgetExceededError):
        fz.equivalence_length_bound(a1, a2, ceiling=7)
    assert fz.equivalence_length_bound(a1, a2, ceiling=8) == 8


def test_length_bound_requires_shared_chain_and_alphabet():
    other = automaton(CH3, "a", ["1"], ["1"], [[["1"]]])
    mono = automaton(CH2, "a", ["1"], ["1"], [[["1"]]])
    with pytest.raises(ValueError):
        fz.equivalence_length_bound(mono, other)
    with pytest.raises(ValueError):
        fz.equivalent(ALL_ONE, mono)


# bounded equivalence


def test_bounded_check_distinguishes_at_the_right_length():
    assert fz.k_equivalent(ALL_ONE, SPLIT, 0)
    assert fz.k_equivalent(ALL_ONE, SPLIT, 1)
    assert not fz.k_equivalent(ALL_ONE, SPLIT, 2)
    assert fz.bounded_counterexample(ALL_ONE, SPLIT, 1) is None
    # both "aa" and "ab" fail; the least one comes back
    assert fz.bounded_counterexample(ALL_ONE, SPLIT, 5) == (0, 0)


def test_bounded_check_at_lambda():
    half = automaton(CH3, "a", ["1"], ["0.5"], [[["1"]]])
    one = automaton(CH3, "a", ["1"], ["1"], [[["1"]]])
    assert fz.bounded_counterexample(half, one, 0) == ()
    with pytest.raises(ValueError):
        fz.k_equivalent(half, one, -1)


def test_bounded_check_budget():
    with pytest.raises(BudgetExceededError):
        fz.k_equivalent(ALL_ONE, SPLIT, 2, max_pairs=1)


# fixpoint decider


def test_fixpoint_counterexample_is_least():
    res = fz.equivalent_fixpoint(ALL_ONE, SPLIT)
    assert not res.equivalent
    assert res.counterexample == (0, 0)
    assert ALL_ONE.format_word(res.counterexample) == "a a"
    assert res.stabilization_index == 2
    assert {m.data for m in res.reached} == {(1, 0, 0), (1, 1, 0), (1, 1, 1)}


def test_fixpoint_equivalence_with_duplicate_state():
    dup = automaton(
        CH3, "a", ["1", "1"], ["0.5", "0.5"], [[["1", "1"], ["1", "1"]]]
    )
    single = automaton(CH3, "a", ["1"], ["0.5"], [[["1"]]])
    padded = fz.pad_states(single, 2)
    res = fz.equivalent_fixpoint(dup, padded)
    assert res.equivalent
    assert res.counterexample is None
    assert fz.equivalent(dup, padded)


def test_reached_vectors_match_literal_word_enumeration():
    for pair in [(ALL_ONE, SPLIT), (NONMONO, NONMONO)]:
        res = fz.equivalent_fixpoint(*pair)
        lit = literal_suffix_vectors(*pair, res.stabilization_index)
        assert {m.data for m in res.reached} == lit
        # one more level adds nothing: the set already closed off
        assert lit == literal_suffix_vectors(*pair, res.stabilization_index + 1)


def test_fixpoint_budget():
    with pytest.raises(BudgetExceededError):
        fz.equivalent_fixpoint(NONMONO, NONMONO, max_vectors=2)


@given(st.integers(0, 2**32))
def test_deciders_agree(seed):
    a1, a2 = random_pair(random.Random(seed))
    res = fz.equivalent_fixpoint(a1, a2)
    bound = fz.equivalence_length_bound(a1, a2)
    assert res.stabilization_index <= bound
    cex = fz.bounded_counterexample(a1, a2, bound)
    assert res.counterexample == cex
    if cex is not None:
        assert len(cex) <= res.stabilization_index
        assert fz.language_value(a1, cex) != fz.language_value(a2, cex)
        # nothing shorter or lexicographically earlier distinguishes them
        if len(cex) <= 12:
            for word in all_words_up_to(len(a1.alphabet), len(cex)):
                if word == cex:
                    break
                assert fz.language_value(a1, word) == fz.language_value(a2, word)
