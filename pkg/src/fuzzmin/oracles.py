"""Brute-force reference implementations backing the acceptance suite.

Everything here trades speed for obviousness and stays structurally
independent of the code it checks: language values come from explicit path
enumeration instead of matrix folds, point solving from a plain grid walk
instead of interval algebra, NFA acceptance from the classical subset
construction, and k-state search from full-chain candidate grids judged by
the bounded word check rather than the fixpoint.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .automaton import (
    DEFAULT_VECTOR_BUDGET,
    FuzzyAutomaton,
    Word,
    build_joint_form,
    equivalence_length_bound,
    k_equivalent,
    _quick_equivalent,
)
from .chain import Chain, ChainValue
from .equations import EquationSystem, Relation
from .minimization import MinimizeInstance, decode_candidate, nfa_view


def brute_language_value(a: FuzzyAutomaton, word: Sequence[int]) -> ChainValue:
    """Max over all state paths of the min of the weights along the path."""
    best = 0
    for path in itertools.product(range(a.n), repeat=len(word) + 1):
        w = min(a.pi.rank_at(0, path[0]), a.eta.rank_at(path[-1], 0))
        for t, s in enumerate(word):
            w = min(w, a.delta[s].rank_at(path[t], path[t + 1]))
        best = max(best, w)
    return a.chain[best]


def grid_search_point(
    system: EquationSystem, values: Sequence[ChainValue]
) -> tuple[ChainValue, ...] | None:
    """First assignment over the given values satisfying the system.

    Lexicographic in the order the values are passed, first variable most
    significant.  Evaluation is inlined on ranks instead of going through
    the solver's evaluator.
    """
    ranks = tuple(v.rank for v in values)
    compiled = [
        (tuple(m.vars for m in eq.lhs.monomials), eq.relation, eq.rhs.rank)
        for eq in system.equations
    ]
    chain = system.chain
    for combo in itertools.product(ranks, repeat=system.n_vars):
        for monos, relation, target in compiled:
            got = max(min(combo[i] for i in vs) for vs in monos)
            if got != target if relation is Relation.EQ else got > target:
                break
        else:
            return tuple(chain[r] for r in combo)
    return None


def enumerate_boolean_automata(
    chain: Chain, alphabet: Sequence[str], n: int
) -> Iterator[FuzzyAutomaton]:
    """All n-state automata with entries in {0, 1}, in candidate layout order."""
    alphabet = tuple(alphabet)
    top = chain.one
    bottom = chain.zero
    var_count = 2 * n + len(alphabet) * n * n
    for bits in itertools.product((bottom, top), repeat=var_count):
        yield decode_candidate(chain, alphabet, n, bits)


def _fixpoint_equal(a1: FuzzyAutomaton, a2: FuzzyAutomaton, max_vectors: int) -> bool:
    form = build_joint_form(a1, a2)
    return _quick_equivalent(
        [m.as_row_tuples() for m in form.m_sigma],
        tuple(form.eta_joint.data),
        form.pi1_ext.data,
        form.pi2_ext.data,
        max_vectors,
    )


def min_nfa_states_brute(
    a: FuzzyAutomaton, *, max_vectors: int = DEFAULT_VECTOR_BUDGET
) -> int:
    """Least state count of any boolean automaton with the same language.

    Searches the full boolean grid at each k (not just the input's values)
    and judges language equality with the verdict-only fixpoint.  The input
    realizes itself, so k = n needs no search.
    """
    nfa_view(a)
    for k in range(1, a.n):
        for cand in enumerate_boolean_automata(a.chain, a.alphabet, k):
            if _fixpoint_equal(a, cand, max_vectors):
                return k
    return a.n


def crisp_accepts(a: FuzzyAutomaton, word: Sequence[int]) -> bool:
    """Classical subset-construction run; weights must be boolean."""
    top = len(a.chain) - 1
    current = {i for i in range(a.n) if a.pi.rank_at(0, i) == top}
    for s in word:
        m = a.delta[s]
        current = {
            j
            for j in range(a.n)
            if any(m.rank_at(i, j) == top for i in current)
        }
    return any(a.eta.rank_at(i, 0) == top for i in current)


def grid_search_k_candidate(
    inst: MinimizeInstance, *, max_pairs: int = DEFAULT_VECTOR_BUDGET
) -> FuzzyAutomaton | None:
    """First k-state equivalent over the FULL chain grid, or None.

    The candidate grid ranges over every chain value, not only the input's,
    and equivalence is judged by the bounded word check at its conclusive
    length.  Exponentially worse than `decide_k` on both axes; meant for
    desk-scale cross-checks of verdicts.
    """
    a = inst.automaton
    k = inst.k
    var_count = 2 * k + len(a.alphabet) * k * k
    everything = tuple(a.chain)
    for combo in itertools.product(everything, repeat=var_count):
        cand = decode_candidate(a.chain, a.alphabet, k, combo)
        bound = equivalence_length_bound(a, cand)
        if k_equivalent(a, cand, bound, max_pairs=max_pairs):
            return cand
    return None


def all_words_up_to(n_sym: int, max_len: int) -> Iterator[Word]:
    """Every word over n_sym symbols of length <= max_len, length-lex order."""
    for length in range(max_len + 1):
        yield from itertools.product(range(n_sym), repeat=length)
