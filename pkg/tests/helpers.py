"""Shared fixtures-by-hand: compact builders and independent reference code."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

import fuzzmin as fz
from fuzzmin.generate import alphabet_of
from fuzzmin.oracles import all_words_up_to


def automaton(
    chain: fz.Chain,
    alphabet: Sequence[str],
    pi: Sequence[str],
    eta: Sequence[str],
    delta: Sequence[Sequence[Sequence[str]]],
) -> fz.FuzzyAutomaton:
    """Build an automaton from label grids; delta is one row grid per symbol."""
    return fz.FuzzyAutomaton(
        chain,
        tuple(alphabet),
        fz.FuzzyMatrix.from_labels(chain, [list(pi)]),
        fz.FuzzyMatrix.from_labels(chain, [[e] for e in eta]),
        tuple(fz.FuzzyMatrix.from_labels(chain, rows) for rows in delta),
    )


def random_pair(
    rng: random.Random,
    *,
    max_states: int = 2,
    max_symbols: int = 2,
    max_chain: int = 3,
) -> tuple[fz.FuzzyAutomaton, fz.FuzzyAutomaton]:
    """Two automata sharing a freshly drawn chain and alphabet."""
    chain = fz.Chain(fz.random_chain_labels(rng, rng.randint(2, max_chain)))
    alphabet = alphabet_of(rng.randint(1, max_symbols))
    a1 = fz.random_automaton(rng, chain, alphabet, rng.randint(1, max_states))
    a2 = fz.random_automaton(rng, chain, alphabet, rng.randint(1, max_states))
    return a1, a2


def fraction_maxmin_product(
    a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]
) -> list[list[Fraction]]:
    """Reference product over Fractions, written as the definition reads."""
    rows, inner, cols = len(a), len(b), len(b[0])
    return [
        [max(min(a[i][k], b[k][j]) for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def as_fraction_grid(m: fz.FuzzyMatrix) -> list[list[Fraction]]:
    return [
        [m.entry(i, j).fraction for j in range(m.cols)] for i in range(m.rows)
    ]


def literal_suffix_vectors(
    a1: fz.FuzzyAutomaton, a2: fz.FuzzyAutomaton, up_to: int
) -> set[tuple[int, ...]]:
    """All stacked M(x) . eta vectors for words of length <= up_to, by brute
    word enumeration."""
    out = set()
    for word in all_words_up_to(len(a1.alphabet), up_to):
        v1 = fz.maxmin_product(fz.delta_word(a1, word), a1.eta)
        v2 = fz.maxmin_product(fz.delta_word(a2, word), a2.eta)
        out.add(v1.data + v2.data)
    return out
