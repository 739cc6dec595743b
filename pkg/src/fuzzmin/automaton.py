"""Fuzzy finite automata over a chain: word semantics and equivalence decisions.

An automaton is (chain, alphabet, pi, eta, delta): a 1 x n initial row, an
n x 1 final column, and one n x n transition matrix per symbol.  The value of
a word is pi composed with the word's transition product composed with eta,
all under max-min.

Two deciders for language equality live here and are deliberately independent
implementations:

* `equivalent_fixpoint` saturates the set of suffix evaluation vectors
  M(x) . eta of the joint block form of the two automata, expanding words on
  the left.  This is the production path; it also yields the stabilization
  index and, on a negative verdict, the length-lexicographically least
  distinguishing word.

* `k_equivalent` / `bounded_counterexample` walk words in length-lex order,
  extending on the right, and memoize on the pair of transition matrices
  reached.  A repeated pair determines identical values for every extension,
  so the pruning is exact; the verdict and counterexample match literal word
  enumeration, which is infeasible once the bound grows.

`equivalence_length_bound` gives the word length that makes the bounded check
complete: two automata agree everywhere iff they agree on all words no longer
than d**(n1+n2) - 1, where d counts the distinct transition and final weights
occurring in either automaton (initial weights deliberately do not count).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .chain import Chain, ChainValue
from .errors import BudgetExceededError
from .linalg import FuzzyMatrix, direct_sum, fold_maxmin_product, maxmin_product

DEFAULT_VECTOR_BUDGET = 1_000_000

Word = tuple[int, ...]


@dataclass(frozen=True)
class FuzzyAutomaton:
    chain: Chain
    alphabet: tuple[str, ...]
    pi: FuzzyMatrix
    eta: FuzzyMatrix
    delta: tuple[FuzzyMatrix, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "delta", tuple(self.delta))
        if not self.alphabet:
            raise ValueError("alphabet must not be empty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet has duplicate symbols")
        for sym in self.alphabet:
            if not isinstance(sym, str) or not sym:
                raise ValueError(f"bad symbol {sym!r}")
        if self.pi.rows != 1:
            raise ValueError("pi must be a single row")
        n = self.pi.cols
        if (self.eta.rows, self.eta.cols) != (n, 1):
            raise ValueError(f"eta must be {n}x1")
        if len(self.delta) != len(self.alphabet):
            raise ValueError("one transition matrix per symbol required")
        for sym, m in zip(self.alphabet, self.delta):
            if (m.rows, m.cols) != (n, n):
                raise ValueError(f"transition matrix for {sym!r} must be {n}x{n}")
        for m in (self.pi, self.eta, *self.delta):
            if m.chain != self.chain:
                raise ValueError("automaton parts live on different chains")

    @property
    def n(self) -> int:
        return self.pi.cols

    def symbol_index(self, name: str) -> int:
        try:
            return self.alphabet.index(name)
        except ValueError:
            raise ValueError(f"unknown symbol {name!r}") from None

    def word_from_names(self, names: Sequence[str]) -> Word:
        return tuple(self.symbol_index(name) for name in names)

    def format_word(self, word: Word) -> str:
        if not word:
            return "λ"
        return " ".join(self.alphabet[s] for s in word)


def _check_word(a: FuzzyAutomaton, word: Sequence[int]) -> None:
    for s in word:
        if not 0 <= s < len(a.alphabet):
            raise ValueError(f"symbol index {s} outside alphabet of {len(a.alphabet)}")


def delta_word(a: FuzzyAutomaton, word: Sequence[int]) -> FuzzyMatrix:
    """Transition matrix of a word; the empty word maps to the identity."""
    _check_word(a, word)
    return fold_maxmin_product(
        (a.delta[s] for s in word), chain=a.chain, dim=a.n
    )


def language_value(a: FuzzyAutomaton, word: Sequence[int]) -> ChainValue:
    """Degree to which the automaton accepts the word."""
    return maxmin_product(maxmin_product(a.pi, delta_word(a, word)), a.eta).scalar()


def _require_compatible(a1: FuzzyAutomaton, a2: FuzzyAutomaton) -> None:
    if a1.chain != a2.chain:
        raise ValueError("automata live on different chains")
    if a1.alphabet != a2.alphabet:
        raise ValueError("automata have different alphabets")


def equivalence_length_bound(
    a1: FuzzyAutomaton, a2: FuzzyAutomaton, *, ceiling: int | None = None
) -> int:
    """Word length that makes bounded equivalence conclusive.

    d counts the distinct values in the transition matrices and final columns
    of both automata; initial weights do not enter the count.  The bound is
    d**(n1+n2) - 1 and grows fast; pass ceiling to fail with a budget error
    instead of handing an unusable number to an enumeration.
    """
    _require_compatible(a1, a2)
    ranks = set(a1.eta.data) | set(a2.eta.data)
    for m in a1.delta + a2.delta:
        ranks.update(m.data)
    bound = len(ranks) ** (a1.n + a2.n) - 1
    if ceiling is not None and bound > ceiling:
        raise BudgetExceededError(bound, ceiling, "equivalence word-length bound")
    return bound


# Rank-level kernels.  Vectors are plain tuples of ranks; matrices are tuples
# of row tuples.  Everything downstream of the public constructors funnels
# through these.

def _mv(rows: Sequence[tuple[int, ...]], vec: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(map(min, row, vec)) for row in rows)


def _dot(u: tuple[int, ...], v: tuple[int, ...]) -> int:
    return max(map(min, u, v))


def _pair_bfs(
    a1: FuzzyAutomaton,
    a2: FuzzyAutomaton,
    k: int,
    max_pairs: int,
) -> Word | None:
    """First word (length-lex order, length <= k) whose values differ, else None.

    Walks words by appending symbols on the right and keys the search on the
    pair of transition matrices reached.  Extensions of a repeated pair were
    covered when the pair first appeared, so skipping them loses nothing; the
    first mismatch found is exactly the least one literal enumeration reports.
    """
    _require_compatible(a1, a2)
    if k < 0:
        raise ValueError("word length bound must be >= 0")
    pi1, pi2 = a1.pi.data, a2.pi.data
    eta1, eta2 = tuple(a1.eta.data), tuple(a2.eta.data)
    cols1 = [
        tuple(tuple(d.data[r * d.cols + j] for r in range(d.rows)) for j in range(d.cols))
        for d in a1.delta
    ]
    cols2 = [
        tuple(tuple(d.data[r * d.cols + j] for r in range(d.rows)) for j in range(d.cols))
        for d in a2.delta
    ]

    def value(rows: tuple[tuple[int, ...], ...], pi, eta) -> int:
        return _dot(pi, _mv(rows, eta))

    top1, top2 = len(a1.chain) - 1, len(a2.chain) - 1
    m1 = tuple(
        tuple(top1 if i == j else 0 for j in range(a1.n)) for i in range(a1.n)
    )
    m2 = tuple(
        tuple(top2 if i == j else 0 for j in range(a2.n)) for i in range(a2.n)
    )
    if value(m1, pi1, eta1) != value(m2, pi2, eta2):
        return ()
    seen = {(m1, m2)}
    frontier: list[tuple[tuple, tuple, Word]] = [(m1, m2, ())]
    level = 0
    n_sym = len(a1.alphabet)
    while frontier and level < k:
        level += 1
        new: list[tuple[tuple, tuple, Word]] = []
        for r1, r2, w in frontier:
            for s in range(n_sym):
                nm1 = tuple(tuple(_dot(row, col) for col in cols1[s]) for row in r1)
                nm2 = tuple(tuple(_dot(row, col) for col in cols2[s]) for row in r2)
                key = (nm1, nm2)
                if key in seen:
                    continue
                word = w + (s,)
                if value(nm1, pi1, eta1) != value(nm2, pi2, eta2):
                    return word
                seen.add(key)
                if len(seen) > max_pairs:
                    raise BudgetExceededError(
                        len(seen), max_pairs, "word-matrix pairs in bounded check"
                    )
                new.append((nm1, nm2, word))
        frontier = new
    return None


def k_equivalent(
    a1: FuzzyAutomaton,
    a2: FuzzyAutomaton,
    k: int,
    *,
    max_pairs: int = DEFAULT_VECTOR_BUDGET,
) -> bool:
    """True iff the two automata give equal values to every word of length <= k."""
    return _pair_bfs(a1, a2, k, max_pairs) is None


def bounded_counterexample(
    a1: FuzzyAutomaton,
    a2: FuzzyAutomaton,
    k: int,
    *,
    max_pairs: int = DEFAULT_VECTOR_BUDGET,
) -> Word | None:
    """Least word (shortest, then lexicographic) of length <= k with differing values."""
    return _pair_bfs(a1, a2, k, max_pairs)


@dataclass(frozen=True)
class JointForm:
    """Block form of a pair of automata sharing chain and alphabet.

    m_sigma[s] is the direct sum of the two transition matrices for symbol s,
    eta_joint stacks the final columns, and the extended initial rows pad each
    pi with zeros over the other automaton's states.
    """

    m_sigma: tuple[FuzzyMatrix, ...]
    eta_joint: FuzzyMatrix
    pi1_ext: FuzzyMatrix
    pi2_ext: FuzzyMatrix


def build_joint_form(a1: FuzzyAutomaton, a2: FuzzyAutomaton) -> JointForm:
    _require_compatible(a1, a2)
    n1, n2 = a1.n, a2.n
    chain = a1.chain
    m_sigma = tuple(direct_sum(d1, d2) for d1, d2 in zip(a1.delta, a2.delta))
    eta_joint = FuzzyMatrix(chain, n1 + n2, 1, a1.eta.data + a2.eta.data)
    pi1_ext = FuzzyMatrix(chain, 1, n1 + n2, a1.pi.data + (0,) * n2)
    pi2_ext = FuzzyMatrix(chain, 1, n1 + n2, (0,) * n1 + a2.pi.data)
    return JointForm(m_sigma, eta_joint, pi1_ext, pi2_ext)


@dataclass(frozen=True)
class ReachableVectors:
    """Canonical set of suffix evaluation vectors, with the level it closed at.

    level is the least l with the same vectors after one more round of symbol
    applications; the vectors are all M(x) . eta for words up to that length.
    """

    level: int
    vectors: tuple[FuzzyMatrix, ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self) -> Iterator[FuzzyMatrix]:
        return iter(self.vectors)


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    stabilization_index: int
    counterexample: Word | None
    reached: ReachableVectors


def equivalent_fixpoint(
    a1: FuzzyAutomaton,
    a2: FuzzyAutomaton,
    *,
    max_vectors: int = DEFAULT_VECTOR_BUDGET,
) -> EquivalenceResult:
    """Decide language equality by saturating the joint suffix vectors.

    Round l holds M(x) . eta for all words of length <= l.  A vector new at
    round l+1 must come from applying one symbol matrix to a vector new at
    round l, so only the frontier is expanded.  Each vector remembers the
    first word that produced it (words grow by prepending, so symbol-major
    iteration over a witness-sorted frontier keeps witnesses length-lex
    minimal).  The verdict compares both extended initial rows against every
    vector; on failure the witness of the first offending vector in discovery
    order is the least distinguishing word overall.
    """
    form = build_joint_form(a1, a2)
    sym_rows = [m.as_row_tuples() for m in form.m_sigma]
    eta = tuple(form.eta_joint.data)
    pi1 = form.pi1_ext.data
    pi2 = form.pi2_ext.data

    witness: dict[tuple[int, ...], Word] = {eta: ()}
    frontier: list[tuple[int, ...]] = [eta]
    level = 0
    while True:
        new: list[tuple[int, ...]] = []
        for s, rows in enumerate(sym_rows):
            for v in frontier:
                w = _mv(rows, v)
                if w not in witness:
                    witness[w] = (s,) + witness[v]
                    new.append(w)
        if not new:
            break
        if len(witness) > max_vectors:
            raise BudgetExceededError(
                len(witness), max_vectors, "suffix evaluation vectors"
            )
        level += 1
        frontier = new

    counterexample: Word | None = None
    for v, w in witness.items():
        if _dot(pi1, v) != _dot(pi2, v):
            counterexample = w
            break

    chain = a1.chain
    total = a1.n + a2.n
    reached = ReachableVectors(
        level,
        tuple(FuzzyMatrix(chain, total, 1, v) for v in sorted(witness)),
    )
    return EquivalenceResult(counterexample is None, level, counterexample, reached)


def equivalent(
    a1: FuzzyAutomaton,
    a2: FuzzyAutomaton,
    *,
    max_vectors: int = DEFAULT_VECTOR_BUDGET,
) -> bool:
    return equivalent_fixpoint(a1, a2, max_vectors=max_vectors).equivalent


def _quick_equivalent(
    sym_rows: Sequence[Sequence[tuple[int, ...]]],
    eta: tuple[int, ...],
    pi1: tuple[int, ...],
    pi2: tuple[int, ...],
    max_vectors: int,
) -> bool:
    """Verdict-only fixpoint on raw ranks, aborting at the first mismatch.

    Same saturation as `equivalent_fixpoint` without witness bookkeeping; the
    hot path for candidate enumeration.
    """
    if _dot(pi1, eta) != _dot(pi2, eta):
        return False
    seen = {eta}
    frontier = [eta]
    while frontier:
        new = []
        for rows in sym_rows:
            for v in frontier:
                w = _mv(rows, v)
                if w not in seen:
                    if _dot(pi1, w) != _dot(pi2, w):
                        return False
                    seen.add(w)
                    new.append(w)
        if len(seen) > max_vectors:
            raise BudgetExceededError(
                len(seen), max_vectors, "suffix evaluation vectors"
            )
        frontier = new
    return True
