"""Systems of max-min polynomial equations over a chain.

A monomial is the min of a duplicate-free set of variables, a polynomial is
the max of monomials, and an equation constrains a polynomial to equal (or,
internally, to stay below) one chain value.  Coefficients are fixed at 1;
the solvers rely on that shape.

Two solvers are provided.  `solve_intervals` builds, per equation, the finite
family of interval vectors that covers the solutions, then intersects the
families across equations; the system is solvable iff some resulting vector
has no empty coordinate.  `solve_points` exploits that a solvable system is
already solvable using only values that appear on some right-hand side, and
searches that finite grid directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .chain import (
    Chain,
    ChainValue,
    Interval,
    IntervalVector,
    SolutionSet,
    cross_intersect,
)
from .errors import SizeExceededError

DEFAULT_SOLUTION_CAP = 1_000_000


class Relation(Enum):
    EQ = "="
    LE = "<="


@dataclass(frozen=True)
class Monomial:
    """Min over a non-empty set of variables, kept sorted and duplicate-free."""

    vars: tuple[int, ...]

    def __post_init__(self) -> None:
        vs = tuple(sorted(set(self.vars)))
        if not vs:
            raise ValueError("a monomial needs at least one variable")
        if vs[0] < 0:
            raise ValueError("variable indices must be non-negative")
        object.__setattr__(self, "vars", vs)

    @property
    def max_index(self) -> int:
        return self.vars[-1]


@dataclass(frozen=True)
class Polynomial:
    """Max over monomials; duplicates collapse, first occurrence order kept."""

    monomials: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        seen: dict[Monomial, None] = {}
        for m in self.monomials:
            seen.setdefault(m)
        if not seen:
            raise ValueError("a polynomial needs at least one monomial")
        object.__setattr__(self, "monomials", tuple(seen))

    @property
    def max_index(self) -> int:
        return max(m.max_index for m in self.monomials)


@dataclass(frozen=True)
class Equation:
    lhs: Polynomial
    relation: Relation
    rhs: ChainValue


@dataclass(frozen=True)
class EquationSystem:
    chain: Chain
    n_vars: int
    equations: tuple[Equation, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "equations", tuple(self.equations))
        if self.n_vars < 1:
            raise ValueError("a system needs at least one variable")
        if not self.equations:
            raise ValueError("a system needs at least one equation")
        for eq in self.equations:
            if eq.rhs.chain != self.chain:
                raise ValueError("right-hand side from a different chain")
            if eq.lhs.max_index >= self.n_vars:
                raise ValueError(
                    f"variable index {eq.lhs.max_index} outside {self.n_vars} variables"
                )


@dataclass(frozen=True)
class PointAssignment:
    """One chain value per variable."""

    values: tuple[ChainValue, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise ValueError("empty assignment")
        chain = values[0].chain
        for v in values:
            if v.chain != chain:
                raise ValueError("assignment mixes chains")

    def ranks(self) -> tuple[int, ...]:
        return tuple(v.rank for v in self.values)

    def labels(self) -> tuple[str, ...]:
        return tuple(v.label for v in self.values)


def eval_polynomial(p: Polynomial, assignment: PointAssignment) -> ChainValue:
    if p.max_index >= len(assignment.values):
        raise ValueError(
            f"variable index {p.max_index} outside assignment of {len(assignment.values)}"
        )
    ranks = assignment.ranks()
    best = max(min(ranks[i] for i in m.vars) for m in p.monomials)
    return assignment.values[0].chain[best]


def satisfies(system: EquationSystem, assignment: PointAssignment) -> bool:
    if len(assignment.values) != system.n_vars:
        raise ValueError(
            f"assignment has {len(assignment.values)} values, system has {system.n_vars} variables"
        )
    for eq in system.equations:
        value = eval_polynomial(eq.lhs, assignment)
        if eq.relation is Relation.EQ:
            if value.rank != eq.rhs.rank:
                return False
        else:
            if value.rank > eq.rhs.rank:
                return False
    return True


def rhs_values(system: EquationSystem) -> tuple[ChainValue, ...]:
    """Distinct right-hand-side values, ascending."""
    ranks = sorted({eq.rhs.rank for eq in system.equations})
    return tuple(system.chain[r] for r in ranks)


def _check_fit(m: Monomial, n_vars: int) -> None:
    if m.max_index >= n_vars:
        raise ValueError(f"variable index {m.max_index} outside {n_vars} variables")


def monomial_eq_solutions(m: Monomial, rhs: ChainValue, n_vars: int) -> SolutionSet:
    """Interval vectors covering the solutions of min(vars) = rhs.

    One vector per variable of the monomial: that variable is pinned to
    [rhs, rhs], the other monomial variables range over [rhs, 1], and
    variables absent from the monomial are unconstrained.  Deduplication can
    collapse the family (all patterns coincide when rhs is the top value).
    """
    _check_fit(m, n_vars)
    chain = rhs.chain
    full = Interval.full(chain)
    at_least = Interval.at_least(rhs)
    pinned = Interval.point(rhs)
    vectors = []
    for pin in m.vars:
        coords = [full] * n_vars
        for i in m.vars:
            coords[i] = at_least
        coords[pin] = pinned
        vectors.append(IntervalVector(tuple(coords)))
    return SolutionSet(n_vars, tuple(vectors))


def monomial_le_solutions(m: Monomial, rhs: ChainValue, n_vars: int) -> SolutionSet:
    """Interval vectors covering the solutions of min(vars) <= rhs.

    One vector per variable of the monomial: that variable is capped to
    [0, rhs], everything else is unconstrained.
    """
    _check_fit(m, n_vars)
    chain = rhs.chain
    full = Interval.full(chain)
    capped = Interval.at_most(rhs)
    vectors = []
    for pin in m.vars:
        coords = [full] * n_vars
        coords[pin] = capped
        vectors.append(IntervalVector(tuple(coords)))
    return SolutionSet(n_vars, tuple(vectors))


def polynomial_eq_solutions(p: Polynomial, rhs: ChainValue, n_vars: int) -> SolutionSet:
    """Interval vectors covering the solutions of max(monomials) = rhs.

    The max equals rhs exactly when some monomial equals rhs and every other
    stays at or below it, so the family is the union over that case split,
    each case being the coordinatewise intersection of its per-monomial
    families.  The result has at most k * n_vars**k vectors for k monomials.
    """
    vectors: list[IntervalVector] = []
    for i, m_eq in enumerate(p.monomials):
        case = monomial_eq_solutions(m_eq, rhs, n_vars)
        for j, m_le in enumerate(p.monomials):
            if j != i:
                case = cross_intersect(case, monomial_le_solutions(m_le, rhs, n_vars))
        vectors.extend(case.vectors)
    return SolutionSet(n_vars, tuple(vectors))


def _require_plain_eq(system: EquationSystem) -> None:
    for eq in system.equations:
        if eq.relation is not Relation.EQ:
            raise ValueError("solvers take systems of = equations only")


def solve_intervals(
    system: EquationSystem, *, max_vectors: int = DEFAULT_SOLUTION_CAP
) -> SolutionSet:
    """Interval cover of the whole system: the cross-intersection of the
    per-equation families.  Solvable iff some vector has no empty coordinate.

    Raises SizeExceededError once the running set passes max_vectors; the raw
    product can grow like (k * n**k)**m even though deduplication usually
    keeps it tiny.
    """
    _require_plain_eq(system)
    result: SolutionSet | None = None
    for eq in system.equations:
        family = polynomial_eq_solutions(eq.lhs, eq.rhs, system.n_vars)
        result = family if result is None else cross_intersect(result, family)
        if len(result) > max_vectors:
            raise SizeExceededError(len(result), max_vectors, "intersecting equation families")
    assert result is not None
    return result


def solve_points(
    system: EquationSystem, *, values: Sequence[ChainValue] | None = None
) -> PointAssignment | None:
    """First satisfying assignment over a finite value grid, else None.

    By default the grid is the set of distinct right-hand-side values, which
    is enough: a system solvable anywhere is solvable there.  Enumeration is
    lexicographic by rank with the first variable most significant, so the
    returned witness is deterministic.  A caller may widen the grid via
    `values`.
    """
    _require_plain_eq(system)
    if values is None:
        base = rhs_values(system)
    else:
        base = tuple(values)
        for v in base:
            if v.chain != system.chain:
                raise ValueError("grid value from a different chain")
    ranks = sorted({v.rank for v in base})
    chain = system.chain
    polys = [
        (tuple(m.vars for m in eq.lhs.monomials), eq.rhs.rank)
        for eq in system.equations
    ]
    for combo in itertools.product(ranks, repeat=system.n_vars):
        for monomials, target in polys:
            best = -1
            for vs in monomials:
                worst = min(combo[i] for i in vs)
                if worst > best:
                    best = worst
            if best != target:
                break
        else:
            return PointAssignment(tuple(chain[r] for r in combo))
    return None
