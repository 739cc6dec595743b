"""Matrices over a chain with max-min composition and block direct sum.

Entries are stored as int ranks into the owning chain, row-major.  All types
are immutable; every operation returns a fresh matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .chain import Chain, ChainValue


@dataclass(frozen=True)
class FuzzyMatrix:
    chain: Chain
    rows: int
    cols: int
    data: tuple[int, ...]  # entry ranks, row-major

    def __post_init__(self) -> None:
        data = tuple(self.data)
        object.__setattr__(self, "data", data)
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"degenerate shape {self.rows}x{self.cols}")
        if len(data) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries,"
                f" got {len(data)}"
            )
        top = len(self.chain) - 1
        for r in data:
            if not 0 <= r <= top:
                raise ValueError(f"entry rank {r} outside chain")

    @classmethod
    def identity(cls, chain: Chain, n: int) -> "FuzzyMatrix":
        """1 on the diagonal, 0 elsewhere: the unit of max-min composition."""
        top = len(chain) - 1
        data = tuple(top if i == j else 0 for i in range(n) for j in range(n))
        return cls(chain, n, n, data)

    @classmethod
    def zeros(cls, chain: Chain, rows: int, cols: int) -> "FuzzyMatrix":
        return cls(chain, rows, cols, (0,) * (rows * cols))

    @classmethod
    def filled(cls, chain: Chain, rows: int, cols: int, value: ChainValue) -> "FuzzyMatrix":
        if value.chain != chain:
            raise ValueError("fill value from a different chain")
        return cls(chain, rows, cols, (value.rank,) * (rows * cols))

    @classmethod
    def from_values(cls, grid: Sequence[Sequence[ChainValue]]) -> "FuzzyMatrix":
        if not grid or not grid[0]:
            raise ValueError("empty grid")
        chain = grid[0][0].chain
        cols = len(grid[0])
        data = []
        for row in grid:
            if len(row) != cols:
                raise ValueError("ragged grid")
            for v in row:
                if v.chain != chain:
                    raise ValueError("grid mixes chains")
                data.append(v.rank)
        return cls(chain, len(grid), cols, tuple(data))

    @classmethod
    def from_labels(cls, chain: Chain, grid: Sequence[Sequence[str]]) -> "FuzzyMatrix":
        if not grid or not grid[0]:
            raise ValueError("empty grid")
        cols = len(grid[0])
        data = []
        for row in grid:
            if len(row) != cols:
                raise ValueError("ragged grid")
            data.extend(chain.rank_of(label) for label in row)
        return cls(chain, len(grid), cols, tuple(data))

    def rank_at(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside {self.rows}x{self.cols}")
        return self.data[i * self.cols + j]

    def entry(self, i: int, j: int) -> ChainValue:
        return ChainValue(self.chain, self.rank_at(i, j))

    def scalar(self) -> ChainValue:
        if (self.rows, self.cols) != (1, 1):
            raise ValueError("scalar() needs a 1x1 matrix")
        return ChainValue(self.chain, self.data[0])

    def row_ranks(self, i: int) -> tuple[int, ...]:
        if not 0 <= i < self.rows:
            raise IndexError(f"row {i} outside {self.rows}x{self.cols}")
        return self.data[i * self.cols : (i + 1) * self.cols]

    def as_row_tuples(self) -> tuple[tuple[int, ...], ...]:
        """Row-major view as rank tuples; the low-level form the kernels use."""
        c = self.cols
        return tuple(self.data[i * c : (i + 1) * c] for i in range(self.rows))

    def entries(self) -> tuple[ChainValue, ...]:
        return tuple(ChainValue(self.chain, r) for r in self.data)

    def entrywise_le(self, other: "FuzzyMatrix") -> bool:
        _require_conformable(self, other, same_shape=True)
        return all(a <= b for a, b in zip(self.data, other.data))

    def __str__(self) -> str:
        label = self.chain.label
        return "[" + ", ".join(
            "[" + ", ".join(label(r) for r in self.row_ranks(i)) + "]"
            for i in range(self.rows)
        ) + "]"


def _require_conformable(a: FuzzyMatrix, b: FuzzyMatrix, *, same_shape: bool = False) -> None:
    if a.chain != b.chain:
        raise ValueError("matrices live on different chains")
    if same_shape:
        if (a.rows, a.cols) != (b.rows, b.cols):
            raise ValueError(f"shape mismatch: {a.rows}x{a.cols} vs {b.rows}x{b.cols}")
    elif a.cols != b.rows:
        raise ValueError(
            f"inner dimensions differ: {a.rows}x{a.cols} times {b.rows}x{b.cols}"
        )


def maxmin_product(a: FuzzyMatrix, b: FuzzyMatrix) -> FuzzyMatrix:
    """Composition where + is max and * is min: out[i][j] = max_k min(a[i][k], b[k][j])."""
    _require_conformable(a, b)
    b_cols = tuple(
        tuple(b.data[k * b.cols + j] for k in range(b.rows)) for j in range(b.cols)
    )
    data = []
    for i in range(a.rows):
        row = a.data[i * a.cols : (i + 1) * a.cols]
        for col in b_cols:
            data.append(max(map(min, row, col)))
    return FuzzyMatrix(a.chain, a.rows, b.cols, tuple(data))


def direct_sum(a: FuzzyMatrix, b: FuzzyMatrix) -> FuzzyMatrix:
    """Block-diagonal sum; the off-diagonal blocks are all 0."""
    if a.chain != b.chain:
        raise ValueError("matrices live on different chains")
    data = []
    right = (0,) * b.cols
    left = (0,) * a.cols
    for i in range(a.rows):
        data.extend(a.data[i * a.cols : (i + 1) * a.cols] + right)
    for i in range(b.rows):
        data.extend(left + b.data[i * b.cols : (i + 1) * b.cols])
    return FuzzyMatrix(a.chain, a.rows + b.rows, a.cols + b.cols, tuple(data))


def fold_maxmin_product(
    matrices: Iterable[FuzzyMatrix],
    *,
    chain: Chain | None = None,
    dim: int | None = None,
) -> FuzzyMatrix:
    """Left-to-right max-min product of a sequence.

    An empty sequence has no shape of its own, so chain and dim must be given
    and the result is the identity.
    """
    result: FuzzyMatrix | None = None
    for m in matrices:
        result = m if result is None else maxmin_product(result, m)
    if result is None:
        if chain is None or dim is None:
            raise ValueError("empty product needs an explicit chain and dimension")
        return FuzzyMatrix.identity(chain, dim)
    return result
