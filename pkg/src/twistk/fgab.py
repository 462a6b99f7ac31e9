"""Finitely generated abelian groups and integer matrices.

Everything here works over Python integers, so invariant factors never
overflow.  Groups are kept in invariant-factor normal form

    Z^r + Z_{d_1} + ... + Z_{d_t},   d_1 | d_2 | ... | d_t,  d_i >= 2

which makes equality of :class:`AbelianGroup` values the same thing as
abstract isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "AbelianGroup",
    "IntMatrix",
    "smith_normal_form",
    "kernel_cokernel",
    "direct_sum",
    "is_isomorphic",
    "ZERO",
    "Z",
    "cyclic",
]


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int | None = None,
                 cols: int | None = None) -> IntMatrix:
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        m = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            m[i][i] = v
        return cls.from_rows(m, cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def tolist(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        a, b = self.tolist(), other.tolist()
        out = [[sum(a[i][t] * b[t][j] for t in range(self.cols)) for j in range(other.cols)]
               for i in range(self.rows)]
        return IntMatrix.from_rows(out, other.cols)

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows([list(col) for col in zip(*self.tolist())], self.rows) \
            if self.rows else IntMatrix.zeros(self.cols, 0)

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def is_diagonal(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)

    def diagonal_entries(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]


def smith_normal_form(A: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, D, V)`` with ``U @ A @ V == D`` in Smith normal form.

    U and V are unimodular, D is diagonal with non-negative entries and
    each diagonal entry divides the next.  The pivot is always a nonzero
    entry of least absolute value in the remaining block.
    """
    m, n = A.rows, A.cols
    a = A.tolist()
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            # pivot row and column are clear; enforce divisibility on the rest
            bad = next((i for i in range(t + 1, m)
                        if any(a[i][j] % p for j in range(t + 1, n))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < m and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]

    return IntMatrix.from_rows(U, m), IntMatrix.from_rows(a, n), IntMatrix.from_rows(V, n)


@dataclass(frozen=True, order=True)
class AbelianGroup:
    """``Z^rank`` plus cyclic torsion summands in invariant-factor order."""

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        if any(d < 2 for d in self.torsion):
            raise ValueError(f"torsion coefficients must be >= 2: {self.torsion}")
        for d, d_next in zip(self.torsion, self.torsion[1:]):
            if d_next % d:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")

    @classmethod
    def from_factors(cls, rank: int = 0, factors: Iterable[int] = ()) -> AbelianGroup:
        """Normalize ``Z^rank + sum Z_{f}``; ``f = 0`` means Z, ``|f| = 1`` is dropped."""
        factors = [abs(int(f)) for f in factors]
        rank += sum(1 for f in factors if f == 0)
        factors = [f for f in factors if f > 1]
        _, D, _ = smith_normal_form(IntMatrix.diagonal(factors))
        return cls(rank, tuple(d for d in D.diagonal_entries() if d > 1))

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def is_free(self) -> bool:
        return not self.torsion

    @property
    def order(self) -> int | None:
        """Number of elements, or None when the group is infinite."""
        if self.rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def free_part(self) -> AbelianGroup:
        return AbelianGroup(self.rank)

    def __add__(self, other: AbelianGroup) -> AbelianGroup:
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return direct_sum([self, other])

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z_{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    @classmethod
    def from_dict(cls, doc: dict) -> AbelianGroup:
        return cls.from_factors(int(doc["rank"]), doc.get("torsion", ()))


ZERO = AbelianGroup()
Z = AbelianGroup(1)


def cyclic(order: int) -> AbelianGroup:
    """Z/order; ``cyclic(0)`` is Z and ``cyclic(±1)`` is the zero group."""
    return AbelianGroup.from_factors(0, [order])


def kernel_cokernel(f: IntMatrix) -> tuple[AbelianGroup, AbelianGroup]:
    """Kernel and cokernel of ``f: Z^cols -> Z^rows``."""
    _, D, _ = smith_normal_form(f)
    diag = [d for d in D.diagonal_entries() if d]
    r = len(diag)
    ker = AbelianGroup(f.cols - r)
    coker = AbelianGroup(f.rows - r, tuple(d for d in diag if d > 1))
    return ker, coker


def direct_sum(groups: Iterable[AbelianGroup]) -> AbelianGroup:
    groups = list(groups)
    return AbelianGroup.from_factors(
        sum(g.rank for g in groups),
        [d for g in groups for d in g.torsion],
    )


def is_isomorphic(A: AbelianGroup, B: AbelianGroup) -> bool:
    return A.rank == B.rank and A.torsion == B.torsion
