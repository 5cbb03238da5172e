"""Matrix model of the nilpotent and its centralizer inside gl_N.

Boxes of the diagram of lam are numbered 1..N along rows; the nilpotent e
has one Jordan block per row.  The centralizer of e has the basis

    e[i,j;r] = sum of matrix units E_{h,k} over boxes h in row i and
               k in row j with col(k) - col(h) = r,

one for each admissible label, i.e. shift(i,j) <= r < lam_j.  Structure
constants are extracted from honest matrix commutators, and the expansion
into the basis is verified unit by unit rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .composition import Composition, shift_matrix
from .linalg import Scalar, rational_rank
from .reports import Check, Report


class BasisIndex(NamedTuple):
    """Label (i, j, r): row pair and degree of a centralizer basis element."""

    i: int
    j: int
    r: int


@dataclass(frozen=True)
class Pyramid:
    """Row and column lookups for the boxes, numbered 1..N along rows."""

    lam: Composition
    _rows: tuple[int, ...]
    _cols: tuple[int, ...]

    def row(self, k: int) -> int:
        return self._rows[k - 1]

    def col(self, k: int) -> int:
        return self._cols[k - 1]

    def row_start(self, i: int) -> int:
        """Number of the first box in row i, 1-based."""
        return 1 + sum(self.lam.parts[: i - 1])


@lru_cache(maxsize=None)
def pyramid(lam: Composition) -> Pyramid:
    rows = []
    cols = []
    for i, width in enumerate(lam.parts, start=1):
        for c in range(1, width + 1):
            rows.append(i)
            cols.append(c)
    return Pyramid(lam, tuple(rows), tuple(cols))


class GlMatrix:
    """Dense square matrix over exact scalars."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(v for v in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        self.rows = rows

    @classmethod
    def zero(cls, n: int) -> "GlMatrix":
        return cls(((0,) * n,) * n)

    @classmethod
    def from_units(cls, n: int, units) -> "GlMatrix":
        """Sum of matrix units E_{h,k} for (h, k) in units, 1-based."""
        rows = [[0] * n for _ in range(n)]
        for h, k in units:
            rows[h - 1][k - 1] += 1
        return cls(rows)

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, h: int, k: int):
        """1-based access."""
        return self.rows[h - 1][k - 1]

    def units(self):
        """Yield (h, k, coefficient) for every nonzero entry, 1-based."""
        for h, row in enumerate(self.rows, start=1):
            for k, v in enumerate(row, start=1):
                if v:
                    yield h, k, v

    def is_zero(self) -> bool:
        return all(not v for row in self.rows for v in row)

    def __eq__(self, other):
        return isinstance(other, GlMatrix) and self.rows == other.rows

    def __add__(self, other):
        return GlMatrix(
            tuple(a + b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.rows, other.rows)
        )

    def __sub__(self, other):
        return GlMatrix(
            tuple(a - b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.rows, other.rows)
        )

    def __neg__(self):
        return GlMatrix(tuple(-a for a in row) for row in self.rows)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return GlMatrix(tuple(v * other for v in row) for row in self.rows)
        cols = tuple(zip(*other.rows))
        return GlMatrix(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.rows
        )

    def __rmul__(self, scalar):
        return self.__mul__(scalar)

    def __repr__(self):
        return "GlMatrix(" + ", ".join(str(list(r)) for r in self.rows) + ")"


def matrix_commutator(a: GlMatrix, b: GlMatrix) -> GlMatrix:
    return a * b - b * a


@lru_cache(maxsize=None)
def nilpotent_matrix(lam: Composition) -> GlMatrix:
    """The nilpotent with one Jordan block of size lam_i per row."""
    pyr = pyramid(lam)
    units = []
    for i, width in enumerate(lam.parts, start=1):
        start = pyr.row_start(i)
        units.extend((start + c, start + c + 1) for c in range(width - 1))
    return GlMatrix.from_units(lam.N, units)


def is_admissible(lam: Composition, idx: BasisIndex) -> bool:
    i, j, r = idx
    if not (1 <= i <= lam.n and 1 <= j <= lam.n):
        return False
    return shift_matrix(lam).entry(i, j) <= r < lam.part(j)


def unit_support(lam: Composition, idx: BasisIndex) -> tuple[tuple[int, int], ...]:
    """The matrix units (h, k) summed by e[i,j;r], in column order."""
    if not is_admissible(lam, idx):
        raise ValueError(f"inadmissible label {idx} for lambda={lam}")
    pyr = pyramid(lam)
    i, j, r = idx
    si, sj = pyr.row_start(i), pyr.row_start(j)
    count = min(lam.part(i), lam.part(j) - r)
    return tuple((si + c, sj + c + r) for c in range(count))


def basis_element(lam: Composition, idx: BasisIndex) -> GlMatrix:
    return GlMatrix.from_units(lam.N, unit_support(lam, idx))


@lru_cache(maxsize=None)
def basis_list(lam: Composition) -> tuple[BasisIndex, ...]:
    """All admissible labels in lexicographic (i, j, r) order."""
    s = shift_matrix(lam)
    out = []
    for i in range(1, lam.n + 1):
        for j in range(1, lam.n + 1):
            out.extend(
                BasisIndex(i, j, r) for r in range(s.entry(i, j), lam.part(j))
            )
    return tuple(out)


def expand_in_basis(lam: Composition, mat: GlMatrix) -> dict[BasisIndex, int]:
    """Write a matrix in the centralizer basis, verifying exactness.

    Distinct basis elements have disjoint unit supports, and (h, k)
    determines its label, so it suffices to group units by label and check
    each group is a constant multiple of the full support.
    """
    pyr = pyramid(lam)
    groups: dict[BasisIndex, dict[tuple[int, int], object]] = {}
    for h, k, c in mat.units():
        idx = BasisIndex(pyr.row(h), pyr.row(k), pyr.col(k) - pyr.col(h))
        groups.setdefault(idx, {})[(h, k)] = c
    out = {}
    for idx, units in groups.items():
        if not is_admissible(lam, idx):
            raise ValueError(f"matrix lies outside the centralizer: unit group {idx}")
        coeffs = set(units.values())
        if len(coeffs) != 1 or set(units) != set(unit_support(lam, idx)):
            raise ValueError(f"matrix lies outside the centralizer: ragged group {idx}")
        out[idx] = coeffs.pop()
    return out


@dataclass(frozen=True)
class StructureConstants:
    """Brackets of basis pairs: only pairs with nonzero bracket are stored."""

    lam: Composition
    table: dict

    def bracket(self, x: BasisIndex, y: BasisIndex) -> tuple:
        """[x, y] as a tuple of (BasisIndex, int) pairs, possibly empty."""
        return self.table.get((x, y), ())


@lru_cache(maxsize=None)
def structure_constants(lam: Composition) -> StructureConstants:
    basis = basis_list(lam)
    mats = {idx: basis_element(lam, idx) for idx in basis}
    table = {}
    for a, x in enumerate(basis):
        for y in basis[a + 1:]:
            expansion = expand_in_basis(lam, matrix_commutator(mats[x], mats[y]))
            if expansion:
                terms = tuple(sorted(expansion.items()))
                table[(x, y)] = terms
                table[(y, x)] = tuple((z, -c) for z, c in terms)
    return StructureConstants(lam, table)


def verify_centralizer(lam: Composition) -> Report:
    """Commutation with the nilpotent, dimension count, bracket grading."""
    basis = basis_list(lam)
    mats = [basis_element(lam, idx) for idx in basis]
    e = nilpotent_matrix(lam)

    commute = all(matrix_commutator(m, e).is_zero() for m in mats)
    expected_dim = sum(
        min(p, q) for p in lam.parts for q in lam.parts
    )
    flat = [[m.entry(h, k) for h in range(1, lam.N + 1) for k in range(1, lam.N + 1)]
            for m in mats]
    rank = rational_rank(flat)
    dim_ok = len(basis) == expected_dim and rank == expected_dim

    sc = structure_constants(lam)
    graded = all(
        z.r == x.r + y.r
        for (x, y), terms in sc.table.items()
        for z, _ in terms
    )

    checks = (
        Check("commutes_with_nilpotent", commute,
              f"{len(basis)} basis matrices against the Jordan nilpotent"),
        Check("dimension", dim_ok,
              f"count {len(basis)}, rank {rank}, expected {expected_dim}"),
        Check("bracket_grading", graded,
              "every bracket term has degree r + s"),
    )
    return Report(f"centralizer lambda={lam}", checks)
