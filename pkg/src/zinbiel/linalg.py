"""Exact matrices and canonical subspaces of F^d.

Every subspace is represented by the reduced row echelon form (RREF) of a row
basis: rows are nonzero, pivot columns strictly increase, each pivot entry is
1 and is the only nonzero entry in its column.  RREF is unique per row space,
so subspace equality, hashing and containment are exact structural checks.
Subspaces are immutable and hashable; all operations return new values.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import AmbientMismatchError, FieldMismatchError, OracleScopeError
from .fields import PrimeField, Rationals, check_same_field


class Matrix:
    """Immutable rectangular grid of scalars over a single field."""

    __slots__ = ("field", "rows")

    def __init__(self, field, rows: Iterable[Sequence]):
        validated = tuple(tuple(field.validate(x) for x in row) for row in rows)
        if validated:
            width = len(validated[0])
            if any(len(row) != width for row in validated):
                raise AmbientMismatchError("matrix rows have unequal lengths")
        self.field = field
        self.rows = validated

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return f"Matrix({self.field!r}, {[list(r) for r in self.rows]})"


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form of m and its rank.

    The output has the shape of m, with the zero rows collected at the bottom;
    it is the unique RREF of m's row space padded back to m's row count.
    """
    f = m.field
    work = [list(row) for row in m.rows]
    nrows = len(work)
    ncols = m.ncols
    piv_row = 0
    for col in range(ncols):
        pivot = None
        for r in range(piv_row, nrows):
            if work[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        work[piv_row], work[pivot] = work[pivot], work[piv_row]
        inv = f.inv(work[piv_row][col])
        if inv != f.one():
            work[piv_row] = [f.mul(inv, x) for x in work[piv_row]]
        for r in range(nrows):
            if r == piv_row:
                continue
            c = work[r][col]
            if c != 0:
                row_p = work[piv_row]
                work[r] = [f.sub(x, f.mul(c, y)) for x, y in zip(work[r], row_p)]
        piv_row += 1
        if piv_row == nrows:
            break
    return Matrix(f, work), piv_row


class EchelonBasis:
    """Incremental RREF builder; the workhorse behind all subspace operations."""

    def __init__(self, field, ambient_dim: int):
        self.field = field
        self.ambient_dim = ambient_dim
        self._rows: list[list] = []
        self._pivots: list[int] = []

    def insert(self, vec: Sequence) -> bool:
        """Reduce vec against the current basis; returns True if the rank grew."""
        f = self.field
        v = list(vec)
        if len(v) != self.ambient_dim:
            raise AmbientMismatchError(
                f"vector length {len(v)} != ambient dim {self.ambient_dim}"
            )
        for pivot, row in zip(self._pivots, self._rows):
            c = v[pivot]
            if c != 0:
                v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
        pivot = next((i for i, x in enumerate(v) if x != 0), None)
        if pivot is None:
            return False
        inv = f.inv(v[pivot])
        if inv != f.one():
            v = [f.mul(inv, x) for x in v]
        for i, row in enumerate(self._rows):
            c = row[pivot]
            if c != 0:
                self._rows[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(row, v)]
        at = next(
            (i for i, p in enumerate(self._pivots) if p > pivot), len(self._pivots)
        )
        self._pivots.insert(at, pivot)
        self._rows.insert(at, v)
        return True

    def insert_all(self, vecs: Iterable[Sequence]):
        for v in vecs:
            self.insert(v)

    @property
    def rank(self):
        return len(self._rows)

    def reduce(self, vec: Sequence) -> list:
        """Remainder of vec after elimination against the basis (not inserted)."""
        f = self.field
        v = list(vec)
        for pivot, row in zip(self._pivots, self._rows):
            c = v[pivot]
            if c != 0:
                v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
        return v

    def subspace(self) -> Subspace:
        return Subspace(
            self.field,
            self.ambient_dim,
            tuple(tuple(r) for r in self._rows),
            tuple(self._pivots),
        )


class Subspace:
    """A subspace of F^d held as the canonical RREF of a row basis.

    Do not call the constructor with raw rows; use from_vectors / zero / full,
    which canonicalize.  Equality and hashing are structural, which by RREF
    uniqueness coincides with equality of the underlying sets.
    """

    __slots__ = ("field", "ambient_dim", "rows", "pivots")

    def __init__(self, field, ambient_dim, rows, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.rows = rows
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, field, ambient_dim: int, vectors: Iterable[Sequence]):
        basis = EchelonBasis(field, ambient_dim)
        for v in vectors:
            basis.insert([field.validate(x) for x in v])
        return basis.subspace()

    @classmethod
    def zero(cls, field, ambient_dim: int):
        return cls(field, ambient_dim, (), ())

    @classmethod
    def full(cls, field, ambient_dim: int):
        one, zero = field.one(), field.zero()
        rows = tuple(
            tuple(one if i == j else zero for j in range(ambient_dim))
            for i in range(ambient_dim)
        )
        return cls(field, ambient_dim, rows, tuple(range(ambient_dim)))

    @property
    def dim(self):
        return len(self.rows)

    @property
    def basis(self) -> Matrix:
        return Matrix(self.field, self.rows)

    def is_zero(self):
        return not self.rows

    def contains_vector(self, vec: Sequence) -> bool:
        f = self.field
        v = [f.validate(x) for x in vec]
        if len(v) != self.ambient_dim:
            raise AmbientMismatchError(
                f"vector length {len(v)} != ambient dim {self.ambient_dim}"
            )
        for pivot, row in zip(self.pivots, self.rows):
            c = v[pivot]
            if c != 0:
                v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
        return all(x == 0 for x in v)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.rows))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.field!r}^{self.ambient_dim})"


def _check_compatible(u: Subspace, v: Subspace):
    check_same_field(u.field, v.field)
    if u.ambient_dim != v.ambient_dim:
        raise AmbientMismatchError(
            f"ambient dims differ: {u.ambient_dim} vs {v.ambient_dim}"
        )


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    """Smallest subspace containing both u and v."""
    _check_compatible(u, v)
    basis = EchelonBasis(u.field, u.ambient_dim)
    basis.insert_all(u.rows)
    basis.insert_all(v.rows)
    return basis.subspace()


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """Largest subspace contained in both u and v (Zassenhaus block trick)."""
    _check_compatible(u, v)
    f = u.field
    d = u.ambient_dim
    zero = f.zero()
    stacked = [list(row) + list(row) for row in u.rows]
    stacked += [list(row) + [zero] * d for row in v.rows]
    reduced, _ = rref(Matrix(f, stacked))
    members = [
        row[d:] for row in reduced.rows if all(x == 0 for x in row[:d]) and any(row[d:])
    ]
    return Subspace.from_vectors(f, d, members)


def subspace_contains(u: Subspace, v) -> bool:
    """True iff v (a vector or a Subspace) lies inside u."""
    if isinstance(v, Subspace):
        _check_compatible(u, v)
        return all(u.contains_vector(row) for row in v.rows)
    return u.contains_vector(v)


def enumerate_subspaces(d: int, q: int, k: int | None = None):
    """Yield each subspace of GF(q)^d exactly once, in a deterministic order.

    Order: by dimension (when k is None), then lexicographically on the pivot
    pattern, then lexicographically on the free entries scanned row-major.
    Restricted to prime q and d <= 6; the stream sizes are Gaussian binomials.
    """
    if d < 0 or d > 6:
        raise OracleScopeError(f"subspace enumeration limited to d <= 6, got {d}")
    if isinstance(q, Rationals):
        raise OracleScopeError("subspace enumeration unsupported over the rationals")
    if isinstance(q, PrimeField):
        field = q
    else:
        try:
            field = PrimeField(q)
        except Exception as exc:
            raise OracleScopeError(
                f"subspace enumeration needs a prime field: {exc}"
            ) from exc
    dims = range(d + 1) if k is None else [k]
    for kk in dims:
        if kk < 0 or kk > d:
            return
        yield from _enumerate_fixed_dim(field, d, kk)


def _enumerate_fixed_dim(field, d, k):
    if k == 0:
        yield Subspace.zero(field, d)
        return
    q = field.p
    for pivots in combinations(range(d), k):
        pivot_set = set(pivots)
        free_positions = [
            (r, c)
            for r in range(k)
            for c in range(pivots[r] + 1, d)
            if c not in pivot_set
        ]
        for assignment in product(range(q), repeat=len(free_positions)):
            rows = [[0] * d for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), val in zip(free_positions, assignment):
                rows[r][c] = val
            yield Subspace(
                field, d, tuple(tuple(r) for r in rows), tuple(pivots)
            )
