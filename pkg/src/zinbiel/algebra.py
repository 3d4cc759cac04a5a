"""Structure-constant algebras and the Zinbiel identity checker.

An algebra of dimension d over a field F is the tensor c[i][j][k]: the product
of basis elements is e_i * e_j = sum_k c[i][j][k] e_k, extended bilinearly.
Every bracket below is this product: [x, y] means x * y.  The identity under
test is [[x,y],z] = [x,[y,z]] + [x,[z,y]] on all basis triples, which by
trilinearity settles it for all elements.

File format (shared with the CLI): a JSON object
    {"field": "Q" | {"p": prime}, "dim": d, "constants": [...], "label": ...}
where constants is a sparse list of {"i":.., "j":.., "k":.., "v":..} records,
v a reduced "a/b" string over Q or a reduced integer over GF(p), omitted
entries zero, and c[i][j][k] is the e_k-coefficient of e_i * e_j.  Emission is
canonical (entries sorted by (i,j,k), zeros dropped), so parse -> emit is a
byte-level fixpoint after one normalization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    AmbientMismatchError,
    FormatError,
    PreconditionError,
    TheoremViolationError,
)
from .fields import check_same_field, field_from_json, field_to_json
from .linalg import EchelonBasis, Subspace, subspace_contains, subspace_sum


class Algebra:
    """A finite-dimensional algebra given by structure constants.

    Immutable after construction; dimension 0 (the zero algebra on no basis
    vectors) is legal everywhere.
    """

    __slots__ = ("field", "dim", "label", "_rows")

    def __init__(self, field, dim: int, entries: Iterable = (), label: str | None = None):
        if not isinstance(dim, int) or dim < 0:
            raise FormatError(f"dimension must be a non-negative integer, got {dim!r}")
        self.field = field
        self.dim = dim
        self.label = label
        rows = [[{} for _ in range(dim)] for _ in range(dim)]
        for i, j, k, v in entries:
            for idx in (i, j, k):
                if not isinstance(idx, int) or isinstance(idx, bool) or not 0 <= idx < dim:
                    raise FormatError(
                        f"constant index ({i},{j},{k}) out of range for dim {dim}"
                    )
            v = field.validate(v)
            if k in rows[i][j]:
                raise FormatError(f"duplicate constant entry at ({i},{j},{k})")
            if v != 0:
                rows[i][j][k] = v
        self._rows = rows

    @classmethod
    def from_table(cls, field, table, label: str | None = None):
        """Build from a dense d x d x d nested list."""
        d = len(table)
        entries = [
            (i, j, k, table[i][j][k])
            for i in range(d)
            for j in range(d)
            for k in range(d)
        ]
        return cls(field, d, entries, label=label)

    @classmethod
    def zero_algebra(cls, field, dim: int, label: str | None = None):
        return cls(field, dim, (), label=label)

    def basis_product(self, i: int, j: int) -> dict:
        """Nonzero coordinates of e_i * e_j as {k: scalar}; do not mutate."""
        return self._rows[i][j]

    def constants(self):
        """All nonzero constants as (i, j, k, v), sorted."""
        out = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k in sorted(self._rows[i][j]):
                    out.append((i, j, k, self._rows[i][j][k]))
        return out

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.field == other.field
            and self.dim == other.dim
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash(
            (self.field, self.dim, tuple(tuple(sorted(r.items())) for row in self._rows for r in row))
        )

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"Algebra(dim {self.dim} over {self.field!r}{tag})"


@dataclass(frozen=True)
class Violation:
    """A basis triple where the Zinbiel identity fails, with both sides."""

    i: int
    j: int
    k: int
    lhs: tuple
    rhs: tuple


def _check_vector(a: Algebra, x: Sequence) -> list:
    v = [a.field.validate(c) for c in x]
    if len(v) != a.dim:
        raise AmbientMismatchError(f"vector length {len(v)} != algebra dim {a.dim}")
    return v


def _scale_into(field, acc: dict, coeff, row: dict):
    add, mul = field.add, field.mul
    for k, v in row.items():
        acc[k] = add(acc.get(k, 0), mul(coeff, v))


def _product_vec(a: Algebra, x: Sequence, y: Sequence) -> dict:
    """x * y as a sparse {index: scalar} dict; inputs dense, zeros skipped."""
    f = a.field
    rows = a._rows
    acc: dict = {}
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        row_i = rows[i]
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            row = row_i[j]
            if row:
                _scale_into(f, acc, f.mul(xi, yj), row)
    return {k: v for k, v in acc.items() if v != 0}

def _dict_product(a: Algebra, x: dict, y: dict) -> dict:
    f = a.field
    rows = a._rows
    acc: dict = {}
    for i, xi in x.items():
        row_i = rows[i]
        for j, yj in y.items():
            row = row_i[j]
            if row:
                _scale_into(f, acc, f.mul(xi, yj), row)
    return {k: v for k, v in acc.items() if v != 0}


def _densify(a: Algebra, sparse: dict) -> tuple:
    zero = a.field.zero()
    return tuple(sparse.get(k, zero) for k in range(a.dim))


def product_elements(a: Algebra, x: Sequence, y: Sequence) -> tuple:
    """Bilinear product of two coordinate vectors."""
    return _densify(a, _product_vec(a, _check_vector(a, x), _check_vector(a, y)))


def check_zinbiel(a: Algebra) -> list[Violation]:
    """All basis triples (i,j,k) where [[e_i,e_j],e_k] != [e_i,[e_j,e_k]] + [e_i,[e_k,e_j]].

    Empty means the identity holds on the whole algebra (trilinearity).
    """
    f = a.field
    rows = a._rows
    violations = []
    d = a.dim
    for i in range(d):
        row_i = rows[i]
        for j in range(d):
            row_ij = rows[i][j]
            for k in range(d):
                lhs: dict = {}
                for m, c in row_ij.items():
                    if rows[m][k]:
                        _scale_into(f, lhs, c, rows[m][k])
                rhs: dict = {}
                for m, c in rows[j][k].items():
                    if row_i[m]:
                        _scale_into(f, rhs, c, row_i[m])
                for m, c in rows[k][j].items():
                    if row_i[m]:
                        _scale_into(f, rhs, c, row_i[m])
                lhs = {m: v for m, v in lhs.items() if v != 0}
                rhs = {m: v for m, v in rhs.items() if v != 0}
                if lhs != rhs:
                    violations.append(
                        Violation(i, j, k, _densify(a, lhs), _densify(a, rhs))
                    )
    return violations


def is_zinbiel(a: Algebra) -> bool:
    return not check_zinbiel(a)


def _check_subspace(a: Algebra, u: Subspace):
    check_same_field(a.field, u.field)
    if u.ambient_dim != a.dim:
        raise AmbientMismatchError(
            f"subspace ambient dim {u.ambient_dim} != algebra dim {a.dim}"
        )


def product_subspaces(a: Algebra, u: Subspace, v: Subspace) -> Subspace:
    """[U, V]: the span of all products x * y with x in U, y in V."""
    _check_subspace(a, u)
    _check_subspace(a, v)
    basis = EchelonBasis(a.field, a.dim)
    for x in u.rows:
        for y in v.rows:
            prod = _product_vec(a, x, y)
            if prod:
                basis.insert(_densify(a, prod))
            if basis.rank == a.dim:
                return basis.subspace()
    return basis.subspace()


def is_right_ideal(a: Algebra, u: Subspace) -> bool:
    """[U, Z] contained in U."""
    _check_subspace(a, u)
    return subspace_contains(u, product_subspaces(a, u, a.full_space()))


def is_left_ideal(a: Algebra, u: Subspace) -> bool:
    """[Z, U] contained in U."""
    _check_subspace(a, u)
    return subspace_contains(u, product_subspaces(a, a.full_space(), u))


def is_ideal(a: Algebra, u: Subspace) -> bool:
    return is_right_ideal(a, u) and is_left_ideal(a, u)


def ideal_closure(a: Algebra, u: Subspace) -> Subspace:
    """Smallest ideal containing u: least fixed point of U -> U + [Z,U] + [U,Z]."""
    _check_subspace(a, u)
    z = a.full_space()
    current = u
    while True:
        grown = subspace_sum(
            current,
            subspace_sum(
                product_subspaces(a, z, current), product_subspaces(a, current, z)
            ),
        )
        if grown == current:
            return current
        current = grown


def left_multiplication_ideal(a: Algebra, b: Subspace) -> Subspace:
    """[Z, B] for a right ideal B; the result is checked to be an ideal.

    For Zinbiel input the check cannot fail; a failure is surfaced as a
    TheoremViolationError carrying the offending subspace.
    """
    _check_subspace(a, b)
    if not is_right_ideal(a, b):
        raise PreconditionError("left_multiplication_ideal requires a right ideal")
    result = product_subspaces(a, a.full_space(), b)
    if not is_ideal(a, result):
        raise TheoremViolationError(
            "[Z,B] is not an ideal; input cannot satisfy the Zinbiel identity",
            payload={"algebra": a.label, "right_ideal": b, "product": result},
        )
    return result


@dataclass(frozen=True)
class QuotientMap:
    """Linear data of the projection Z -> Z/I for an ideal I.

    Coset representatives are the standard unit vectors at the non-pivot
    columns of I's RREF basis, so the projection of v is: reduce v against
    I's basis, then read off the non-pivot coordinates.
    """

    ideal: Subspace
    rep_cols: tuple

    def project_vector(self, v: Sequence) -> tuple:
        f = self.ideal.field
        x = [f.validate(c) for c in v]
        if len(x) != self.ideal.ambient_dim:
            raise AmbientMismatchError("vector length mismatch in projection")
        for pivot, row in zip(self.ideal.pivots, self.ideal.rows):
            c = x[pivot]
            if c != 0:
                x = [f.sub(xc, f.mul(c, rc)) for xc, rc in zip(x, row)]
        return tuple(x[c] for c in self.rep_cols)

    def lift_vector(self, w: Sequence) -> tuple:
        f = self.ideal.field
        zero = f.zero()
        out = [zero] * self.ideal.ambient_dim
        for col, wc in zip(self.rep_cols, w):
            out[col] = f.validate(wc)
        return tuple(out)

    def pullback(self, s: Subspace) -> Subspace:
        """Preimage of a quotient subspace: lifted basis plus the ideal."""
        vectors = [self.lift_vector(row) for row in s.rows]
        vectors.extend(self.ideal.rows)
        return Subspace.from_vectors(
            self.ideal.field, self.ideal.ambient_dim, vectors
        )


def quotient_algebra(a: Algebra, i: Subspace) -> tuple[Algebra, QuotientMap]:
    """The algebra Z/I with constants induced on canonical representatives."""
    _check_subspace(a, i)
    if not is_ideal(a, i):
        raise PreconditionError("quotient requires a two-sided ideal")
    pivot_set = set(i.pivots)
    rep_cols = tuple(c for c in range(a.dim) if c not in pivot_set)
    proj = QuotientMap(ideal=i, rep_cols=rep_cols)
    entries = []
    for qi, ci in enumerate(rep_cols):
        for qj, cj in enumerate(rep_cols):
            image = proj.project_vector(_densify(a, a.basis_product(ci, cj)))
            for k, v in enumerate(image):
                if v != 0:
                    entries.append((qi, qj, k, v))
    label = f"{a.label}/I" if a.label else None
    return Algebra(a.field, len(rep_cols), entries, label=label), proj


def direct_sum(a: Algebra, b: Algebra) -> Algebra:
    """Block-diagonal sum; cross-block products are zero."""
    check_same_field(a.field, b.field)
    entries = list(a.constants())
    off = a.dim
    entries.extend((i + off, j + off, k + off, v) for i, j, k, v in b.constants())
    label = None
    if a.label and b.label:
        label = f"{a.label}(+){b.label}"
    return Algebra(a.field, a.dim + b.dim, entries, label=label)


# ---------------------------------------------------------------------------
# Algebra file format


def algebra_to_json(a: Algebra) -> dict:
    f = a.field
    constants = [
        {"i": i, "j": j, "k": k, "v": f.format_literal(v)}
        for i, j, k, v in a.constants()
    ]
    doc = {"field": field_to_json(f), "dim": a.dim, "constants": constants}
    if a.label is not None:
        doc["label"] = a.label
    return doc


def algebra_json_str(a: Algebra, compact: bool = False) -> str:
    doc = algebra_to_json(a)
    if compact:
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def algebra_from_json(doc) -> Algebra:
    if not isinstance(doc, dict):
        raise FormatError("algebra file must contain a JSON object")
    unknown = set(doc) - {"field", "dim", "constants", "label"}
    if unknown:
        raise FormatError(f"unknown keys in algebra file: {sorted(unknown)}")
    for key in ("field", "dim", "constants"):
        if key not in doc:
            raise FormatError(f"algebra file missing required key {key!r}")
    field = field_from_json(doc["field"])
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise FormatError(f"dim must be a non-negative integer, got {dim!r}")
    raw = doc["constants"]
    if not isinstance(raw, list):
        raise FormatError("constants must be a list of {i,j,k,v} records")
    entries = []
    for rec in raw:
        if not isinstance(rec, dict) or set(rec) != {"i", "j", "k", "v"}:
            raise FormatError(f"constant record must have keys i,j,k,v: {rec!r}")
        entries.append((rec["i"], rec["j"], rec["k"], field.parse_literal(rec["v"])))
    label = doc.get("label")
    if label is not None and not isinstance(label, str):
        raise FormatError(f"label must be a string, got {label!r}")
    return Algebra(field, dim, entries, label=label)


def parse_algebra_str(text: str) -> Algebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc}") from exc
    return algebra_from_json(doc)


def parse_algebra_file(path) -> Algebra:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parse_algebra_str(text)


def emit_algebra_file(a: Algebra, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(algebra_json_str(a))
