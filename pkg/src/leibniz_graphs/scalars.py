"""Exact scalars over the rationals or a prime field, plus row-echelon
linear algebra (spans, membership, rank).

No floating point anywhere.  Rational values are arbitrary-precision
Fraction instances, prime-field values are canonical residues 0..p-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DimensionMismatchError, FieldMismatchError

__all__ = [
    "FieldSpec",
    "Scalar",
    "Subspace",
    "rref",
    "scalar_arith",
    "unit_vector",
    "vec_add",
    "vec_is_zero",
    "vec_neg",
    "vec_scale",
    "vec_sub",
    "zero_vector",
]


def _is_prime(n: int) -> bool:
    # Deterministic Miller-Rabin; this witness set is exact below 3.3e24.
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The base field: the rationals when p is None, else GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"field modulus must be prime, got {self.p}")

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec(None)

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec(p)

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    def scalar(self, value) -> "Scalar":
        """Coerce an int, Fraction, or Scalar of this field into a Scalar."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(
                    f"scalar belongs to {value.field}, not {self}"
                )
            return value
        return Scalar(self, value)

    @property
    def zero(self) -> "Scalar":
        return _cached_scalar(self, 0)

    @property
    def one(self) -> "Scalar":
        return _cached_scalar(self, 1)

    def __str__(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"


class Scalar:
    """An exact element of a FieldSpec, kept in canonical form."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        if field.p is None:
            value = Fraction(value)
        else:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError(
                        f"non-integer value {value} in {field}"
                    )
                value = value.numerator
            value = int(value) % field.p
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, val):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            raise TypeError(f"expected Scalar, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(
                f"cannot combine {self.field} and {other.field} scalars"
            )
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return Scalar(self.field, self.value + other.value)

    def __sub__(self, other):
        other = self._coerce(other)
        return Scalar(self.field, self.value - other.value)

    def __mul__(self, other):
        other = self._coerce(other)
        return Scalar(self.field, self.value * other.value)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __neg__(self):
        return Scalar(self.field, -self.value)

    def inverse(self) -> "Scalar":
        if not self.value:
            raise ZeroDivisionError(f"inverse of zero in {self.field}")
        if self.field.p is None:
            return Scalar(self.field, 1 / Fraction(self.value))
        return Scalar(self.field, pow(self.value, -1, self.field.p))

    def __bool__(self) -> bool:
        return bool(self.value)

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.field}, {self.value})"


@lru_cache(maxsize=None)
def _cached_scalar(field: FieldSpec, value: int) -> Scalar:
    return Scalar(field, value)


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Apply one of 'add', 'sub', 'mul', 'div' to two same-field scalars."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown scalar operation {op!r}")


Vector = tuple  # tuple[Scalar, ...]; kept loose to avoid generic noise


@lru_cache(maxsize=None)
def zero_vector(field: FieldSpec, n: int) -> Vector:
    return (field.zero,) * n


@lru_cache(maxsize=None)
def unit_vector(field: FieldSpec, n: int, i: int) -> Vector:
    if not 0 <= i < n:
        raise DimensionMismatchError(f"unit index {i} out of range for dim {n}")
    return tuple(field.one if k == i else field.zero for k in range(n))


def vec_add(x: Vector, y: Vector) -> Vector:
    if len(x) != len(y):
        raise DimensionMismatchError(f"vector lengths {len(x)} != {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Vector, y: Vector) -> Vector:
    if len(x) != len(y):
        raise DimensionMismatchError(f"vector lengths {len(x)} != {len(y)}")
    return tuple(a - b for a, b in zip(x, y))


def vec_neg(x: Vector) -> Vector:
    return tuple(-a for a in x)


def vec_scale(c: Scalar, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def vec_is_zero(x: Vector) -> bool:
    return not any(x)


def rref(field: FieldSpec, rows: Iterable[Sequence[Scalar]], ambient_dim: int):
    """Reduced row echelon form over an exact field.

    Returns (rows, pivots): zero rows dropped, each pivot normalized to 1,
    pivot columns strictly increasing, and each pivot the only nonzero
    entry in its column.  The output is a canonical form of the row span.
    """
    work = []
    for row in rows:
        if len(row) != ambient_dim:
            raise DimensionMismatchError(
                f"row length {len(row)} != ambient dimension {ambient_dim}"
            )
        for entry in row:
            if not isinstance(entry, Scalar) or entry.field != field:
                raise FieldMismatchError("row entry not a scalar of the field")
        work.append(list(row))
    pivots = []
    r = 0
    for c in range(ambient_dim):
        pivot_row = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = work[r][c].inverse()
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """A subspace of field^ambient_dim held in canonical RREF form."""

    field: FieldSpec
    ambient_dim: int
    rows: tuple = ()
    pivots: tuple = dc_field(default=(), compare=False)

    def __post_init__(self):
        if len(self.pivots) != len(self.rows):
            # Rows are required to be in RREF: pivot = first nonzero entry.
            derived = []
            for row in self.rows:
                lead = next((c for c, x in enumerate(row) if x), None)
                if lead is None:
                    raise ValueError("zero row in RREF subspace")
                derived.append(lead)
            object.__setattr__(self, "pivots", tuple(derived))

    @classmethod
    def from_vectors(cls, field: FieldSpec, ambient_dim: int,
                     vectors: Iterable[Vector]) -> "Subspace":
        rows, pivots = rref(field, vectors, ambient_dim)
        return cls(field, ambient_dim, rows, pivots)

    @classmethod
    def from_basis_indices(cls, field: FieldSpec, ambient_dim: int,
                           indices: Iterable[int]) -> "Subspace":
        # Unit vectors at sorted distinct indices are already in RREF.
        idx = tuple(sorted(set(indices)))
        rows = tuple(unit_vector(field, ambient_dim, i) for i in idx)
        return cls(field, ambient_dim, rows, idx)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def is_zero(self) -> bool:
        return not self.rows

    def reduce(self, v: Vector) -> Vector:
        """Eliminate v against the RREF rows; zero result means membership."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError(
                f"vector length {len(v)} != ambient {self.ambient_dim}"
            )
        out = list(v)
        for row, c in zip(self.rows, self.pivots):
            f = out[c]
            if f:
                out = [a - f * b for a, b in zip(out, row)]
        return tuple(out)

    def contains(self, v: Vector) -> bool:
        return vec_is_zero(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatchError("ambient dimensions differ")
        return all(self.contains(row) for row in other.rows)

    def with_vectors(self, vectors: Iterable[Vector]) -> "Subspace":
        return Subspace.from_vectors(
            self.field, self.ambient_dim, list(self.rows) + list(vectors)
        )

    def basis_members(self) -> tuple:
        """Indices i whose unit vector lies in the subspace."""
        return tuple(
            i for i in range(self.ambient_dim)
            if self.contains(unit_vector(self.field, self.ambient_dim, i))
        )
