"""Finite-dimensional Leibniz algebras given by exact structure constants.

Conventions used throughout:

* the bracket is bilinear and satisfies the (right) Leibniz identity
      [[y, z], x] = [[y, x], z] + [y, [z, x]];
* ``tensor[i][j]`` holds the coordinates of ``[v_i, v_j]``, so
  ``[v_i, v_j] = sum_k tensor[i][j][k] * v_k``;
* the kernel ideal is the smallest ideal containing every square
  ``[x, x]``; the bracket kills it on the right: ``[L, kernel] = 0``;
* a multiplicative basis has every basis product equal to a scalar
  multiple of a single basis vector, and respects the kernel split:
  products out of a kernel vector stay in the kernel part, products
  into a kernel vector vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    DimensionMismatchError,
    FieldMismatchError,
    InvalidSplitError,
    NotLeibnizError,
    NotMonomialError,
    ShapeViolationError,
)
from .scalars import (
    FieldSpec,
    Scalar,
    Subspace,
    unit_vector,
    vec_add,
    vec_is_zero,
    zero_vector,
)

__all__ = [
    "BasisSplit",
    "LeibnizAlgebra",
    "MultiplicativeTable",
    "check_leibniz",
    "ideal_closure",
    "leibniz_kernel",
    "product",
    "to_multiplicative",
    "validate_split",
    "verify_right_annihilation",
]


class LeibnizAlgebra:
    """An algebra over an exact field, defined by its structure tensor.

    By default the constructor verifies the Leibniz identity on all basis
    triples and raises NotLeibnizError on failure.  Pass ``check=False``
    to hold structure constants that are not yet known to satisfy it
    (validators and generators need this); such an instance reports
    ``identity_verified == False`` until a full check has run.
    """

    __slots__ = ("field", "labels", "tensor", "identity_verified")

    def __init__(self, field: FieldSpec, labels: Sequence[str],
                 tensor, *, check: bool = True):
        labels = tuple(str(x) for x in labels)
        if len(set(labels)) != len(labels):
            raise ValueError("basis labels must be unique")
        n = len(labels)
        if len(tensor) != n:
            raise DimensionMismatchError("tensor must be n x n x n")
        rows = []
        for i in range(n):
            if len(tensor[i]) != n:
                raise DimensionMismatchError(f"tensor row {i} has wrong arity")
            row = []
            for j in range(n):
                v = tuple(tensor[i][j])
                if len(v) != n:
                    raise DimensionMismatchError(
                        f"tensor entry ({i},{j}) has length {len(v)} != {n}"
                    )
                for s in v:
                    if not isinstance(s, Scalar) or s.field != field:
                        raise FieldMismatchError(
                            f"tensor entry ({i},{j}) holds foreign scalars"
                        )
                row.append(v)
            rows.append(tuple(row))
        self.field = field
        self.labels = labels
        self.tensor = tuple(rows)
        self.identity_verified = False
        if check:
            violations = check_leibniz(self)
            if violations:
                raise NotLeibnizError(violations)
            self.identity_verified = True

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no basis vector labelled {label!r}") from None

    def unit(self, i: int):
        return unit_vector(self.field, self.dim, i)

    def __eq__(self, other):
        if not isinstance(other, LeibnizAlgebra):
            return NotImplemented
        return (self.field == other.field and self.labels == other.labels
                and self.tensor == other.tensor)

    def __hash__(self):
        return hash((self.field, self.labels, self.tensor))

    def __repr__(self):
        return (f"LeibnizAlgebra({self.field}, dim={self.dim}, "
                f"labels={list(self.labels)})")

    @classmethod
    def from_products(cls, field: FieldSpec, labels: Sequence[str],
                      products: Mapping, *, check: bool = True
                      ) -> "LeibnizAlgebra":
        """Build from a sparse map {(left, right): (out, coeff)} on labels.

        Coefficients may be ints, Fractions, or Scalars; unlisted products
        are zero.  A coefficient that vanishes in the field is rejected so
        that characteristic problems surface here, not later.
        """
        labels = tuple(str(x) for x in labels)
        index = {lab: i for i, lab in enumerate(labels)}
        n = len(labels)
        tensor = [[list(zero_vector(field, n)) for _ in range(n)]
                  for _ in range(n)]
        for (left, right), (out, coeff) in products.items():
            i, j, k = index[left], index[right], index[out]
            c = field.scalar(coeff)
            if not c:
                raise ValueError(
                    f"product [{left},{right}] has coefficient {coeff}, "
                    f"which is zero in {field}"
                )
            tensor[i][j][k] = tensor[i][j][k] + c
        return cls(field, labels, tensor, check=check)


def _mark_verified(algebra: LeibnizAlgebra) -> LeibnizAlgebra:
    # Internal: used after an explicit full check, or for tensors derived
    # from a verified algebra by an identity-preserving construction.
    algebra.identity_verified = True
    return algebra


def product(algebra: LeibnizAlgebra, x, y):
    """The bracket [x, y] of two coordinate vectors, exactly."""
    n = algebra.dim
    if len(x) != n or len(y) != n:
        raise DimensionMismatchError(
            f"operands must have length {n}, got {len(x)} and {len(y)}"
        )
    acc = list(zero_vector(algebra.field, n))
    tensor = algebra.tensor
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = tensor[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            coeff = xi * yj
            entry = row[j]
            for k, c in enumerate(entry):
                if c:
                    acc[k] = acc[k] + coeff * c
    return tuple(acc)


def _vec_bracket_basis(algebra: LeibnizAlgebra, w, i: int):
    # [w, v_i] for a coordinate vector w.
    n = algebra.dim
    acc = list(zero_vector(algebra.field, n))
    for m, wm in enumerate(w):
        if not wm:
            continue
        entry = algebra.tensor[m][i]
        for k, c in enumerate(entry):
            if c:
                acc[k] = acc[k] + wm * c
    return tuple(acc)


def _basis_bracket_vec(algebra: LeibnizAlgebra, i: int, w):
    # [v_i, w] for a coordinate vector w.
    n = algebra.dim
    acc = list(zero_vector(algebra.field, n))
    row = algebra.tensor[i]
    for m, wm in enumerate(w):
        if not wm:
            continue
        entry = row[m]
        for k, c in enumerate(entry):
            if c:
                acc[k] = acc[k] + wm * c
    return tuple(acc)


def check_leibniz(algebra: LeibnizAlgebra, *, stop_early: bool = False):
    """All basis triples violating the identity, with their residuals.

    Returns a list of (i, j, k, residual) where residual are the
    coordinates of [[v_j, v_k], v_i] - [[v_j, v_i], v_k] - [v_j, [v_k, v_i]].
    The list is empty iff the identity holds on the whole algebra:
    both sides are trilinear, so basis triples decide it.  With
    ``stop_early`` the scan returns at the first violation (rejection
    sampling does not need the full list).
    """
    n = algebra.dim
    tensor = algebra.tensor
    violations = []
    for j in range(n):
        row_j = tensor[j]
        for k in range(n):
            jk = row_j[k]
            for i in range(n):
                lhs = _vec_bracket_basis(algebra, jk, i)
                t1 = _vec_bracket_basis(algebra, row_j[i], k)
                t2 = _basis_bracket_vec(algebra, j, tensor[k][i])
                residual = tuple(a - b - c for a, b, c in zip(lhs, t1, t2))
                if not vec_is_zero(residual):
                    violations.append((i, j, k, residual))
                    if stop_early:
                        return violations
    if not violations:
        algebra.identity_verified = True
    return violations


def _ensure_leibniz(algebra: LeibnizAlgebra):
    if not algebra.identity_verified:
        violations = check_leibniz(algebra)
        if violations:
            raise NotLeibnizError(violations)


def ideal_closure(algebra: LeibnizAlgebra, seed_vectors: Iterable) -> Subspace:
    """Smallest subspace containing the seeds and closed under bracketing
    with basis vectors on both sides.  Rank grows at every round, so the
    fixed point arrives after at most dim iterations."""
    n = algebra.dim
    span = Subspace.from_vectors(algebra.field, n, seed_vectors)
    while True:
        fresh = []
        for w in span.rows:
            for i in range(n):
                left = _vec_bracket_basis(algebra, w, i)
                if not span.contains(left):
                    fresh.append(left)
                right = _basis_bracket_vec(algebra, i, w)
                if not span.contains(right):
                    fresh.append(right)
        if not fresh:
            return span
        span = span.with_vectors(fresh)


def leibniz_kernel(algebra: LeibnizAlgebra) -> Subspace:
    """The ideal generated by all squares [x, x].

    Squares of basis vectors alone do not span enough: expanding
    [x, x] for x = v_i + v_j shows the symmetrized products
    [v_i, v_j] + [v_j, v_i] are needed as seeds too.
    """
    _ensure_leibniz(algebra)
    n = algebra.dim
    seeds = []
    for i in range(n):
        seeds.append(algebra.tensor[i][i])
        for j in range(i + 1, n):
            seeds.append(vec_add(algebra.tensor[i][j], algebra.tensor[j][i]))
    return ideal_closure(algebra, seeds)


def verify_right_annihilation(algebra: LeibnizAlgebra,
                              subspace: Subspace) -> bool:
    """True iff [L, subspace] = 0, checked on basis vectors times rows."""
    if subspace.ambient_dim != algebra.dim:
        raise DimensionMismatchError("subspace ambient dim != algebra dim")
    for w in subspace.rows:
        for i in range(algebra.dim):
            if not vec_is_zero(_basis_bracket_vec(algebra, i, w)):
                return False
    return True


@dataclass(frozen=True)
class BasisSplit:
    """A partition of basis indices into kernel part and complement part.

    Validity (that the kernel part spans the computed kernel ideal) is a
    separate check, validate_split; the constructor only enforces that
    the two index sets partition range(dim).
    """

    kernel: tuple
    complement: tuple

    def __post_init__(self):
        k = tuple(sorted(self.kernel))
        j = tuple(sorted(self.complement))
        object.__setattr__(self, "kernel", k)
        object.__setattr__(self, "complement", j)
        n = len(k) + len(j)
        if set(k) & set(j):
            raise ValueError("kernel and complement parts overlap")
        if set(k) | set(j) != set(range(n)):
            raise ValueError("split does not cover range(dim) exactly")

    @classmethod
    def of(cls, dim: int, kernel_indices: Iterable[int]) -> "BasisSplit":
        kernel = tuple(sorted(set(kernel_indices)))
        complement = tuple(i for i in range(dim) if i not in set(kernel))
        return cls(kernel, complement)

    @property
    def dim(self) -> int:
        return len(self.kernel) + len(self.complement)


def validate_split(algebra: LeibnizAlgebra, split: BasisSplit) -> bool:
    """True iff span{v_k : k in kernel part} equals the computed kernel."""
    if split.dim != algebra.dim:
        raise DimensionMismatchError(
            f"split covers {split.dim} indices, algebra has {algebra.dim}"
        )
    declared = Subspace.from_basis_indices(
        algebra.field, algebra.dim, split.kernel
    )
    return declared == leibniz_kernel(algebra)


@dataclass(frozen=True, eq=True)
class MultiplicativeTable:
    """Sparse view of a tensor whose basis products are all monomial.

    entries maps (i, j) to (k, coeff) meaning [v_i, v_j] = coeff * v_k
    with coeff nonzero; absent pairs multiply to zero.
    """

    field: FieldSpec
    labels: tuple
    entries: tuple  # sorted tuple of ((i, j), (k, coeff))

    @property
    def dim(self) -> int:
        return len(self.labels)

    def as_dict(self) -> dict:
        return dict(self.entries)

    def get(self, i: int, j: int):
        return self.as_dict().get((i, j))

    def to_tensor(self):
        n = self.dim
        tensor = [[list(zero_vector(self.field, n)) for _ in range(n)]
                  for _ in range(n)]
        for (i, j), (k, coeff) in self.entries:
            tensor[i][j][k] = coeff
        return tuple(tuple(tuple(v) for v in row) for row in tensor)


def to_multiplicative(algebra: LeibnizAlgebra, split: BasisSplit, *,
                      validate: bool = True) -> MultiplicativeTable:
    """Extract the sparse monomial table, enforcing the split shape.

    Shape rules (K = kernel part, J = complement part):
      * any product with right factor in K must vanish;
      * a product out of a K vector must land in the K part;
      * products of two J vectors may land in either part.
    Raises NotMonomialError if some product has two nonzero coordinates,
    ShapeViolationError if a rule above fails, InvalidSplitError when
    ``validate`` is set and the declared split is not the kernel.
    """
    if validate and not validate_split(algebra, split):
        raise InvalidSplitError(
            "declared kernel part does not span the computed kernel ideal"
        )
    kernel = set(split.kernel)
    entries = []
    n = algebra.dim
    for i in range(n):
        for j in range(n):
            v = algebra.tensor[i][j]
            support = [k for k, c in enumerate(v) if c]
            if not support:
                continue
            if len(support) > 1:
                raise NotMonomialError(
                    i, j, f"support at coordinates {support}"
                )
            k = support[0]
            if j in kernel:
                raise ShapeViolationError(
                    i, j, "right factor lies in the kernel part but the "
                          "product is nonzero"
                )
            if i in kernel and k not in kernel:
                raise ShapeViolationError(
                    i, j, "product out of a kernel vector leaves the "
                          "kernel part"
                )
            entries.append(((i, j), (k, v[k])))
    return MultiplicativeTable(algebra.field, algebra.labels, tuple(entries))
