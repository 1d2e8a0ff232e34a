"""Algebra maps between bases: automorphism checking, change of basis,
and transporting graph facts along a claimed vertex bijection.

A LinearMap stores an n x n matrix whose COLUMNS are the images of the
basis vectors, all in the coordinates the caller fixes.  Nothing here
searches for isomorphisms; these are certificate checkers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .algebra import LeibnizAlgebra, product
from .errors import (
    BadBijectionError,
    DimensionMismatchError,
    FieldMismatchError,
    InternalInvariantViolation,
    NotLeibnizError,
    SingularMapError,
)
from .graphs import DiGraph
from .scalars import FieldSpec, Scalar, rref, unit_vector, zero_vector
from .structure import Decomposition

__all__ = [
    "LinearMap",
    "change_basis",
    "decomposition_equivalence",
    "induced_graph_isomorphism",
    "is_automorphism",
    "maps_basis_to_basis",
]


@dataclass(frozen=True)
class LinearMap:
    """A square matrix over an exact field; column j is the image of v_j."""

    field: FieldSpec
    matrix: tuple  # rows, each a tuple of Scalars

    def __post_init__(self):
        n = len(self.matrix)
        rows = []
        for row in self.matrix:
            if len(row) != n:
                raise DimensionMismatchError("matrix must be square")
            for s in row:
                if not isinstance(s, Scalar) or s.field != self.field:
                    raise FieldMismatchError("matrix entry of a foreign field")
            rows.append(tuple(row))
        object.__setattr__(self, "matrix", tuple(rows))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence) -> "LinearMap":
        n = len(columns)
        for col in columns:
            if len(col) != n:
                raise DimensionMismatchError("columns must have length n")
        rows = tuple(
            tuple(columns[j][i] for j in range(n)) for i in range(n)
        )
        return cls(field, rows)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "LinearMap":
        return cls.from_columns(
            field, [unit_vector(field, n, i) for i in range(n)]
        )

    @classmethod
    def permutation(cls, field: FieldSpec, images: Sequence[int]
                    ) -> "LinearMap":
        """The map v_j -> v_images[j]."""
        n = len(images)
        if sorted(images) != list(range(n)):
            raise BadBijectionError("images must be a permutation of range(n)")
        return cls.from_columns(
            field, [unit_vector(field, n, images[j]) for j in range(n)]
        )

    def column(self, j: int):
        return tuple(self.matrix[i][j] for i in range(self.dim))

    def apply(self, x):
        """Matrix-vector product: the image of a coordinate vector."""
        if len(x) != self.dim:
            raise DimensionMismatchError("vector length != map dimension")
        acc = list(zero_vector(self.field, self.dim))
        for j, xj in enumerate(x):
            if not xj:
                continue
            for i in range(self.dim):
                m = self.matrix[i][j]
                if m:
                    acc[i] = acc[i] + xj * m
        return tuple(acc)

    def is_invertible(self) -> bool:
        rows, _p = rref(self.field, self.matrix, self.dim)
        return len(rows) == self.dim

    def inverse(self) -> "LinearMap":
        """Gauss-Jordan inverse; raises SingularMapError when singular."""
        n = self.dim
        aug = [
            list(self.matrix[i]) + list(unit_vector(self.field, n, i))
            for i in range(n)
        ]
        r = 0
        for c in range(n):
            pivot = next((k for k in range(r, n) if aug[k][c]), None)
            if pivot is None:
                raise SingularMapError("matrix is singular")
            aug[r], aug[pivot] = aug[pivot], aug[r]
            inv = aug[r][c].inverse()
            aug[r] = [x * inv for x in aug[r]]
            for k in range(n):
                if k != r and aug[k][c]:
                    f = aug[k][c]
                    aug[k] = [a - f * b for a, b in zip(aug[k], aug[r])]
            r += 1
        rows = tuple(tuple(aug[i][n:]) for i in range(n))
        return LinearMap(self.field, rows)


def is_automorphism(algebra: LeibnizAlgebra, f: LinearMap):
    """Check f([v_i, v_j]) = [f(v_i), f(v_j)] on all basis pairs.

    Returns (True, None) or (False, (i, j)) for the first failing pair in
    row-major order.  Raises SingularMapError when f is not invertible;
    bijectivity is part of being an automorphism, not a failure witness.
    """
    if f.dim != algebra.dim:
        raise DimensionMismatchError("map dimension != algebra dimension")
    if f.field != algebra.field:
        raise FieldMismatchError("map field != algebra field")
    if not f.is_invertible():
        raise SingularMapError("candidate automorphism is singular")
    n = algebra.dim
    columns = [f.column(j) for j in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = product(algebra, columns[i], columns[j])
            rhs = f.apply(algebra.tensor[i][j])
            if lhs != rhs:
                return False, (i, j)
    return True, None


def maps_basis_to_basis(f: LinearMap,
                        target_labels: Sequence[str]) -> Optional[dict]:
    """If every column of f is exactly a unit vector in the coordinates of
    the target basis (coefficient 1, no scalar slack) and those units are
    pairwise distinct, return the vertex bijection {source j: target i}.
    Otherwise return None."""
    n = f.dim
    if len(target_labels) != n:
        raise DimensionMismatchError("target basis has wrong size")
    one = f.field.one
    bijection: dict = {}
    hit = set()
    for j in range(n):
        col = f.column(j)
        support = [i for i, c in enumerate(col) if c]
        if len(support) != 1 or col[support[0]] != one:
            return None
        i = support[0]
        if i in hit:
            return None
        hit.add(i)
        bijection[j] = i
    return bijection


def change_basis(algebra: LeibnizAlgebra, f: LinearMap,
                 new_labels: Optional[Sequence[str]] = None
                 ) -> LeibnizAlgebra:
    """Rewrite the algebra in the basis b_j = f(v_j).

    The new structure constants are exact: [b_i, b_j] computed in old
    coordinates, then expressed through f^{-1}.  The Leibniz identity is
    re-verified on the result; it holds automatically under any invertible
    change of basis, so a failure is an internal bug, not bad input.
    """
    if f.dim != algebra.dim:
        raise DimensionMismatchError("map dimension != algebra dimension")
    f_inv = f.inverse()  # SingularMapError if not invertible
    n = algebra.dim
    columns = [f.column(j) for j in range(n)]
    tensor = []
    for i in range(n):
        row = []
        for j in range(n):
            w = product(algebra, columns[i], columns[j])
            row.append(f_inv.apply(w))
        tensor.append(tuple(row))
    labels = tuple(new_labels) if new_labels is not None else algebra.labels
    try:
        return LeibnizAlgebra(algebra.field, labels, tuple(tensor), check=True)
    except NotLeibnizError as exc:  # pragma: no cover - guards a theorem
        raise InternalInvariantViolation(
            "change of basis broke the Leibniz identity"
        ) from exc


def _check_bijection(vertices_a, vertices_b, bijection: Mapping) -> None:
    va, vb = set(vertices_a), set(vertices_b)
    if set(bijection.keys()) != va:
        raise BadBijectionError("bijection domain differs from first graph")
    image = list(bijection.values())
    if len(set(image)) != len(image) or set(image) != vb:
        raise BadBijectionError("bijection image differs from second graph")


def induced_graph_isomorphism(graph_a: DiGraph, graph_b: DiGraph,
                              bijection: Mapping) -> bool:
    """True iff the vertex bijection carries the edge set of the first
    graph exactly onto the edge set of the second."""
    _check_bijection(graph_a.vertices, graph_b.vertices, bijection)
    mapped = {(bijection[a], bijection[b]) for a, b in graph_a.edges}
    return mapped == set(graph_b.edges)


def decomposition_equivalence(dec_a: Decomposition, dec_b: Decomposition,
                              bijection: Mapping) -> bool:
    """True iff the bijection matches the component parts one-to-one:
    the image of each part's vertex set is exactly one part of the other
    decomposition, and every part is hit exactly once."""
    verts_a = [v for part in dec_a.parts for v in part.vertices]
    verts_b = [v for part in dec_b.parts for v in part.vertices]
    _check_bijection(verts_a, verts_b, bijection)
    targets = {part.vertices: idx for idx, part in enumerate(dec_b.parts)}
    seen = set()
    for part in dec_a.parts:
        image = tuple(sorted(bijection[v] for v in part.vertices))
        idx = targets.get(image)
        if idx is None or idx in seen:
            return False
        seen.add(idx)
    return len(seen) == len(dec_b.parts)
