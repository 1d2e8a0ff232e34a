"""Structure theory: ideals, component decomposition, weak division and
minimality, each decided twice (graph route and linear-algebra route)
with a hard failure if the routes ever disagree.

Terminology.  With a multiplicative basis split into kernel part K and
complement part J:

* weak division holds when every factor of a nonzero product that stays
  inside one part lies in the ideal generated by that product;
* the algebra is minimal when its only nonzero ideals admitting a
  multiplicative basis inside the given one are the kernel and the whole
  algebra.  Such ideals are exactly the spans of basis subsets: a basis
  contained in the algebra's basis spans a coordinate subspace, and a
  coordinate subspace that is an ideal multiplies its basis monomially.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from .algebra import (
    BasisSplit,
    LeibnizAlgebra,
    MultiplicativeTable,
    ideal_closure,
    product,
    to_multiplicative,
)
from .errors import (
    DimensionMismatchError,
    DimensionTooLargeError,
    InternalInvariantViolation,
)
from .graphs import (
    DiGraph,
    build_graph,
    induced_subgraph,
    is_strongly_connected,
    is_weakly_symmetric,
    reachable_from,
    undirected_components,
)
from .scalars import Subspace, unit_vector, vec_is_zero

__all__ = [
    "Decomposition",
    "DecompositionPart",
    "MinimalityVerdict",
    "analysis_report",
    "check_ideal_absorption_props",
    "check_minimality",
    "check_weak_division",
    "decompose",
    "enumerate_basis_ideals",
    "generated_ideal",
    "is_ideal",
    "reachability_members",
    "restrict_to_indices",
    "simplicity_necessary",
]

ENUM_BOUND_ENV = "LEIBNIZ_GRAPHS_ENUM_BOUND"
DEFAULT_ENUM_BOUND = 16


def enumeration_bound() -> int:
    """Subset-enumeration safety bound; overridable via the environment."""
    raw = os.environ.get(ENUM_BOUND_ENV)
    if raw is None:
        return DEFAULT_ENUM_BOUND
    try:
        return int(raw)
    except ValueError:
        raise ValueError(
            f"{ENUM_BOUND_ENV} must be an integer, got {raw!r}"
        ) from None


def is_ideal(algebra: LeibnizAlgebra, subspace: Subspace) -> bool:
    """Brute-force two-sided ideal test: [s, v_i] and [v_i, s] stay in the
    subspace for every spanning row s and every basis vector v_i."""
    if subspace.ambient_dim != algebra.dim:
        raise DimensionMismatchError("subspace ambient dim != algebra dim")
    n = algebra.dim
    for s in subspace.rows:
        for i in range(n):
            e = algebra.unit(i)
            if not subspace.contains(product(algebra, s, e)):
                return False
            if not subspace.contains(product(algebra, e, s)):
                return False
    return True


def generated_ideal(algebra: LeibnizAlgebra, vector) -> Subspace:
    """The two-sided ideal generated by one vector (closure oracle)."""
    if len(vector) != algebra.dim:
        raise DimensionMismatchError("generator has wrong length")
    if vec_is_zero(tuple(vector)):
        return Subspace.from_vectors(algebra.field, algebra.dim, [])
    return ideal_closure(algebra, [tuple(vector)])


@dataclass(frozen=True)
class DecompositionPart:
    component_id: int
    vertices: tuple     # sorted basis indices of the component
    labels: tuple
    subspace: Subspace

    @property
    def dim(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Decomposition:
    parts: tuple  # DecompositionPart, ordered by component id

    @property
    def count(self) -> int:
        return len(self.parts)

    def vertex_sets(self) -> tuple:
        return tuple(p.vertices for p in self.parts)


def decompose(algebra: LeibnizAlgebra, table: MultiplicativeTable,
              split: BasisSplit, graph: Optional[DiGraph] = None
              ) -> Decomposition:
    """Split the algebra into the ideals spanned by the undirected
    components of its graph.

    Each part is re-verified to be an ideal, and orthogonality is checked
    exhaustively: every cross-component basis product must vanish.  A
    failure of either check contradicts the component theorem and raises
    InternalInvariantViolation.
    """
    if graph is None:
        graph = build_graph(table, split)
    classes = undirected_components(graph).classes()
    parts = []
    for group in classes:
        subspace = Subspace.from_basis_indices(
            algebra.field, algebra.dim, group
        )
        if not is_ideal(algebra, subspace):
            raise InternalInvariantViolation(
                f"graph component {group} does not span an ideal"
            )
        labels = tuple(algebra.labels[v] for v in group)
        parts.append(DecompositionPart(min(group), group, labels, subspace))
    for a_idx, part_a in enumerate(parts):
        for part_b in parts[a_idx + 1:]:
            for i in part_a.vertices:
                for j in part_b.vertices:
                    ij = product(algebra, algebra.unit(i), algebra.unit(j))
                    ji = product(algebra, algebra.unit(j), algebra.unit(i))
                    if not (vec_is_zero(ij) and vec_is_zero(ji)):
                        raise InternalInvariantViolation(
                            f"components {part_a.vertices} and "
                            f"{part_b.vertices} are not orthogonal at "
                            f"({i},{j})"
                        )
    return Decomposition(tuple(sorted(parts, key=lambda p: p.component_id)))


def restrict_to_indices(algebra: LeibnizAlgebra, split: BasisSplit,
                        indices) -> tuple:
    """The subalgebra on a component's basis vectors, as a fresh algebra
    with the inherited split.  Only valid when the span of ``indices`` is
    closed under products with itself."""
    idx = tuple(sorted(indices))
    pos = {v: t for t, v in enumerate(idx)}
    m = len(idx)
    zero = algebra.field.zero
    tensor = []
    for a in idx:
        row = []
        for b in idx:
            full = algebra.tensor[a][b]
            for k, c in enumerate(full):
                if c and k not in pos:
                    raise ValueError(
                        f"product ({a},{b}) leaves the index set; "
                        "restriction is not a subalgebra"
                    )
            row.append(tuple(full[k] if k in pos else zero for k in idx))
        tensor.append(tuple(row))
    labels = tuple(algebra.labels[v] for v in idx)
    sub = LeibnizAlgebra(algebra.field, labels, tuple(tensor), check=True)
    sub_split = BasisSplit.of(m, (pos[v] for v in idx if v in set(split.kernel)))
    return sub, sub_split


def reachability_members(graph: DiGraph, v: int) -> tuple:
    """Alias of directed reachability, named for its structural meaning:
    inside one part, these are the basis vectors of the generated ideal."""
    return reachable_from(graph, v)


def check_weak_division(algebra: LeibnizAlgebra, table: MultiplicativeTable,
                        split: BasisSplit):
    """Decide weak division by the ideal-closure oracle.

    For every table entry [v_i, v_j] = c * v_k:
      * i and k in the kernel part: v_i must lie in the ideal of v_k;
      * i, j and k all in the complement part: both v_i and v_j must lie
        in the ideal of v_k.
    Returns (holds, violations); each violation is ((i, j), k, missing).
    """
    kernel = set(split.kernel)
    ideals: dict = {}

    def ideal_of(k: int) -> Subspace:
        if k not in ideals:
            ideals[k] = generated_ideal(algebra, algebra.unit(k))
        return ideals[k]

    violations = []
    for (i, j), (k, _c) in table.entries:
        required = []
        if i in kernel and k in kernel:
            required = [i]
        elif i not in kernel and j not in kernel and k not in kernel:
            required = [i, j]
        for member in required:
            if not ideal_of(k).contains(algebra.unit(member)):
                violations.append(((i, j), k, member))
    return (not violations), violations


def enumerate_basis_ideals(algebra: LeibnizAlgebra,
                           bound: Optional[int] = None) -> list:
    """All subsets S of the basis whose span is a two-sided ideal, by
    exhaustive enumeration through is_ideal.  Includes the empty set and
    the full basis.  Refuses dimensions above the bound."""
    if bound is None:
        bound = enumeration_bound()
    n = algebra.dim
    if n > bound:
        raise DimensionTooLargeError(
            f"dimension {n} exceeds enumeration bound {bound}"
        )
    found = []
    for mask in range(1 << n):
        subset = tuple(i for i in range(n) if mask >> i & 1)
        span = Subspace.from_basis_indices(algebra.field, n, subset)
        if is_ideal(algebra, span):
            found.append(subset)
    return found


@dataclass(frozen=True)
class MinimalityVerdict:
    """Outcome of the minimality decision with every route on record.

    via_graph:    both part subgraphs strongly connected.
    via_division: weak division plus both part subgraphs connected.
    via_oracle:   subset enumeration, when it ran (None otherwise).
    """

    minimal: bool
    strong_kernel: bool
    strong_complement: bool
    weak_division: bool
    connected_kernel: bool
    connected_complement: bool
    oracle_minimal: Optional[bool] = None

    @property
    def via_graph(self) -> bool:
        return self.strong_kernel and self.strong_complement

    @property
    def via_division(self) -> bool:
        return (self.weak_division and self.connected_kernel
                and self.connected_complement)


def _oracle_minimal(algebra: LeibnizAlgebra, split: BasisSplit,
                    bound: Optional[int]) -> bool:
    subsets = enumerate_basis_ideals(algebra, bound)
    n = algebra.dim
    full = tuple(range(n))
    proper = [s for s in subsets if s and s != full]
    expected = [split.kernel] if split.kernel else []
    return sorted(proper) == sorted(expected)


def check_minimality(algebra: LeibnizAlgebra, table: MultiplicativeTable,
                     split: BasisSplit, *, oracle: Optional[bool] = None,
                     bound: Optional[int] = None) -> MinimalityVerdict:
    """Decide minimality by the two graph routes, optionally also by the
    enumeration oracle (oracle=None runs it whenever the dimension allows),
    and require all computed routes to agree."""
    graph = build_graph(table, split)
    sub_k = induced_subgraph(graph, "kernel", split)
    sub_j = induced_subgraph(graph, "complement", split)
    strong_k = is_strongly_connected(sub_k)
    strong_j = is_strongly_connected(sub_j)
    division, _violations = check_weak_division(algebra, table, split)
    connected_k = undirected_components(sub_k).count <= 1
    connected_j = undirected_components(sub_j).count <= 1

    run_oracle = oracle
    if run_oracle is None:
        limit = bound if bound is not None else enumeration_bound()
        run_oracle = algebra.dim <= limit
    oracle_result = (_oracle_minimal(algebra, split, bound)
                     if run_oracle else None)

    verdict = MinimalityVerdict(
        minimal=strong_k and strong_j,
        strong_kernel=strong_k,
        strong_complement=strong_j,
        weak_division=division,
        connected_kernel=connected_k,
        connected_complement=connected_j,
        oracle_minimal=oracle_result,
    )
    if verdict.via_graph != verdict.via_division:
        raise InternalInvariantViolation(
            f"minimality routes disagree: graph={verdict.via_graph} "
            f"division={verdict.via_division}"
        )
    if oracle_result is not None and oracle_result != verdict.via_graph:
        raise InternalInvariantViolation(
            f"minimality oracle disagrees with graph route: "
            f"oracle={oracle_result} graph={verdict.via_graph}"
        )
    return verdict


def simplicity_necessary(graph: DiGraph) -> bool:
    """Necessary condition for simplicity: one undirected component.
    (Not sufficient; a connected graph proves nothing more.)"""
    return undirected_components(graph).count <= 1


def check_ideal_absorption_props(algebra: LeibnizAlgebra,
                                 table: MultiplicativeTable,
                                 split: BasisSplit, *,
                                 bound: Optional[int] = None) -> bool:
    """Verify, by enumeration, the two absorption consequences of strong
    connectivity:

    * kernel subgraph strongly connected: every subset ideal meeting the
      kernel part contains the whole kernel;
    * complement subgraph strongly connected: every subset ideal meeting
      the complement part is the whole algebra.

    Raises InternalInvariantViolation on a counterexample.
    """
    graph = build_graph(table, split)
    sub_k = induced_subgraph(graph, "kernel", split)
    sub_j = induced_subgraph(graph, "complement", split)
    strong_k = is_strongly_connected(sub_k)
    strong_j = is_strongly_connected(sub_j)
    kernel = set(split.kernel)
    complement = set(split.complement)
    full = tuple(range(algebra.dim))
    for subset in enumerate_basis_ideals(algebra, bound):
        sset = set(subset)
        if strong_k and kernel and (sset & kernel) and not kernel <= sset:
            raise InternalInvariantViolation(
                f"ideal {subset} meets the kernel part without absorbing it"
            )
        if strong_j and complement and (sset & complement) and subset != full:
            raise InternalInvariantViolation(
                f"ideal {subset} meets the complement part but is proper"
            )
    return True


def cross_validate(algebra: LeibnizAlgebra, split: BasisSplit, *,
                   oracle: Optional[bool] = None,
                   bound: Optional[int] = None) -> dict:
    """Run every dual-route consistency check on one instance and raise
    InternalInvariantViolation on the first mismatch.

    Checks: same-part graph reachability against ideal-closure membership
    (both parts, all pairs); weak division against weak symmetry of both
    part subgraphs; agreement of all minimality routes (inside
    check_minimality).  Returns counters for reporting.
    """
    table = to_multiplicative(algebra, split, validate=False)
    graph = build_graph(table, split)
    sub_k = induced_subgraph(graph, "kernel", split)
    sub_j = induced_subgraph(graph, "complement", split)

    pairs = 0
    for part_graph in (sub_k, sub_j):
        for v in part_graph.vertices:
            members = set(reachability_members(part_graph, v))
            ideal = generated_ideal(algebra, algebra.unit(v))
            for w in part_graph.vertices:
                pairs += 1
                if (w in members) != ideal.contains(algebra.unit(w)):
                    raise InternalInvariantViolation(
                        f"reachability and ideal closure disagree on "
                        f"({algebra.labels[v]}, {algebra.labels[w]})"
                    )

    division, _violations = check_weak_division(algebra, table, split)
    sym_k, _wk = is_weakly_symmetric(sub_k)
    sym_j, _wj = is_weakly_symmetric(sub_j)
    if division != (sym_k and sym_j):
        raise InternalInvariantViolation(
            f"weak division ({division}) disagrees with part weak "
            f"symmetry ({sym_k}, {sym_j})"
        )

    verdict = check_minimality(algebra, table, split,
                               oracle=oracle, bound=bound)
    return {
        "reachability_pairs": pairs,
        "weak_division": division,
        "minimal": verdict.minimal,
        "oracle_ran": verdict.oracle_minimal is not None,
    }


def analysis_report(algebra: LeibnizAlgebra, split: BasisSplit, *,
                    oracle: Optional[bool] = None,
                    bound: Optional[int] = None) -> dict:
    """One JSON-ready dictionary with every headline fact about the
    algebra.  Key order is fixed and arrays are sorted, so serialization
    is byte-stable."""
    from .jsonio import field_to_json, scalar_to_json

    table = to_multiplicative(algebra, split, validate=False)
    graph = build_graph(table, split)
    sub_k = induced_subgraph(graph, "kernel", split)
    sub_j = induced_subgraph(graph, "complement", split)
    verdict = check_minimality(algebra, table, split,
                               oracle=oracle, bound=bound)
    division, violations = check_weak_division(algebra, table, split)
    components = undirected_components(graph).classes()

    def edge_labels(g: DiGraph) -> list:
        return [[g.label_of(a), g.label_of(b)] for a, b in g.sorted_edges()]

    def subgraph_block(g: DiGraph) -> dict:
        symmetric, witness = is_weakly_symmetric(g)
        return {
            "vertices": [g.label_of(v) for v in g.vertices],
            "edge_count": len(g.edges),
            "edges": edge_labels(g),
            "connected": undirected_components(g).count <= 1,
            "weakly_symmetric": symmetric,
            "weak_symmetry_witness": (
                None if witness is None
                else [g.label_of(witness[0]), g.label_of(witness[1])]
            ),
            "strongly_connected": is_strongly_connected(g),
        }

    flags = []
    if not split.kernel:
        flags.append("empty-kernel-part")
    if algebra.dim <= 1:
        flags.append("degenerate-dimension")

    oracle_ideals = None
    if verdict.oracle_minimal is not None:
        oracle_ideals = [
            [algebra.labels[i] for i in subset]
            for subset in enumerate_basis_ideals(algebra, bound)
        ]

    return {
        "field": field_to_json(algebra.field),
        "labels": list(algebra.labels),
        "dimension": algebra.dim,
        "kernel": [algebra.labels[i] for i in split.kernel],
        "split": {
            "kernel": [algebra.labels[i] for i in split.kernel],
            "complement": [algebra.labels[i] for i in split.complement],
        },
        "table_entries": len(table.entries),
        "graph": {
            "edge_count": len(graph.edges),
            "edges": edge_labels(graph),
        },
        "subgraphs": {
            "kernel": subgraph_block(sub_k),
            "complement": subgraph_block(sub_j),
        },
        "components": [
            [algebra.labels[v] for v in group] for group in components
        ],
        "weak_division": {
            "holds": division,
            "violations": [
                {
                    "product": {
                        "l": algebra.labels[i],
                        "r": algebra.labels[j],
                        "out": algebra.labels[k],
                        "c": scalar_to_json(dict(table.entries)[(i, j)][1]),
                    },
                    "missing_member": algebra.labels[member],
                }
                for (i, j), k, member in violations
            ],
        },
        "minimality": {
            "minimal": verdict.minimal,
            "strongly_connected_kernel": verdict.strong_kernel,
            "strongly_connected_complement": verdict.strong_complement,
            "weak_division": verdict.weak_division,
            "connected_kernel": verdict.connected_kernel,
            "connected_complement": verdict.connected_complement,
            "oracle": verdict.oracle_minimal,
        },
        "oracle_ideals": oracle_ideals,
        "flags": flags,
    }
