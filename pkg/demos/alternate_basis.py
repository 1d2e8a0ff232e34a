#!/usr/bin/env python3
"""The associated digraph depends on the chosen multiplicative basis.

Rewriting the five-dimensional algebra in the basis
{e+f, e-f, h, p+q, p-q} keeps it the same algebra, keeps the kernel
ideal, and keeps minimality, but changes the digraph: 16 edges instead
of 14, so the two graphs cannot be isomorphic.
"""

from __future__ import annotations

from leibniz_graphs import (
    BasisSplit,
    FieldSpec,
    LinearMap,
    build_graph,
    change_basis,
    five_dim,
    induced_graph_isomorphism,
    induced_subgraph,
    is_strongly_connected,
    leibniz_kernel,
    to_multiplicative,
)

Q = FieldSpec.rationals()


def main() -> None:
    algebra, split = five_dim()

    # columns are the new basis vectors in the old coordinates (e,h,f,p,q)
    f = LinearMap.from_columns(Q, [
        tuple(Q.scalar(c) for c in col) for col in (
            (1, 0, 1, 0, 0),    # e+f
            (1, 0, -1, 0, 0),   # e-f
            (0, 1, 0, 0, 0),    # h
            (0, 0, 0, 1, 1),    # p+q
            (0, 0, 0, 1, -1),   # p-q
        )
    ])
    labels = ("e+f", "e-f", "h", "p+q", "p-q")
    alt = change_basis(algebra, f, new_labels=labels)

    kernel = leibniz_kernel(alt)
    print("kernel in the new basis:",
          " ".join(alt.labels[i] for i in kernel.basis_members()))
    alt_split = BasisSplit.of(5, kernel.basis_members())

    table = to_multiplicative(alt, alt_split)
    print(f"\nrewritten table ({len(table.entries)} nonzero products):")
    for (i, j), (k, c) in table.entries:
        print(f"  [{labels[i]}, {labels[j]}] = {c} * {labels[k]}")

    old_graph = build_graph(to_multiplicative(algebra, split), split)
    new_graph = build_graph(table, alt_split)
    print(f"\nedges: {len(old_graph.edges)} in the original basis, "
          f"{len(new_graph.edges)} in the new one")
    identity = {i: i for i in range(5)}
    print("isomorphic under the identity vertex map:",
          induced_graph_isomorphism(old_graph, new_graph, identity))

    # basis-independent facts survive the rewrite
    for part in ("kernel", "complement"):
        sub = induced_subgraph(new_graph, part, alt_split)
        print(f"{part} subgraph strongly connected:",
              is_strongly_connected(sub))


if __name__ == "__main__":
    main()
