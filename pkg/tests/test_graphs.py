"""Associated digraph construction and the graph predicates."""

from __future__ import annotations

import random

import pytest

from leibniz_graphs.algebra import BasisSplit, to_multiplicative
from leibniz_graphs.corpus import (
    build_example,
    filiform,
    five_dim,
    fuzz_instances,
    permute_basis,
    rescale_basis,
    ud_component,
)
from leibniz_graphs.errors import UnknownVertexError
from leibniz_graphs.graphs import (
    DiGraph,
    build_graph,
    edge_list_text,
    induced_subgraph,
    is_strongly_connected,
    is_weakly_symmetric,
    reachable_from,
    strong_components,
    to_dot,
    undirected_components,
)

# e=0 h=1 f=2 p=3 q=4; factors point at products, duplicates collapse
FIVE_DIM_EDGES = {
    (0, 0), (0, 1), (0, 3), (1, 0), (1, 2), (1, 3), (1, 4),
    (2, 1), (2, 2), (2, 4), (3, 3), (3, 4), (4, 3), (4, 4),
}


def _graph_of(alg, split):
    return build_graph(to_multiplicative(alg, split), split)


def test_five_dim_edge_set_is_the_frozen_golden():
    alg, split = five_dim()
    graph = _graph_of(alg, split)
    assert graph.vertices == (0, 1, 2, 3, 4)
    assert graph.labels == ("e", "h", "f", "p", "q")
    assert set(graph.edges) == FIVE_DIM_EDGES
    assert len(graph.edges) == 14


def test_five_dim_subgraphs():
    alg, split = five_dim()
    graph = _graph_of(alg, split)
    kernel = induced_subgraph(graph, "kernel", split)
    assert kernel.vertices == (3, 4)
    assert kernel.labels == ("p", "q")
    assert set(kernel.edges) == {(3, 3), (3, 4), (4, 3), (4, 4)}
    comp = induced_subgraph(graph, "complement", split)
    assert comp.vertices == (0, 1, 2)
    assert set(comp.edges) == {(0, 0), (0, 1), (1, 0), (1, 2), (2, 1), (2, 2)}
    assert is_strongly_connected(kernel)
    assert is_strongly_connected(comp)
    with pytest.raises(ValueError):
        induced_subgraph(graph, "middle", split)


def test_model_filiform_graph_is_a_chain_plus_fanout():
    alg, split = filiform(4)
    graph = _graph_of(alg, split)
    assert set(graph.edges) == {(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)}


def test_filiform_kernel_subgraph_breaks_weak_symmetry():
    alg, split = filiform(5)
    kernel = induced_subgraph(_graph_of(alg, split), "kernel", split)
    assert kernel.vertices == (1, 2, 3, 4)
    assert set(kernel.edges) == {(1, 2), (2, 3), (3, 4)}
    flag, witness = is_weakly_symmetric(kernel)
    assert not flag
    assert witness == (1, 2)  # first offending edge in sorted order
    assert kernel.label_of(1) == "e_2" and kernel.label_of(2) == "e_3"
    assert not is_strongly_connected(kernel)
    assert strong_components(kernel).count == 4


def test_reachability_in_filiform_kernel_part():
    alg, split = filiform(5)
    kernel = induced_subgraph(_graph_of(alg, split), "kernel", split)
    assert reachable_from(kernel, 1) == (1, 2, 3, 4)
    assert reachable_from(kernel, 3) == (3, 4)
    assert reachable_from(kernel, 4) == (4,)
    with pytest.raises(UnknownVertexError):
        reachable_from(kernel, 0)


def test_five_dim_strong_components_split_by_part():
    alg, split = five_dim()
    graph = _graph_of(alg, split)
    part = strong_components(graph)
    assert part.classes() == ((0, 1, 2), (3, 4))
    assert part.id_of(4) == 3
    assert not is_strongly_connected(graph)  # no edge back out of the kernel
    flag, witness = is_weakly_symmetric(graph)
    assert not flag and witness == (0, 3)


def test_undirected_components_of_a_direct_sum():
    alg, split = build_example("ud_plus_five")
    graph = _graph_of(alg, split)
    part = undirected_components(graph)
    assert part.count == 2
    assert part.classes() == ((0, 1, 2), (3, 4, 5, 6, 7))
    assert part.as_dict()[6] == 3
    with pytest.raises(UnknownVertexError):
        part.id_of(99)


def test_strong_connectivity_conventions():
    empty = DiGraph((), (), frozenset())
    assert is_strongly_connected(empty)
    single = DiGraph((0,), ("a",), frozenset())
    assert is_strongly_connected(single)
    two = DiGraph((0, 1), ("a", "b"), frozenset())
    assert not is_strongly_connected(two)
    assert is_weakly_symmetric(two) == (True, None)  # vacuous: no edges


def test_digraph_validation():
    with pytest.raises(ValueError):
        DiGraph((1, 0), ("a", "b"), frozenset())
    with pytest.raises(ValueError):
        DiGraph((0, 1), ("a",), frozenset())
    with pytest.raises(UnknownVertexError):
        DiGraph((0, 1), ("a", "b"), frozenset({(0, 2)}))
    graph = DiGraph((0, 2), ("a", "b"), frozenset({(2, 0)}))
    assert graph.label_of(2) == "b"
    with pytest.raises(UnknownVertexError):
        graph.label_of(1)


def test_ud_component_graph_golden():
    alg, split = ud_component()
    graph = _graph_of(alg, split)
    assert set(graph.edges) == {(0, 1), (0, 2), (1, 2)}
    kernel = induced_subgraph(graph, "kernel", split)
    flag, witness = is_weakly_symmetric(kernel)
    assert not flag and witness == (1, 2)


def test_to_dot_is_byte_stable():
    alg, split = ud_component()
    graph = _graph_of(alg, split)
    dot = to_dot(graph, kernel_vertices=split.kernel)
    assert dot == (
        "digraph leibniz {\n"
        '  "u_d" [shape=ellipse];\n'
        '  "e_0" [shape=box];\n'
        '  "e_1" [shape=box];\n'
        '  "u_d" -> "e_0";\n'
        '  "u_d" -> "e_1";\n'
        '  "e_0" -> "e_1";\n'
        "}\n"
    )
    assert dot == to_dot(graph, kernel_vertices=split.kernel)


def test_edge_list_text_sorted_by_index():
    alg, split = ud_component()
    graph = _graph_of(alg, split)
    assert edge_list_text(graph) == "u_d -> e_0\nu_d -> e_1\ne_0 -> e_1\n"
    assert edge_list_text(DiGraph((), (), frozenset())) == ""


def test_graph_invariant_under_rescaling():
    rng = random.Random(4242)
    alg, split = five_dim()
    before = _graph_of(alg, split)
    for _ in range(20):
        diag = [rng.choice([1, 2, 3, -1, 5]) for _ in range(alg.dim)]
        scaled, s_split = rescale_basis(alg, split, diag)
        after = _graph_of(scaled, s_split)
        assert after.edges == before.edges
        assert after.labels == before.labels


def test_graph_equivariant_under_permutation():
    rng = random.Random(77)
    for name in ("five_dim", "filiform", "ud_component"):
        params = {"n": 5} if name == "filiform" else None
        alg, split = build_example(name, params)
        before = _graph_of(alg, split)
        for _ in range(10):
            order = list(range(alg.dim))
            rng.shuffle(order)
            perm, p_split, position = permute_basis(alg, split, order)
            after = _graph_of(perm, p_split)
            mapped = {(position[a], position[b]) for a, b in before.edges}
            assert set(after.edges) == mapped
            for v in before.vertices:
                assert after.label_of(position[v]) == before.label_of(v)


def test_no_edges_leave_the_kernel_part():
    # products out of kernel vectors stay in the kernel part, so the
    # graph can never cross back into the complement
    instances = fuzz_instances(seed=5, count=30)
    alg, split = build_example("ud_plus_five")
    instances.append((alg, split))
    for alg, split in instances:
        graph = _graph_of(alg, split)
        kernel = set(split.kernel)
        for a, b in graph.edges:
            if a in kernel:
                assert b in kernel


def _random_digraph(rng):
    n = rng.randint(1, 10)
    vertices = tuple(range(n))
    edges = set()
    for a in range(n):
        for b in range(n):
            if rng.random() < rng.choice([0.05, 0.15, 0.4]):
                edges.add((a, b))
    labels = tuple(f"v{i}" for i in vertices)
    return DiGraph(vertices, labels, frozenset(edges))


def test_strong_connectivity_decomposes_on_random_digraphs():
    # on any digraph: strongly connected iff connected and weakly symmetric
    rng = random.Random(31337)
    for _ in range(300):
        graph = _random_digraph(rng)
        strong = is_strongly_connected(graph)
        connected = undirected_components(graph).count <= 1
        symmetric, _w = is_weakly_symmetric(graph)
        assert strong == (connected and symmetric)


def test_strong_components_match_pairwise_reachability():
    rng = random.Random(2718)
    for _ in range(120):
        graph = _random_digraph(rng)
        part = strong_components(graph)
        reach = {v: set(reachable_from(graph, v)) for v in graph.vertices}
        for a in graph.vertices:
            for b in graph.vertices:
                same = part.id_of(a) == part.id_of(b)
                mutual = b in reach[a] and a in reach[b]
                assert same == mutual
