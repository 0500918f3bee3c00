import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from colorcomplex.constructions import builtin, q_k, q_k_prime, stack_vertex, torus_grid
from colorcomplex.errors import (
    AsymmetricAdjacency,
    NonTriangularFace,
    NotConnected,
    NotSimple,
    TooSmall,
)
from colorcomplex.surface import (
    class_degree_sum,
    euler_genus,
    from_rotation_system,
    trace_faces,
    vertex_connectivity,
)

from conftest import to_nx

K4_ROT = [[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]]


def test_k4_from_rotation_system():
    T = from_rotation_system(K4_ROT)
    assert len(trace_faces(T)) == 4
    assert euler_genus(T) == 0
    assert T.num_edges == 6


def test_octahedron():
    T = builtin("octahedron")
    assert len(T.faces) == 8
    assert T.genus == 0


def test_deleting_an_edge_leaves_a_quadrilateral():
    rot = [list(r) for r in K4_ROT]
    rot[0].remove(1)
    rot[1].remove(0)
    with pytest.raises(NonTriangularFace):
        from_rotation_system(rot)


@pytest.mark.parametrize("rot, err", [
    ([[1, 2], [0, 2], [0, 1]], TooSmall),
    ([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 2]], NotSimple),
    ([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 3]], NotSimple),
    ([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2]], AsymmetricAdjacency),
    ([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 9]], NotSimple),
])
def test_invalid_rotation_systems(rot, err):
    with pytest.raises(err):
        from_rotation_system(rot)


def test_two_disjoint_tetrahedra_are_rejected():
    rot = K4_ROT + [[v + 4 for v in r] for r in K4_ROT]
    with pytest.raises(NotConnected):
        from_rotation_system(rot)


def test_faces_cover_each_dart_once():
    for T in (builtin("icosahedron"), q_k(2)[0], torus_grid(4, 5)):
        darts = [(f[i], f[(i + 1) % 3]) for f in T.faces for i in range(3)]
        assert len(darts) == len(set(darts)) == 2 * T.num_edges


def test_q1_face_count():
    T, _ = q_k(1)
    assert len(T.faces) == 2 * 12 - 4


def test_torus_grid_euler_arithmetic():
    T = torus_grid(4, 4)
    assert (T.n, T.num_edges, len(T.faces), T.genus) == (16, 48, 32, 2)


@pytest.mark.parametrize("k", range(5))
def test_qk_is_planar(k):
    for T in (q_k(k)[0], q_k_prime(k)[0]):
        assert T.genus == 0
        assert nx.check_planarity(to_nx(T))[0]


def test_euler_relations(small_triangulations):
    for graphs in small_triangulations.values():
        for T in graphs:
            F, E = len(T.faces), T.num_edges
            assert 3 * F == 2 * E
            assert F == 2 * T.n - 4 + 2 * T.genus
            assert E == 3 * T.n - 6 + 3 * T.genus


def test_vertex_connectivity_examples():
    assert vertex_connectivity(q_k(1)[0]) == 4
    assert vertex_connectivity(builtin("icosahedron")) == 5
    K = builtin("k4")
    assert vertex_connectivity(stack_vertex(K, K.faces[0])) == 3
    assert vertex_connectivity(K) == 3


def test_vertex_connectivity_matches_networkx(small_triangulations):
    graphs = [T for n in (6, 7, 8, 9) for T in small_triangulations[n]]
    graphs += [builtin("icosahedron"), q_k(2)[0], torus_grid(3, 4)]
    for T in graphs:
        assert vertex_connectivity(T, 6) == min(6, nx.node_connectivity(to_nx(T)))


def test_vertex_connectivity_cap():
    assert vertex_connectivity(builtin("icosahedron"), cap=4) == 4
    with pytest.raises(ValueError):
        vertex_connectivity(builtin("k4"), cap=7)


def test_class_degree_sum():
    K = builtin("k4")
    assert class_degree_sum(K, [2]) == 3
    T, lab = q_k(1)
    odd = [lab.vertex(0, "a"), lab.vertex(0, "c"), lab.vertex(2, "a"), lab.vertex(2, "c")]
    assert class_degree_sum(T, odd) == 20
    assert class_degree_sum(T, range(T.n)) == 2 * T.num_edges


def _random_relabel(T, rng):
    perm = list(range(T.n))
    rng.shuffle(perm)
    return T.relabel(perm)


@pytest.mark.parametrize("name", ["k4", "octahedron", "icosahedron", "example1", "torus_grid(3,4)"])
def test_canonical_code_relabel_invariant(name):
    T = builtin(name)
    rng = random.Random(name)
    code = T.canonical_code()
    for _ in range(100):
        assert _random_relabel(T, rng).canonical_code() == code


def test_canonical_code_separates_examples():
    Q, _ = q_k(1)
    P, _ = q_k_prime(1)
    assert Q.canonical_code() != P.canonical_code()
    assert Q.mirror().canonical_code() == Q.canonical_code()


def test_canonical_codes_distinguish_nonisomorphic_graphs(small_triangulations):
    graphs = small_triangulations[8]
    for i, A in enumerate(graphs):
        for B in graphs[i + 1:]:
            assert not nx.is_isomorphic(to_nx(A), to_nx(B))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(range(50)), st.randoms(use_true_random=False))
def test_canonical_code_invariance_property(index, rng):
    from colorcomplex.enumeration import enumerate_triangulations

    T = enumerate_triangulations(9)[index]
    U = _random_relabel(T, rng)
    if rng.random() < 0.5:
        U = U.mirror()
    assert U.canonical_code() == T.canonical_code()
