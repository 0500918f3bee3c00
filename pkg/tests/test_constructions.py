import random

import networkx as nx
import pytest

from colorcomplex.coloring import Parity, enumerate_colorings, homology_degree, parity
from colorcomplex.complex import build_complex, components, signature
from colorcomplex.constructions import (
    builtin,
    from_faces,
    q_k,
    q_k_prime,
    stack_vertex,
    torus_grid,
    triangle_sum,
    triangle_sum_maps,
)
from colorcomplex.errors import DegenerateIdentification, TorusTooSmall, UnknownName
from colorcomplex.surface import vertex_connectivity

from conftest import to_nx


@pytest.mark.parametrize("k", range(6))
@pytest.mark.parametrize("family", [q_k, q_k_prime])
def test_ring_structure(k, family):
    T, lab = family(k)
    assert T.n == 4 * (k + 2)
    assert T.genus == 0
    for i in range(k + 2):
        a, b, c, d = lab.ring(i)
        for u, v in ((a, b), (b, c), (c, d), (d, a)):
            assert T.has_edge(u, v)
    for i in range(k + 1):
        for p, q in (("a", "a"), ("b", "b"), ("c", "c"), ("d", "d"),
                     ("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")):
            assert T.has_edge(lab.vertex(i + 1, p), lab.vertex(i, q))


@pytest.mark.parametrize("k", range(6))
def test_odd_degree_vertices(k):
    T, lab = q_k(k)
    odd = {v for v in range(T.n) if T.degree(v) % 2}
    assert odd == {lab.vertex(0, "a"), lab.vertex(0, "c"), lab.vertex(k + 1, "a"),
                   lab.vertex(k + 1, "c")}
    P, _ = q_k_prime(k)
    odd = {v for v in range(P.n) if P.degree(v) % 2}
    assert odd == {lab.vertex(0, "a"), lab.vertex(0, "c"), lab.vertex(k + 1, "b"),
                   lab.vertex(k + 1, "d")}


@pytest.mark.parametrize("k", range(1, 5))
def test_four_connected(k):
    assert vertex_connectivity(q_k(k)[0]) == 4
    assert nx.node_connectivity(to_nx(q_k_prime(k)[0])) == 4


def test_q0():
    T, _ = q_k(0)
    assert T.n == 8
    comps = components(build_complex(T))
    assert sorted((c.coloring_count, c.parity) for c in comps) == [(1, Parity.EVEN), (2, Parity.ODD)]


def test_q1_and_q1_prime_not_isomorphic():
    assert not nx.is_isomorphic(to_nx(q_k(1)[0]), to_nx(q_k_prime(1)[0]))


def _colors_on(f, ring):
    lab = f.labels()
    return [lab[v] for v in ring]


@pytest.mark.parametrize("k", range(1, 5))
def test_type_counts_and_homology(k):
    T, lab = q_k(k)
    cols = enumerate_colorings(T)
    type1 = [f for f in cols if len(set(_colors_on(f, lab.ring(0)))) == 4]
    type2 = [f for f in cols if len(set(_colors_on(f, lab.ring(0)))) == 3]
    assert len(type1) == 2 ** (k + 1) and len(type2) == 2 ** k
    for f in type2:
        ring = _colors_on(f, lab.ring(0))
        assert ring[1] == ring[3] and ring[0] != ring[2]
    for f in cols:
        if parity(T, f) is Parity.ODD:
            assert homology_degree(T, f) % 2 == 0
        else:
            assert homology_degree(T, f) % 2 == 1


def test_type2_multiplicity_of_shared_class():
    # colourings of type II sharing the class through b_0 and d_0: 2^floor((k+1)/2)
    for k in range(1, 6):
        T, lab = q_k(k)
        b0, d0 = lab.vertex(0, "b"), lab.vertex(0, "d")
        counts = {}
        for f in enumerate_colorings(T):
            for c in f.classes:
                if b0 in c and d0 in c:
                    counts[c] = counts.get(c, 0) + 1
        assert set(counts.values()) == {2 ** ((k + 1) // 2)}


def test_k4_sum_k4():
    K = builtin("k4")
    S = triangle_sum(K, K.faces[0], K, K.faces[1], K.faces[1])
    assert S.n == 5 and S.genus == 0
    assert sorted(S.degrees) == [3, 3, 4, 4, 4]


def test_triangle_sum_on_torus():
    A = torus_grid(3, 3)
    B = torus_grid(3, 4)
    S = triangle_sum(A, A.faces[0], B, B.faces[2], B.faces[2][::-1])
    assert S.n == 9 + 12 - 3
    assert S.genus == 4


def test_triangle_sum_separating_triangle():
    G = q_k(1)[0]
    S = triangle_sum(G, G.faces[0], G, G.faces[0], G.faces[0])
    tri = set(G.faces[0])
    assert all(set(f) != tri for f in S.faces)
    assert vertex_connectivity(S) == 3


def test_triangle_sum_rejects_nonface():
    K = builtin("k4")
    Q = q_k(1)[0]
    a, b, c = Q.faces[0]
    with pytest.raises(DegenerateIdentification):
        triangle_sum(Q, (a, b, next(v for v in range(Q.n) if v not in Q.faces[0] and not
                                   (Q.has_edge(a, v) and Q.has_edge(b, v)))), K, K.faces[0], K.faces[0])
    with pytest.raises(DegenerateIdentification):
        triangle_sum(K, K.faces[0], K, K.faces[0], (0, 0, 1))


def test_triangle_sum_coloring_bijection_and_j_additivity():
    G, H = q_k(1)[0], builtin("icosahedron")
    rng = random.Random(5)
    for _ in range(5):
        fg, fh = rng.choice(G.faces), rng.choice(H.faces)
        corr = list(fh)
        rng.shuffle(corr)
        S, hmap = triangle_sum_maps(G, fg, H, fh, corr)
        cg, ch, cs = enumerate_colorings(G), enumerate_colorings(H), enumerate_colorings(S)
        pairs = set()
        for f in cs:
            lab = f.labels()
            restrict_g = tuple(sorted(tuple(v for v in c if v < G.n) for c in f.classes))
            restrict_h = tuple(sorted(tuple(sorted(u for u in range(H.n) if hmap[u] in c))
                                      for c in f.classes))
            pairs.add((restrict_g, restrict_h))
            for x, cls in enumerate(f.classes):
                from colorcomplex.coloring import Coloring, j_formula

                fG, fH = Coloring(restrict_g), Coloring(restrict_h)
                jg = j_formula(G, fG, fG.index_of(tuple(v for v in cls if v < G.n)))
                jh = j_formula(H, fH, fH.index_of(tuple(sorted(u for u in range(H.n)
                                                                if hmap[u] in cls))))
                assert j_formula(S, f, x) == jg + jh
            assert len(set(lab)) == 4
        assert len(cs) == len(cg) * len(ch) == len(pairs)
        assert {p[0] for p in pairs} == {f.classes for f in cg}
        assert {p[1] for p in pairs} == {f.classes for f in ch}


def test_stack_vertex_example1():
    G = q_k(1)[0]
    for face in G.faces[:5]:
        S = stack_vertex(G, face)
        assert S.n == 13 and S.degree(12) == 3
        assert signature(build_complex(S)) == signature(build_complex(G))
        assert vertex_connectivity(S) == 3


def test_from_faces_rejects_nonclosing_star():
    with pytest.raises(Exception):
        from_faces([(0, 1, 2), (0, 2, 3)])


def test_builtins():
    ico = builtin("icosahedron")
    assert ico.n == 12 and set(ico.degrees) == {5} and ico.genus == 0
    assert builtin("example1").canonical_code() == q_k(1)[0].canonical_code()
    assert builtin("example2").canonical_code() == q_k_prime(1)[0].canonical_code()
    t = builtin("torus_grid(4,4)")
    assert (t.n, t.genus) == (16, 2)
    assert builtin("torus_grid:4,4").rot == t.rot
    assert enumerate_colorings(t)
    with pytest.raises(UnknownName):
        builtin("dodecahedron")
    with pytest.raises(TorusTooSmall):
        builtin("torus_grid(2,5)")
