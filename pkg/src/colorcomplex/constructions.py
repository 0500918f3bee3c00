"""Graph families and reference triangulations."""

import math
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

import numpy as np

from .errors import DegenerateIdentification, TorusTooSmall, UnknownName
from .surface import Face, Triangulation

POSITIONS = "abcd"


@dataclass(frozen=True)
class RingLabeling:
    """Vertex ids of the nested 4-cycles ``D_i = a_i b_i c_i d_i``, i = 0..k+1."""

    k: int

    def vertex(self, ring: int, position: str) -> int:
        if not 0 <= ring <= self.k + 1:
            raise IndexError(f"ring {ring} outside 0..{self.k + 1}")
        return 4 * ring + POSITIONS.index(position)

    def ring(self, i: int) -> tuple[int, int, int, int]:
        return tuple(4 * i + p for p in range(4))

    def name(self, v: int) -> str:
        return f"{POSITIONS[v % 4]}{v // 4}"


def from_faces(faces: Sequence[Sequence[int]]) -> Triangulation:
    """Build a triangulation from consistently oriented triangles."""
    n = 1 + max(max(f) for f in faces)
    succ: list[dict[int, int]] = [{} for _ in range(n)]
    for a, b, c in faces:
        # the dart a->b is followed by b->c, so c follows a around b
        succ[b][a] = c
        succ[c][b] = a
        succ[a][c] = b
    rot = []
    for v in range(n):
        start = min(succ[v])
        cycle = [start]
        u = succ[v][start]
        while u != start:
            cycle.append(u)
            u = succ[v][u]
            if len(cycle) > n:
                raise DegenerateIdentification(f"faces around vertex {v} do not close up")
        rot.append(cycle)
    return Triangulation(rot)


def _convex_polyhedron(points) -> Triangulation:
    pts = np.asarray(points, dtype=float)
    d = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=-1)
    edge_len = d[d > 1e-9].min()
    adj = np.isclose(d, edge_len)
    faces = []
    for a, b, c in combinations(range(len(pts)), 3):
        if adj[a, b] and adj[b, c] and adj[a, c]:
            normal = np.cross(pts[b] - pts[a], pts[c] - pts[a])
            faces.append((a, b, c) if normal @ pts[a] > 0 else (a, c, b))
    return from_faces(faces)


def k4() -> Triangulation:
    return _convex_polyhedron([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)])


def octahedron() -> Triangulation:
    # antipodal pairs are (0, 1), (2, 3), (4, 5)
    return _convex_polyhedron([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])


def icosahedron() -> Triangulation:
    phi = (1 + math.sqrt(5)) / 2
    pts = []
    for s in (1, -1):
        for t in (1, -1):
            pts += [(0, s, t * phi), (s, t * phi, 0), (t * phi, 0, s)]
    return _convex_polyhedron(pts)


def torus_grid(p: int, q: int) -> Triangulation:
    """The p x q grid on the torus with every square cut by the same diagonal."""
    if p < 3 or q < 3:
        raise TorusTooSmall(f"torus_grid({p},{q}) would have loops or multiple edges")
    rot = []
    for i in range(p):
        for j in range(q):
            rot.append([((i + di) % p) * q + (j + dj) % q
                        for di, dj in ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1))])
    return Triangulation(rot)


def _nested_rings(k: int, outer: tuple[str, str]) -> tuple[Triangulation, RingLabeling]:
    if k < 0:
        raise ValueError("k must be nonnegative")
    lab = RingLabeling(k)
    rings = k + 2
    n = 4 * rings
    coords = []
    for i in range(rings):
        for p in range(4):
            theta = math.pi / 4 * i + math.pi / 2 * p
            coords.append((2.0 ** i * math.cos(theta), 2.0 ** i * math.sin(theta)))
    nbrs: list[set[int]] = [set() for _ in range(n)]

    def join(u, v):
        nbrs[u].add(v)
        nbrs[v].add(u)

    for i in range(rings):
        for p in range(4):
            join(4 * i + p, 4 * i + (p + 1) % 4)
    for i in range(rings - 1):
        for p in range(4):
            join(4 * i + p, 4 * (i + 1) + p)
            # a_{i+1} b_i, b_{i+1} c_i, c_{i+1} d_i, d_{i+1} a_i
            join(4 * (i + 1) + p, 4 * i + (p + 1) % 4)
    join(lab.vertex(0, "a"), lab.vertex(0, "c"))
    u, v = lab.vertex(k + 1, outer[0]), lab.vertex(k + 1, outer[1])
    join(u, v)

    def angle(x, y):
        if {x, y} == {u, v}:
            # the outer diagonal leaves through the unbounded face
            return math.atan2(coords[x][1], coords[x][0])
        return math.atan2(coords[y][1] - coords[x][1], coords[y][0] - coords[x][0])

    rot = [sorted(nbrs[x], key=lambda y: angle(x, y)) for x in range(n)]
    return Triangulation(rot), lab


def q_k(k: int) -> tuple[Triangulation, RingLabeling]:
    return _nested_rings(k, ("a", "c"))


def q_k_prime(k: int) -> tuple[Triangulation, RingLabeling]:
    return _nested_rings(k, ("b", "d"))


def _oriented_face(T: Triangulation, face: Sequence[int]) -> Face:
    key = set(face)
    for f in T.faces:
        if set(f) == key:
            return f
    raise DegenerateIdentification(f"{tuple(face)} is not a face of {T!r}")


def stack_vertex(T: Triangulation, face: Sequence[int]) -> Triangulation:
    """Insert a new vertex ``T.n`` of degree 3 inside ``face``."""
    x, y, z = _oriented_face(T, face)
    w = T.n
    rot = [list(r) for r in T.rot]
    # in the traced face (x, y, z), z precedes y around x; w goes between them
    for v, before in ((x, z), (y, x), (z, y)):
        rot[v].insert(rot[v].index(before) + 1, w)
    rot.append([x, z, y])
    return Triangulation(rot)


def triangle_sum_maps(G: Triangulation, face_g: Sequence[int], H: Triangulation,
                      face_h: Sequence[int], corr) -> tuple[Triangulation, list[int]]:
    """Glue ``G`` and ``H`` along a face; also return where each H vertex went.

    ``corr`` maps each vertex of ``face_g`` to its partner in ``face_h``
    (a mapping, or a sequence aligned with ``face_g``).  G keeps its ids.
    """
    face_g = tuple(face_g)
    if not isinstance(corr, Mapping):
        corr = dict(zip(face_g, corr))
    if set(corr) != set(face_g) or set(corr.values()) != set(face_h) or len(set(face_h)) != 3:
        raise DegenerateIdentification("corr must be a bijection between the two faces")
    gx, gy, gz = _oriented_face(G, face_g)
    hface = _oriented_face(H, face_h)
    mapped = (corr[gx], corr[gy], corr[gz])
    same = any(mapped == hface[i:] + hface[:i] for i in range(3))
    if same:
        # reversing H makes the two triangles meet with opposite orientations
        H = H.mirror()
    inv = {h: g for g, h in corr.items()}
    hmap = [0] * H.n
    nxt = G.n
    for v in range(H.n):
        if v in inv:
            hmap[v] = inv[v]
        else:
            hmap[v] = nxt
            nxt += 1
    rot = [list(r) for r in G.rot] + [None] * (H.n - 3)
    for v in range(H.n):
        if v not in inv:
            rot[hmap[v]] = [hmap[u] for u in H.rot[v]]
    cyc = (gx, gy, gz)
    for i, v in enumerate(cyc):
        s, p = cyc[(i + 1) % 3], cyc[(i + 2) % 3]
        gr = G.rot[v]
        j = G.position(v, s)
        g_seq = [gr[(j + t) % len(gr)] for t in range(len(gr))]
        hv = corr[v]
        hr = H.rot[hv]
        j = H.position(hv, corr[p])
        h_seq = [hr[(j + t) % len(hr)] for t in range(len(hr))]
        if g_seq[-1] != p or h_seq[-1] != corr[s]:
            raise DegenerateIdentification("face orientations could not be matched")
        rot[v] = g_seq + [hmap[u] for u in h_seq[1:-1]]
    return Triangulation(rot), hmap


def triangle_sum(G: Triangulation, face_g: Sequence[int], H: Triangulation,
                 face_h: Sequence[int], corr) -> Triangulation:
    return triangle_sum_maps(G, face_g, H, face_h, corr)[0]


_TORUS = re.compile(r"^torus_grid[(:]\s*(\d+)\s*,\s*(\d+)\s*\)?$")


def builtin(name: str) -> Triangulation:
    """Reference graphs by name: k4, octahedron, icosahedron, example1, example2,
    and torus_grid(p,q) (also written ``torus_grid:p,q``)."""
    key = name.strip().lower()
    m = _TORUS.match(key)
    if m:
        return torus_grid(int(m.group(1)), int(m.group(2)))
    table = {
        "k4": k4,
        "tetrahedron": k4,
        "octahedron": octahedron,
        "icosahedron": icosahedron,
        "example1": lambda: q_k(1)[0],
        "example2": lambda: q_k_prime(1)[0],
    }
    if key not in table:
        raise UnknownName(f"unknown builtin graph {name!r}")
    return table[key]()


BUILTIN_NAMES = ("k4", "octahedron", "icosahedron", "example1", "example2", "torus_grid(p,q)")
