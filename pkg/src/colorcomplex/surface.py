"""Triangulations of orientable surfaces stored as rotation systems.

A triangulation on ``n`` vertices is given by one cyclic neighbour list per
vertex.  Faces are traced with the rule: the dart ``u -> v`` is followed by
``v -> w`` where ``w`` is the successor of ``u`` in the rotation at ``v``.
"""

from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    AsymmetricAdjacency,
    NonTriangularFace,
    NotConnected,
    NotSimple,
    TooSmall,
)

Face = tuple[int, int, int]


class Triangulation:
    """An immutable, validated triangulation of an orientable surface.

    ``rot[v]`` is the cyclic sequence of neighbours of ``v``, stored starting
    from its smallest neighbour.  The constructor validates;
    :func:`from_rotation_system` is the public entry point.
    """

    __slots__ = ("n", "rot", "_pos", "faces", "num_edges", "genus", "_code", "_masks")

    def __init__(self, rot: Sequence[Sequence[int]]):
        rot = tuple(_rotate_to_min([int(u) for u in r]) for r in rot)
        n = len(rot)
        if n < 4:
            raise TooSmall(f"a triangulation needs at least 4 vertices, got {n}")
        pos = []
        for v, r in enumerate(rot):
            p = {}
            for i, u in enumerate(r):
                if not 0 <= u < n:
                    raise NotSimple(f"vertex {v} has neighbour {u} outside 0..{n - 1}")
                if u == v:
                    raise NotSimple(f"self-loop at vertex {v}")
                if u in p:
                    raise NotSimple(f"neighbour {u} repeated in the rotation of {v}")
                p[u] = i
            pos.append(p)
        for v, r in enumerate(rot):
            for u in r:
                if v not in pos[u]:
                    raise AsymmetricAdjacency(f"{u} is in the rotation of {v} but not vice versa")
        self.n = n
        self.rot = rot
        self._pos = tuple(pos)
        self.faces = self._trace()
        self.num_edges = sum(len(r) for r in rot) // 2
        self._check_connected()
        # Euler genus of an orientable surface: 2 - V + E - F
        self.genus = 2 - n + self.num_edges - len(self.faces)
        self._code = None
        self._masks = None

    def _trace(self):
        rot, pos = self.rot, self._pos
        seen = set()
        faces = []
        for u in range(self.n):
            for v in rot[u]:
                if (u, v) in seen:
                    continue
                cycle = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    cycle.append(a)
                    r = rot[b]
                    a, b = b, r[(pos[b][a] + 1) % len(r)]
                    if len(cycle) > 3:
                        break
                if len(cycle) != 3 or (a, b) != (u, v) or len(set(cycle)) != 3:
                    raise NonTriangularFace(f"face through dart {u}->{v} is not a triangle")
                faces.append(_normalize_face(cycle))
        faces.sort()
        return tuple(faces)

    def _check_connected(self):
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in self.rot[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) != self.n:
            raise NotConnected(f"only {len(seen)} of {self.n} vertices are reachable from 0")

    def __repr__(self):
        return f"Triangulation(n={self.n}, edges={self.num_edges}, genus={self.genus})"

    def __eq__(self, other):
        return isinstance(other, Triangulation) and self.rot == other.rot

    def __hash__(self):
        return hash(self.rot)

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    @property
    def degrees(self) -> list[int]:
        return [len(r) for r in self.rot]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._pos[u]

    def position(self, v: int, u: int) -> int:
        """Index of ``u`` in the rotation at ``v``."""
        return self._pos[v][u]

    def successor(self, v: int, u: int) -> int:
        r = self.rot[v]
        return r[(self._pos[v][u] + 1) % len(r)]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.rot[u] if u < v]

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        if self._masks is None:
            self._masks = tuple(sum(1 << u for u in r) for r in self.rot)
        return self._masks

    def is_planar(self) -> bool:
        return self.genus == 0

    def mirror(self) -> "Triangulation":
        return Triangulation([r[::-1] for r in self.rot])

    def relabel(self, perm: Sequence[int]) -> "Triangulation":
        """Return the same map with vertex ``v`` renamed ``perm[v]``."""
        rot = [None] * self.n
        for v, r in enumerate(self.rot):
            rot[perm[v]] = [perm[u] for u in r]
        return Triangulation(rot)

    def canonical_code(self) -> bytes:
        if self._code is None:
            self._code = canonical_code_of(self.rot)
        return self._code


def _rotate_to_min(r) -> tuple[int, ...]:
    if not r:
        return ()
    i = r.index(min(r))
    return tuple(r[i:] + r[:i])


def _normalize_face(cycle) -> Face:
    i = min(range(3), key=cycle.__getitem__)
    return (cycle[i], cycle[(i + 1) % 3], cycle[(i + 2) % 3])


def from_rotation_system(rot: Sequence[Sequence[int]]) -> Triangulation:
    if not rot:
        raise TooSmall("empty rotation system")
    return Triangulation(rot)


def trace_faces(T: Triangulation) -> list[Face]:
    return list(T.faces)


def euler_genus(T: Triangulation) -> int:
    return T.genus


def class_degree_sum(T: Triangulation, vertices: Iterable[int]) -> int:
    return sum(len(T.rot[v]) for v in vertices)


def _connected_without(masks, alive: int) -> bool:
    if not alive:
        return True
    start = alive & -alive
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= masks[low.bit_length() - 1]
            frontier ^= low
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen == alive


def vertex_connectivity(T: Triangulation, cap: int = 6) -> int:
    """Vertex connectivity of ``T``, truncated at ``cap``.

    Separators are searched exhaustively by size.  Planar triangulations are
    3-connected, so their search starts at size 3; the minimum degree bounds it
    from above.
    """
    if cap > 6:
        raise ValueError("cap must be at most 6")
    n = T.n
    masks = T.adjacency_masks
    full = (1 << n) - 1
    # removing all neighbours of a vertex isolates it (or leaves K_1 when n = deg + 1)
    upper = min(min(T.degrees), n - 1, cap)
    floor = 3 if T.genus == 0 else 1
    for size in range(floor, upper):
        for cut in combinations(range(n), size):
            alive = full
            for v in cut:
                alive &= ~(1 << v)
            if not _connected_without(masks, alive):
                return size
    return upper


def _start_key(rot, v):
    return (len(rot[v]), sorted(len(rot[u]) for u in rot[v]))


def canonical_code_of(rot: Sequence[Sequence[int]]) -> bytes:
    """Minimal breadth-first map code over all starting darts and both orientations.

    Two rotation systems get the same code exactly when the maps are
    isomorphic, possibly by an orientation-reversing isomorphism.  Only darts
    leaving vertices with the smallest (degree, neighbour degrees) key are
    tried; that set is itself isomorphism invariant.
    """
    n = len(rot)
    pos = [{u: i for i, u in enumerate(r)} for r in rot]
    keys = [_start_key(rot, v) for v in range(n)]
    kmin = min(keys)
    starts = [v for v in range(n) if keys[v] == kmin]
    best = None
    for v0 in starts:
        for w0 in rot[v0]:
            for step in (1, -1):
                best = _bfs_code(rot, pos, n, v0, w0, step, best)
    if n < 256:
        return bytes(best)
    return b"".join(x.to_bytes(2, "big") for x in best)


def _bfs_code(rot, pos, n, v0, w0, step, best):
    # Builds the code for one start; abandons it as soon as it exceeds ``best``.
    number = [0] * n
    ref = [0] * n
    number[v0] = 1
    ref[v0] = w0
    order = [v0]
    code = []
    nxt = 2
    k = 0
    equal = best is not None
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        r = rot[v]
        d = len(r)
        i = pos[v][ref[v]]
        for j in range(d):
            u = r[(i + step * j) % d]
            if not number[u]:
                number[u] = nxt
                nxt += 1
                ref[u] = v
                order.append(u)
            x = number[u]
            if equal:
                y = best[k]
                if x > y:
                    return best
                if x < y:
                    equal = False
            code.append(x)
            k += 1
        if equal and best[k] != 0:
            equal = False
        code.append(0)
        k += 1
    if equal:
        return best
    return code
