"""Exhaustive generation of planar triangulations by diagonal flips.

Any two triangulations of the sphere on the same number of vertices are
joined by a sequence of diagonal flips (Wagner, 1936), so the breadth-first
closure of one seed under flips, with isomorphs removed by canonical code,
visits every isomorphism class exactly once.
"""

import logging
from collections import deque
from typing import Iterator

from .constructions import k4, stack_vertex
from .errors import NonFlippable, OutOfRange
from .surface import Triangulation, canonical_code_of

log = logging.getLogger(__name__)

MAX_N = 14


def _flip_rot(rot, u, v):
    """Flip ``uv`` on a list-of-lists rotation system; None if not flippable."""
    ru, rv = rot[u], rot[v]
    x = rv[(rv.index(u) + 1) % len(rv)]
    y = ru[(ru.index(v) + 1) % len(ru)]
    if x == y or len(ru) <= 3 or len(rv) <= 3 or y in rot[x]:
        return None
    new = list(rot)
    nu = list(ru)
    nu.remove(v)
    nv = list(rv)
    nv.remove(u)
    # in face (u, v, x) v precedes u around x; in face (v, u, y) u precedes v around y
    nx = list(rot[x])
    nx.insert(nx.index(v) + 1, y)
    ny = list(rot[y])
    ny.insert(ny.index(u) + 1, x)
    new[u], new[v], new[x], new[y] = nu, nv, nx, ny
    return new


def flip_edge(T: Triangulation, edge: tuple[int, int]) -> Triangulation:
    """Replace the edge ``uv`` by the other diagonal of its quadrilateral."""
    u, v = edge
    if not T.has_edge(u, v):
        raise NonFlippable(f"{u}{v} is not an edge")
    new = _flip_rot([list(r) for r in T.rot], u, v)
    if new is None:
        raise NonFlippable(f"flipping {u}{v} would create a loop or a multiple edge")
    return Triangulation(new)


def stacked_seed(n: int) -> Triangulation:
    T = k4()
    while T.n < n:
        T = stack_vertex(T, T.faces[0])
    return T


def enumerate_triangulations(n: int) -> list[Triangulation]:
    """One representative per isomorphism class of planar triangulations on ``n`` vertices.

    Representatives are returned sorted by canonical code.
    """
    if not 4 <= n <= MAX_N:
        raise OutOfRange(f"n must lie in 4..{MAX_N}, got {n}")
    seed = stacked_seed(n)
    seen = {seed.canonical_code(): [list(r) for r in seed.rot]}
    queue = deque([seen[seed.canonical_code()]])
    while queue:
        rot = queue.popleft()
        for u in range(n):
            for v in rot[u]:
                if v < u:
                    continue
                new = _flip_rot(rot, u, v)
                if new is None:
                    continue
                code = canonical_code_of(new)
                if code not in seen:
                    seen[code] = new
                    queue.append(new)
    log.info("n=%d: %d triangulations", n, len(seen))
    return [_with_code(seen[c], c) for c in sorted(seen)]


def _with_code(rot, code) -> Triangulation:
    T = Triangulation(rot)
    T._code = code
    return T


def iter_triangulations(n_values) -> Iterator[Triangulation]:
    for n in n_values:
        yield from enumerate_triangulations(n)
