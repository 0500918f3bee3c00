"""4-colorings, Kempe chains, Tutte's parity functional and the homology degree."""

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotPlanar, SameClass, UnknownChain
from .surface import Triangulation


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of(cls, value: int) -> "Parity":
        return cls.ODD if value % 2 else cls.EVEN

    def __str__(self):
        return self.value


@dataclass(frozen=True, order=True)
class Coloring:
    """A partition of the vertex set into independent colour classes.

    ``classes`` holds sorted vertex tuples, ordered by their minimum vertex, so
    two colorings differing only by a permutation of colours compare equal.
    """

    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Coloring":
        groups: dict[int, list[int]] = {}
        for v, c in enumerate(labels):
            groups.setdefault(c, []).append(v)
        return cls(tuple(sorted(tuple(g) for g in groups.values())))

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]]) -> "Coloring":
        return cls(tuple(sorted(tuple(sorted(c)) for c in classes)))

    def labels(self) -> list[int]:
        """Colour of each vertex, the class index in canonical order."""
        out = [0] * sum(len(c) for c in self.classes)
        for i, cls_ in enumerate(self.classes):
            for v in cls_:
                out[v] = i
        return out

    def index_of(self, vertex_class: Sequence[int]) -> int:
        return self.classes.index(tuple(vertex_class))

    def __iter__(self):
        return iter(self.classes)

    def __len__(self):
        return len(self.classes)


def is_proper(T: Triangulation, f: Coloring, min_classes: int = 4) -> bool:
    """Whether ``f`` partitions V(T) into independent classes, at least ``min_classes``
    and at most four of them."""
    labels = f.labels()
    if len(labels) != T.n or not min_classes <= len(f.classes) <= 4 or not all(f.classes):
        return False
    return all(labels[u] != labels[v] for u, v in T.edges())


def _search_order(T: Triangulation) -> list[int]:
    # each next vertex has the most already-ordered neighbours
    first = T.faces[0]
    order = list(first)
    placed = set(order)
    weight = [0] * T.n
    for v in order:
        for u in T.rot[v]:
            weight[u] += 1
    while len(order) < T.n:
        v = max((u for u in range(T.n) if u not in placed), key=lambda u: (weight[u], -u))
        order.append(v)
        placed.add(v)
        for u in T.rot[v]:
            weight[u] += 1
    return order


def enumerate_colorings(T: Triangulation) -> list[Coloring]:
    """All 4-colorings of ``T`` with four nonempty classes, as sorted partitions.

    The first face is pinned to colours 0, 1, 2, which leaves no residual
    colour symmetry; the result is still deduplicated through the canonical
    partition form.
    """
    order = _search_order(T)
    n = T.n
    masks = T.adjacency_masks
    labels = [-1] * n
    used = [0, 0, 0, 0]  # bitmask of vertices per colour
    for c, v in enumerate(order[:3]):
        labels[v] = c
        used[c] |= 1 << v
    found = set()
    rest = order[3:]
    depth_max = len(rest)

    def extend(depth):
        if depth == depth_max:
            if used[3]:
                found.add(Coloring.from_labels(labels))
            return
        v = rest[depth]
        nb = masks[v]
        bit = 1 << v
        for c in range(4):
            if not used[c] & nb:
                labels[v] = c
                used[c] |= bit
                extend(depth + 1)
                used[c] ^= bit
        labels[v] = -1

    extend(0)
    return sorted(found)


@dataclass(frozen=True)
class KempeChainSet:
    """Components of the subgraph induced by classes ``x`` and ``y``."""

    x: int
    y: int
    chains: tuple[frozenset, ...]
    edge_count: int

    @property
    def count(self) -> int:
        return len(self.chains)


def kempe_chains(T: Triangulation, f: Coloring, x: int, y: int) -> KempeChainSet:
    if x == y:
        raise SameClass(f"Kempe chains need two different classes, got {x} twice")
    members = set(f.classes[x]) | set(f.classes[y])
    chains = []
    seen = set()
    edges = 0
    for s in sorted(members):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            for u in T.rot[v]:
                if u in members:
                    if u > v:
                        edges += 1
                    if u not in seen:
                        seen.add(u)
                        comp.add(u)
                        stack.append(u)
        chains.append(frozenset(comp))
    return KempeChainSet(x, y, tuple(chains), edges)


def kempe_change(T: Triangulation, f: Coloring, x: int, y: int,
                 chosen: Iterable[int]) -> Coloring:
    """Swap classes ``x`` and ``y`` on the chains with the given indices.

    The result has three classes when a swapped chain held all of ``x`` or ``y``
    (possible only on Eulerian triangulations).
    """
    chainset = kempe_chains(T, f, x, y)
    labels = f.labels()
    for idx in set(chosen):
        if not 0 <= idx < chainset.count:
            raise UnknownChain(f"chain index {idx} out of range 0..{chainset.count - 1}")
        for v in chainset.chains[idx]:
            labels[v] = y if labels[v] == x else x
    return Coloring.from_labels(labels)


def j_kempe(T: Triangulation, f: Coloring, x: int) -> int:
    """Tutte's alternating count of Kempe chains with class ``x`` in the leading role."""
    if T.genus != 0:
        raise NotPlanar("the Kempe-chain form of J is only defined for plane triangulations")
    others = [i for i in range(4) if i != x]
    total = sum(kempe_chains(T, f, x, o).count for o in others)
    b, c, d = others
    total -= kempe_chains(T, f, b, c).count
    total -= kempe_chains(T, f, b, d).count
    total -= kempe_chains(T, f, c, d).count
    return total


def j_formula(T: Triangulation, f: Coloring, x: int) -> int:
    cls_ = f.classes[x]
    deg = sum(len(T.rot[v]) for v in cls_)
    return 2 * len(cls_) - deg + T.n - 3 + T.genus


def parity(T: Triangulation, f: Coloring) -> Parity:
    return Parity.of(j_formula(T, f, 0))


def _triple_orientation(triple):
    # Orientation induced on the face of the tetrahedron 0123 missing ``m``,
    # signed so that the face (0, 1, 2) is positive.
    missing = ({0, 1, 2, 3} - set(triple)).pop()
    ordered = tuple(sorted(triple))
    return ordered if missing % 2 else (ordered[0], ordered[2], ordered[1])


def homology_degree(T: Triangulation, f: Coloring, triple: Sequence[int] = (0, 1, 2)) -> int:
    """Signed number of faces mapped onto one face of the tetrahedron.

    A face counts +1 when its traced colour sequence is a cyclic shift of the
    target face's orientation, -1 when it is a cyclic shift of the reverse.
    """
    target = _triple_orientation(triple)
    a, b, c = target
    positive = {(a, b, c), (b, c, a), (c, a, b)}
    negative = {(a, c, b), (c, b, a), (b, a, c)}
    labels = f.labels()
    deg = 0
    for u, v, w in T.faces:
        col = (labels[u], labels[v], labels[w])
        if col in positive:
            deg += 1
        elif col in negative:
            deg -= 1
    return deg
