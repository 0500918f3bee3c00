"""The 4-coloring complex: classes as nodes, colorings as 4-cliques."""

import json
from dataclasses import dataclass, field
from typing import Sequence

from .coloring import Coloring, Parity, enumerate_colorings, kempe_chains, kempe_change, j_formula
from .errors import MixedParityComponent, NoColorings
from .surface import Triangulation


class UnionFind:
    """Union-find with path halving and union by size."""

    def __init__(self, size):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, a):
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def groups(self):
        out: dict[int, list[int]] = {}
        for i in range(len(self.parent)):
            out.setdefault(self.find(i), []).append(i)
        return sorted(out.values())


@dataclass(frozen=True)
class Component:
    classes: tuple[int, ...]
    colorings: tuple[int, ...]
    parity: Parity

    @property
    def coloring_count(self) -> int:
        return len(self.colorings)

    @property
    def class_count(self) -> int:
        return len(self.classes)


@dataclass(frozen=True, order=True)
class Signature:
    even: int
    odd: int
    profile: tuple[tuple[int, str], ...] = field(default=())

    @property
    def num_components(self) -> int:
        return self.even + self.odd

    def __str__(self):
        return f"(even: {self.even}, odd: {self.odd})"


@dataclass(frozen=True)
class ColoringComplex:
    """Deduplicated colour classes plus one 4-clique per coloring.

    ``parities`` holds the parity of each coloring; ``n`` is the vertex count
    of the underlying triangulation.
    """

    n: int
    classes: tuple[tuple[int, ...], ...]
    cliques: tuple[tuple[int, int, int, int], ...]
    parities: tuple[Parity, ...]

    @classmethod
    def empty(cls, n: int) -> "ColoringComplex":
        return cls(n, (), (), ())

    @property
    def is_empty(self) -> bool:
        return not self.cliques

    def edges(self) -> list[tuple[int, int]]:
        out = set()
        for q in self.cliques:
            for i in range(4):
                for j in range(i + 1, 4):
                    a, b = q[i], q[j]
                    out.add((a, b) if a < b else (b, a))
        return sorted(out)

    def colorings(self) -> list[Coloring]:
        return [Coloring.from_classes(self.classes[i] for i in q) for q in self.cliques]


def build_complex(T: Triangulation, colorings: Sequence[Coloring] | None = None) -> ColoringComplex:
    if colorings is None:
        colorings = enumerate_colorings(T)
    if not colorings:
        raise NoColorings(f"{T!r} has no 4-coloring with four nonempty classes")
    index: dict[tuple[int, ...], int] = {}
    cliques = []
    parities = []
    for f in colorings:
        q = []
        for c in f.classes:
            if c not in index:
                index[c] = len(index)
            q.append(index[c])
        cliques.append(tuple(q))
        parities.append(Parity.of(j_formula(T, f, 0)))
    classes = [None] * len(index)
    for c, i in index.items():
        classes[i] = c
    return ColoringComplex(T.n, tuple(classes), tuple(cliques), tuple(parities))


def components(B: ColoringComplex, verify: bool = True) -> list[Component]:
    """Connected components, ordered by their smallest class index.

    A component's parity is read from its first coloring; with ``verify`` every
    other member is checked against it.
    """
    uf = UnionFind(len(B.classes))
    for q in B.cliques:
        for c in q[1:]:
            uf.union(q[0], c)
    by_root: dict[int, list[int]] = {}
    for k, q in enumerate(B.cliques):
        by_root.setdefault(uf.find(q[0]), []).append(k)
    out = []
    for group in uf.groups():
        members = by_root[uf.find(group[0])]
        par = B.parities[members[0]]
        if verify:
            for k in members:
                if B.parities[k] is not par:
                    raise MixedParityComponent(
                        f"coloring {k} is {B.parities[k]} in a {par} component")
        out.append(Component(tuple(group), tuple(members), par))
    return out


def signature_of(comps: Sequence[Component]) -> Signature:
    even = sum(1 for c in comps if c.parity is Parity.EVEN)
    profile = tuple(sorted((c.coloring_count, c.parity.value) for c in comps))
    return Signature(even, len(comps) - even, profile)


def signature(B: ColoringComplex) -> Signature:
    return signature_of(components(B))


def kempe_classes(T: Triangulation, colorings: Sequence[Coloring]) -> list[list[int]]:
    """Partition coloring indices into Kempe equivalence classes.

    Single-chain swaps generate the relation: swapping several chains of one
    pair is a sequence of single swaps, because a swap leaves the chains of
    that pair unchanged.  Swaps that empty a class leave the set of 4-class
    colorings and are ignored.
    """
    index = {f: i for i, f in enumerate(colorings)}
    uf = UnionFind(len(colorings))
    for i, f in enumerate(colorings):
        for x in range(4):
            for y in range(x + 1, 4):
                chains = kempe_chains(T, f, x, y)
                if chains.count < 2:
                    continue
                for k in range(chains.count):
                    j = index.get(kempe_change(T, f, x, y, [k]))
                    if j is not None:
                        uf.union(i, j)
    return uf.groups()


def complex_to_dict(B: ColoringComplex) -> dict:
    comps = components(B) if not B.is_empty else []
    return {
        "n": B.n,
        "empty": B.is_empty,
        "classes": [list(c) for c in B.classes],
        "edges": [list(e) for e in B.edges()],
        "cliques": [list(q) for q in B.cliques],
        "parities": [p.value for p in B.parities],
        "components": [
            {
                "classes": list(c.classes),
                "colorings": list(c.colorings),
                "parity": c.parity.value,
                "coloring_count": c.coloring_count,
            }
            for c in comps
        ],
    }


def complex_from_dict(doc: dict) -> ColoringComplex:
    return ColoringComplex(
        doc["n"],
        tuple(tuple(c) for c in doc["classes"]),
        tuple(tuple(q) for q in doc["cliques"]),
        tuple(Parity(p) for p in doc["parities"]),
    )


def _dot(B: ColoringComplex) -> str:
    lines = ["graph B {", "  node [shape=box, style=filled, fontname=Helvetica];"]
    if B.is_empty:
        lines.append('  label="empty complex: no 4-colorings";')
        lines.append("}")
        return "\n".join(lines) + "\n"
    fill = {Parity.EVEN: "lightblue", Parity.ODD: "salmon"}
    for k, comp in enumerate(components(B)):
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append(f'    label="component {k} ({comp.parity.value}, '
                     f'{comp.coloring_count} colorings)";')
        for c in comp.classes:
            label = "{" + ",".join(str(v) for v in B.classes[c]) + "}"
            lines.append(f'    c{c} [label="{label}", fillcolor={fill[comp.parity]}];')
        lines.append("  }")
    for a, b in B.edges():
        lines.append(f"  c{a} -- c{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_complex(B: ColoringComplex, format: str = "json") -> bytes:
    if format == "dot":
        return _dot(B).encode()
    if format == "json":
        return (json.dumps(complex_to_dict(B), indent=1) + "\n").encode()
    raise ValueError(f"unknown export format {format!r}")
