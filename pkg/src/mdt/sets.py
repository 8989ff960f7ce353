"""Finite pure sets, graph encodings, and degree analysis of dot-and-edge graphs."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Union

from .errors import InvalidGraph, NotASet
from .graph import DYAD, MONAD, TRIAD, Molecule, id_key


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class FSet:
    """A finite set given by a list of members; order and repeats are not significant."""

    members: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))


SetExpr = Union[Atom, FSet]

EMPTY = FSet()


def ordinal(n: int) -> FSet:
    """The finite von Neumann ordinal ``n``: 0 is the empty set, n+1 = n ∪ {n}."""
    out = EMPTY
    for _ in range(n):
        out = FSet(out.members + (out,))
    return out


def depth(x: SetExpr) -> int:
    if isinstance(x, Atom):
        return 0
    return 1 + max((depth(m) for m in x.members), default=0)


def show(x: SetExpr) -> str:
    """Canonical text: ``∅`` for the empty set, members sorted by (depth, text)."""
    if isinstance(x, Atom):
        return x.name
    if not x.members:
        return "∅"
    parts = sorted((depth(m), show(m)) for m in x.members)
    return "{" + ",".join(text for _, text in parts) + "}"


def extension(x: SetExpr):
    """Hashable value that is equal for extensionally equal expressions."""
    if isinstance(x, Atom):
        return ("atom", x.name)
    return frozenset(extension(m) for m in x.members)


def set_equal(a: SetExpr, b: SetExpr) -> bool:
    return extension(a) == extension(b)


def _require_set(x: SetExpr, what: str) -> FSet:
    if not isinstance(x, FSet):
        raise NotASet(f"{what} is an atom ({x.name}), not a set")
    return x


def set_member(x: SetExpr, s: SetExpr) -> bool:
    s = _require_set(s, "container")
    key = extension(x)
    return any(extension(m) == key for m in s.members)


def canonical_set(members) -> FSet:
    """Set of the given members with extensional duplicates dropped, canonically ordered."""
    seen = {}
    for m in members:
        seen.setdefault(extension(m), m)
    return FSet(sorted(seen.values(), key=lambda m: (depth(m), show(m))))


def unit_identities(a: SetExpr, b: SetExpr) -> FSet:
    """Members of ``a`` identical with some member of ``b``."""
    a = _require_set(a, "left operand")
    b = _require_set(b, "right operand")
    keys = {extension(m) for m in b.members}
    return canonical_set(m for m in a.members if extension(m) in keys)


@dataclass(frozen=True)
class SimpleGraph:
    vertices: frozenset
    edges: frozenset

    def __post_init__(self):
        vertices = frozenset(self.vertices)
        edges = set()
        for e in self.edges:
            pair = frozenset(e)
            if len(pair) != 2:
                raise InvalidGraph(f"edge {sorted(e)} does not join two distinct vertices")
            if not pair <= vertices:
                raise InvalidGraph(f"edge {sorted(pair)} names an undeclared vertex")
            edges.add(pair)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_edges(cls, vertices, edges) -> "SimpleGraph":
        return cls(frozenset(vertices), frozenset(frozenset(e) for e in edges))

    def sorted_vertices(self) -> list[str]:
        return sorted(self.vertices, key=id_key)

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(
            (tuple(sorted(e, key=id_key)) for e in self.edges),
            key=lambda e: (id_key(e[0]), id_key(e[1])),
        )

    def degree(self, v: str) -> int:
        return sum(v in e for e in self.edges)


def encode_standard(g: SimpleGraph) -> FSet:
    """``{V, E}``: the vertex set and the set of two-element endpoint sets."""
    vertices = canonical_set(Atom(v) for v in g.vertices)
    edges = canonical_set(canonical_set([Atom(a), Atom(b)]) for a, b in g.sorted_edges())
    return FSet(sorted([vertices, edges], key=lambda m: (depth(m), show(m))))


def encode_port(element: str, index: int) -> FSet:
    return canonical_set([Atom(element), ordinal(index)])


def mdt_sorts(m: Molecule) -> dict[str, FSet]:
    """The four sorts of :func:`encode_mdt`, by name."""
    ms, ds, ts = (
        canonical_set(Atom(e) for e, k in m.elements.items() if k is kind)
        for kind in (MONAD, DYAD, TRIAD)
    )
    bs = canonical_set(canonical_set([encode_port(*b.a), encode_port(*b.b)]) for b in m.bonds)
    return {"monads": ms, "dyads": ds, "triads": ts, "bonds": bs}


def encode_mdt(m: Molecule) -> FSet:
    """Four sorts: monads, dyads, triads, and bonds as pairs of ports."""
    sorts = list(mdt_sorts(m).values())
    return FSet(sorted(sorts, key=lambda s: (depth(s), show(s))))


@dataclass(frozen=True)
class VertexRole:
    degree: int
    role: str
    triads_needed: int = 1


@dataclass(frozen=True)
class DegreeReport:
    vertices: dict
    edges: dict
    histogram: dict

    def lines(self) -> list[str]:
        out = []
        for v, r in self.vertices.items():
            line = f"{v}\tdegree={r.degree}\trole={r.role}"
            if r.role.startswith("Polyad"):
                line += f"\t(realisable with {r.triads_needed} chained triads)"
            out.append(line)
        for (a, b), role in self.edges.items():
            out.append(f"{a}--{b}\trole={role}")
        hist = ", ".join(f"{d}:{n}" for d, n in self.histogram.items())
        out.append(f"histogram\t{hist}")
        return out


def kempe_degree_report(g: SimpleGraph) -> DegreeReport:
    """Dots act as triads by their capacity to connect; edges act as dyads."""
    vertices = {}
    for v in g.sorted_vertices():
        k = g.degree(v)
        if k > 3:
            vertices[v] = VertexRole(k, f"Polyad({k})", k - 2)
        else:
            vertices[v] = VertexRole(k, "Triad")
    edges = {e: "Dyad-like" for e in g.sorted_edges()}
    histogram = dict(sorted(Counter(r.degree for r in vertices.values()).items()))
    return DegreeReport(vertices, edges, histogram)


def all_labeled_graphs(labels):
    """Every simple graph whose vertex set is a subset of ``labels``."""
    labels = sorted(labels, key=id_key)
    for r in range(len(labels) + 1):
        for vs in itertools.combinations(labels, r):
            pairs = list(itertools.combinations(vs, 2))
            for mask in range(1 << len(pairs)):
                edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
                yield SimpleGraph.from_edges(vs, edges)
