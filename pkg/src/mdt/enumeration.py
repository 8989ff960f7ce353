"""Exhaustive generation of molecules up to isomorphism.

The main enumerator never looks at ports directly.  Monads can only be
leaves, so a molecule is fixed (up to isomorphism) by the bond multigraph on
its dyads and triads, how many monads hang off each of those, and how many
monad pairs and lone monads are left over.  Candidates are deduplicated by
canonical certificate.

:func:`pairing_oracle` is the slow independent check: it pairs raw ports in
every possible way and buckets the results with networkx's matcher.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .canon import certificate, from_certificate
from .errors import CapExceeded
from .graph import DYAD, MONAD, TRIAD, Bond, ElementKind, Molecule, PortRef, free_ends, is_connected

DEFAULT_CAP = 12
ORACLE_CAP = 10


@dataclass(frozen=True)
class EnumSpec:
    monads: int = 0
    dyads: int = 0
    triads: int = 0
    medads_only: bool = False
    connected_only: bool = False

    def __post_init__(self):
        if min(self.monads, self.dyads, self.triads) < 0:
            raise ValueError("element counts must be non-negative")

    @property
    def ports(self) -> int:
        return self.monads + 2 * self.dyads + 3 * self.triads

    @property
    def size(self) -> int:
        return self.monads + self.dyads + self.triads

    def trivially_empty(self) -> bool:
        # a molecule needs at least one element; a medad needs an even port count
        return self.size == 0 or (self.medads_only and self.ports % 2)

    def accepts(self, m: Molecule) -> bool:
        if m.counts() != (self.monads, self.dyads, self.triads):
            return False
        if self.medads_only and free_ends(m):
            return False
        if self.connected_only and not is_connected(m):
            return False
        return True


def _check_cap(spec: EnumSpec, cap: int) -> None:
    if spec.ports > cap:
        raise CapExceeded(f"{spec.ports} ports exceeds the cap of {cap}")


def _multigraphs(caps):
    """Every symmetric multiplicity assignment with row sums bounded by ``caps``."""
    n = len(caps)
    pairs = list(itertools.combinations(range(n), 2))
    rem = list(caps)
    chosen = {}

    def rec(i):
        if i == len(pairs):
            yield dict(chosen)
            return
        u, v = pairs[i]
        for k in range(min(rem[u], rem[v]) + 1):
            rem[u] -= k
            rem[v] -= k
            if k:
                chosen[(u, v)] = k
            yield from rec(i + 1)
            chosen.pop((u, v), None)
            rem[u] += k
            rem[v] += k

    yield from rec(0)


def _core_molecule(kinds, mult) -> Molecule:
    ids = [f"c{i}" for i in range(len(kinds))]
    used = [0] * len(kinds)
    bonds = set()
    for (u, v), k in sorted(mult.items()):
        for _ in range(k):
            bonds.add(Bond(PortRef(ids[u], used[u]), PortRef(ids[v], used[v])))
            used[u] += 1
            used[v] += 1
    return Molecule(dict(zip(ids, kinds)), bonds)


def _cores(dyads: int, triads: int, connected: bool) -> list[Molecule]:
    kinds = [DYAD] * dyads + [TRIAD] * triads
    seen = {}
    for mult in _multigraphs([k.arity for k in kinds]):
        core = _core_molecule(kinds, mult)
        if connected and not is_connected(core):
            continue
        seen.setdefault(certificate(core), core)
    return [seen[c] for c in sorted(seen)]


def _hang_monads(core: Molecule, per_element, pairs: int, lone: int) -> Molecule:
    elements = dict(core.elements)
    bonds = set(core.bonds)
    n = 0

    def new_monad():
        nonlocal n
        n += 1
        ident = f"m{n}"
        elements[ident] = MONAD
        return PortRef(ident, 0)

    ends = free_ends(core)
    for ident, count in per_element:
        slots = [p for p in ends if p.element == ident][:count]
        for port in slots:
            bonds.add(Bond(port, new_monad()))
    for _ in range(pairs):
        bonds.add(Bond(new_monad(), new_monad()))
    for _ in range(lone):
        new_monad()
    return Molecule(elements, bonds)


def enumerate_molecules(spec: EnumSpec, cap: int = DEFAULT_CAP) -> list[Molecule]:
    """One canonical representative per isomorphism class, sorted by certificate."""
    _check_cap(spec, cap)
    if spec.trivially_empty():
        return []
    found = {}
    for core in _cores(spec.dyads, spec.triads, spec.connected_only):
        residual = {}
        for p in free_ends(core):
            residual[p.element] = residual.get(p.element, 0) + 1
        idents = list(residual)
        has_core = bool(core.elements)
        for hung in itertools.product(*(range(residual[e] + 1) for e in idents)):
            rest = spec.monads - sum(hung)
            if rest < 0:
                continue
            open_core = sum(residual[e] - h for e, h in zip(idents, hung))
            if spec.medads_only and open_core:
                continue
            for pairs in range(rest // 2 + 1):
                lone = rest - 2 * pairs
                if spec.medads_only and lone:
                    continue
                if spec.connected_only and (pairs + lone + has_core) > 1:
                    continue
                m = _hang_monads(core, zip(idents, hung), pairs, lone)
                found.setdefault(certificate(m), m)
    return [from_certificate(c) for c in sorted(found)]


def count_medads(monads: int, dyads: int, triads: int, connected: bool = False, cap: int = DEFAULT_CAP) -> int:
    return len(enumerate_molecules(EnumSpec(monads, dyads, triads, True, connected), cap))


def _labelled_elements(spec: EnumSpec) -> dict[str, ElementKind]:
    elements = {}
    for prefix, kind, n in (("m", MONAD, spec.monads), ("d", DYAD, spec.dyads), ("t", TRIAD, spec.triads)):
        for i in range(n):
            elements[f"{prefix}{i + 1}"] = kind
    return elements


def _matchings(ports, perfect: bool):
    """All (partial or perfect) matchings of ``ports`` that never pair an element with itself."""
    if not ports:
        yield []
        return
    first, rest = ports[0], ports[1:]
    if not perfect:
        for tail in _matchings(rest, perfect):
            yield tail
    for i, other in enumerate(rest):
        if other.element == first.element:
            continue
        for tail in _matchings(rest[:i] + rest[i + 1:], perfect):
            yield [(first, other)] + tail


def _as_nx(m: Molecule) -> nx.Graph:
    g = nx.Graph()
    for e, k in m.elements.items():
        g.add_node(e, kind=k.value)
    for b in m.bonds:
        x, y = b.a.element, b.b.element
        if g.has_edge(x, y):
            g[x][y]["mult"] += 1
        else:
            g.add_edge(x, y, mult=1)
    return g


def _nx_isomorphic(g: nx.Graph, h: nx.Graph) -> bool:
    return nx.is_isomorphic(
        g,
        h,
        node_match=lambda a, b: a["kind"] == b["kind"],
        edge_match=lambda a, b: a["mult"] == b["mult"],
    )


def _invariant(m: Molecule, g: nx.Graph) -> tuple:
    # WL hashes can collide, so equal keys still go through the full matcher
    for _, _, data in g.edges(data=True):
        data["label"] = str(data["mult"])
    return (len(m.bonds), nx.weisfeiler_lehman_graph_hash(g, node_attr="kind", edge_attr="label"))


def pairing_oracle(spec: EnumSpec, cap: int = ORACLE_CAP) -> list[Molecule]:
    """Brute force: every port pairing, filtered by ``spec``, bucketed by isomorphism."""
    _check_cap(spec, cap)
    if spec.trivially_empty():
        return []
    elements = _labelled_elements(spec)
    ports = [PortRef(e, i) for e, k in elements.items() for i in range(k.arity)]
    buckets: dict[tuple, list] = {}
    reps = []
    seen_labelled = set()
    for matching in _matchings(ports, spec.medads_only):
        # pairings differing only in which port of an element is used give the
        # same labelled multigraph; skip exact repeats before any iso test
        shape = tuple(sorted((p.element, q.element) for p, q in matching))
        if shape in seen_labelled:
            continue
        seen_labelled.add(shape)
        m = Molecule(elements, {Bond(p, q) for p, q in matching})
        if not spec.accepts(m):
            continue
        g = _as_nx(m)
        bucket = buckets.setdefault(_invariant(m, g), [])
        if any(_nx_isomorphic(g, h) for h, _ in bucket):
            continue
        bucket.append((g, m))
        reps.append(m)
    return reps


def oracle_isomorphic(a: Molecule, b: Molecule) -> bool:
    """Isomorphism test via networkx, independent of the certificate code."""
    return a.counts() == b.counts() and _nx_isomorphic(_as_nx(a), _as_nx(b))


def all_specs(max_ports: int, medads_only: bool = False, connected_only: bool = False):
    """Every non-empty spec whose port total is at most ``max_ports``."""
    for t in range(max_ports // 3 + 1):
        for d in range((max_ports - 3 * t) // 2 + 1):
            for m in range(max_ports - 3 * t - 2 * d + 1):
                spec = EnumSpec(m, d, t, medads_only, connected_only)
                if spec.size:
                    yield spec
