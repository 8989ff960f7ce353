"""Canonical labelling of molecules up to isomorphism.

Ports inside an element are interchangeable, so a molecule is determined up
to isomorphism by its element kinds and the bond multiplicity between each
pair of elements.  The certificate is computed per connected component by
colour refinement plus individualisation, pruning branches on twin vertices
(same kind, same bond multiplicities to everything else), which covers the
common case of several monads hanging off one element.
"""

from __future__ import annotations

from collections import defaultdict

from .graph import Bond, ElementKind, Molecule, PortRef, components, id_key


def _refine(verts, colors, adj):
    while True:
        sig = {
            v: (colors[v], tuple(sorted((colors[w], k) for w, k in adj[v].items())))
            for v in verts
        }
        ranks = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: ranks[sig[v]] for v in verts}
        if len(ranks) == len(set(colors.values())):
            return new
        colors = new


def _twins(u, v, adj) -> bool:
    au, av = adj[u], adj[v]
    for w in set(au) | set(av):
        if w not in (u, v) and au.get(w, 0) != av.get(w, 0):
            return False
    return True


def _leaf(order, kinds, adj):
    pos = {v: i for i, v in enumerate(order)}
    edges = sorted(
        (pos[v], pos[w], k) for v in order for w, k in adj[v].items() if pos[v] < pos[w]
    )
    return (tuple(kinds[v].value for v in order), tuple(edges))


def _search(verts, colors, adj, kinds):
    colors = _refine(verts, colors, adj)
    cells = defaultdict(list)
    for v in verts:
        cells[colors[v]].append(v)
    target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
    if target is None:
        order = sorted(verts, key=colors.__getitem__)
        return _leaf(order, kinds, adj), order
    best = None
    tried = []
    for v in sorted(target, key=id_key):
        if any(_twins(u, v, adj) for u in tried):
            continue
        tried.append(v)
        split = {u: 2 * c + (0 if u == v else 1) for u, c in colors.items()}
        result = _search(verts, split, adj, kinds)
        if best is None or result[0] < best[0]:
            best = result
    return best


def _component(m: Molecule, verts):
    kinds = m.elements
    adj = {v: m.adjacency[v] for v in verts}
    colors = {v: kinds[v].arity for v in verts}
    return _search(verts, colors, adj, kinds)


def labelling(m: Molecule) -> tuple[tuple, list[str]]:
    """Certificate plus an element order realising it."""
    parts = sorted((_component(m, comp) for comp in components(m)), key=lambda r: r[0])
    cert = tuple(c for c, _ in parts)
    order = [v for _, o in parts for v in o]
    return cert, order


def certificate(m: Molecule) -> tuple:
    """Isomorphism invariant that is complete: equal iff isomorphic."""
    return labelling(m)[0]


def from_certificate(cert) -> Molecule:
    """Rebuild the canonical representative, with ids ``e1..en``."""
    elements, bonds = {}, set()
    base = 0
    for kinds, edges in cert:
        ids = [f"e{base + i + 1}" for i in range(len(kinds))]
        for ident, sym in zip(ids, kinds):
            elements[ident] = ElementKind(sym)
        next_port = [0] * len(kinds)
        for i, j, k in edges:
            for _ in range(k):
                bonds.add(Bond(PortRef(ids[i], next_port[i]), PortRef(ids[j], next_port[j])))
                next_port[i] += 1
                next_port[j] += 1
        base += len(kinds)
    return Molecule(elements, bonds)


def canonical_molecule(m: Molecule) -> Molecule:
    return from_certificate(certificate(m))
