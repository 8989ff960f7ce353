"""Composition and normalisation procedures on molecules."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundaryCrossed, UnknownElement, WrongAdicity
from .graph import (
    DYAD,
    TRIAD,
    Bond,
    GroupBoundary,
    Molecule,
    PortRef,
    erase_bond,
    form_bond,
    free_ends,
    fresh_ids,
    id_key,
    isomorphic,
    merge_with_map,
)


def insert_triad(m: Molecule, b: Bond) -> Molecule:
    """Splice a fresh triad into bond ``b``; its third port is left free."""
    m = erase_bond(m, b)
    (t,) = fresh_ids(m.elements, 1)
    m = m.replace(elements={**m.elements, t: TRIAD})
    m = form_bond(m, b.a, PortRef(t, 0))
    return form_bond(m, b.b, PortRef(t, 1))


def _single_free_end(m: Molecule, what: str) -> PortRef:
    ends = free_ends(m)
    if len(ends) != 1:
        raise WrongAdicity(f"{what} has {len(ends)} free ends, expected exactly 1")
    return ends[0]


def _attach_to_junction(core: Molecule, junction_ports, parts) -> Molecule:
    m = core
    for i, (port, part) in enumerate(zip(junction_ports, parts)):
        end = _single_free_end(part, f"input {i + 1}")
        m, mapping = merge_with_map(m, part)
        m = form_bond(m, port, PortRef(mapping[end.element], end.index))
    return m


def triad_join(a: Molecule, b: Molecule, c: Molecule) -> Molecule:
    """Bond the single free end of each input to one port of a new central triad."""
    for i, part in enumerate((a, b, c)):
        _single_free_end(part, f"input {i + 1}")
    core = Molecule({"e1": TRIAD})
    return _attach_to_junction(core, [PortRef("e1", i) for i in range(3)], (a, b, c))


def reduce_polyad(arity: int, attachments) -> Molecule:
    """Realise a junction of degree ``arity`` > 3 as a line of ``arity - 2`` triads."""
    attachments = list(attachments)
    if arity <= 3:
        raise ValueError("reduce_polyad needs arity > 3")
    if len(attachments) != arity:
        raise WrongAdicity(f"expected {arity} attachments, got {len(attachments)}")
    for i, part in enumerate(attachments):
        _single_free_end(part, f"attachment {i + 1}")
    n = arity - 2
    ids = [f"e{i + 1}" for i in range(n)]
    core = Molecule({t: TRIAD for t in ids})
    for left, right in zip(ids, ids[1:]):
        core = form_bond(core, PortRef(left, 2), PortRef(right, 0))
    return _attach_to_junction(core, free_ends(core), attachments)


def make_group(m: Molecule, members) -> Molecule:
    members = frozenset(members)
    if not members:
        raise UnknownElement("a group needs at least one member")
    missing = sorted(members - set(m.elements), key=id_key)
    if missing:
        raise UnknownElement(f"undeclared group members: {', '.join(missing)}")
    for bond in m.sorted_bonds():
        inside = (bond.a.element in members, bond.b.element in members)
        if inside[0] != inside[1]:
            raise BoundaryCrossed(f"bond {bond} crosses the group boundary")
    exported = {p for p in free_ends(m) if p.element in members}
    return m.replace(groups=m.groups + (GroupBoundary(members, exported),))


@dataclass(frozen=True)
class ChainLoss:
    """A contracted run of dyads: the dyad kept, those removed, original length."""

    kept: str
    removed: tuple
    count: int


@dataclass(frozen=True)
class CanonicalForm:
    skeleton: Molecule
    chain_losses: tuple = ()


def _dyad_runs(m: Molecule):
    """Components of the dyad-to-dyad bond graph, as (members, is_cycle)."""
    dyads = [e for e, k in m.elements.items() if k is DYAD]
    dyad_set = set(dyads)
    seen = set()
    for start in dyads:
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            d = stack.pop()
            comp.append(d)
            for n in m.adjacency[d]:
                if n in dyad_set and n not in seen:
                    seen.add(n)
                    stack.append(n)
        inner = sum(
            1 for b in m.bonds if b.a.element in comp and b.b.element in comp
        )
        # a path of k dyads has k-1 internal bonds, a cycle has k
        yield sorted(comp, key=id_key), inner == len(comp)


def _walk_path(m: Molecule, members):
    """Order a dyad path from its smaller endpoint; return (order, far outer port)."""
    member_set = set(members)

    def dyad_port(p):
        q = m.partner.get(p)
        return q is not None and q.element in member_set

    ends = [d for d in members if sum(dyad_port(PortRef(d, i)) for i in range(2)) == 1]
    start = min(ends, key=id_key)
    order = [start]
    outer = next(PortRef(start, i) for i in range(2) if not dyad_port(PortRef(start, i)))
    inner = PortRef(start, 1 - outer.index)
    while True:
        nxt = m.partner[inner]
        order.append(nxt.element)
        away = PortRef(nxt.element, 1 - nxt.index)
        if not dyad_port(away):
            return order, outer, away
        inner = away


def normalize_lines(m: Molecule) -> CanonicalForm:
    """Contract every maximal line of two or more dyads to a single dyad."""
    elements = dict(m.elements)
    bonds = set(m.bonds)
    losses = []
    removed_all = set()
    for members, is_cycle in _dyad_runs(m):
        if len(members) < 2 or (is_cycle and len(members) == 2):
            continue
        member_set = set(members)
        internal = {b for b in bonds if b.a.element in member_set or b.b.element in member_set}
        if is_cycle:
            keep, partner_dyad = members[0], members[1]
            drop = [d for d in members if d not in (keep, partner_dyad)]
            bonds -= internal
            bonds |= {
                Bond(PortRef(keep, 0), PortRef(partner_dyad, 0)),
                Bond(PortRef(keep, 1), PortRef(partner_dyad, 1)),
            }
        else:
            order, outer, far = _walk_path(m, members)
            keep = order[0]
            drop = order[1:]
            far_partner = m.partner.get(far)
            bonds -= {b for b in internal if outer not in b.ends}
            if far_partner is not None:
                bonds.add(Bond(PortRef(keep, 1 - outer.index), far_partner))
        for d in drop:
            del elements[d]
        removed_all.update(drop)
        losses.append(ChainLoss(keep, tuple(sorted(drop, key=id_key)), len(members)))
    groups = []
    for g in m.groups:
        members = g.members - removed_all
        if members:
            groups.append(GroupBoundary(members, {p for p in g.exported if p.element in members}))
    skeleton = Molecule(elements, bonds, tuple(groups))
    return CanonicalForm(skeleton, tuple(losses))


def line_equivalent(a: Molecule, b: Molecule) -> bool:
    return isomorphic(normalize_lines(a).skeleton, normalize_lines(b).skeleton)

