"""Molecules built from monads, dyads and triads.

A molecule is an immutable value: a map from element identifiers to kinds,
a set of bonds joining pairs of ports, and optional group annotations.
Every operation here returns a new molecule.  The constructor itself does
not enforce the structural rules so that untrusted data can be loaded and
then inspected with :func:`validate`.
"""

from __future__ import annotations

import enum
import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple

from .errors import NoSuchBond, PortSaturated, SelfBond, UnknownPort


class ElementKind(enum.Enum):
    MONAD = "M"
    DYAD = "D"
    TRIAD = "T"

    @property
    def arity(self) -> int:
        return _ARITY[self]

    @classmethod
    def from_symbol(cls, symbol: str) -> "ElementKind":
        return cls(symbol)


_ARITY = {ElementKind.MONAD: 1, ElementKind.DYAD: 2, ElementKind.TRIAD: 3}

MONAD, DYAD, TRIAD = ElementKind.MONAD, ElementKind.DYAD, ElementKind.TRIAD


def id_key(ident: str) -> tuple:
    """Natural sort key, so that ``e2`` sorts before ``e10``."""
    return tuple(
        (0, int(part), "") if part.isdigit() else (1, 0, part)
        for part in re.split(r"(\d+)", ident)
        if part
    )


class PortRef(NamedTuple):
    element: str
    index: int

    def __str__(self) -> str:
        return f"{self.element}.{self.index}"

    @property
    def key(self) -> tuple:
        return (id_key(self.element), self.index)


@dataclass(frozen=True)
class Bond:
    """An unordered pair of ports; stored with the smaller port first."""

    a: PortRef
    b: PortRef

    def __post_init__(self):
        a, b = PortRef(*self.a), PortRef(*self.b)
        if b.key < a.key:
            a, b = b, a
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def ends(self) -> tuple[PortRef, PortRef]:
        return (self.a, self.b)

    @property
    def key(self) -> tuple:
        return (self.a.key, self.b.key)

    def other(self, port: PortRef) -> PortRef:
        return self.b if port == self.a else self.a

    def __str__(self) -> str:
        return f"{self.a}--{self.b}"


@dataclass(frozen=True)
class GroupBoundary:
    """A dashed-circle annotation: member elements and the free ports they export."""

    members: frozenset
    exported: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        object.__setattr__(self, "exported", frozenset(PortRef(*p) for p in self.exported))

    @property
    def adicity(self) -> int:
        return len(self.exported)

    def sorted_members(self) -> list[str]:
        return sorted(self.members, key=id_key)

    def sorted_exported(self) -> list[PortRef]:
        return sorted(self.exported, key=lambda p: p.key)


@dataclass(frozen=True, eq=False)
class Molecule:
    elements: Mapping[str, ElementKind] = field(default_factory=dict)
    bonds: frozenset = frozenset()
    groups: tuple = ()

    def __post_init__(self):
        ordered = sorted(self.elements.items(), key=lambda kv: id_key(kv[0]))
        object.__setattr__(self, "elements", MappingProxyType(dict(ordered)))
        object.__setattr__(self, "bonds", frozenset(self.bonds))
        object.__setattr__(self, "groups", tuple(self.groups))

    def __eq__(self, other):
        if not isinstance(other, Molecule):
            return NotImplemented
        return (
            dict(self.elements) == dict(other.elements)
            and self.bonds == other.bonds
            and self.groups == other.groups
        )

    def __hash__(self):
        return hash((frozenset(self.elements.items()), self.bonds, self.groups))

    def __repr__(self):
        bonds = ", ".join(str(b) for b in self.sorted_bonds())
        kinds = ", ".join(f"{k}:{v.value}" for k, v in self.elements.items())
        return f"Molecule({kinds}; {bonds})"

    def sorted_bonds(self) -> list[Bond]:
        return sorted(self.bonds, key=lambda b: b.key)

    @cached_property
    def partner(self) -> dict[PortRef, PortRef]:
        """Port -> the port it is bonded to (last one wins on malformed input)."""
        out = {}
        for bond in self.sorted_bonds():
            out[bond.a] = bond.b
            out[bond.b] = bond.a
        return out

    @cached_property
    def adjacency(self) -> dict[str, Counter]:
        """Element -> Counter of neighbouring elements, counting parallel bonds."""
        adj = {e: Counter() for e in self.elements}
        for bond in self.bonds:
            x, y = bond.a.element, bond.b.element
            if x in adj and y in adj and x != y:
                adj[x][y] += 1
                adj[y][x] += 1
        return adj

    def kind(self, ident: str) -> ElementKind:
        return self.elements[ident]

    def ports(self) -> list[PortRef]:
        return [PortRef(e, i) for e, k in self.elements.items() for i in range(k.arity)]

    def counts(self) -> tuple[int, int, int]:
        c = Counter(self.elements.values())
        return (c[MONAD], c[DYAD], c[TRIAD])

    def total_arity(self) -> int:
        return sum(k.arity for k in self.elements.values())

    def has_port(self, port: PortRef) -> bool:
        kind = self.elements.get(port.element)
        return kind is not None and 0 <= port.index < kind.arity

    def replace(self, elements=None, bonds=None, groups=None) -> "Molecule":
        return Molecule(
            self.elements if elements is None else elements,
            self.bonds if bonds is None else bonds,
            self.groups if groups is None else groups,
        )


class ViolationKind(enum.Enum):
    BAD_ARITY = "BadArity"
    OVER_SATURATED = "OverSaturated"
    DANGLING_REF = "DanglingRef"
    SELF_BOND = "SelfBond"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    message: str

    def __str__(self):
        return f"{self.kind.value}: {self.message}"


def empty() -> Molecule:
    return Molecule()


def make_element(kind: ElementKind, ident: str = "e1") -> Molecule:
    return Molecule({ident: kind})


def fresh_ids(taken: Iterable[str], n: int, prefix: str = "e") -> list[str]:
    """The ``n`` smallest identifiers ``prefix<k>`` (k >= 1) not in ``taken``."""
    taken = set(taken)
    out, k = [], 1
    while len(out) < n:
        cand = f"{prefix}{k}"
        if cand not in taken:
            out.append(cand)
        k += 1
    return out


def rename(m: Molecule, mapping: Mapping[str, str]) -> Molecule:
    def port(p):
        return PortRef(mapping.get(p.element, p.element), p.index)

    return Molecule(
        {mapping.get(e, e): k for e, k in m.elements.items()},
        {Bond(port(b.a), port(b.b)) for b in m.bonds},
        tuple(
            GroupBoundary({mapping.get(e, e) for e in g.members}, {port(p) for p in g.exported})
            for g in m.groups
        ),
    )


def merge_with_map(a: Molecule, b: Molecule) -> tuple[Molecule, dict[str, str]]:
    """Disjoint union, also returning how ``b``'s identifiers were renamed."""
    b_ids = list(b.elements)  # already in natural order
    mapping = dict(zip(b_ids, fresh_ids(a.elements, len(b_ids))))
    rb = rename(b, mapping)
    merged = Molecule(
        {**a.elements, **rb.elements},
        a.bonds | rb.bonds,
        a.groups + rb.groups,
    )
    return merged, mapping


def merge(a: Molecule, b: Molecule) -> Molecule:
    return merge_with_map(a, b)[0]


def _check_port(m: Molecule, p: PortRef) -> None:
    if p.element not in m.elements:
        raise UnknownPort(f"no element {p.element!r}")
    if not 0 <= p.index < m.elements[p.element].arity:
        raise UnknownPort(
            f"{p} out of range for {m.elements[p.element].value} (arity {m.elements[p.element].arity})"
        )


def form_bond(m: Molecule, p: PortRef, q: PortRef) -> Molecule:
    p, q = PortRef(*p), PortRef(*q)
    _check_port(m, p)
    _check_port(m, q)
    if p.element == q.element:
        raise SelfBond(f"{p} and {q} belong to the same element")
    for port in (p, q):
        if port in m.partner:
            raise PortSaturated(f"{port} is already bonded to {m.partner[port]}")
    return m.replace(bonds=m.bonds | {Bond(p, q)})


def erase_bond(m: Molecule, b: Bond) -> Molecule:
    if b not in m.bonds:
        raise NoSuchBond(f"no bond {b}")
    return m.replace(bonds=m.bonds - {b})


def free_ends(m: Molecule) -> list[PortRef]:
    used = m.partner
    return [p for p in m.ports() if p not in used]


def is_medad(m: Molecule) -> bool:
    return not free_ends(m)


def components(m: Molecule) -> list[list[str]]:
    """Connected components as lists of identifiers, in order of first element."""
    seen, out = set(), []
    for start in m.elements:
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            e = stack.pop()
            comp.append(e)
            for n in m.adjacency[e]:
                if n not in seen:
                    seen.add(n)
                    stack.append(n)
        out.append(sorted(comp, key=id_key))
    return out


def is_connected(m: Molecule) -> bool:
    return len(components(m)) <= 1


def restrict(m: Molecule, members: Iterable[str]) -> Molecule:
    """Sub-molecule on ``members`` with the bonds wholly inside it."""
    keep = set(members)
    return Molecule(
        {e: k for e, k in m.elements.items() if e in keep},
        {b for b in m.bonds if b.a.element in keep and b.b.element in keep},
    )


def validate(m: Molecule) -> list[Violation]:
    out = []
    usage = defaultdict(int)
    for bond in m.sorted_bonds():
        for p in bond.ends:
            kind = m.elements.get(p.element)
            if kind is None:
                out.append(Violation(ViolationKind.DANGLING_REF, f"bond {bond} names undeclared element {p.element!r}"))
            elif not 0 <= p.index < kind.arity:
                out.append(
                    Violation(
                        ViolationKind.BAD_ARITY,
                        f"bond {bond} uses port {p} but a {kind.name.lower()} has {kind.arity} port(s)",
                    )
                )
            usage[p] += 1
        if bond.a.element == bond.b.element:
            out.append(Violation(ViolationKind.SELF_BOND, f"bond {bond} joins an element to itself"))
    for p in sorted(usage, key=lambda p: p.key):
        if usage[p] > 1:
            out.append(Violation(ViolationKind.OVER_SATURATED, f"port {p} joins {usage[p] + 1} open ends"))
    for g in m.groups:
        for e in g.sorted_members():
            if e not in m.elements:
                out.append(Violation(ViolationKind.DANGLING_REF, f"group member {e!r} is not declared"))
    return out


def isomorphic(a: Molecule, b: Molecule) -> bool:
    """Kind-preserving isomorphism; ports within an element are interchangeable."""
    from .canon import certificate

    if a.counts() != b.counts() or len(a.bonds) != len(b.bonds):
        return False
    return certificate(a) == certificate(b)
