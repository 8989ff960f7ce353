"""Classification trees for dyadic and triadic relations.

Terms describe a relation by what stands in it: a bare quality, a dyad of
two subjects, or a triad of three.  Dyads carry caller-supplied attributes
(identity of subjects, dynamical character, kind of order) which drive the
lower half of the dyad tree.  The structural classifier at the end reads the
upper half of the same tree off a molecule.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import IllFormed, NotADyad
from .graph import DYAD, MONAD, Molecule, PortRef


class Order(enum.Enum):
    NONE = "none"
    MATERIAL = "material"
    FORMAL = "formal"


@dataclass(frozen=True)
class DyadAttrs:
    subjects_identical: bool = False
    dynamical: bool = False
    order: Order = Order.NONE
    action: Optional[str] = None

    def __post_init__(self):
        if self.subjects_identical and (self.dynamical or self.order is not Order.NONE):
            raise IllFormed("identical subjects admit neither dynamical character nor order")
        if self.order is not Order.NONE and not self.dynamical:
            raise IllFormed("an ordered dyad must be dynamical")


@dataclass(frozen=True)
class Quality:
    name: str

    def __post_init__(self):
        if not self.name:
            raise IllFormed("a quality needs a nonempty label")


@dataclass(frozen=True)
class DyadTerm:
    s1: "RelationTerm"
    s2: "RelationTerm"
    attrs: DyadAttrs = field(default_factory=DyadAttrs)


@dataclass(frozen=True)
class TriadTerm:
    s1: "RelationTerm"
    s2: "RelationTerm"
    s3: "RelationTerm"

    @property
    def subjects(self):
        return (self.s1, self.s2, self.s3)


RelationTerm = Union[Quality, DyadTerm, TriadTerm]


class DyadClass(enum.Enum):
    """Leaves of the dyad tree, listed from most degenerate to most genuine."""

    ESSENTIAL = ("Essential",)
    INHERENTIAL = ("Inherential",)
    IDENTITY = ("Relational", "Identity")
    QUALITATIVE = ("Relational", "Diversity", "Qualitative")
    UNORDERED = ("Relational", "Diversity", "Dynamical", "Unordered")
    MATERIAL_ORDER = ("Relational", "Diversity", "Dynamical", "MaterialOrder")
    FORMAL_ORDER = ("Relational", "Diversity", "Dynamical", "FormalOrder")

    @property
    def path(self) -> tuple:
        return self.value

    @property
    def label(self) -> str:
        return "·".join(self.value)


class TriadClass(enum.Enum):
    DEGENERATE_MONADIC = "DegenerateMonadic"
    DEGENERATE_DYADIC = "DegenerateDyadic"
    GENUINE = "Genuine"


class StructuralClass(enum.Enum):
    ESSENTIAL = "Essential"
    INHERENTIAL = "Inherential"
    RELATIONAL = "Relational"
    INCOMPLETE = "Incomplete"


_RANK = {c: i for i, c in enumerate(DyadClass)}


def degeneracy_rank(c: DyadClass) -> int:
    """0 for the most degenerate class, 6 for formally ordered dynamical dyads."""
    return _RANK[c]


def classify_dyad(t: DyadTerm) -> DyadClass:
    subjects = (t.s1, t.s2)
    if any(isinstance(s, TriadTerm) for s in subjects):
        raise IllFormed("the dyad tree does not cover triadic subjects")
    qualities = sum(isinstance(s, Quality) for s in subjects)
    if qualities == 2:
        return DyadClass.ESSENTIAL
    if qualities == 1:
        return DyadClass.INHERENTIAL
    a = t.attrs
    if a.subjects_identical:
        return DyadClass.IDENTITY
    if not a.dynamical:
        return DyadClass.QUALITATIVE
    return {
        Order.NONE: DyadClass.UNORDERED,
        Order.MATERIAL: DyadClass.MATERIAL_ORDER,
        Order.FORMAL: DyadClass.FORMAL_ORDER,
    }[a.order]


def classify_triad(t: TriadTerm) -> TriadClass:
    subjects = t.subjects
    if any(isinstance(s, TriadTerm) for s in subjects):
        return TriadClass.GENUINE
    if all(isinstance(s, Quality) for s in subjects):
        return TriadClass.DEGENERATE_MONADIC
    return TriadClass.DEGENERATE_DYADIC


def _side(m: Molecule, port: PortRef) -> str:
    other = m.partner.get(port)
    if other is None:
        return "free"
    if m.elements[other.element] is MONAD:
        return "monad"
    return "compound"


def structural_dyad_class(m: Molecule, d: str) -> StructuralClass:
    """Upper half of the dyad tree read off what is bonded to each end of ``d``.

    A side that is a lone monad plays the part of a quality; any larger
    substructure (containing a dyad or a triad) plays the part of a relation.
    """
    if m.elements.get(d) is not DYAD:
        raise NotADyad(f"{d!r} is not a dyad of this molecule")
    sides = [_side(m, PortRef(d, i)) for i in range(2)]
    if "free" in sides:
        return StructuralClass.INCOMPLETE
    monads = sides.count("monad")
    if monads == 2:
        return StructuralClass.ESSENTIAL
    if monads == 1:
        return StructuralClass.INHERENTIAL
    return StructuralClass.RELATIONAL

