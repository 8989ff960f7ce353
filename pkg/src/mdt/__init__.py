"""Monad/dyad/triad molecules: construction, rewriting, enumeration and classification."""

from .canon import canonical_molecule, certificate
from .enumeration import EnumSpec, count_medads, enumerate_molecules, pairing_oracle
from .errors import MDTError
from .formats import from_json, to_dot, to_json
from .graph import (
    DYAD,
    MONAD,
    TRIAD,
    Bond,
    ElementKind,
    GroupBoundary,
    Molecule,
    PortRef,
    Violation,
    ViolationKind,
    erase_bond,
    form_bond,
    free_ends,
    is_connected,
    is_medad,
    isomorphic,
    make_element,
    merge,
    validate,
)
from .notation import ParseError, parse_decl, parse_relation, parse_set, parse_term, print_canonical, print_decl
from .rewriting import (
    CanonicalForm,
    insert_triad,
    line_equivalent,
    make_group,
    normalize_lines,
    reduce_polyad,
    triad_join,
)

__all__ = [
    "Bond",
    "CanonicalForm",
    "DYAD",
    "ElementKind",
    "EnumSpec",
    "GroupBoundary",
    "MDTError",
    "MONAD",
    "Molecule",
    "ParseError",
    "PortRef",
    "TRIAD",
    "Violation",
    "ViolationKind",
    "canonical_molecule",
    "certificate",
    "count_medads",
    "enumerate_molecules",
    "erase_bond",
    "form_bond",
    "free_ends",
    "from_json",
    "insert_triad",
    "is_connected",
    "is_medad",
    "isomorphic",
    "line_equivalent",
    "make_element",
    "make_group",
    "merge",
    "normalize_lines",
    "pairing_oracle",
    "parse_decl",
    "parse_relation",
    "parse_set",
    "parse_term",
    "print_canonical",
    "print_decl",
    "reduce_polyad",
    "to_dot",
    "to_json",
    "triad_join",
    "validate",
]
