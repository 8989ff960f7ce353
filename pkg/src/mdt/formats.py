"""JSON persistence and Graphviz export."""

from __future__ import annotations

import json

from .errors import SchemaError, ValidationFailed
from .graph import DYAD, MONAD, TRIAD, Bond, ElementKind, GroupBoundary, Molecule, PortRef, free_ends, validate
from .sets import SimpleGraph


def _port_json(p: PortRef) -> list:
    return [p.element, p.index]


def to_json(m: Molecule) -> str:
    doc = {
        "elements": [{"id": e, "kind": k.value} for e, k in m.elements.items()],
        "bonds": [[_port_json(b.a), _port_json(b.b)] for b in m.sorted_bonds()],
    }
    if m.groups:
        doc["groups"] = [
            {"members": g.sorted_members(), "exported": [_port_json(p) for p in g.sorted_exported()]}
            for g in m.groups
        ]
    return json.dumps(doc, ensure_ascii=False, separators=(",", ":"))


def _port_from(raw, where: str) -> PortRef:
    if (
        not isinstance(raw, list)
        or len(raw) != 2
        or not isinstance(raw[0], str)
        or not isinstance(raw[1], int)
        or isinstance(raw[1], bool)
    ):
        raise SchemaError(f"{where}: a port must be [element id, integer index], got {raw!r}")
    return PortRef(raw[0], raw[1])


def load_json(text: str) -> Molecule:
    """Decode without checking structural invariants."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    unknown = set(doc) - {"elements", "bonds", "groups"}
    if unknown:
        raise SchemaError(f"unexpected keys: {', '.join(sorted(unknown))}")
    if not isinstance(doc.get("elements"), list) or not isinstance(doc.get("bonds"), list):
        raise SchemaError("'elements' and 'bonds' must both be present as arrays")
    elements = {}
    for i, raw in enumerate(doc["elements"]):
        if not isinstance(raw, dict) or set(raw) != {"id", "kind"}:
            raise SchemaError(f"elements[{i}] must be an object with exactly 'id' and 'kind'")
        if not isinstance(raw["id"], str) or raw["kind"] not in ("M", "D", "T"):
            raise SchemaError(f"elements[{i}]: id must be a string and kind one of M, D, T")
        if raw["id"] in elements:
            raise SchemaError(f"elements[{i}]: duplicate id {raw['id']!r}")
        elements[raw["id"]] = ElementKind(raw["kind"])
    bonds = set()
    for i, raw in enumerate(doc["bonds"]):
        if not isinstance(raw, list) or len(raw) != 2:
            raise SchemaError(f"bonds[{i}] must be a pair of ports")
        bonds.add(Bond(_port_from(raw[0], f"bonds[{i}]"), _port_from(raw[1], f"bonds[{i}]")))
    groups = []
    raw_groups = doc.get("groups", [])
    if not isinstance(raw_groups, list):
        raise SchemaError("'groups' must be an array")
    partial = Molecule(elements, bonds)
    for i, raw in enumerate(raw_groups):
        if not isinstance(raw, dict) or "members" not in raw or not set(raw) <= {"members", "exported"}:
            raise SchemaError(f"groups[{i}] must be an object with 'members' (and optionally 'exported')")
        members = raw["members"]
        if not isinstance(members, list) or not members or not all(isinstance(x, str) for x in members):
            raise SchemaError(f"groups[{i}].members must be a nonempty array of ids")
        if "exported" in raw:
            if not isinstance(raw["exported"], list):
                raise SchemaError(f"groups[{i}].exported must be an array of ports")
            exported = {_port_from(p, f"groups[{i}].exported") for p in raw["exported"]}
        else:
            exported = {p for p in free_ends(partial) if p.element in set(members)}
        groups.append(GroupBoundary(members, exported))
    return Molecule(elements, bonds, tuple(groups))


def from_json(text: str) -> Molecule:
    m = load_json(text)
    violations = validate(m)
    if violations:
        raise ValidationFailed(violations)
    return m


def graph_from_json(text: str) -> SimpleGraph:
    """``{"vertices": [...], "edges": [[a, b], ...]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("vertices"), list) or not isinstance(doc.get("edges", []), list):
        raise SchemaError("a graph is an object with a 'vertices' array and an 'edges' array")
    for e in doc.get("edges", []):
        if not isinstance(e, list) or len(e) != 2:
            raise SchemaError(f"edge {e!r} must be a pair of vertex labels")
    return SimpleGraph.from_edges([str(v) for v in doc["vertices"]], [tuple(e) for e in doc.get("edges", [])])


def graph_to_json(g: SimpleGraph) -> str:
    return json.dumps(
        {"vertices": g.sorted_vertices(), "edges": [list(e) for e in g.sorted_edges()]},
        separators=(",", ":"),
    )


_SHAPES = {MONAD: "circle", DYAD: "square", TRIAD: "triangle"}
DIAMOND = "◇"


def to_dot(m: Molecule, name: str = "molecule") -> str:
    lines = [f"graph {name} {{", '  node [fontname="Helvetica", fixedsize=true, width=0.4];']
    grouped = {}
    for i, g in enumerate(m.groups):
        for e in g.members:
            grouped.setdefault(e, i)
    for i, g in enumerate(m.groups):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append("    style=dashed;")
        for e in g.sorted_members():
            if grouped.get(e) == i and e in m.elements:
                lines.append(f'    "{e}" [shape={_SHAPES[m.elements[e]]}, label="{m.elements[e].value}"];')
        lines.append("  }")
    for e, k in m.elements.items():
        if e not in grouped:
            lines.append(f'  "{e}" [shape={_SHAPES[k]}, label="{k.value}"];')
    for b in m.sorted_bonds():
        lines.append(f'  "{b.a.element}" -- "{b.b.element}" [label="{DIAMOND}", taillabel="{b.a.index}", headlabel="{b.b.index}"];')
    for p in free_ends(m):
        node = f"free:{p.element}.{p.index}"
        lines.append(f'  "{node}" [shape=circle, label="", width=0.08, style=solid];')
        lines.append(f'  "{p.element}" -- "{node}" [taillabel="{p.index}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
