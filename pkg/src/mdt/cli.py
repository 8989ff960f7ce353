"""``mdt`` command-line workbench.

Exit status: 0 on success or a true predicate, 1 on a domain error or a
false predicate, 2 on parse or usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import formats, notation, rewriting, sets, taxonomy
from .enumeration import DEFAULT_CAP, EnumSpec, enumerate_molecules, pairing_oracle
from .errors import MDTError, SchemaError
from .graph import Bond, PortRef, free_ends, isomorphic, validate
from .graph import erase_bond as _erase_bond
from .graph import form_bond as _form_bond

SYNTAXES = ("term", "decl", "json")
OUTPUTS = ("decl", "canonical", "json", "dot")


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _syntax_for(path: str, given: str | None) -> str:
    if given:
        return given
    for syntax in SYNTAXES:
        if path.endswith("." + syntax):
            return syntax
    return "decl"


def _load(path: str, syntax: str | None, check: bool = True):
    text = _read(path)
    syntax = _syntax_for(path, syntax)
    if syntax == "term":
        return notation.parse_term(text)
    if syntax == "json":
        return formats.from_json(text) if check else formats.load_json(text)
    return notation.parse_decl(text)


def _render(m, fmt: str) -> str:
    if fmt == "json":
        return formats.to_json(m) + "\n"
    if fmt == "canonical":
        return notation.print_canonical(m)
    if fmt == "dot":
        return formats.to_dot(m)
    return notation.print_decl(m)


def _port(text: str) -> PortRef:
    element, sep, index = text.rpartition(".")
    if not sep or not element or not index.isdigit():
        raise UsageError(f"port must look like ID.INDEX, got {text!r}")
    return PortRef(element, int(index))


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_parse(args):
    _emit(args, _render(_load(args.file, args.syntax), args.to))
    return 0


def cmd_validate(args):
    m = _load(args.file, args.syntax, check=False)
    violations = validate(m)
    for v in violations:
        print(v)
    if violations:
        return 1
    if args.medad:
        ends = free_ends(m)
        if ends:
            print(f"not a medad: free ends {', '.join(str(p) for p in ends)}")
            return 1
        print("medad")
        return 0
    print("valid")
    return 0


def cmd_bond(args):
    m = _form_bond(_load(args.file, args.syntax), _port(args.p), _port(args.q))
    _emit(args, _render(m, args.to))
    return 0


def cmd_erase(args):
    m = _erase_bond(_load(args.file, args.syntax), Bond(_port(args.p), _port(args.q)))
    _emit(args, _render(m, args.to))
    return 0


def cmd_insert_triad(args):
    m = rewriting.insert_triad(_load(args.file, args.syntax), Bond(_port(args.p), _port(args.q)))
    _emit(args, _render(m, args.to))
    return 0


def cmd_join(args):
    a, b, c = (_load(f, args.syntax) for f in args.files)
    _emit(args, _render(rewriting.triad_join(a, b, c), args.to))
    return 0


def cmd_group(args):
    members = [x for part in args.members for x in part.split(",") if x]
    m = rewriting.make_group(_load(args.file, args.syntax), members)
    out = _render(m, args.to)
    if args.to != "json":
        g = m.groups[-1]
        out += f"# group {','.join(g.sorted_members())} exports {len(g.exported)} port(s)\n"
    _emit(args, out)
    return 0


def cmd_normalize(args):
    form = rewriting.normalize_lines(_load(args.file, args.syntax))
    out = _render(form.skeleton, args.to)
    if args.to != "json":
        for loss in form.chain_losses:
            out += f"# contracted {loss.count} dyads into {loss.kept} (removed {','.join(loss.removed)})\n"
    _emit(args, out)
    return 0


def cmd_iso(args):
    a = _load(args.a, args.syntax)
    b = _load(args.b, args.syntax)
    same = isomorphic(a, b)
    print("isomorphic" if same else "not isomorphic")
    return 0 if same else 1


def cmd_enumerate(args):
    spec = EnumSpec(args.monads, args.dyads, args.triads, args.medads, args.connected)
    found = pairing_oracle(spec, args.cap) if args.oracle else enumerate_molecules(spec, args.cap)
    if args.count:
        _emit(args, f"{len(found)}\n")
        return 0
    chunks = []
    for i, m in enumerate(found, 1):
        body = _render(m, args.to)
        chunks.append(body if args.to == "json" else f"# molecule {i}\n{body}")
    _emit(args, "".join(chunks))
    return 0


def cmd_classify_dyad(args):
    if args.structural:
        m = _load(args.file, args.syntax)
        print(taxonomy.structural_dyad_class(m, args.structural).value)
        return 0
    term = notation.parse_relation(_read(args.file))
    if not isinstance(term, taxonomy.DyadTerm):
        raise UsageError("classify-dyad expects a dyad term D(...)")
    cls = taxonomy.classify_dyad(term)
    print(f"{cls.label}\trank={taxonomy.degeneracy_rank(cls)}")
    return 0


def cmd_classify_triad(args):
    term = notation.parse_relation(_read(args.file))
    if not isinstance(term, taxonomy.TriadTerm):
        raise UsageError("classify-triad expects a triad term T(...)")
    print(taxonomy.classify_triad(term).value)
    return 0


def cmd_encode(args):
    if args.scheme == "standard":
        expr = sets.encode_standard(formats.graph_from_json(_read(args.file)))
    else:
        expr = sets.encode_mdt(_load(args.file, args.syntax))
    _emit(args, sets.show(expr) + "\n")
    return 0


def cmd_export_dot(args):
    _emit(args, formats.to_dot(_load(args.file, args.syntax)))
    return 0


def cmd_degrees(args):
    report = sets.kempe_degree_report(formats.graph_from_json(_read(args.file)))
    _emit(args, "".join(line + "\n" for line in report.lines()))
    return 0


def cmd_units(args):
    a = notation.parse_set(_read(args.a))
    b = notation.parse_set(_read(args.b))
    _emit(args, sets.show(sets.unit_identities(a, b)) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mdt", description="Monad/dyad/triad molecule workbench.")
    sub = parser.add_subparsers(dest="command", required=True)

    def molecule_cmd(name, func, help_, inputs=("file",), output=True):
        p = sub.add_parser(name, help=help_)
        for inp in inputs:
            p.add_argument(inp, help="input file, or - for stdin")
        p.add_argument("--syntax", choices=SYNTAXES, help="input syntax (default: from extension, else decl)")
        if output:
            p.add_argument("--to", choices=OUTPUTS, default="decl", help="output format")
            p.add_argument("-o", "--output", help="write to this file instead of stdout")
        p.set_defaults(func=func)
        return p

    molecule_cmd("parse", cmd_parse, "parse a molecule and print it")
    p = molecule_cmd("validate", cmd_validate, "check structural rules", output=False)
    p.add_argument("--medad", action="store_true", help="also require no free ends")
    for name, func, help_ in (
        ("bond", cmd_bond, "bond two free ports"),
        ("erase", cmd_erase, "erase the bond between two ports"),
        ("insert-triad", cmd_insert_triad, "splice a triad into a bond"),
    ):
        p = molecule_cmd(name, func, help_)
        p.add_argument("p", help="port ID.INDEX")
        p.add_argument("q", help="port ID.INDEX")
    p = molecule_cmd("join", cmd_join, "join three one-free-end molecules with a triad", inputs=())
    p.add_argument("files", nargs=3)
    p = molecule_cmd("group", cmd_group, "mark a group of elements")
    p.add_argument("--members", nargs="+", required=True, help="element ids (space or comma separated)")
    molecule_cmd("normalize", cmd_normalize, "contract lines of dyads")
    molecule_cmd("iso", cmd_iso, "isomorphism test", inputs=("a", "b"), output=False)

    p = sub.add_parser("enumerate", help="all molecules with given element counts, up to isomorphism")
    p.add_argument("--monads", type=int, default=0)
    p.add_argument("--dyads", type=int, default=0)
    p.add_argument("--triads", type=int, default=0)
    p.add_argument("--medads", action="store_true", help="only molecules without free ends")
    p.add_argument("--connected", action="store_true", help="only connected molecules")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum total ports")
    p.add_argument("--oracle", action="store_true", help="use the brute-force pairing oracle")
    p.add_argument("--count", action="store_true", help="print only the number of classes")
    p.add_argument("--to", choices=OUTPUTS, default="canonical")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify-dyad", help="classify a dyad term, or a dyad in a molecule with --structural")
    p.add_argument("file")
    p.add_argument("--structural", metavar="DYAD_ID", help="treat FILE as a molecule and classify this dyad")
    p.add_argument("--syntax", choices=SYNTAXES)
    p.set_defaults(func=cmd_classify_dyad)
    p = sub.add_parser("classify-triad", help="classify a triad term")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify_triad)

    p = molecule_cmd("encode", cmd_encode, "set-theoretic encoding")
    p.add_argument("--scheme", choices=("standard", "mdt"), default="mdt")
    molecule_cmd("export-dot", cmd_export_dot, "Graphviz rendering")
    p = sub.add_parser("degrees", help="degree and role report for a dot-and-edge graph (JSON)")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_degrees)
    p = sub.add_parser("units", help="members of set A identical with members of set B")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_units)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (notation.ParseError, SchemaError) as exc:
        print(f"mdt: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"mdt: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"mdt: {exc}", file=sys.stderr)
        return 2
    except MDTError as exc:
        print(f"mdt: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
