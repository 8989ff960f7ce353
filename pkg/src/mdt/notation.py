"""Text syntaxes for molecules, relation terms and pure sets.

Term syntax (tree-shaped molecules only)::

    root := "M" ["(" slot ")"] | "D" "(" slot "," slot ")" | "T" "(" slot "," slot "," slot ")"
    slot := "_" | "M" | "D" "(" slot ")" | "T" "(" slot "," slot ")"

A nested element spends one port on its parent, so it takes one slot fewer
than at the root.  ``M(M)`` is the monad-monad medad.  Declaration syntax::

    file := (elem | bond)*
    elem := ident ":" ("M" | "D" | "T") ";"
    bond := "bond" ident "." int "--" ident "." int ";"

Relation terms, for the classifiers::

    rel   := quality | "D" attrs? "(" rel "," rel ")" | "T" "(" rel "," rel "," rel ")"
    attrs := "[" attr ("," attr)* "]"
    attr  := "identical" | "dynamical" | "order" "=" ("material" | "formal") | "action" "=" (ident | string)

Sets: ``∅``, ``{}`` or ``{a, {∅}, ...}``; bare identifiers are atoms.
``#`` starts a comment that runs to the end of the line.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .canon import canonical_molecule
from .errors import MDTError
from .graph import DYAD, MONAD, TRIAD, Bond, ElementKind, Molecule, PortRef
from .sets import Atom, FSet
from .taxonomy import DyadAttrs, DyadTerm, Order, Quality, TriadTerm


@dataclass(frozen=True)
class SourceSpan:
    line: int
    column: int
    length: int

    def __str__(self):
        return f"{self.line}:{self.column}"


class ParseErrorKind(enum.Enum):
    SYNTAX = "Syntax"
    ARITY_MISMATCH = "ArityMismatch"
    DUPLICATE_ID = "DuplicateId"
    UNKNOWN_ID = "UnknownId"
    PORT_REUSE = "PortReuse"
    SELF_BOND = "SelfBond"


class ParseError(MDTError):
    def __init__(self, span: SourceSpan, kind: ParseErrorKind, message: str):
        self.span = span
        self.kind = kind
        self.message = message
        super().__init__(f"{span}: {kind.value}: {message}")


@dataclass(frozen=True)
class Token:
    type: str  # ident, int, string, punct, eof
    text: str
    span: SourceSpan


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<int>[0-9]+)
  | (?P<string>"[^"\n]*")
  | (?P<punct>--|[():;.,\[\]=\{\}∅])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(SourceSpan(line, col, 1), ParseErrorKind.SYNTAX, f"unexpected character {text[pos]!r}")
        kind, value = m.lastgroup, m.group()
        if kind != "ws":
            tokens.append(Token(kind, value, SourceSpan(line, col, len(value))))
        for i, ch in enumerate(value):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        pos = m.end()
    tokens.append(Token("eof", "", SourceSpan(line, pos - line_start + 1, 0)))
    return tokens


class _Cursor:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        if tok.type != "eof":
            self.i += 1
        return tok

    def at(self, text: str) -> bool:
        return self.tok.type in ("punct", "ident") and self.tok.text == text

    def error(self, message: str, tok: Token | None = None, kind=ParseErrorKind.SYNTAX):
        tok = tok or self.tok
        return ParseError(tok.span, kind, message)

    def describe(self, tok: Token | None = None) -> str:
        tok = tok or self.tok
        return "end of input" if tok.type == "eof" else repr(tok.text)

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.error(f"expected {text!r}, found {self.describe()}")
        return self.advance()

    def expect_type(self, type_: str, what: str) -> Token:
        if self.tok.type != type_:
            raise self.error(f"expected {what}, found {self.describe()}")
        return self.advance()

    def expect_end(self):
        if self.tok.type != "eof":
            raise self.error(f"unexpected {self.describe()} after end of expression")


_KINDS = {"M": MONAD, "D": DYAD, "T": TRIAD}


# --- term syntax -----------------------------------------------------------


def parse_term(text: str) -> Molecule:
    cur = _Cursor(text)
    elements: dict[str, ElementKind] = {}
    bonds: set[Bond] = set()

    def node(parent: PortRef | None):
        tok = cur.tok
        if tok.type == "ident" and tok.text == "_" and parent is not None:
            cur.advance()
            return
        if tok.type != "ident" or tok.text not in _KINDS:
            expected = "M, D, T or _" if parent is not None else "M, D or T"
            raise cur.error(f"expected {expected}, found {cur.describe()}")
        cur.advance()
        kind = _KINDS[tok.text]
        ident = f"e{len(elements) + 1}"
        elements[ident] = kind
        first_port = 0
        if parent is not None:
            bonds.add(Bond(parent, PortRef(ident, 0)))
            first_port = 1
        wanted = kind.arity - first_port
        slots = 0
        if kind is MONAD and not cur.at("("):
            # a bare root monad keeps its port free; M(x) fills it
            wanted = 0
        if cur.at("("):
            cur.advance()
            while True:
                node(PortRef(ident, first_port + slots))
                slots += 1
                if cur.at(","):
                    cur.advance()
                    continue
                break
            cur.expect(")")
        if slots != wanted:
            where = "nested" if parent is not None else "top-level"
            raise cur.error(
                f"{where} {tok.text!r} takes {wanted} slot(s), found {slots}",
                tok,
                ParseErrorKind.ARITY_MISMATCH,
            )

    node(None)
    cur.expect_end()
    return Molecule(elements, bonds)


# --- declaration syntax ----------------------------------------------------


def parse_decl(text: str) -> Molecule:
    cur = _Cursor(text)
    elements: dict[str, ElementKind] = {}
    pending = []
    while cur.tok.type != "eof":
        tok = cur.tok
        if tok.type == "ident" and tok.text == "bond" and not (cur.peek().type == "punct" and cur.peek().text == ":"):
            cur.advance()
            p = _port(cur)
            cur.expect("--")
            q = _port(cur)
            cur.expect(";")
            pending.append((p, q))
            continue
        name = cur.expect_type("ident", "an element name or 'bond'")
        cur.expect(":")
        kind_tok = cur.tok
        if kind_tok.type != "ident" or kind_tok.text not in _KINDS:
            raise cur.error(f"expected element kind M, D or T, found {cur.describe()}")
        cur.advance()
        cur.expect(";")
        if name.text in elements:
            raise cur.error(f"element {name.text!r} declared twice", name, ParseErrorKind.DUPLICATE_ID)
        elements[name.text] = _KINDS[kind_tok.text]

    bonds: set[Bond] = set()
    used: dict[PortRef, Token] = {}
    for ends in pending:
        refs = []
        for name_tok, idx_tok, span in ends:
            if name_tok.text not in elements:
                raise ParseError(name_tok.span, ParseErrorKind.UNKNOWN_ID, f"bond names undeclared element {name_tok.text!r}")
            kind = elements[name_tok.text]
            index = int(idx_tok.text)
            if index >= kind.arity:
                raise ParseError(
                    idx_tok.span,
                    ParseErrorKind.ARITY_MISMATCH,
                    f"port {name_tok.text}.{index} does not exist: a {kind.name.lower()} has {kind.arity} port(s)",
                )
            refs.append((PortRef(name_tok.text, index), span))
        (p, p_span), (q, q_span) = refs
        if p.element == q.element:
            raise ParseError(q_span, ParseErrorKind.SELF_BOND, f"bond {p}--{q} joins {p.element!r} to itself")
        for port, span in refs:
            if port in used:
                raise ParseError(span, ParseErrorKind.PORT_REUSE, f"port {port} is already bonded")
            used[port] = span
        bonds.add(Bond(p, q))
    return Molecule(elements, bonds)


def _port(cur: _Cursor):
    name = cur.expect_type("ident", "an element name")
    cur.expect(".")
    idx = cur.expect_type("int", "a port index")
    span = SourceSpan(name.span.line, name.span.column, idx.span.column + idx.span.length - name.span.column)
    return name, idx, span


def print_decl(m: Molecule) -> str:
    """Declaration text keeping the molecule's own identifiers."""
    lines = [f"{e}:{k.value};" for e, k in m.elements.items()]
    lines += [f"bond {b.a}--{b.b};" for b in m.sorted_bonds()]
    return "".join(line + "\n" for line in lines)


def print_canonical(m: Molecule) -> str:
    """Declaration text of the canonical representative; equal for isomorphic inputs."""
    return print_decl(canonical_molecule(m))


# --- relation terms --------------------------------------------------------


def parse_relation(text: str):
    cur = _Cursor(text)
    term = _relation(cur)
    cur.expect_end()
    return term


def _relation(cur: _Cursor):
    tok = cur.tok
    if tok.type == "string":
        cur.advance()
        return Quality(tok.text[1:-1])
    if tok.type != "ident":
        raise cur.error(f"expected a quality or a relation, found {cur.describe()}")
    nxt = cur.peek()
    is_relation = tok.text in ("D", "T") and nxt.type == "punct" and nxt.text in ("(", "[")
    if not is_relation:
        cur.advance()
        return Quality(tok.text)
    cur.advance()
    if tok.text == "T":
        if cur.at("["):
            raise cur.error("triads take no attributes")
        subjects = _relation_args(cur, tok, 3)
        return TriadTerm(*subjects)
    attrs = _attrs(cur) if cur.at("[") else DyadAttrs()
    s1, s2 = _relation_args(cur, tok, 2)
    return DyadTerm(s1, s2, attrs)


def _relation_args(cur: _Cursor, head: Token, n: int):
    cur.expect("(")
    args = [_relation(cur)]
    while cur.at(","):
        cur.advance()
        args.append(_relation(cur))
    cur.expect(")")
    if len(args) != n:
        raise cur.error(f"{head.text!r} takes {n} subjects, found {len(args)}", head, ParseErrorKind.ARITY_MISMATCH)
    return args


def _attrs(cur: _Cursor) -> DyadAttrs:
    start = cur.expect("[")
    values = {}
    while True:
        name = cur.expect_type("ident", "an attribute name")
        if name.text in ("identical", "dynamical"):
            values["subjects_identical" if name.text == "identical" else "dynamical"] = True
        elif name.text == "order":
            cur.expect("=")
            val = cur.expect_type("ident", "'material' or 'formal'")
            if val.text not in ("material", "formal"):
                raise cur.error(f"unknown order {val.text!r}", val)
            values["order"] = Order(val.text)
        elif name.text == "action":
            cur.expect("=")
            val = cur.tok
            if val.type not in ("ident", "string"):
                raise cur.error(f"expected an action label, found {cur.describe()}")
            cur.advance()
            values["action"] = val.text.strip('"')
        else:
            raise cur.error(f"unknown attribute {name.text!r}", name)
        if cur.at(","):
            cur.advance()
            continue
        break
    cur.expect("]")
    try:
        return DyadAttrs(**values)
    except MDTError as exc:
        raise ParseError(start.span, ParseErrorKind.SYNTAX, str(exc)) from None


def show_relation(t) -> str:
    if isinstance(t, Quality):
        return t.name if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", t.name) and t.name not in ("D", "T") else f'"{t.name}"'
    if isinstance(t, TriadTerm):
        return "T(" + ",".join(show_relation(s) for s in t.subjects) + ")"
    a = t.attrs
    flags = []
    if a.subjects_identical:
        flags.append("identical")
    if a.dynamical:
        flags.append("dynamical")
    if a.order is not Order.NONE:
        flags.append(f"order={a.order.value}")
    if a.action is not None:
        flags.append(f'action="{a.action}"')
    head = "D" + (f"[{','.join(flags)}]" if flags else "")
    return f"{head}({show_relation(t.s1)},{show_relation(t.s2)})"


# --- pure sets -------------------------------------------------------------


def parse_set(text: str):
    cur = _Cursor(text)
    x = _set_expr(cur)
    cur.expect_end()
    return x


def _set_expr(cur: _Cursor):
    tok = cur.tok
    if cur.at("∅"):
        cur.advance()
        return FSet()
    if tok.type == "ident":
        cur.advance()
        return Atom(tok.text)
    if not cur.at("{"):
        raise cur.error(f"expected a set or an atom, found {cur.describe()}")
    cur.advance()
    members = []
    if not cur.at("}"):
        members.append(_set_expr(cur))
        while cur.at(","):
            cur.advance()
            members.append(_set_expr(cur))
    cur.expect("}")
    return FSet(members)

