import random

import pytest
from hypothesis import given, strategies as st

from mdt.enumeration import EnumSpec, enumerate_molecules
from mdt.errors import InvalidGraph, NotASet
from mdt.notation import parse_set, parse_term
from mdt.sets import (
    EMPTY,
    Atom,
    FSet,
    SimpleGraph,
    all_labeled_graphs,
    encode_mdt,
    encode_standard,
    kempe_degree_report,
    mdt_sorts,
    ordinal,
    set_equal,
    set_member,
    show,
    unit_identities,
)

S = parse_set


def test_printer_and_ordinals():
    assert show(EMPTY) == "∅"
    assert [show(ordinal(i)) for i in range(3)] == ["∅", "{∅}", "{∅,{∅}}"]
    assert show(S("{{∅},∅}")) == "{∅,{∅}}"


def test_set_equal_examples():
    assert set_equal(S("{∅,{∅}}"), S("{{∅},∅,∅}"))
    assert not set_equal(EMPTY, S("{∅}"))
    assert not set_equal(Atom("a"), S("{a}"))
    assert set_equal(S("{}"), EMPTY)


def test_set_member_examples():
    pair = S("{∅,{∅}}")
    assert set_member(EMPTY, pair)
    assert set_member(S("{∅}"), pair)
    assert not set_member(S("{∅}"), EMPTY)
    with pytest.raises(NotASet):
        set_member(EMPTY, Atom("a"))


def test_unit_identities_examples():
    assert show(unit_identities(S("{∅}"), S("{∅,{∅}}"))) == "{∅}"
    assert unit_identities(EMPTY, S("{a,{b}}")) == EMPTY
    assert show(unit_identities(S("{a,b}"), S("{b,c}"))) == "{b}"
    with pytest.raises(NotASet):
        unit_identities(Atom("a"), EMPTY)


set_exprs = st.recursive(
    st.one_of(st.sampled_from([Atom("a"), Atom("b"), Atom("c")]), st.just(EMPTY)),
    lambda inner: st.lists(inner, max_size=4).map(FSet),
    max_leaves=12,
)
sets_only = set_exprs.filter(lambda x: isinstance(x, FSet))


def reshuffle(x, rng):
    """Same set, members reordered and some repeated, recursively."""
    if isinstance(x, Atom):
        return x
    members = [reshuffle(m, rng) for m in x.members]
    members += [reshuffle(rng.choice(x.members), rng) for _ in range(rng.randint(0, 2))] if x.members else []
    rng.shuffle(members)
    return FSet(members)


@given(set_exprs, st.integers(0, 10**6))
def test_set_equal_ignores_order_and_repeats(x, seed):
    y = reshuffle(x, random.Random(seed))
    assert set_equal(x, y) and set_equal(y, x)


@given(set_exprs, set_exprs, set_exprs)
def test_set_equal_is_an_equivalence(x, y, z):
    assert set_equal(x, x)
    assert set_equal(x, y) == set_equal(y, x)
    if set_equal(x, y) and set_equal(y, z):
        assert set_equal(x, z)


@given(sets_only, sets_only, st.integers(0, 10**6))
def test_unit_identities_symmetric_and_invariant(a, b, seed):
    rng = random.Random(seed)
    assert set_equal(unit_identities(a, b), unit_identities(b, a))
    assert set_equal(unit_identities(a, b), unit_identities(reshuffle(a, rng), reshuffle(b, rng)))


@given(set_exprs, sets_only, st.integers(0, 10**6))
def test_membership_invariant(x, s, seed):
    rng = random.Random(seed)
    assert set_member(x, s) == set_member(reshuffle(x, rng), reshuffle(s, rng))


def test_parse_show_round_trip():
    for text in ["∅", "{∅,{∅}}", "{a,{b,∅}}", "{{a,b},{{a,b}}}"]:
        assert show(S(text)) == text


def test_encode_standard_examples():
    g = SimpleGraph.from_edges(["a", "b"], [("a", "b")])
    assert show(encode_standard(g)) == "{{a,b},{{a,b}}}"
    assert show(encode_standard(SimpleGraph.from_edges([], []))) == "{∅,∅}"
    chain = SimpleGraph.from_edges("abc", [("a", "b"), ("b", "c")])
    assert show(encode_standard(chain)) == "{{a,b,c},{{a,b},{b,c}}}"


def test_simple_graph_checks():
    with pytest.raises(InvalidGraph):
        SimpleGraph.from_edges(["a"], [("a", "a")])
    with pytest.raises(InvalidGraph):
        SimpleGraph.from_edges(["a"], [("a", "b")])


def test_encode_standard_injective_on_three_vertices():
    graphs = list(all_labeled_graphs("abc"))
    assert len(graphs) == 1 + 3 + 3 * 2 + 8
    for g in graphs:
        for h in graphs:
            assert set_equal(encode_standard(g), encode_standard(h)) == (g == h)


def test_encode_mdt_examples():
    monad = parse_term("M")
    assert show(encode_mdt(monad)) == "{{e1},∅,∅,∅}"
    mm = parse_term("M(M)")
    sorts = mdt_sorts(mm)
    assert show(sorts["monads"]) == "{e1,e2}"
    assert show(sorts["bonds"]) == "{{{e1,∅},{e2,∅}}}"
    tmmm = parse_term("T(M,M,M)")
    sorts = mdt_sorts(tmmm)
    assert show(sorts["triads"]) == "{e1}"
    assert len(sorts["bonds"].members) == 3
    assert show(sorts["bonds"]) == "{{{e1,∅},{e2,∅}},{{e3,∅},{e1,{∅}}},{{e4,∅},{e1,{∅,{∅}}}}}"
    assert len(encode_mdt(tmmm).members) == 4


def test_encode_mdt_sorts_on_enumerated():
    for m in enumerate_molecules(EnumSpec(2, 1, 1)):
        enc = encode_mdt(m)
        assert len(enc.members) == 4
        assert len(mdt_sorts(m)["bonds"].members) == len(m.bonds)


def petersen():
    outer = [f"o{i}" for i in range(5)]
    inner = [f"i{i}" for i in range(5)]
    edges = [(outer[i], outer[(i + 1) % 5]) for i in range(5)]
    edges += [(inner[i], inner[(i + 2) % 5]) for i in range(5)]
    edges += [(outer[i], inner[i]) for i in range(5)]
    return SimpleGraph.from_edges(outer + inner, edges)


def test_three_regular_graph_all_triads():
    report = kempe_degree_report(petersen())
    assert len(report.vertices) == 10
    assert {r.degree for r in report.vertices.values()} == {3}
    assert {r.role for r in report.vertices.values()} == {"Triad"}
    assert set(report.edges.values()) == {"Dyad-like"}
    assert report.histogram == {3: 10}


def test_isolated_vertex_and_star():
    report = kempe_degree_report(SimpleGraph.from_edges(["A"], []))
    assert report.vertices["A"].degree == 0 and report.vertices["A"].role == "Triad"
    star = SimpleGraph.from_edges(["c", "1", "2", "3", "4", "5"], [("c", x) for x in "12345"])
    report = kempe_degree_report(star)
    assert report.vertices["c"].role == "Polyad(5)"
    assert report.vertices["c"].triads_needed == 3
    assert report.vertices["1"].role == "Triad"


@given(st.integers(0, 10**6))
def test_handshake(seed):
    rng = random.Random(seed)
    n = rng.randint(0, 9)
    vs = [f"v{i}" for i in range(n)]
    edges = [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:] if rng.random() < 0.4]
    g = SimpleGraph.from_edges(vs, edges)
    report = kempe_degree_report(g)
    assert sum(r.degree for r in report.vertices.values()) == 2 * len(g.edges)
    assert all((r.role.startswith("Polyad")) == (r.degree > 3) for r in report.vertices.values())
