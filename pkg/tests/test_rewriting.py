import random

import pytest
from hypothesis import given, strategies as st

from mdt.errors import BoundaryCrossed, NoSuchBond, UnknownElement, WrongAdicity
from mdt.graph import (
    DYAD,
    MONAD,
    TRIAD,
    Bond,
    Molecule,
    PortRef,
    erase_bond,
    form_bond,
    free_ends,
    is_connected,
    is_medad,
    isomorphic,
    make_element,
    validate,
)
from mdt.notation import parse_decl, parse_term
from mdt.rewriting import (
    insert_triad,
    line_equivalent,
    make_group,
    normalize_lines,
    reduce_polyad,
    triad_join,
)
from tests.oracles import fuse_all, random_molecule

seeds = st.integers(0, 2**32 - 1)


def P(text):
    e, i = text.split(".")
    return PortRef(e, int(i))


def dyad_arm():
    medad = parse_term("D(M,M)")
    return insert_triad(medad, medad.sorted_bonds()[0])


def test_insert_triad_on_monad_pair():
    m = insert_triad(parse_term("M(M)"), Bond(P("e1.0"), P("e2.0")))
    assert m.counts() == (2, 0, 1)
    assert len(free_ends(m)) == 1
    assert is_connected(m)
    assert isomorphic(m, parse_term("T(M,M,_)"))


def test_insert_triad_dyad_arm():
    arm = dyad_arm()
    assert len(free_ends(arm)) == 1
    assert arm.counts() == (2, 1, 1)
    assert is_connected(arm)


def test_insert_triad_absent_bond():
    with pytest.raises(NoSuchBond):
        insert_triad(parse_term("D(M,M)"), Bond(P("e2.0"), P("e3.0")))


@given(seeds)
def test_insert_triad_adds_one_free_end_and_one_triad(seed):
    rng = random.Random(seed)
    m = random_molecule(rng)
    if not m.bonds:
        return
    b = rng.choice(m.sorted_bonds())
    out = insert_triad(m, b)
    assert len(free_ends(out)) == len(free_ends(m)) + 1
    assert out.counts()[2] == m.counts()[2] + 1
    assert validate(out) == []


@given(seeds)
def test_insert_triad_splice_is_reversible(seed):
    rng = random.Random(seed)
    m = random_molecule(rng)
    if not m.bonds:
        return
    b = rng.choice(m.sorted_bonds())
    out = insert_triad(m, b)
    (t,) = set(out.elements) - set(m.elements)
    for bond in [x for x in out.sorted_bonds() if t in (x.a.element, x.b.element)]:
        out = erase_bond(out, bond)
    out = Molecule({e: k for e, k in out.elements.items() if e != t}, out.bonds)
    assert form_bond(out, b.a, b.b) == m


def test_triad_join_triad_of_dyads():
    arms = [dyad_arm() for _ in range(3)]
    m = triad_join(*arms)
    assert is_medad(m)
    assert m.counts() == (6, 3, 4)
    assert len(m.bonds) == 12


def test_triad_join_triad_of_triads():
    arm = parse_term("T(M,M,_)")
    m = triad_join(arm, arm, arm)
    assert is_medad(m)
    assert m.counts() == (6, 0, 4)
    assert len(m.bonds) == 9


def test_triad_join_rejects_medad():
    arm = parse_term("T(M,M,_)")
    with pytest.raises(WrongAdicity):
        triad_join(arm, arm, parse_term("D(M,M)"))


@given(st.lists(st.sampled_from(["T(M,M,_)", "D(_,M)", "M", "D(T(M,M),_)", "T(D(M),M,_)"]), min_size=3, max_size=3))
def test_triad_join_always_medad(terms):
    parts = [parse_term(t) for t in terms]
    out = triad_join(*parts)
    assert is_medad(out)
    expected = [sum(x) for x in zip(*(p.counts() for p in parts))]
    expected[2] += 1
    assert list(out.counts()) == expected


def test_make_group_examples():
    arm = parse_term("T(M,M,_)")
    g = make_group(arm, arm.elements).groups[-1]
    assert g.adicity == 1
    medad = parse_term("D(M,M)")
    assert make_group(medad, medad.elements).groups[-1].adicity == 0
    with pytest.raises(BoundaryCrossed):
        make_group(parse_term("M(M)"), {"e1"})
    with pytest.raises(UnknownElement):
        make_group(medad, {"nope"})
    with pytest.raises(UnknownElement):
        make_group(medad, set())


def test_group_of_lone_element_exports_all_ports():
    g = make_group(make_element(TRIAD), {"e1"}).groups[0]
    assert g.adicity == 3


def chain(k):
    """M - D^k - M as a declaration."""
    lines = ["a:M;", "b:M;"] + [f"d{i}:D;" for i in range(1, k + 1)]
    lines.append("bond a.0--d1.0;")
    for i in range(1, k):
        lines.append(f"bond d{i}.1--d{i + 1}.0;")
    lines.append(f"bond d{k}.1--b.0;")
    return parse_decl("\n".join(lines))


def test_normalize_two_dyad_chain():
    form = normalize_lines(chain(2))
    assert isomorphic(form.skeleton, parse_term("D(M,M)"))
    assert [loss.count for loss in form.chain_losses] == [2]


def test_normalize_already_canonical():
    m = parse_term("D(M,M)")
    form = normalize_lines(m)
    assert form.skeleton == m
    assert form.chain_losses == ()


def test_normalize_three_dyad_chain_matches_fusion_oracle():
    m = chain(3)
    fused, fusions = fuse_all(m)
    assert fusions == 2
    form = normalize_lines(m)
    assert isomorphic(form.skeleton, fused)
    assert isomorphic(form.skeleton, parse_term("D(M,M)"))
    assert [loss.count for loss in form.chain_losses] == [3]


def test_normalize_chain_with_free_end():
    m = parse_term("D(D(D(_)),M)")
    form = normalize_lines(m)
    assert isomorphic(form.skeleton, parse_term("D(_,M)"))
    assert [loss.count for loss in form.chain_losses] == [3]
    assert len(free_ends(form.skeleton)) == 1


def test_normalize_dyad_cycles():
    two = parse_decl("a:D; b:D; bond a.0--b.0; bond a.1--b.1;")
    assert normalize_lines(two).chain_losses == ()
    four = parse_decl("a:D; b:D; c:D; d:D; bond a.1--b.0; bond b.1--c.0; bond c.1--d.0; bond d.1--a.0;")
    form = normalize_lines(four)
    assert isomorphic(form.skeleton, two)
    assert [loss.count for loss in form.chain_losses] == [4]


def test_normalize_between_triads():
    m = parse_decl(
        """
        t:T; u:T; x:D; y:D; m1:M; m2:M; m3:M; m4:M;
        bond t.0--m1.0; bond t.1--m2.0; bond t.2--x.0; bond x.1--y.0; bond y.1--u.0;
        bond u.1--m3.0; bond u.2--m4.0;
        """
    )
    form = normalize_lines(m)
    assert form.skeleton.counts() == (4, 1, 2)
    assert is_medad(form.skeleton)


def test_line_equivalent_examples():
    assert line_equivalent(chain(3), parse_term("D(M,M)"))
    assert not line_equivalent(parse_term("D(M,M)"), parse_term("M(M)"))
    m = parse_term("T(D(M),D(D(M)),_)")
    assert line_equivalent(m, m)


@given(seeds)
def test_normalize_matches_fusion_oracle(seed):
    m = random_molecule(random.Random(seed), steps=16, max_elements=9)
    form = normalize_lines(m)
    fused, fusions = fuse_all(m)
    assert isomorphic(form.skeleton, fused)
    assert sum(len(loss.removed) for loss in form.chain_losses) == fusions
    assert all(loss.count >= 2 for loss in form.chain_losses)
    assert validate(form.skeleton) == []
    assert len(free_ends(form.skeleton)) == len(free_ends(m))


@given(seeds)
def test_normalize_idempotent(seed):
    m = random_molecule(random.Random(seed), steps=16, max_elements=9)
    skeleton = normalize_lines(m).skeleton
    again = normalize_lines(skeleton)
    assert again.skeleton == skeleton
    assert again.chain_losses == ()


@given(seeds)
def test_isomorphic_implies_line_equivalent(seed):
    from tests.oracles import relabel

    rng = random.Random(seed)
    m = random_molecule(rng, steps=12, max_elements=7)
    assert line_equivalent(m, relabel(m, rng))


@pytest.mark.parametrize("k", [4, 5, 6])
def test_reduce_polyad_with_monads(k):
    m = reduce_polyad(k, [make_element(MONAD)] * k)
    assert m.counts() == (k, 0, k - 2)
    assert is_medad(m)
    assert is_connected(m)
    assert len(m.bonds) == k + (k - 3)


def test_reduce_polyad_rejects_open_attachment():
    with pytest.raises(WrongAdicity):
        reduce_polyad(4, [make_element(MONAD)] * 3 + [make_element(DYAD)])


def test_reduce_polyad_with_compound_attachments():
    parts = [parse_term("T(M,M,_)"), make_element(MONAD), parse_term("D(_,M)"), make_element(MONAD), make_element(MONAD)]
    m = reduce_polyad(5, parts)
    assert is_medad(m)
    assert m.counts()[2] == 3 + 1
