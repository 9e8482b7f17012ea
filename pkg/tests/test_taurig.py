import numpy as np
import pytest

from tautilt.krullschmidt import is_indecomposable
from tautilt.modrep import INFINITE, injective, is_isomorphic, is_projective, projective, simple
from tautilt.stablefun import all_indecomposables
from tautilt.tau import tau
from tautilt.taurig import (
    Verdict,
    classify_algebra,
    common_summand,
    construct_from_simple,
    criterion_verdict,
    generate_corpus,
    hunt_counterexample,
    is_nakayama,
    is_tau_rigid,
    module_name,
    nakayama_tau_tilting,
    rigid_by_presentation,
    rigid_count_check,
    tau_tilting_all,
    unique_tilting_implies_local_check,
)

from conftest import EX51, EX52, EX53, alg, cycle, finite_corpus, line

LOOP = "vertices 1\narrow x 1 1\nrelations rad2\n"
KRONECKER = "vertices 1\narrow x 1 1\narrow y 1 1\nrelations rad2\n"
A2 = "vertices 2\narrow a 1 2\nrelations rad2\n"
LOOP_ARROW = "vertices 2\narrow a 1 2\narrow x 1 1\nrelations rad2\n"


def test_rigidity_in_ex53():
    a = alg(EX53)
    i3 = injective(a, 2)
    v = is_tau_rigid(i3)
    assert not v.rigid and v.witness is not None and not v.witness.is_zero()
    v.witness.check()
    assert v.witness.target.dims == tau(i3).dims
    assert is_tau_rigid(tau(i3)).rigid
    assert all(is_tau_rigid(projective(a, k)).rigid for k in range(4))


def test_presentation_rigidity_matches_definition():
    checked = 0
    for a in finite_corpus()[:40]:
        for m in all_indecomposables(a):
            assert rigid_by_presentation(m) == is_tau_rigid(m).rigid
            checked += 1
    assert checked > 200


def test_common_summand_examples():
    a = alg(EX53)
    assert is_isomorphic(common_summand(injective(a, 2)), projective(a, 1))
    assert common_summand(projective(a, 0)) is None
    assert common_summand(simple(alg(EX52), 2)) is None


def test_criterion_examples():
    a = alg(EX53)
    assert criterion_verdict(injective(a, 2)).kind is Verdict.NOT_RIGID_BY_NECESSITY
    b = alg(EX52)
    assert all(criterion_verdict(m).kind is Verdict.RIGID_BY_CRITERION for m in all_indecomposables(b))


def test_criterion_rejects_decomposable():
    a = alg(EX52)
    from tautilt.modrep import direct_sum

    with pytest.raises(ValueError):
        criterion_verdict(direct_sum([simple(a, 0), simple(a, 1)]))


def _names(t):
    return sorted(module_name(r) for r in t.summands)


def test_tau_tilting_ex51():
    mods = tau_tilting_all(alg(EX51))
    got = sorted(_names(t) for t in mods)
    want = sorted(sorted(x) for x in [
        ["P(1)", "P(2)", "P(3)", "P(4)"],
        ["P(1)", "S(1)", "P(3)", "P(4)"], ["P(1)", "P(2)", "S(2)", "P(4)"],
        ["P(1)", "P(2)", "P(3)", "S(3)"], ["S(4)", "P(2)", "P(3)", "P(4)"],
        ["P(1)", "S(1)", "P(3)", "S(3)"], ["S(4)", "P(2)", "S(2)", "P(4)"],
    ])
    assert got == want


@pytest.mark.parametrize("text,count", [(LOOP, 1), (A2, 2)])
def test_tau_tilting_counts(text, count):
    mods = tau_tilting_all(alg(text))
    assert len(mods) == count
    for t in mods:
        m = t.module()
        assert len(t) == m.algebra.n
        from tautilt.modrep import hom_dim

        assert hom_dim(m, tau(m)) == 0


def test_nakayama_forms_ex51():
    a = alg(EX51)
    nt = nakayama_tau_tilting(a)
    assert len(nt) == 7
    assert ["P(1)", "P(2)", "P(3)", "P(4)"] in [_names(t) for t in nt]
    assert sorted(["S(1)", "S(3)", "P(1)", "P(3)"]) in [_names(t) for t in nt]


def test_nakayama_precondition():
    with pytest.raises(ValueError):
        nakayama_tau_tilting(alg(LOOP))
    with pytest.raises(ValueError):
        nakayama_tau_tilting(alg(EX52))


@pytest.mark.parametrize("a", [line(n) for n in (2, 3, 5)] + [cycle(n) for n in (2, 3, 5)])
def test_nakayama_agrees_with_enumeration(a):
    nt = nakayama_tau_tilting(a)
    tt = tau_tilting_all(a)
    assert len(nt) == len(tt)
    assert all(any(x.same_as(y) for y in tt) for x in nt)


def test_construct_case_1_ex52():
    a = alg(EX52)
    out = construct_from_simple(a, 0)
    assert out.case == "1" and out.chosen == 2 and out.multiplicity == 1
    # the whole syzygy is S(3), so nothing is divided out
    assert is_isomorphic(out.module, projective(a, 0))
    assert out.certified


def test_construct_case_2a_loop():
    out = construct_from_simple(alg(LOOP), 0)
    assert out.case == "2a" and out.module is None and out.exhaustive is True


def test_construct_case_2b():
    a = alg(LOOP_ARROW)
    out = construct_from_simple(a, 0)
    assert out.case == "2b" and out.module.dims == (2, 0)
    assert is_indecomposable(out.module) and not is_projective(out.module) and is_tau_rigid(out.module).rigid


def test_construct_rejects_projective_simple():
    with pytest.raises(ValueError):
        construct_from_simple(alg(EX52), 3)


@pytest.mark.parametrize("text,count,bound", [(EX51, 8, 8), (EX52, 8, 7), (A2, 3, 3)])
def test_rigid_count(text, count, bound):
    assert rigid_count_check(alg(text)) == (count, bound)


def test_rigid_count_below_bound_with_pure_loop_simple():
    # S(2) has Omega S(2) = S(2): only P(1), P(2), S(1) are tau-rigid, against 2n - m = 4
    a = alg("vertices 2\narrow a 1 2\narrow x 2 2\nrelations rad2\n")
    assert rigid_count_check(a) == (3, 4)
    names = sorted(module_name(m) for m in all_indecomposables(a) if is_tau_rigid(m).rigid)
    assert names == ["P(1)", "P(2)", "S(1)"]
    assert construct_from_simple(a, 1).case == "2a"


def test_uniqueness_report():
    rep = unique_tilting_implies_local_check(alg(LOOP))
    assert rep.tilting_count == 1 and rep.holds
    assert rep.has_simple_projective is False and rep.simples_in_own_syzygy
    field = unique_tilting_implies_local_check(alg("vertices 1\nrelations rad2\n"))
    assert field.tilting_count == 1 and field.holds and field.has_simple_projective
    assert unique_tilting_implies_local_check(alg(A2)).tilting_count == 2


def test_classify_examples():
    p51 = classify_algebra(alg(EX51))
    assert (p51.local, p51.nakayama, p51.self_injective, p51.gorenstein, p51.rep_finite) == (
        False, True, True, True, True)
    assert p51.gldim == INFINITE
    p52 = classify_algebra(alg(EX52))
    assert (p52.nakayama, p52.self_injective, p52.gorenstein, p52.rep_finite, p52.gldim) == (
        False, False, True, True, 2)
    loop = classify_algebra(alg(LOOP))
    assert loop.local and loop.self_injective and loop.almost_split_certificate


def test_corpus_is_deterministic_and_connected():
    a = generate_corpus(5, 5, 7, 30)
    b = generate_corpus(5, 5, 7, 30)
    assert a == b
    assert all(x.quiver.is_connected() and x.n <= 5 and len(x.arrows) <= 7 for x in a)
    assert generate_corpus(1, 1, 0, 1)[0].arrows == ()


def test_hunt_kronecker():
    rep = hunt_counterexample(algebras=[alg(KRONECKER)], dim_bound=8)
    entry = rep.entries[0]
    assert not entry.rep_finite and entry.samples
    assert entry.non_rigid_found  # the simple has a self-extension
    assert not rep.candidates


def test_hunt_is_deterministic():
    a = hunt_counterexample(seed=3, count=6, max_vertices=3, max_arrows=4, dim_bound=6)
    b = hunt_counterexample(seed=3, count=6, max_vertices=3, max_arrows=4, dim_bound=6)
    assert [(e.algebra, [(s.origin, s.dims, s.rigid) for s in e.samples]) for e in a.entries] == [
        (e.algebra, [(s.origin, s.dims, s.rigid) for s in e.samples]) for e in b.entries
    ]
    assert all(not e.samples for e in a.entries if e.rep_finite)


def test_is_nakayama():
    assert is_nakayama(alg(EX51)) and is_nakayama(line(4))
    assert not is_nakayama(alg(EX52))


def test_module_names():
    a = alg(EX51)
    assert module_name(projective(a, 3)) == "P(4)"
    assert module_name(simple(a, 0)) == "S(1)"
    b = alg(EX53)
    assert module_name(tau(injective(b, 2))) == "M1111"
