import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tautilt.modrep import (
    INFINITE,
    Rep,
    RepMorphism,
    direct_sum,
    dual,
    ext1_dim,
    global_dimension,
    hom_basis,
    hom_dim,
    injective,
    is_injective,
    is_isomorphic,
    is_projective,
    is_self_injective,
    min_presentation,
    parse_rep,
    projective,
    projective_dimension,
    radical,
    simple,
    socle,
    syzygy,
    top,
)
from tautilt.stablefun import all_indecomposables

from conftest import EX51, EX52, EX53, alg, finite_corpus


def test_projective_and_injective_dims():
    a = alg(EX53)
    assert [projective(a, v).dims for v in range(4)] == [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 0), (0, 1, 1, 1)]
    assert [injective(a, v).dims for v in range(4)] == [(1, 0, 0, 0), (1, 1, 0, 1), (0, 1, 1, 1), (0, 0, 0, 1)]


def test_rep_checks_relations():
    a = alg(EX52)
    with pytest.raises(ValueError):
        Rep(a, (0, 0, 1, 1), [np.zeros((1, 0)), np.zeros((1, 0)), np.zeros((2, 1))])
    with pytest.raises(ValueError):
        # a1 then a3 would be a nonzero length-2 path
        Rep(a, (1, 0, 1, 1), [np.ones((1, 1)), np.zeros((1, 0)), np.ones((1, 1))])


def test_parse_rep_roundtrip():
    a = alg(EX53)
    m = injective(a, 2)
    assert parse_rep(a, m.dump()) == m


@pytest.mark.parametrize("v", range(4))
def test_hom_from_projective_is_evaluation(v):
    a = alg(EX53)
    for m in all_indecomposables(a):
        assert hom_dim(projective(a, v), m) == m.dims[v]
        assert hom_dim(m, injective(a, v)) == m.dims[v]


def test_hom_basis_are_morphisms():
    a = alg(EX53)
    i3 = injective(a, 2)
    for g in hom_basis(projective(a, 3), i3):
        g.check()


def test_top_radical_socle():
    a = alg(EX53)
    i3 = injective(a, 2)
    assert top(i3)[0].dims == (0, 1, 0, 1)
    assert radical(i3)[0].dims == (0, 0, 1, 0)
    assert socle(i3)[0].dims == (0, 0, 1, 0)


def test_presentation_of_injective_in_ex53():
    pres = min_presentation(injective(alg(EX53), 2))
    assert sorted(pres.p1_vertices) == [1, 2] and sorted(pres.p0_vertices) == [1, 3]


def test_global_dimensions():
    assert global_dimension(alg(EX51)) == INFINITE
    assert global_dimension(alg(EX52)) == 2
    assert global_dimension(alg(EX53)) == 2
    assert projective_dimension(simple(alg(EX52), 0)) == 2


def test_self_injective():
    assert is_self_injective(alg(EX51))
    assert not is_self_injective(alg(EX52))
    assert is_self_injective(alg("vertices 1\narrow x 1 1\nrelations rad2\n"))


def test_ext_of_loop_simple():
    a = alg("vertices 1\narrow x 1 1\nrelations rad2\n")
    assert ext1_dim(simple(a, 0), simple(a, 0)) == 1
    assert ext1_dim(projective(a, 0), simple(a, 0)) == 0


def test_iso_detects_basis_change():
    a = alg(EX53)
    m = injective(a, 1)
    g = [np.array([[3]]), np.array([[2]]), np.zeros((0, 0), np.int64), np.array([[5]])]
    assert is_isomorphic(m, m.change_basis(g))
    assert not is_isomorphic(injective(a, 2), projective(a, 3), indecomposable=True)


def test_iso_of_sums_is_order_free():
    a = alg(EX52)
    x = direct_sum([simple(a, 0), projective(a, 2), simple(a, 0)])
    y = direct_sum([projective(a, 2), simple(a, 0), simple(a, 0)])
    assert is_isomorphic(x, y)
    assert not is_isomorphic(x, direct_sum([simple(a, 0), projective(a, 2), simple(a, 1)]))


def test_dual_swaps_projective_injective():
    a = alg(EX53)
    for v in range(4):
        assert is_injective(injective(a, v))
        assert is_projective(dual(injective(a, v)))


def test_composition_and_identity():
    a = alg(EX53)
    m = injective(a, 2)
    ident = RepMorphism.identity(m)
    assert (ident @ ident).is_iso()
    assert RepMorphism.zero(m, m).is_zero()


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_syzygy_dims_balance(seed):
    algs = finite_corpus()
    rng = np.random.default_rng(seed)
    a = algs[int(rng.integers(len(algs)))]
    mods = all_indecomposables(a)
    m = mods[int(rng.integers(len(mods)))]
    pres = min_presentation(m)
    omega = syzygy(m)
    assert omega.dims == tuple(pres.cover.source.dims[v] - m.dims[v] for v in range(a.n))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_generator_hom_matches_intertwining(seed):
    from tautilt.modrep import _hom_system, _hom_via_generators, relation_matrix

    rng = np.random.default_rng(seed)
    algs = [a for a in finite_corpus() if all_indecomposables(a)]
    a = algs[rng.integers(len(algs))]
    mods = all_indecomposables(a)
    m = direct_sum([mods[rng.integers(len(mods))] for _ in range(2)])
    n = mods[rng.integers(len(mods))]
    f = a.field
    direct = f.nullspace(_hom_system(m, n))
    via = _hom_via_generators(m, n)
    assert direct.shape == via.shape
    if direct.shape[1]:
        assert f.rank(np.concatenate([direct, via], axis=1)) == direct.shape[1]
    rel = relation_matrix(m, n)
    assert rel.shape[1] - f.rank(rel) == direct.shape[1]
