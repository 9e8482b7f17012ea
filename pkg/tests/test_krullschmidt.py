import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tautilt.algebra import AlgebraSpec
from tautilt.exactla import PrimeField
from tautilt.krullschmidt import (
    FieldTooSmallError,
    decompose,
    endomorphism_algebra,
    is_indecomposable,
    jacobson_radical,
    same_decomposition,
)
from tautilt.modrep import Rep, direct_sum, injective, is_isomorphic, projective, regular_module, simple
from tautilt.stablefun import all_indecomposables

from conftest import EX51, EX53, alg, finite_corpus


def test_regular_module_splits_into_projectives():
    a = alg(EX51)
    d = decompose(regular_module(a))
    assert len(d) == 4 and d.multiplicities() == [1, 1, 1, 1]
    assert all(any(is_isomorphic(r, projective(a, v)) for v in range(4)) for r, _ in d)


def test_multiplicities():
    a = alg(EX51)
    d = decompose(direct_sum([simple(a, 0), simple(a, 0), projective(a, 1)]))
    assert sorted(d.multiplicities()) == [1, 2]


def test_indecomposables():
    a = alg(EX53)
    assert is_indecomposable(injective(a, 2))
    assert not is_indecomposable(direct_sum([projective(a, 1), projective(a, 3)]))


def test_radical_of_local_endomorphisms():
    a = alg(EX53)
    e = endomorphism_algebra(injective(a, 2))
    assert e.dim - jacobson_radical(e).shape[1] == 1


def test_field_too_small():
    a = alg("field 2\nvertices 1\nrelations rad2\n")
    m = direct_sum([simple(a, 0)] * 2)
    with pytest.raises(FieldTooSmallError):
        jacobson_radical(endomorphism_algebra(m))
    # primary components of an endomorphism still split it
    assert decompose(m).multiplicities() == [2]
    loop = alg("field 2\nvertices 1\narrow x 1 1\nrelations rad2\n")
    with pytest.raises(FieldTooSmallError):
        decompose(projective(loop, 0))


def test_hidden_summands_after_basis_change():
    a = alg(EX53)
    x = direct_sum([injective(a, 2), projective(a, 3), simple(a, 1)])
    rng = np.random.default_rng(7)
    f = a.field
    gs = []
    for d in x.dims:
        while True:
            g = rng.integers(0, a.p, size=(d, d))
            if f.rank(g) == d:
                gs.append(g)
                break
    y = x.change_basis(gs)
    assert same_decomposition(x, y)
    assert len(decompose(y)) == 3


def test_noncommutative_semisimple_quotient():
    # S^2 has End = M_2(k): exercises the non-commutative idempotent search
    a = alg(EX53)
    m = direct_sum([injective(a, 2)] * 2 + [simple(a, 3)])
    d = decompose(m)
    assert sorted(d.multiplicities()) == [1, 2]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_indecomposables_are_indecomposable(seed):
    algs = finite_corpus()
    rng = np.random.default_rng(seed)
    a = algs[rng.integers(len(algs))]
    mods = all_indecomposables(a)
    m = mods[rng.integers(len(mods))]
    assert is_indecomposable(m)
    assert decompose(m).summands[0][1] == 1
