import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import GF, Poly as SymPoly, symbols
from sympy.polys.matrices import DomainMatrix

from tautilt.exactla import Poly, PrimeField, is_prime

F = PrimeField(101)


def matrices(p=101, max_side=5):
    return st.integers(1, max_side).flatmap(
        lambda r: st.integers(1, max_side).flatmap(
            lambda c: st.lists(st.integers(0, p - 1), min_size=r * c, max_size=r * c).map(
                lambda xs: np.array(xs, dtype=np.int64).reshape(r, c)
            )
        )
    )


def sympy_rank(m, p):
    dm = DomainMatrix([[GF(p)(int(x)) for x in row] for row in m], m.shape, GF(p))
    return dm.rank()


def test_primality():
    assert [q for q in range(20) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19]
    with pytest.raises(ValueError):
        PrimeField(100)


def test_rref_small():
    r, piv, rank = F.rref([[1, 2], [2, 4]])
    assert rank == 1 and piv == [0]
    assert r.tolist() == [[1, 2], [0, 0]]


def test_nullspace_of_row():
    ns = F.nullspace([[1, 2]])
    assert ns.shape == (2, 1)
    assert (np.array([[1, 2]]) @ ns % 101 == 0).all()


def test_solve_and_inverse():
    assert F.solve([[2]], [1]).tolist() == [51]
    assert F.solve([[1, 1], [1, 1]], [0, 1]) is None
    m = np.array([[1, 2], [3, 4]])
    assert (F.mul(m, F.inverse(m)) == np.eye(2)).all()
    with pytest.raises(ValueError):
        F.solve([[1, 2]], [1, 2])


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_matches_sympy(m):
    assert F.rank(m) == sympy_rank(m, 101)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    ns = F.nullspace(m)
    assert F.rank(m) + ns.shape[1] == m.shape[1]
    assert not (m @ ns % 101).any()


@settings(max_examples=60, deadline=None)
@given(matrices(p=7), st.integers(0, 6))
def test_solve_consistency(m, seed):
    f = PrimeField(7)
    x = np.random.default_rng(seed).integers(0, 7, size=m.shape[1])
    b = m @ x % 7
    y = f.solve(m, b)
    assert y is not None and ((m @ y - b) % 7 == 0).all()


@settings(max_examples=50, deadline=None)
@given(matrices())
def test_complete_basis_splits(m):
    basis = F.column_basis(m)
    q, s = F.complete_basis(basis)
    assert q.shape[0] + basis.shape[1] == m.shape[0]
    assert not F.mul(q, basis).any()
    assert (F.mul(q, s) == np.eye(q.shape[0], dtype=np.int64)).all()


def test_min_poly_of_diagonal():
    mp = F.min_poly(np.diag([1, 2, 2]))
    assert mp == Poly.make([2, -3, 1], 101)
    assert F.min_poly(np.zeros((0, 0), np.int64)).degree == 0


def test_poly_arithmetic():
    x = Poly.x(101)
    a = x * x + Poly.make([1], 101)
    q, r = divmod(a * (x + Poly.make([3], 101)) + x, a)
    assert q == x + Poly.make([3], 101) and r == x
    g, s, t = (x * x - Poly.make([1], 101)).xgcd(x - Poly.make([1], 101))
    assert g == x - Poly.make([1], 101)


@pytest.mark.parametrize("p,coeffs", [(101, [1, 0, 0, 0, 0, 0, 1]), (2, [1] * 10), (7, [3, 1, 4, 1, 5])])
def test_factor_matches_sympy(p, coeffs):
    f = PrimeField(p)
    poly = Poly.make(coeffs, p).monic()
    ours = sorted((tuple(g.coeffs), k) for g, k in f.factor(poly))
    x = symbols("x")
    sp = SymPoly(list(reversed(poly.coeffs)), x, modulus=p)
    theirs = []
    for g, k in sp.factor_list()[1]:
        c = [int(v) % p for v in reversed(g.all_coeffs())]
        lead = pow(c[-1], -1, p)
        theirs.append((tuple(v * lead % p for v in c), k))
    assert ours == sorted(theirs)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 10), min_size=2, max_size=7))
def test_factor_product_roundtrip(cs):
    p = 11
    poly = Poly.make(cs[:-1] + [1], p)
    prod = Poly.make([1], p)
    for g, k in PrimeField(p).factor(poly):
        for _ in range(k):
            prod = prod * g
    assert prod == poly.monic()
