"""Endomorphism algebras and Krull-Schmidt decomposition.

The radical ``J`` of ``E = End(M)`` is the radical of the trace form of the
regular representation, which is exact when ``p > dim E``.  Idempotents are
found in the semisimple quotient ``E/J`` and lifted with ``e <- 3e^2 - 2e^3``.
Modules with ``dim E >= p`` are first cut along primary components of single
endomorphisms, which needs no bound on ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .modrep import Rep, RepMorphism, hom_basis, image, is_isomorphic

__all__ = [
    "FieldTooSmallError",
    "EndoAlgebra",
    "Decomposition",
    "endomorphism_algebra",
    "jacobson_radical",
    "decompose",
    "is_indecomposable",
    "same_decomposition",
]


class FieldTooSmallError(ValueError):
    pass


@dataclass
class EndoAlgebra:
    """``End(M)`` with structure constants ``b_i b_j = sum_k c[i, j, k] b_k``."""

    module: Rep
    basis: list[RepMorphism]
    structure: np.ndarray
    unit: np.ndarray
    _rows: np.ndarray = field(repr=False)
    _rows_inv: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def p(self) -> int:
        return self.module.algebra.p

    def coords(self, g: RepMorphism) -> np.ndarray:
        vec = g.vector()
        return (self._rows_inv @ vec[self._rows]) % self.p

    def element(self, coords) -> RepMorphism:
        m = self.module
        acc = RepMorphism.zero(m, m)
        for c, b in zip(coords, self.basis):
            if c:
                acc = acc + b.scale(int(c))
        return acc

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.einsum("i,j,ijk->k", x, y, self.structure) % self.p


def endomorphism_algebra(m: Rep) -> EndoAlgebra:
    f = m.field
    basis = hom_basis(m, m)
    k = len(basis)
    if k == 0:
        return EndoAlgebra(m, [], np.zeros((0, 0, 0), np.int64), np.zeros(0, np.int64),
                           np.zeros(0, int), np.zeros((0, 0), np.int64))
    vecs = np.stack([b.vector() for b in basis], axis=0)  # k x N
    _, rows, _ = f.rref(vecs)
    rows = np.array(rows, dtype=int)
    rows_inv = f.inverse(vecs[:, rows].T)
    structure = np.zeros((k, k, k), dtype=np.int64)
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            prod = (bi @ bj).vector()
            structure[i, j] = (rows_inv @ prod[rows]) % f.p
    unit_vec = RepMorphism.identity(m).vector()
    unit = (rows_inv @ unit_vec[rows]) % f.p
    return EndoAlgebra(m, basis, structure, unit, rows, rows_inv)


def _check_field(e: EndoAlgebra) -> None:
    if e.p <= e.dim:
        raise FieldTooSmallError(
            f"field prime {e.p} must exceed dim End(M) = {e.dim}; rebuild the algebra over a larger prime"
        )


def jacobson_radical(e: EndoAlgebra) -> np.ndarray:
    """Coordinates (columns) of a basis of ``J(E)``."""
    _check_field(e)
    k = e.dim
    if k == 0:
        return np.zeros((0, 0), np.int64)
    p = e.p
    c = e.structure
    traces = np.einsum("mjj->m", c) % p  # Tr L_{b_m}
    form = np.einsum("ijm,m->ij", c, traces) % p
    rad = e.module.field.nullspace(form.T)
    _check_nilpotent(e, rad)
    return rad


def _check_nilpotent(e: EndoAlgebra, rad: np.ndarray) -> None:
    f = e.module.field
    cur = rad
    for _ in range(e.dim + 1):
        if cur.shape[1] == 0:
            return
        prods = [e.mul(cur[:, i], rad[:, j]) for i in range(cur.shape[1]) for j in range(rad.shape[1])]
        cur = f.column_basis(np.stack(prods, axis=1))
    raise ArithmeticError("trace-form radical is not nilpotent; field too small?")


class _Quotient:
    """The semisimple algebra ``E/J`` in coordinates of a complement of ``J``."""

    def __init__(self, e: EndoAlgebra, rad: np.ndarray):
        f = e.module.field
        self.e = e
        self.p = e.p
        self.field = f
        q, s = f.complete_basis(rad)
        self.q = q
        self.s = s
        idx = [int(np.nonzero(s[:, i])[0][0]) for i in range(s.shape[1])]
        self.structure = np.einsum("ijk,lk->ijl", e.structure[np.ix_(idx, idx)], q) % self.p
        self.unit = (q @ e.unit) % self.p
        self.dim = s.shape[1]

    def mul(self, x, y):
        return np.einsum("i,j,ijk->k", x, y, self.structure) % self.p

    def left(self, x):
        return np.einsum("i,ijk->kj", x, self.structure) % self.p

    def is_commutative(self) -> bool:
        return np.array_equal(self.structure, self.structure.transpose(1, 0, 2))

    def power(self, x, n: int):
        result, base = self.unit.copy(), x.copy()
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def evaluate(self, poly, x):
        return (self.field.poly_eval_matrix(poly, self.left(x)) @ self.unit) % self.p

    def lift(self, x) -> np.ndarray:
        return (self.s @ x) % self.p


def _commutative_idempotent(qa: _Quotient):
    """Nontrivial idempotent of a commutative semisimple algebra, or ``None`` for a field."""
    f = qa.field
    p = qa.p
    frob = np.stack([qa.power(np.eye(qa.dim, dtype=np.int64)[i], p) for i in range(qa.dim)], axis=1)
    fixed = f.nullspace((frob - np.eye(qa.dim, dtype=np.int64)) % p)
    if fixed.shape[1] <= 1:
        return None
    for j in range(fixed.shape[1]):
        z = fixed[:, j]
        mp = f.min_poly(qa.left(z))
        roots = mp.roots()
        if len(roots) < 2:
            continue
        r0 = roots[0]
        e = qa.unit.copy()
        for r in roots[1:]:
            factor = (z - r * qa.unit) % p
            e = qa.mul(e, factor) * f.inv(r0 - r) % p
        return e
    raise ArithmeticError("Berlekamp subalgebra has no separating element")


def _split_with(qa: _Quotient, x: np.ndarray):
    f = qa.field
    p = qa.p
    mp = f.min_poly(qa.left(x))
    facs = f.factor(mp)
    if len(facs) >= 2:
        g0, m0 = facs[0]
        g = g0
        for _ in range(m0 - 1):
            g = g * g0
        h = mp // g
        _, s, t = g.xgcd(h)
        # t*h = 1 mod g and = 0 mod h
        return qa.evaluate(t * h, x)
    g0, m0 = facs[0]
    if m0 >= 2:
        y = qa.evaluate(g0, x)
        # von Neumann regularity in a semisimple algebra: y z y = y
        cols = [qa.mul(qa.mul(y, np.eye(qa.dim, dtype=np.int64)[i]), y) for i in range(qa.dim)]
        z = f.solve(np.stack(cols, axis=1), y)
        if z is None:
            raise ArithmeticError("quotient by the radical is not semisimple")
        return qa.mul(z, y)
    return None


def _noncommutative_idempotent(qa: _Quotient, tries: int = 2000):
    eye = np.eye(qa.dim, dtype=np.int64)
    candidates = [eye[i] for i in range(qa.dim)]
    candidates += [(eye[i] + eye[j]) % qa.p for i, j in combinations(range(qa.dim), 2)]
    for x in candidates:
        e = _split_with(qa, x)
        if e is not None:
            return e
    rng = np.random.default_rng(20130983)
    for _ in range(tries):
        e = _split_with(qa, rng.integers(0, qa.p, size=qa.dim))
        if e is not None:
            return e
    raise ArithmeticError("no idempotent found in a non-commutative semisimple algebra")


def _lift_idempotent(e: EndoAlgebra, coords: np.ndarray) -> RepMorphism:
    f = e.module.field
    x = e.element(coords).matrix()
    for _ in range(64):
        x2 = f.mul(x, x)
        if np.array_equal(x2, x):
            m = e.module
            return RepMorphism.from_matrix(m, m, x)
        x = (3 * x2 - 2 * f.mul(x2, x)) % f.p
    raise ArithmeticError("idempotent lifting did not converge")


def _split_idempotent(m: Rep) -> RepMorphism | None:
    e = endomorphism_algebra(m)
    if e.dim <= 1:
        return None
    rad = jacobson_radical(e)
    if e.dim - rad.shape[1] == 1:
        return None
    qa = _Quotient(e, rad)
    if qa.is_commutative():
        bar = _commutative_idempotent(qa)
        if bar is None:
            return None
    else:
        bar = _noncommutative_idempotent(qa)
    return _lift_idempotent(e, qa.lift(bar))


def _primary_idempotent(m: Rep) -> RepMorphism | None:
    """Projection onto a primary component of some basis endomorphism.

    Works for any ``p``; used for big ``End(M)`` before the radical route,
    which needs ``p > dim End(M)``.
    """
    f = m.field
    mats = [phi.matrix() for phi in hom_basis(m, m)]
    rng = np.random.default_rng(20130983)
    coeffs = rng.integers(0, f.p, size=(20, len(mats)))
    candidates = mats + [sum(int(c) * x for c, x in zip(row, mats)) % f.p for row in coeffs]
    for x in candidates:
        mp = f.min_poly(x)
        facs = f.factor(mp)
        if len(facs) < 2:
            continue
        g0, k = facs[0]
        g = g0
        for _ in range(k - 1):
            g = g * g0
        h = mp // g
        _, _, t = g.xgcd(h)
        return RepMorphism.from_matrix(m, m, f.poly_eval_matrix(t * h, x))
    return None


def _split(m: Rep) -> list[Rep]:
    if m.is_zero():
        return []
    idem = None
    if len(hom_basis(m, m)) >= m.field.p:
        idem = _primary_idempotent(m)
    if idem is None:
        idem = _split_idempotent(m)
    if idem is None:
        return [m]
    rest = RepMorphism.identity(m) + idem.scale(-1)
    return _split(image(idem)[0]) + _split(image(rest)[0])


def is_indecomposable(m: Rep) -> bool:
    return not m.is_zero() and _split_idempotent(m) is None


@dataclass
class Decomposition:
    """Iso classes of indecomposable summands with multiplicities, canonically ordered."""

    summands: list[tuple[Rep, int]]

    def __len__(self) -> int:
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def modules(self) -> list[Rep]:
        return [r for r, k in self.summands for _ in range(k)]

    def total_dims(self) -> tuple[int, ...]:
        n = len(self.summands[0][0].dims) if self.summands else 0
        return tuple(sum(r.dims[v] * k for r, k in self.summands) for v in range(n))

    def multiplicities(self) -> list[int]:
        return [k for _, k in self.summands]

    def matches(self, other: "Decomposition") -> bool:
        """Equality as multisets of isomorphism classes."""
        return _multiset_equal(self.summands, other.summands)


def _sort_key(r: Rep):
    return (r.dims, r.dump())


def group_summands(parts: list[Rep]) -> list[tuple[Rep, int]]:
    groups: list[list[Rep]] = []
    for part in parts:
        for g in groups:
            if is_isomorphic(g[0], part, indecomposable=True):
                g.append(part)
                break
        else:
            groups.append([part])
    out = [(min(g, key=_sort_key), len(g)) for g in groups]
    out.sort(key=lambda t: _sort_key(t[0]))
    return out


def decompose(m: Rep) -> Decomposition:
    return Decomposition(group_summands(_split(m)))


def _multiset_equal(xs: list[tuple[Rep, int]], ys: list[tuple[Rep, int]]) -> bool:
    if len(xs) != len(ys):
        return False
    left = list(ys)
    for r, k in xs:
        for i, (s, l) in enumerate(left):
            if k == l and is_isomorphic(r, s, indecomposable=True):
                del left[i]
                break
        else:
            return False
    return True


def same_decomposition(m: Rep, n: Rep) -> bool:
    return decompose(m).matches(decompose(n))
