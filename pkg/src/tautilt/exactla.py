"""Exact dense linear algebra and univariate polynomials over a prime field.

Matrices are plain ``numpy`` int64 arrays whose entries are kept reduced to
``0..p-1``.  All sizes in this package are tiny, so every routine is a
straightforward dense Gaussian elimination.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["PrimeField", "Poly", "is_prime"]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p with matrix routines attached."""

    p: int = 101

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or not is_prime(int(self.p)):
            raise ValueError(f"field characteristic must be prime, got {self.p!r}")
        if int(self.p) > 3037000499:
            # products of two reduced entries must fit into int64
            raise ValueError("prime too large for int64 arithmetic")

    # -- scalars ---------------------------------------------------------

    def inv(self, a: int) -> int:
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, self.p - 2, self.p)

    # -- constructors ----------------------------------------------------

    def mat(self, data, rows: int | None = None, cols: int | None = None) -> np.ndarray:
        """Coerce ``data`` to a reduced int64 matrix (optionally reshaped)."""
        m = np.asarray(data, dtype=np.int64)
        if rows is not None:
            m = m.reshape(rows, cols)
        return np.mod(m, self.p)

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def mul(self, *mats: np.ndarray) -> np.ndarray:
        out = mats[0]
        for m in mats[1:]:
            out = self._matmul(out, m)
        return out

    def _matmul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        # float64 BLAS is exact while inner * (p - 1)^2 stays below 2^53
        x, y = np.asarray(x) % self.p, np.asarray(y) % self.p
        if x.ndim == 2 and y.ndim == 2 and x.shape[1] * (self.p - 1) ** 2 < 2**53:
            return (x.astype(np.float64) @ y.astype(np.float64)).astype(np.int64) % self.p
        return (x.astype(np.int64) @ y.astype(np.int64)) % self.p

    # -- elimination -----------------------------------------------------

    def rref(self, m) -> tuple[np.ndarray, list[int], int]:
        """Reduced row echelon form, pivot columns and rank."""
        p = self.p
        a = self.mat(m)
        if a.ndim != 2:
            raise ValueError("rref expects a 2-d matrix")
        a = a.copy()
        rows, cols = a.shape
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(a[r:, c])[0]
            if nz.size == 0:
                continue
            k = r + int(nz[0])
            if k != r:
                a[[r, k]] = a[[k, r]]
            a[r] = (a[r] * self.inv(a[r, c])) % p
            col = a[:, c].copy()
            col[r] = 0
            nzr = np.nonzero(col)[0]
            if nzr.size:
                # columns left of c are already reduced and zero in row r
                a[nzr, c:] = (a[nzr, c:] - np.outer(col[nzr], a[r, c:])) % p
            pivots.append(c)
            r += 1
        return a, pivots, r

    def rank(self, m) -> int:
        m = np.asarray(m)
        if m.size == 0:
            return 0
        return self.rref(m)[2]

    def nullspace(self, m) -> np.ndarray:
        """Basis of ``{x : m x = 0}`` as the columns of the returned matrix."""
        m = self.mat(m)
        rows, cols = m.shape
        if rows == 0:
            return self.eye(cols)
        r, pivots, rank = self.rref(m)
        free = [c for c in range(cols) if c not in set(pivots)]
        basis = self.zeros(cols, len(free))
        for j, f in enumerate(free):
            basis[f, j] = 1
            for i, pc in enumerate(pivots):
                basis[pc, j] = (-r[i, f]) % self.p
        return basis

    def solve(self, m, b) -> np.ndarray | None:
        """Some ``x`` with ``m x = b`` or ``None`` if the system is inconsistent.

        ``b`` may be a vector or a matrix of right-hand sides; the shape of the
        answer follows ``b``.
        """
        m = self.mat(m)
        b = self.mat(b)
        vector = b.ndim == 1
        if vector:
            b = b.reshape(-1, 1)
        if m.ndim != 2 or b.shape[0] != m.shape[0]:
            raise ValueError(
                f"dimension mismatch: matrix {m.shape} against right-hand side {b.shape}"
            )
        rows, cols = m.shape
        aug = np.concatenate([m, b], axis=1)
        r, pivots, rank = self.rref(aug)
        if any(pc >= cols for pc in pivots):
            return None
        x = self.zeros(cols, b.shape[1])
        for i, pc in enumerate(pivots):
            x[pc] = r[i, cols:]
        return x[:, 0] if vector else x

    def inverse(self, m) -> np.ndarray:
        m = self.mat(m)
        n = m.shape[0]
        if m.shape != (n, n):
            raise ValueError("inverse of a non-square matrix")
        x = self.solve(m, self.eye(n))
        if x is None or self.rank(m) < n:
            raise ZeroDivisionError("matrix is singular")
        return x

    def column_basis(self, m) -> np.ndarray:
        """Columns of ``m`` at pivot positions: a basis of the column space."""
        m = self.mat(m)
        if m.size == 0:
            return self.zeros(m.shape[0], 0)
        _, pivots, _ = self.rref(m)
        return m[:, pivots]

    def complete_basis(self, u) -> tuple[np.ndarray, np.ndarray]:
        """Extend the independent columns ``u`` to a basis with standard vectors.

        Returns ``(quotient, section)``: ``quotient`` maps ``F^n`` onto the
        quotient by ``span(u)`` in coordinates of the added standard vectors,
        and ``section`` holds those standard vectors, so that
        ``quotient @ section = I`` and ``quotient @ u = 0``.
        """
        u = self.mat(u)
        n, k = u.shape
        full = np.concatenate([u, self.eye(n)], axis=1)
        _, pivots, _ = self.rref(full)
        extra = [c - k for c in pivots if c >= k]
        section = self.eye(n)[:, extra]
        basis = np.concatenate([u, section], axis=1)
        quotient = self.inverse(basis)[k:, :]
        return quotient, section

    # -- polynomials -----------------------------------------------------

    def poly(self, coeffs) -> "Poly":
        return Poly.make(coeffs, self.p)

    def min_poly(self, m) -> "Poly":
        """Monic minimal polynomial of a square matrix."""
        m = self.mat(m)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("minimal polynomial of a non-square matrix")
        n = m.shape[0]
        if n == 0:
            return self.poly([1])
        powers = [self.eye(n).reshape(-1)]
        cur = self.eye(n)
        while True:
            cur = self.mul(cur, m)
            stack = np.stack(powers, axis=1)
            c = self.solve(stack, cur.reshape(-1))
            if c is not None:
                # m^k = sum c_i m^i  ->  x^k - sum c_i x^i
                coeffs = [(-int(v)) % self.p for v in c] + [1]
                return self.poly(coeffs)
            powers.append(cur.reshape(-1))

    def poly_eval_matrix(self, f: "Poly", m) -> np.ndarray:
        m = self.mat(m)
        n = m.shape[0]
        out = self.zeros(n, n)
        for c in reversed(f.coeffs):
            out = (self.mul(out, m) + c * self.eye(n)) % self.p
        return out

    def factor(self, f: "Poly") -> list[tuple["Poly", int]]:
        """Complete factorization into monic irreducibles (deterministic Berlekamp)."""
        if f.is_zero():
            raise ValueError("cannot factor the zero polynomial")
        f = f.monic()
        out: dict[tuple[int, ...], int] = {}
        for g, mult in _squarefree(f):
            for h in _berlekamp(g):
                out[h.coeffs] = out.get(h.coeffs, 0) + mult
        return sorted(
            ((Poly(k, self.p), v) for k, v in out.items()),
            key=lambda t: (t[0].degree, t[0].coeffs),
        )


@dataclass(frozen=True)
class Poly:
    """Polynomial over F_p, coefficients lowest degree first, trimmed."""

    coeffs: tuple[int, ...]
    p: int

    @classmethod
    def make(cls, coeffs, p: int) -> "Poly":
        c = [int(x) % p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        return cls(tuple(c), p)

    @classmethod
    def x(cls, p: int) -> "Poly":
        return cls((0, 1), p)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = pow(self.lead(), self.p - 2, self.p)
        return Poly.make([c * inv for c in self.coeffs], self.p)

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly.make([x + y for x, y in zip(a, b)], self.p)

    def __neg__(self) -> "Poly":
        return Poly.make([-c for c in self.coeffs], self.p)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly.make([c * other for c in self.coeffs], self.p)
        if self.is_zero() or other.is_zero():
            return Poly((), self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly.make(out, self.p)

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        r = list(self.coeffs)
        q = [0] * max(len(r) - other.degree, 1)
        inv = pow(other.lead(), p - 2, p)
        d = other.degree
        for k in range(len(r) - 1, d - 1, -1):
            c = r[k] % p
            if c:
                t = (c * inv) % p
                q[k - d] = t
                for i, b in enumerate(other.coeffs):
                    r[k - d + i] -= t * b
        return Poly.make(q, p), Poly.make(r[:d] if d > 0 else [], p)

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def derivative(self) -> "Poly":
        return Poly.make([i * c for i, c in enumerate(self.coeffs)][1:], self.p)

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: "Poly") -> tuple["Poly", "Poly", "Poly"]:
        """``(g, s, t)`` with ``s*self + t*other = g`` and ``g`` monic."""
        one, zero = Poly((1,), self.p), Poly((), self.p)
        r0, r1, s0, s1, t0, t1 = self, other, one, zero, zero, one
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        inv = pow(r0.lead(), self.p - 2, self.p)
        return r0 * inv, s0 * inv, t0 * inv

    def powmod(self, e: int, mod: "Poly") -> "Poly":
        result = Poly((1,), self.p) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def roots(self) -> list[int]:
        return [a for a in range(self.p) if self(a) == 0]

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def _pth_root(f: Poly) -> Poly:
    # f' = 0 means f(x) = g(x^p); over F_p the coefficients are their own p-th roots
    return Poly.make(f.coeffs[:: f.p], f.p)


def _squarefree(f: Poly) -> list[tuple[Poly, int]]:
    """Square-free decomposition ``f = prod g_i^{m_i}`` of a monic polynomial."""
    if f.degree < 1:
        return []
    d = f.derivative()
    if d.is_zero():
        return [(g, m * f.p) for g, m in _squarefree(_pth_root(f))]
    out = []
    c = f.gcd(d)
    w = f // c
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        z = w // y
        if z.degree > 0:
            out.append((z.monic(), i))
        i += 1
        w, c = y, c // y
    if c.degree > 0:
        out.extend((g, m * f.p) for g, m in _squarefree(_pth_root(c.monic())))
    return out


def _berlekamp(f: Poly) -> list[Poly]:
    """Irreducible factors of a monic square-free polynomial."""
    n = f.degree
    if n <= 1:
        return [f]
    p = f.p
    fld = PrimeField(p)
    q = np.zeros((n, n), dtype=np.int64)
    xp = Poly.x(p).powmod(p, f)
    cur = Poly((1,), p)
    for i in range(n):
        row = list(cur.coeffs) + [0] * (n - len(cur.coeffs))
        q[i] = row
        cur = (cur * xp) % f
    # fixed vectors v with v Q = v
    kernel = fld.nullspace((q - np.eye(n, dtype=np.int64)).T % p)
    k = kernel.shape[1]
    factors = [f]
    if k == 1:
        return factors
    for j in range(kernel.shape[1]):
        v = Poly.make(kernel[:, j], p)
        if v.degree < 1:
            continue
        new = []
        for g in factors:
            if g.degree <= 1:
                new.append(g)
                continue
            rest = g
            for s in range(p):
                h = rest.gcd(v - Poly((s,), p))
                if 0 < h.degree < rest.degree:
                    new.append(h)
                    rest = rest // h
                    rest = rest.monic()
                elif h.degree == rest.degree:
                    break
            new.append(rest)
        factors = new
        if len(factors) == k:
            break
    return sorted({g.monic() for g in factors if g.degree > 0}, key=lambda g: g.coeffs)
