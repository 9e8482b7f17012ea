"""tau-rigidity, rigidity criteria, tau-tilting enumeration and classifiers."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .algebra import AlgebraSpec, Arrow, Quiver, Relations, format_algebra
from .krullschmidt import Decomposition, is_indecomposable
from .modrep import (
    INFINITE,
    Rep,
    RepMorphism,
    direct_sum,
    ext1_dim,
    global_dimension,
    hom_basis,
    hom_dim,
    injective,
    is_isomorphic,
    is_projective,
    is_self_injective,
    min_presentation,
    projective,
    quotient,
    relation_matrix,
    simple,
    syzygy,
    top_vertices,
)
from .stablefun import all_indecomposables, is_rep_finite
from .tau import tau, tau_inverse

__all__ = [
    "RigidityVerdict",
    "Verdict",
    "CriterionVerdict",
    "TauTiltingModule",
    "ConstructionOutcome",
    "AlgebraProfile",
    "is_tau_rigid",
    "rigid_by_presentation",
    "common_summand",
    "criterion_verdict",
    "indecomposable_tau_rigid",
    "tau_tilting_all",
    "nakayama_tau_tilting",
    "construct_from_simple",
    "rigid_count_check",
    "unique_tilting_implies_local_check",
    "classify_algebra",
    "is_nakayama",
    "random_algebra",
    "generate_corpus",
    "hunt_counterexample",
    "module_name",
]


# -- rigidity ---------------------------------------------------------------

@dataclass
class RigidityVerdict:
    module: Rep
    rigid: bool
    witness: RepMorphism | None
    criterion_used: str = "definition"

    def __bool__(self) -> bool:
        return self.rigid


def is_tau_rigid(m: Rep) -> RigidityVerdict:
    tm = tau(m)
    basis = hom_basis(m, tm)
    return RigidityVerdict(m, not basis, basis[0] if basis else None)


def rigid_by_presentation(m: Rep) -> bool:
    # Hom(M, tau M) = 0 iff Hom(P0, M) -> Hom(P1, M) is onto; no tau M needed
    p1, p0 = min_presentation(m).p1_vertices, top_vertices(m)
    if sum(m.dims[v] for v in p1) > sum(m.dims[v] for v in p0):
        return False  # cannot be onto
    rel = relation_matrix(m, m)
    return m.field.rank(rel) == rel.shape[0]


def common_summand(m: Rep) -> Rep | None:
    """An indecomposable projective shared by ``P0(M)`` and ``P1(M)``, if any."""
    pres = min_presentation(m)
    shared = sorted(set(pres.p0_vertices) & set(pres.p1_vertices))
    return projective(m.algebra, shared[0]) if shared else None


class Verdict(enum.Enum):
    RIGID_BY_CRITERION = "RigidByCriterion"
    NOT_RIGID_BY_NECESSITY = "NotRigidByNecessity"
    NOT_RIGID_BY_CRITERION = "NotRigidByCriterion"
    INAPPLICABLE = "Inapplicable"


@dataclass
class CriterionVerdict:
    kind: Verdict
    reason: str

    @property
    def decided(self) -> bool:
        return self.kind is not Verdict.INAPPLICABLE

    @property
    def rigid(self) -> bool | None:
        if self.kind is Verdict.RIGID_BY_CRITERION:
            return True
        if self.kind is Verdict.INAPPLICABLE:
            return None
        return False


def _is_simple(m: Rep) -> bool:
    return m.dim == 1


def criterion_verdict(m: Rep, profile: "AlgebraProfile | None" = None) -> CriterionVerdict:
    """Decide tau-rigidity from presentations and simples, without Hom(M, tau M).

    The checks run in a fixed order: a projective shared by ``P0`` and ``P1``
    rules rigidity out for any algebra; a simple ``tau M`` reduces to
    ``Ext^1(tau M, tau M)``; a rigid ``tau M`` with no shared projective
    gives rigidity; finally the Gorenstein finite-type classification.
    """
    a = m.algebra
    if not a.is_rad2:
        raise ValueError("criteria are stated for radical-square-zero algebras")
    if not is_indecomposable(m):
        raise ValueError("criterion_verdict needs an indecomposable module")
    shared = common_summand(m)
    if shared is not None:
        v = top_vertices(shared)[0]
        return CriterionVerdict(
            Verdict.NOT_RIGID_BY_NECESSITY, f"P({a.label(v)}) is a summand of both P0(M) and P1(M)"
        )
    tm = tau(m)
    if _is_simple(tm):
        if ext1_dim(tm, tm) == 0:
            return CriterionVerdict(Verdict.RIGID_BY_CRITERION, "tau M is simple with Ext^1(tau M, tau M) = 0")
        return CriterionVerdict(Verdict.NOT_RIGID_BY_CRITERION, "tau M is simple with self-extensions")
    if rigid_by_presentation(tm):
        return CriterionVerdict(Verdict.RIGID_BY_CRITERION, "tau M is tau-rigid and P0(M), P1(M) share no summand")
    profile = classify_algebra(a) if profile is None else profile
    if profile.gorenstein and profile.rep_finite:
        if profile.self_injective and profile.local:
            if is_projective(m):
                return CriterionVerdict(Verdict.RIGID_BY_CRITERION, "projective")
            return CriterionVerdict(
                Verdict.NOT_RIGID_BY_CRITERION, "self-injective local: only projectives are tau-rigid"
            )
        if profile.self_injective:
            return CriterionVerdict(Verdict.RIGID_BY_CRITERION, "self-injective non-local of finite type")
        return CriterionVerdict(
            Verdict.RIGID_BY_CRITERION, "finite global dimension, finite type, no shared projective summand"
        )
    return CriterionVerdict(
        Verdict.INAPPLICABLE,
        "tau M is neither simple nor tau-rigid and the algebra is not Gorenstein of finite type",
    )


# -- tau-tilting enumeration ------------------------------------------------

def _sort_key(r: Rep):
    return (r.dims, r.dump())


@dataclass
class TauTiltingModule:
    summands: tuple[Rep, ...]

    def __post_init__(self):
        self.summands = tuple(sorted(self.summands, key=_sort_key))

    @property
    def decomposition(self) -> Decomposition:
        return Decomposition([(r, 1) for r in self.summands])

    def module(self) -> Rep:
        return direct_sum(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def same_as(self, other: "TauTiltingModule") -> bool:
        return self.decomposition.matches(other.decomposition)


def indecomposable_tau_rigid(a: AlgebraSpec) -> list[Rep]:
    return [m for m in all_indecomposables(a) if rigid_by_presentation(m)]


def _compatible(x: Rep, y: Rep) -> bool:
    return hom_dim(x, tau(y)) == 0 and hom_dim(y, tau(x)) == 0


def _cliques(k: int, adj: list[set[int]], limit: int | None):
    out: list[list[int]] = []

    def grow(chosen: list[int], cands: list[int]):
        if limit is not None and len(out) >= limit:
            return
        if len(chosen) == k:
            out.append(list(chosen))
            return
        if len(chosen) + len(cands) < k:
            return
        for idx, c in enumerate(cands):
            grow(chosen + [c], [d for d in cands[idx + 1:] if d in adj[c]])

    grow([], list(range(len(adj))))
    return out


def _is_tau_tilting(summands, n: int) -> bool:
    if len(summands) != n:
        return False
    for x, y in combinations(summands, 2):
        if is_isomorphic(x, y, indecomposable=True):
            return False
    t = direct_sum(summands)
    return hom_dim(t, tau(t)) == 0


def tau_tilting_all(a: AlgebraSpec, limit: int | None = None) -> list[TauTiltingModule]:
    """Every basic tau-tilting module (or the first ``limit`` found)."""
    rigid = indecomposable_tau_rigid(a)
    adj = [set() for _ in rigid]
    for i, j in combinations(range(len(rigid)), 2):
        if _compatible(rigid[i], rigid[j]):
            adj[i].add(j)
            adj[j].add(i)
    out = []
    for clique in _cliques(a.n, adj, limit):
        summands = [rigid[i] for i in clique]
        if not _is_tau_tilting(summands, a.n):
            raise ArithmeticError("pairwise compatible set fails the tau-tilting definition")
        out.append(TauTiltingModule(tuple(summands)))
    return sorted(out, key=lambda t: [_sort_key(r) for r in t.summands])


def is_nakayama(a: AlgebraSpec) -> bool:
    q = a.quiver
    return q.is_connected() and all(q.in_degree(v) <= 1 and q.out_degree(v) <= 1 for v in range(a.n))


def nakayama_tau_tilting(a: AlgebraSpec) -> list[TauTiltingModule]:
    """tau-tilting modules from sets of simples and the complementary projectives."""
    if not (a.is_rad2 and is_nakayama(a)):
        raise ValueError("needs a radical-square-zero Nakayama algebra")
    if a.n == 1 and is_self_injective(a):
        raise ValueError("self-injective local algebras are excluded")
    n = a.n
    simples = [simple(a, v) for v in range(n)]
    taus = [tau(s) for s in simples]
    ok = [[_compatible(simples[i], simples[j]) for j in range(n)] for i in range(n)]
    found: list[TauTiltingModule] = []
    for t in range(n // 2 + 1):
        for subset in combinations(range(n), t):
            if not all(ok[i][j] for i, j in combinations(subset, 2)):
                continue
            if not all(rigid_by_presentation(simples[i]) for i in subset):
                continue
            drop = set()
            for i in subset:
                if not taus[i].is_zero():
                    drop.update(top_vertices(taus[i]))
            parts = [simples[i] for i in subset] + [projective(a, v) for v in range(n) if v not in drop]
            if not _is_tau_tilting(parts, n):
                continue
            cand = TauTiltingModule(tuple(parts))
            if not any(cand.same_as(f) for f in found):
                found.append(cand)
    return sorted(found, key=lambda t: [_sort_key(r) for r in t.summands])


# -- construction from a simple ---------------------------------------------

@dataclass
class ConstructionOutcome:
    """Result of building an indecomposable tau-rigid module from ``S(v)``.

    ``case`` is ``"1"`` when ``S(v)`` is not a summand of its syzygy, ``"2a"``
    when the syzygy is a power of ``S(v)`` (no module exists) and ``"2b"``
    otherwise.
    """

    vertex: int
    case: str
    syzygy_multiplicities: tuple[int, ...]
    chosen: int | None
    multiplicity: int
    module: Rep | None
    indecomposable: bool | None = None
    rigid: bool | None = None
    exhaustive: bool | None = None

    @property
    def certified(self) -> bool:
        if self.case == "2a":
            return self.exhaustive is not False
        return bool(self.indecomposable and self.rigid)


def construct_from_simple(a: AlgebraSpec, v: int, exhaustive: bool | None = None) -> ConstructionOutcome:
    """Quotient of ``P(v)`` by the part of its radical away from one simple.

    ``exhaustive`` controls the search that backs a ``"2a"`` answer; by default
    it runs whenever the algebra is of finite type.
    """
    if not a.is_rad2:
        raise ValueError("needs a radical-square-zero algebra")
    s = simple(a, v)
    if is_projective(s):
        raise ValueError(f"S({a.label(v)}) is projective")
    omega = syzygy(s)  # semisimple since r^2 = 0
    mult = tuple(omega.dims)
    if mult[v] and sum(mult) == mult[v]:
        out = ConstructionOutcome(v, "2a", mult, v, mult[v], None)
        if exhaustive is None:
            exhaustive = is_rep_finite(a)
        if exhaustive:
            out.exhaustive = not any(
                top_vertices(m) == [v] and not is_projective(m) and rigid_by_presentation(m)
                for m in all_indecomposables(a)
            )
        return out
    if mult[v]:
        case, chosen = "2b", v
    else:
        case, chosen = "1", next(w for w in range(a.n) if mult[w])
    p = projective(a, v)
    f = a.field
    bases = []
    for w in range(a.n):
        if w == chosen:
            bases.append(f.zeros(p.dims[w], 0))
            continue
        # radical of P(v) at w: every basis vector except the trivial path
        cols = [i for i in range(p.dims[w]) if not (w == v and i == 0)]
        bases.append(f.eye(p.dims[w])[:, cols])
    m, _ = quotient(p, bases)
    return ConstructionOutcome(
        v, case, mult, chosen, mult[chosen], m, is_indecomposable(m), rigid_by_presentation(m)
    )


# -- counting checks --------------------------------------------------------

def rigid_count_check(a: AlgebraSpec) -> tuple[int, int]:
    """``(number of indecomposable tau-rigid modules, 2n - m)``."""
    n = a.n
    m = sum(1 for v in range(n) if is_projective(simple(a, v)))
    return len(indecomposable_tau_rigid(a)), 2 * n - m


@dataclass
class UniquenessReport:
    tilting_count: int
    vertex_count: int
    has_simple_projective: bool | None = None
    simples_in_own_syzygy: bool | None = None

    @property
    def holds(self) -> bool:
        # the lemma flags are reported, not required: the field k has a unique
        # tau-tilting module and a simple projective
        return self.tilting_count != 1 or self.vertex_count == 1


def unique_tilting_implies_local_check(a: AlgebraSpec) -> UniquenessReport:
    count = len(tau_tilting_all(a, limit=2))
    report = UniquenessReport(count, a.n)
    if count == 1:
        report.has_simple_projective = any(is_projective(simple(a, v)) for v in range(a.n))
        report.simples_in_own_syzygy = all(
            is_projective(simple(a, v)) or syzygy(simple(a, v)).dims[v] > 0 for v in range(a.n)
        )
    return report


# -- classification ---------------------------------------------------------

@dataclass
class AlgebraProfile:
    local: bool
    nakayama: bool
    self_injective: bool
    gorenstein: bool
    rep_finite: bool
    gldim: float
    almost_split_certificate: bool | None = None

    def as_dict(self) -> dict:
        out = dict(self.__dict__)
        out["gldim"] = "inf" if self.gldim == INFINITE else int(self.gldim)
        return out


def classify_algebra(a: AlgebraSpec) -> AlgebraProfile:
    if not a.is_rad2:
        raise ValueError("classification is for radical-square-zero algebras")
    local = a.n == 1
    selfinj = is_self_injective(a)
    gldim = global_dimension(a)
    prof = AlgebraProfile(
        local=local,
        nakayama=is_nakayama(a),
        self_injective=selfinj,
        gorenstein=selfinj or gldim != INFINITE,
        rep_finite=is_rep_finite(a),
        gldim=gldim,
    )
    if selfinj and local:
        s = simple(a, 0)
        p = projective(a, 0)
        prof.almost_split_certificate = is_isomorphic(tau(s), s) and p.dims == (2 * s.dims[0],)
    return prof


# -- random corpora ---------------------------------------------------------

def random_algebra(rng: np.random.Generator, max_vertices: int, max_arrows: int, p: int = 101) -> AlgebraSpec:
    """A connected radical-square-zero algebra: a random spanning tree plus extra arrows."""
    if max_vertices < 1 or max_arrows < 0:
        raise ValueError("bounds must be positive")
    n = int(rng.integers(1, min(max_vertices, max_arrows + 1) + 1))
    ends = []
    for v in range(1, n):
        u = int(rng.integers(0, v))
        ends.append((u, v) if rng.random() < 0.5 else (v, u))
    extra = int(rng.integers(0, max_arrows - (n - 1) + 1))
    for _ in range(extra):
        ends.append((int(rng.integers(0, n)), int(rng.integers(0, n))))
    arrows = tuple(Arrow(f"a{k + 1}", s, t) for k, (s, t) in enumerate(ends))
    from .exactla import PrimeField

    return AlgebraSpec(Quiver(n, arrows), Relations.RAD2, PrimeField(p))


def generate_corpus(seed: int, max_vertices: int, max_arrows: int, count: int) -> list[AlgebraSpec]:
    rng = np.random.default_rng(seed)
    return [random_algebra(rng, max_vertices, max_arrows) for _ in range(count)]


# -- open-question hunt -----------------------------------------------------

@dataclass
class Sample:
    origin: str
    dims: tuple[int, ...]
    rigid: bool


@dataclass
class HuntEntry:
    algebra: str
    rep_finite: bool
    samples: list[Sample] = field(default_factory=list)
    error: str | None = None

    @property
    def non_rigid_found(self) -> bool:
        return any(not s.rigid for s in self.samples)


@dataclass
class HuntReport:
    seed: int
    entries: list[HuntEntry]

    @property
    def candidates(self) -> list[HuntEntry]:
        """Infinite-type algebras whose sampled indecomposables were all tau-rigid."""
        return [e for e in self.entries if not e.rep_finite and e.samples and not e.non_rigid_found]


def _hunt_samples(a: AlgebraSpec, dim_bound: int) -> list[Sample]:
    out: list[Sample] = []
    seen: list[Rep] = []

    def add(origin: str, m: Rep):
        if m.is_zero() or m.dim > dim_bound:
            return
        if any(u.dims == m.dims and is_isomorphic(u, m, indecomposable=True) for u in seen):
            return
        if not is_indecomposable(m):
            return
        seen.append(m)
        out.append(Sample(origin, m.dims, rigid_by_presentation(m)))

    for v in range(a.n):
        add(f"S({a.label(v)})", simple(a, v))
    for v in range(a.n):
        if is_projective(simple(a, v)):
            continue
        res = construct_from_simple(a, v, exhaustive=False)
        if res.module is not None:
            add(f"construct({a.label(v)})", res.module)
    for kind, start, step in (("P", projective, tau_inverse), ("I", injective, tau)):
        for v in range(a.n):
            cur = start(a, v)
            for k in range(1, dim_bound + 1):
                cur = step(cur)
                if cur.is_zero() or cur.dim > dim_bound:
                    break
                sign = "-" if kind == "P" else ""
                add(f"tau^{sign}{k} {kind}({a.label(v)})", cur)
    return out


def hunt_counterexample(
    seed: int = 0,
    count: int = 20,
    max_vertices: int = 4,
    max_arrows: int = 6,
    dim_bound: int = 12,
    algebras: list[AlgebraSpec] | None = None,
) -> HuntReport:
    """Sample indecomposables of infinite-type algebras looking for tau-rigid-only evidence.

    An algebra with a non-rigid sampled indecomposable is ruled out; one
    where every sample is rigid is only a candidate, never a resolution.
    """
    algs = generate_corpus(seed, max_vertices, max_arrows, count) if algebras is None else list(algebras)
    entries = []
    for a in algs:
        finite = is_rep_finite(a)
        entry = HuntEntry(format_algebra(a), finite)
        if not finite:
            try:
                entry.samples = _hunt_samples(a, dim_bound)
            except ValueError as exc:  # e.g. field too small for a large endomorphism ring
                entry.error = str(exc)
        entries.append(entry)
    return HuntReport(seed, entries)


# -- naming -----------------------------------------------------------------

def module_name(m: Rep) -> str:
    """``S(v)``, ``P(v)`` or ``I(v)`` when ``M`` is a standard module, else its dim vector."""
    a = m.algebra
    if m.is_zero():
        return "0"
    for tag, make in (("S", simple), ("P", projective), ("I", injective)):
        for v in range(a.n):
            cand = make(a, v)
            if cand.dims == m.dims and is_isomorphic(cand, m, indecomposable=True):
                return f"{tag}({a.label(v)})"
    return "M" + "".join(str(d) for d in m.dims) if all(d < 10 for d in m.dims) else f"M{m.dims}"
