"""Stable equivalence with the separated quiver and indecomposable enumeration.

For a radical-square-zero algebra ``A`` with separated hereditary algebra
``G``, the functor ``F(M) = (M/rM, rM, f)`` lands in ``mod G``: the top sits
on the unprimed vertices, the radical on the primed ones.  ``G_reconstruct``
inverts ``F`` on representations whose structure maps are onto each primed
vertex.

Representation-finite algebras are enumerated through ``G``: every
component of its underlying graph is Dynkin, its indecomposables are built
from positive roots with BGP reflection functors, and those with onto
structure maps pull back to ``A``.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .algebra import (
    AlgebraSpec,
    Arrow,
    Component,
    Quiver,
    Relations,
    dynkin_type,
    separated_quiver,
)
from .modrep import (
    Rep,
    hom_dim,
    is_isomorphic,
    projective,
    radical,
    simple,
)

__all__ = [
    "NotDynkinError",
    "NotRepFiniteError",
    "F_apply",
    "G_reconstruct",
    "is_epi_triple",
    "hom_dim_identity",
    "dynkin_graph",
    "positive_roots",
    "indecomposable_for_root",
    "reflect_at_sink",
    "reflect_at_source",
    "is_rep_finite",
    "enumeration_quiver",
    "all_indecomposables",
]


class NotDynkinError(ValueError):
    pass


class NotRepFiniteError(ValueError):
    pass


def _require_rad2(a: AlgebraSpec) -> None:
    if not a.is_rad2:
        raise ValueError("the separated-quiver functor needs a radical-square-zero algebra")


# -- the functor F and its inverse on epi triples ---------------------------

def F_apply(m: Rep) -> Rep:
    """``F(M)`` as a representation of the separated quiver."""
    a = m.algebra
    _require_rad2(a)
    f = a.field
    gamma = separated_quiver(a)
    n = a.n
    rad, incl = radical(m)
    sections = []
    for v in range(n):
        _, s = f.complete_basis(incl.blocks[v])
        sections.append(s)
    dims = [sections[v].shape[1] for v in range(n)] + [rad.dims[w] for w in range(n)]
    action = []
    for i, arrow in enumerate(a.arrows):
        w = arrow.target
        img = f.mul(m.action[i], sections[arrow.source])
        if rad.dims[w] == 0:
            action.append(f.zeros(0, img.shape[1]))
            continue
        coords = f.solve(incl.blocks[w], img)
        action.append(coords)
    return Rep(gamma, dims, action, check=False)


def _unseparate(gamma: AlgebraSpec) -> AlgebraSpec:
    n2 = gamma.n
    if n2 % 2:
        raise ValueError("not a separated quiver: odd vertex count")
    n = n2 // 2
    arrows = []
    for arrow in gamma.arrows:
        if not (arrow.source < n <= arrow.target):
            raise ValueError("not a separated quiver: arrow not from unprimed to primed")
        arrows.append(Arrow(arrow.name, arrow.source, arrow.target - n))
    labels = tuple(gamma.label(v) for v in range(n))
    return AlgebraSpec(Quiver(n, tuple(arrows), labels), Relations.RAD2, gamma.field)


def is_epi_triple(nrep: Rep) -> bool:
    """Whether the arrows into every primed vertex jointly map onto it."""
    gamma = nrep.algebra
    f = gamma.field
    n = gamma.n // 2
    for w in range(n, 2 * n):
        if nrep.dims[w] == 0:
            continue
        maps = [nrep.action[i] for i in gamma.quiver.arrows_to(w)]
        total = np.concatenate(maps, axis=1) if maps else f.zeros(nrep.dims[w], 0)
        if f.rank(total) < nrep.dims[w]:
            return False
    return True


def G_reconstruct(nrep: Rep, algebra: AlgebraSpec | None = None) -> Rep:
    """The ``A``-module with top on unprimed and radical on primed vertices."""
    gamma = nrep.algebra
    a = _unseparate(gamma) if algebra is None else algebra
    if separated_quiver(a) != gamma:
        raise ValueError("representation is not over the separated quiver of the algebra")
    if not is_epi_triple(nrep):
        raise ValueError(
            "structure map is not onto some primed vertex; split off the primed simples first"
        )
    f = a.field
    n = a.n
    dims = [nrep.dims[v] + nrep.dims[n + v] for v in range(n)]
    action = []
    for i, arrow in enumerate(a.arrows):
        v, w = arrow.source, arrow.target
        m = f.zeros(dims[w], dims[v])
        block = nrep.action[i]
        m[nrep.dims[w]:, : nrep.dims[v]] = block
        action.append(m)
    return Rep(a, dims, action)


def hom_dim_identity(m: Rep, n: Rep) -> tuple[int, int]:
    """``(dim Hom(M, N), dim Hom(M, rN) + dim Hom_G(FM, FN))``; the two agree."""
    _require_rad2(m.algebra)
    lhs = hom_dim(m, n)
    rhs = hom_dim(m, radical(n)[0]) + hom_dim(F_apply(m), F_apply(n))
    return lhs, rhs


# -- roots and reflection functors ------------------------------------------

def dynkin_graph(kind: str) -> Quiver:
    """A standard quiver of the given Dynkin type (arrows oriented ``i -> i+1``)."""
    letter, rank = kind[0].upper(), int(kind[1:])
    if letter == "A" and rank >= 1:
        edges = [(i, i + 1) for i in range(rank - 1)]
    elif letter == "D" and rank >= 4:
        edges = [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    elif letter == "E" and rank in (6, 7, 8):
        edges = [(i, i + 1) for i in range(rank - 2)] + [(2, rank - 1)]
    else:
        raise NotDynkinError(f"unknown Dynkin type {kind!r}")
    return Quiver(rank, tuple(Arrow(f"e{k}", s, t) for k, (s, t) in enumerate(edges)))


def _neighbour_counts(q: Quiver, k: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for arrow in q.arrows:
        if arrow.source == k and arrow.target != k:
            out[arrow.target] = out.get(arrow.target, 0) + 1
        elif arrow.target == k and arrow.source != k:
            out[arrow.source] = out.get(arrow.source, 0) + 1
    return out


def _reflect_vector(q: Quiver, vec: tuple[int, ...], k: int) -> tuple[int, ...]:
    nb = _neighbour_counts(q, k)
    out = list(vec)
    out[k] = sum(c * vec[j] for j, c in nb.items()) - vec[k]
    return tuple(out)


def _component_of(q: Quiver, component) -> Component:
    if isinstance(component, Component):
        return component
    if isinstance(component, str):
        raise TypeError("pass a Component of the quiver, or use dynkin_graph() for a bare type")
    comp = next((c for c in dynkin_type(q) if set(component) <= set(c.vertices)), None)
    if comp is None:
        raise ValueError("vertices are not a component of the quiver")
    return comp


def positive_roots(q: Quiver | str, component=None) -> list[tuple[int, ...]]:
    """Positive roots of a Dynkin component, as vectors over all vertices of ``q``.

    ``q`` may also be a type name such as ``"D5"``, in which case the roots of
    :func:`dynkin_graph` are returned.
    """
    if isinstance(q, str):
        q = dynkin_graph(q)
        component = None
    if component is None:
        comps = dynkin_type(q)
        if len(comps) != 1:
            raise ValueError("quiver has several components; name one")
        component = comps[0]
    comp = _component_of(q, component)
    if not comp.is_dynkin:
        raise NotDynkinError(f"component on vertices {comp.vertices} is not Dynkin")
    n = q.vertex_count
    simples = []
    for v in comp.vertices:
        e = [0] * n
        e[v] = 1
        simples.append(tuple(e))
    found = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for r in frontier:
            for k in comp.vertices:
                s = _reflect_vector(q, r, k)
                if all(x >= 0 for x in s) and any(s) and s not in found:
                    found.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(found, key=lambda r: (sum(r), tuple(-x for x in r)))


def _flip_at(q: Quiver, k: int) -> Quiver:
    arrows = tuple(
        Arrow(a.name, a.target, a.source) if k in (a.source, a.target) else a for a in q.arrows
    )
    return Quiver(q.vertex_count, arrows, q.labels)


def reflect_at_sink(m: Rep, k: int) -> Rep:
    """BGP reflection ``S_k^+`` at a sink ``k``; a rep of the quiver with ``k`` flipped."""
    a = m.algebra
    q = a.quiver
    f = a.field
    if q.arrows_from(k):
        raise ValueError(f"vertex {k} is not a sink")
    incoming = q.arrows_to(k)
    new_alg = AlgebraSpec(_flip_at(q, k), Relations.HEREDITARY, a.field)
    if incoming:
        h = np.concatenate([m.action[i] for i in incoming], axis=1)
        kern = f.nullspace(h) if h.shape[1] else f.zeros(0, 0)
    else:
        kern = f.zeros(0, 0)
    dims = list(m.dims)
    dims[k] = kern.shape[1]
    action = list(m.action)
    row = 0
    for i in incoming:
        src = q.arrows[i].source
        action[i] = kern[row: row + m.dims[src], :]
        row += m.dims[src]
    return Rep(new_alg, dims, action, check=False)


def reflect_at_source(m: Rep, k: int) -> Rep:
    """BGP reflection ``S_k^-`` at a source ``k``."""
    a = m.algebra
    q = a.quiver
    f = a.field
    if q.arrows_to(k):
        raise ValueError(f"vertex {k} is not a source")
    outgoing = q.arrows_from(k)
    new_alg = AlgebraSpec(_flip_at(q, k), Relations.HEREDITARY, a.field)
    total = sum(m.dims[q.arrows[i].target] for i in outgoing)
    if outgoing:
        h = np.concatenate([m.action[i] for i in outgoing], axis=0)
    else:
        h = f.zeros(0, m.dims[k])
    quo, _ = f.complete_basis(f.column_basis(h) if total else f.zeros(0, 0))
    dims = list(m.dims)
    dims[k] = quo.shape[0]
    action = list(m.action)
    col = 0
    for i in outgoing:
        tgt = q.arrows[i].target
        action[i] = quo[:, col: col + m.dims[tgt]]
        col += m.dims[tgt]
    return Rep(new_alg, dims, action, check=False)


def _sink_order(q: Quiver, vertices) -> list[int]:
    """Vertices ordered so that each is a sink after reflecting the earlier ones."""
    remaining = set(vertices)
    order = []
    while remaining:
        for v in sorted(remaining):
            if all(q.arrows[i].target not in remaining or q.arrows[i].target == v for i in q.arrows_from(v)):
                order.append(v)
                remaining.discard(v)
                break
        else:
            raise ValueError("component has an oriented cycle")
    return order


def indecomposable_for_root(gamma: AlgebraSpec, root) -> Rep:
    """The indecomposable representation with dimension vector ``root``.

    The root is reflected at successive sinks until it becomes a simple root
    ``e_k`` at the sink about to be reflected; the simple at ``k`` is then
    carried back with source reflections in reverse order.
    """
    q = gamma.quiver
    root = tuple(int(x) for x in root)
    if len(root) != q.vertex_count or any(x < 0 for x in root) or not any(root):
        raise ValueError(f"{root} is not a positive vector")
    support = [v for v in range(q.vertex_count) if root[v]]
    comp = next(c for c in dynkin_type(q) if support[0] in c.vertices)
    if not set(support) <= set(comp.vertices):
        raise ValueError(f"{root} is not a root: support is disconnected")
    if not comp.is_dynkin:
        raise NotDynkinError(f"component on vertices {comp.vertices} is not Dynkin")
    order = _sink_order(q, comp.vertices)
    cur_q, vec = q, root
    steps: list[tuple[int, Quiver]] = []
    limit = 2 * len(comp.vertices) * (len(comp.vertices) + 1)
    final = None
    for _ in range(limit):
        for k in order:
            if sum(vec) == 1 and vec[k] == 1:
                final = k
                break
            vec = _reflect_vector(cur_q, vec, k)
            if any(x < 0 for x in vec):
                raise ValueError(f"{root} is not a root")
            steps.append((k, cur_q))
            cur_q = _flip_at(cur_q, k)
        if final is not None:
            break
    if final is None:
        raise ValueError(f"{root} is not a root")
    m = simple(AlgebraSpec(cur_q, Relations.HEREDITARY, gamma.field), final)
    for k, _ in reversed(steps):
        m = reflect_at_source(m, k)
    m = Rep(gamma, m.dims, m.action)
    if m.dims != root:
        raise ArithmeticError("reflection functors did not reproduce the root")
    return m


# -- enumeration ------------------------------------------------------------

def enumeration_quiver(a: AlgebraSpec) -> AlgebraSpec:
    """The hereditary algebra whose Dynkin components decide finite type."""
    return separated_quiver(a) if a.is_rad2 else a


def is_rep_finite(a: AlgebraSpec) -> bool:
    return all(c.is_dynkin for c in dynkin_type(enumeration_quiver(a).quiver))


def _sort_key(r: Rep):
    return (r.dims, r.dump())


@lru_cache(maxsize=256)
def _all_indecomposables(a: AlgebraSpec) -> tuple[Rep, ...]:
    gamma = enumeration_quiver(a)
    comps = dynkin_type(gamma.quiver)
    bad = [c for c in comps if not c.is_dynkin]
    if bad:
        labels = ", ".join(gamma.label(v) for v in bad[0].vertices)
        raise NotRepFiniteError(f"not of finite type: component {{{labels}}} is not Dynkin")
    found: list[Rep] = []
    for comp in comps:
        for root in positive_roots(gamma.quiver, comp):
            nrep = indecomposable_for_root(gamma, root)
            if a.is_rad2:
                if not is_epi_triple(nrep):
                    continue
                found.append(G_reconstruct(nrep, a))
            else:
                found.append(nrep)
    found.extend(projective(a, v) for v in range(a.n))
    unique: list[Rep] = []
    for r in found:
        if not any(is_isomorphic(r, u, indecomposable=True) for u in unique if u.dims == r.dims):
            unique.append(r)
    unique.sort(key=_sort_key)
    return tuple(unique)


def all_indecomposables(a: AlgebraSpec) -> list[Rep]:
    """One representative per isomorphism class of indecomposable modules."""
    return list(_all_indecomposables(a))
