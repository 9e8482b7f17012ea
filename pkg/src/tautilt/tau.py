"""Auslander-Reiten translate via minimal presentations, transpose and duality.

A map between sums of indecomposable projectives is recorded as a
:class:`PresentationMatrix`: a morphism ``P(a) -> P(b)`` is right
multiplication by a combination of paths ``b -> a`` (the image of the
generator of ``P(a)``).  ``Hom(-, Lambda)`` turns it into the map of
opposite-algebra projectives with the transposed matrix and reversed paths.

``tau = D Tr`` and ``tau^- = Tr D``.  Modules over ``opposite(A)`` only ever
come back to ``A`` through :func:`dual`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import AlgebraSpec, opposite
from .modrep import (
    Presentation,
    Rep,
    RepMorphism,
    _path_index,
    cokernel,
    dual,
    min_presentation,
    projective_sum,
)

__all__ = [
    "PresentationMatrix",
    "presentation_matrix",
    "star",
    "transpose",
    "dual",
    "tau",
    "tau_inverse",
]


@dataclass(frozen=True)
class PresentationMatrix:
    """Map ``sum_i P(sources[i]) -> sum_j P(targets[j])``.

    ``entries`` maps ``(j, i)`` to ``{path: coefficient}``, each path running
    from ``targets[j]`` to ``sources[i]``; missing keys are zero.
    """

    algebra: AlgebraSpec
    sources: tuple[int, ...]
    targets: tuple[int, ...]
    entries: tuple[tuple[tuple[int, int], tuple[tuple[tuple[int, ...], int], ...]], ...]

    def entry(self, j: int, i: int) -> dict[tuple[int, ...], int]:
        return dict(dict(self.entries).get((j, i), ()))

    def is_zero(self) -> bool:
        return not self.entries

    def max_path_length(self) -> int:
        return max((len(path) for _, terms in self.entries for path, _ in terms), default=0)


def _summand_offsets(a: AlgebraSpec, vertices) -> list[list[int]]:
    """``offsets[i][x]``: first basis index of summand ``i`` at vertex ``x``."""
    out = []
    acc = [0] * a.n
    for v in vertices:
        out.append(list(acc))
        index = _path_index(a, v)
        for end, _ in index.values():
            acc[end] += 1
    return out


def _freeze(entries: dict) -> tuple:
    return tuple(
        sorted((key, tuple(sorted(terms.items()))) for key, terms in entries.items() if terms)
    )


def presentation_matrix(pres: Presentation) -> PresentationMatrix:
    a = pres.module.algebra
    src_off = _summand_offsets(a, pres.p1_vertices)
    tgt_off = _summand_offsets(a, pres.p0_vertices)
    entries: dict[tuple[int, int], dict] = {}
    for i, v in enumerate(pres.p1_vertices):
        column = pres.map.blocks[v][:, src_off[i][v]]
        for j, w in enumerate(pres.p0_vertices):
            for path, (end, pos) in _path_index(a, w).items():
                if end != v:
                    continue
                c = int(column[tgt_off[j][v] + pos])
                if c:
                    entries.setdefault((j, i), {})[path] = c
    return PresentationMatrix(a, tuple(pres.p1_vertices), tuple(pres.p0_vertices), _freeze(entries))


def to_morphism(pm: PresentationMatrix) -> RepMorphism:
    """The module map described by ``pm``."""
    a = pm.algebra
    f = a.field
    src = projective_sum(a, pm.sources)
    tgt = projective_sum(a, pm.targets)
    src_off = _summand_offsets(a, pm.sources)
    tgt_off = _summand_offsets(a, pm.targets)
    blocks = [f.zeros(tgt.dims[x], src.dims[x]) for x in range(a.n)]
    entries = dict(pm.entries)
    for i, v in enumerate(pm.sources):
        for s, (x, spos) in _path_index(a, v).items():
            col = src_off[i][x] + spos
            for j, w in enumerate(pm.targets):
                tindex = _path_index(a, w)
                for q, c in entries.get((j, i), ()):
                    longer = q + s
                    if longer in tindex:
                        _, tpos = tindex[longer]
                        blocks[x][tgt_off[j][x] + tpos, col] = (blocks[x][tgt_off[j][x] + tpos, col] + c) % a.p
    return RepMorphism(src, tgt, blocks)


def star(pm: PresentationMatrix) -> PresentationMatrix:
    """Apply ``Hom(-, Lambda)``: transpose and reverse every path."""
    entries = {}
    for (j, i), terms in pm.entries:
        entries[(i, j)] = {tuple(reversed(path)): c for path, c in terms}
    return PresentationMatrix(opposite(pm.algebra), pm.targets, pm.sources, _freeze(entries))


@lru_cache(maxsize=50_000)
def transpose(m: Rep) -> Rep:
    """Auslander-Bridger transpose, a module over ``opposite(A)``."""
    pm = presentation_matrix(min_presentation(m))
    return cokernel(to_morphism(star(pm)))[0]


@lru_cache(maxsize=50_000)
def tau(m: Rep) -> Rep:
    return dual(transpose(m))


@lru_cache(maxsize=50_000)
def tau_inverse(m: Rep) -> Rep:
    return transpose(dual(m))
