"""Quivers, algebra specifications and the algebra file format.

An :class:`AlgebraSpec` is a finite quiver together with a relation mode:

* ``RAD2``: every path of length two vanishes (radical square zero);
* ``HEREDITARY``: no relations, so the quiver must be acyclic.

Vertices are 0-based internally and 1-based in files and reports.
"""

from __future__ import annotations

import enum
import re
import warnings
from dataclasses import dataclass, field
from functools import cached_property

from .exactla import PrimeField

__all__ = [
    "Arrow",
    "Quiver",
    "Relations",
    "AlgebraSpec",
    "AlgebraParseError",
    "DisconnectedQuiverWarning",
    "Component",
    "parse_algebra",
    "load_algebra",
    "format_algebra",
    "separated_quiver",
    "dynkin_type",
    "opposite",
]


class AlgebraParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DisconnectedQuiverWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[Arrow, ...] = ()
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(self.arrows))
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow ids must be unique")
        for a in self.arrows:
            if not (0 <= a.source < self.vertex_count and 0 <= a.target < self.vertex_count):
                raise ValueError(f"arrow {a.name} has an endpoint out of range")
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(str(i + 1) for i in range(self.vertex_count)))

    def label(self, v: int) -> str:
        return self.labels[v]

    def arrows_from(self, v: int) -> list[int]:
        return [i for i, a in enumerate(self.arrows) if a.source == v]

    def arrows_to(self, v: int) -> list[int]:
        return [i for i, a in enumerate(self.arrows) if a.target == v]

    def out_degree(self, v: int) -> int:
        return len(self.arrows_from(v))

    def in_degree(self, v: int) -> int:
        return len(self.arrows_to(v))

    def is_acyclic(self) -> bool:
        indeg = [self.in_degree(v) for v in range(self.vertex_count)]
        stack = [v for v in range(self.vertex_count) if indeg[v] == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for i in self.arrows_from(v):
                t = self.arrows[i].target
                indeg[t] -= 1
                if indeg[t] == 0:
                    stack.append(t)
        return seen == self.vertex_count

    def components(self) -> list[tuple[int, ...]]:
        """Vertex sets of the connected components of the underlying graph."""
        parent = list(range(self.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in self.arrows:
            parent[find(a.source)] = find(a.target)
        groups: dict[int, list[int]] = {}
        for v in range(self.vertex_count):
            groups.setdefault(find(v), []).append(v)
        return sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def reversed(self) -> "Quiver":
        return Quiver(
            self.vertex_count,
            tuple(Arrow(a.name, a.target, a.source) for a in self.arrows),
            self.labels,
        )


class Relations(enum.Enum):
    RAD2 = "rad2"
    HEREDITARY = "none"


@dataclass(frozen=True)
class AlgebraSpec:
    """Path algebra of ``quiver`` over ``field``, possibly modulo all length-2 paths."""

    quiver: Quiver
    relations: Relations = Relations.RAD2
    field: PrimeField = PrimeField(101)

    def __post_init__(self):
        if self.relations is Relations.HEREDITARY and not self.quiver.is_acyclic():
            raise ValueError("cyclic quiver: the path algebra would be infinite-dimensional")

    @property
    def n(self) -> int:
        return self.quiver.vertex_count

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return self.quiver.arrows

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def is_rad2(self) -> bool:
        return self.relations is Relations.RAD2

    @cached_property
    def _paths(self) -> tuple[tuple[tuple[tuple[int, ...], int], ...], ...]:
        max_len = 1 if self.is_rad2 else self.n
        out = []
        for v in range(self.n):
            paths = [((), v)]
            frontier = [((), v)]
            for _ in range(max_len):
                nxt = []
                for path, end in frontier:
                    for i in self.quiver.arrows_from(end):
                        nxt.append((path + (i,), self.arrows[i].target))
                paths.extend(nxt)
                frontier = nxt
            out.append(tuple(paths))
        return tuple(out)

    def paths_from(self, v: int) -> tuple[tuple[tuple[int, ...], int], ...]:
        """Nonzero paths starting at ``v`` as ``(arrow indices, end vertex)``.

        Paths are listed by length, then by arrow index; a path is written in
        the order its arrows are traversed.
        """
        return self._paths[v]

    def paths(self, v: int, w: int) -> list[tuple[int, ...]]:
        return [path for path, end in self.paths_from(v) if end == w]

    def path_allowed(self, path: tuple[int, ...]) -> bool:
        return len(path) <= 1 if self.is_rad2 else True

    def dimension(self) -> int:
        return sum(len(self.paths_from(v)) for v in range(self.n))

    def label(self, v: int) -> str:
        return self.quiver.label(v)


# -- file format ------------------------------------------------------------

_TOKEN = re.compile(r"\S+")


def parse_algebra(text: str) -> AlgebraSpec:
    """Parse the line-oriented algebra format.

    ::

        field 101
        vertices 4
        arrow a1 1 2
        relations rad2        # or: relations none
    """
    p = 101
    n = None
    arrows: list[tuple[str, int, int, int]] = []
    relations = None
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        key = tok[0].lower()
        if key in ("field", "vertices", "relations") and key in seen:
            raise AlgebraParseError(f"duplicate '{key}' directive", lineno)
        if key == "field":
            if len(tok) != 2 or not tok[1].isdigit():
                raise AlgebraParseError("expected 'field <prime>'", lineno)
            p = int(tok[1])
            try:
                PrimeField(p)
            except ValueError as exc:
                raise AlgebraParseError(str(exc), lineno) from None
        elif key == "vertices":
            if len(tok) != 2 or not tok[1].isdigit() or int(tok[1]) < 1:
                raise AlgebraParseError("expected 'vertices <positive count>'", lineno)
            n = int(tok[1])
        elif key == "arrow":
            if len(tok) != 4 or not tok[2].isdigit() or not tok[3].isdigit():
                raise AlgebraParseError("expected 'arrow <id> <source> <target>'", lineno)
            arrows.append((tok[1], int(tok[2]), int(tok[3]), lineno))
        elif key == "relations":
            if len(tok) != 2 or tok[1].lower() not in ("rad2", "none"):
                raise AlgebraParseError("expected 'relations rad2' or 'relations none'", lineno)
            relations = Relations(tok[1].lower())
        else:
            raise AlgebraParseError(f"unknown directive '{tok[0]}'", lineno)
        seen.add(key)
    if n is None:
        raise AlgebraParseError("missing 'vertices' directive")
    if relations is None:
        raise AlgebraParseError("missing 'relations' directive")
    names: set[str] = set()
    built = []
    for name, s, t, lineno in arrows:
        if name in names:
            raise AlgebraParseError(f"duplicate arrow id '{name}'", lineno)
        for v in (s, t):
            if not 1 <= v <= n:
                raise AlgebraParseError(f"vertex {v} out of range 1..{n}", lineno)
        names.add(name)
        built.append(Arrow(name, s - 1, t - 1))
    quiver = Quiver(n, tuple(built))
    if relations is Relations.HEREDITARY and not quiver.is_acyclic():
        raise AlgebraParseError("cyclic quiver is not allowed with 'relations none'")
    if not quiver.is_connected():
        warnings.warn(
            "quiver is disconnected; results are computed per component",
            DisconnectedQuiverWarning,
            stacklevel=2,
        )
    return AlgebraSpec(quiver, relations, PrimeField(p))


def load_algebra(path) -> AlgebraSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read())


def format_algebra(a: AlgebraSpec) -> str:
    lines = [f"field {a.p}", f"vertices {a.n}"]
    for arrow in a.arrows:
        lines.append(f"arrow {arrow.name} {arrow.source + 1} {arrow.target + 1}")
    lines.append(f"relations {a.relations.value}")
    return "\n".join(lines) + "\n"


# -- constructions ----------------------------------------------------------

def separated_quiver(a: AlgebraSpec) -> AlgebraSpec:
    """Bipartite hereditary algebra on ``2n`` vertices.

    Vertex ``v`` keeps index ``v``; its primed copy ``v'`` gets index ``n + v``.
    Every arrow ``v -> w`` becomes ``v -> w'`` with the same id.
    """
    if not a.is_rad2:
        raise ValueError("separated quiver needs a radical-square-zero algebra")
    n = a.n
    labels = tuple(a.label(v) for v in range(n)) + tuple(a.label(v) + "'" for v in range(n))
    arrows = tuple(Arrow(x.name, x.source, n + x.target) for x in a.arrows)
    return AlgebraSpec(Quiver(2 * n, arrows, labels), Relations.HEREDITARY, a.field)


def opposite(a: AlgebraSpec) -> AlgebraSpec:
    return AlgebraSpec(a.quiver.reversed(), a.relations, a.field)


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    kind: str  # "A3", "D5", "E6", ... or "NotDynkin"

    @property
    def is_dynkin(self) -> bool:
        return self.kind != "NotDynkin"


def _classify_tree(vertices, adj) -> str:
    n = len(vertices)
    degs = {v: len(adj[v]) for v in vertices}
    branch = [v for v in vertices if degs[v] >= 3]
    if not branch:
        return f"A{n}"
    if len(branch) > 1 or degs[branch[0]] > 3:
        return "NotDynkin"
    c = branch[0]
    arms = []
    for start in adj[c]:
        length, prev, cur = 1, c, start
        while degs[cur] == 2:
            nxt = next(u for u in adj[cur] if u != prev)
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{n}"
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return f"E{n}"
    return "NotDynkin"


def dynkin_type(q: Quiver) -> list[Component]:
    """Dynkin type of each connected component of the underlying graph."""
    out = []
    for comp in q.components():
        members = set(comp)
        edges = [(a.source, a.target) for a in q.arrows if a.source in members]
        pairs = [frozenset(e) for e in edges]
        if any(s == t for s, t in edges) or len(set(pairs)) != len(pairs):
            out.append(Component(comp, "NotDynkin"))
            continue
        if len(edges) != len(comp) - 1:
            out.append(Component(comp, "NotDynkin"))
            continue
        adj = {v: [] for v in comp}
        for s, t in edges:
            adj[s].append(t)
            adj[t].append(s)
        out.append(Component(comp, _classify_tree(comp, adj)))
    return out
