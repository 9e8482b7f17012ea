import warnings
from functools import lru_cache

import pytest

from tautilt.algebra import Arrow, AlgebraSpec, Quiver, Relations, parse_algebra
from tautilt.stablefun import is_rep_finite
from tautilt.taurig import generate_corpus

CORPUS_SEED = 20130983
CORPUS_SIZE = 200

EX51 = """field 101
vertices 4
arrow a1 1 2
arrow a2 2 3
arrow a3 3 4
arrow a4 4 1
relations rad2
"""
EX52 = """field 101
vertices 4
arrow a1 1 3
arrow a2 2 3
arrow a3 3 4
relations rad2
"""
EX53 = """field 101
vertices 4
arrow a1 1 2
arrow a2 2 3
arrow a3 4 2
arrow a4 4 3
relations rad2
"""


def alg(text: str) -> AlgebraSpec:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return parse_algebra(text)


def quiver_alg(n: int, edges, relations=Relations.RAD2) -> AlgebraSpec:
    arrows = tuple(Arrow(f"a{k}", s, t) for k, (s, t) in enumerate(edges))
    return AlgebraSpec(Quiver(n, arrows), relations)


def line(n: int) -> AlgebraSpec:
    return quiver_alg(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> AlgebraSpec:
    return quiver_alg(n, [(i, (i + 1) % n) for i in range(n)])


@lru_cache(maxsize=1)
def corpus() -> tuple[AlgebraSpec, ...]:
    return tuple(generate_corpus(CORPUS_SEED, 5, 7, CORPUS_SIZE))


@lru_cache(maxsize=1)
def finite_corpus() -> tuple[AlgebraSpec, ...]:
    return tuple(a for a in corpus() if is_rep_finite(a))


def nakayama_corpus() -> list[AlgebraSpec]:
    # with one vertex the algebra is self-injective local (k or k[x]/x^2): excluded
    out = [line(n) for n in range(2, 7)] + [cycle(n) for n in range(2, 7)]
    from tautilt.taurig import is_nakayama

    for a in finite_corpus():
        if is_nakayama(a) and a.n > 1:
            out.append(a)
    return out


@pytest.fixture
def ex51():
    return alg(EX51)


@pytest.fixture
def ex52():
    return alg(EX52)


@pytest.fixture
def ex53():
    return alg(EX53)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for row in ACCEPTANCE_LINES:
            terminalreporter.write_line(row)
