import warnings

import pytest

from tautilt.algebra import (
    AlgebraParseError,
    DisconnectedQuiverWarning,
    Relations,
    dynkin_type,
    format_algebra,
    opposite,
    parse_algebra,
    separated_quiver,
)
from tautilt.stablefun import dynkin_graph

from conftest import EX51, EX53, alg


def test_parse_example():
    a = alg(EX51)
    assert a.n == 4 and len(a.arrows) == 4 and a.is_rad2 and a.p == 101
    assert a.dimension() == 8


def test_roundtrip():
    a = alg(EX53)
    assert parse_algebra(format_algebra(a)) == a


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("vertices 2\nrelations rad2\nfield 4\n", "must be prime"),
        ("vertices 2\narrow a 1 3\nrelations rad2\n", "out of range"),
        ("vertices 2\narrow a 1 2\narrow a 2 1\nrelations rad2\n", "duplicate arrow"),
        ("vertices 2\narrow a 1 2\n", "missing 'relations'"),
        ("arrow a 1 2\nrelations rad2\n", "missing 'vertices'"),
        ("vertices 2\narrow a 1 2\narrow b 2 1\nrelations none\n", "cyclic"),
        ("vertices 2\nbogus\nrelations rad2\n", "unknown directive"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(AlgebraParseError) as err:
        parse_algebra(text)
    assert fragment in str(err.value)


def test_parse_error_reports_line():
    with pytest.raises(AlgebraParseError) as err:
        parse_algebra("vertices 2\n\narrow a 1 9\nrelations rad2\n")
    assert err.value.line == 3


def test_disconnected_warns():
    with pytest.warns(DisconnectedQuiverWarning):
        parse_algebra("vertices 2\nrelations rad2\n")


def test_hereditary_paths():
    a = alg("vertices 3\narrow a 1 2\narrow b 2 3\nrelations none\n")
    assert a.relations is Relations.HEREDITARY
    assert a.paths(0, 2) == [(0, 1)]
    assert a.dimension() == 6


def test_separated_quiver_shape():
    g = separated_quiver(alg(EX51))
    assert g.n == 8 and not g.is_rad2
    assert [(x.source, x.target) for x in g.arrows] == [(0, 5), (1, 6), (2, 7), (3, 4)]
    assert g.label(5) == "2'"
    assert all(len(c.vertices) == 2 and c.kind == "A2" for c in dynkin_type(g.quiver))


def test_opposite_is_involution():
    a = alg(EX53)
    assert opposite(opposite(a)) == a
    assert opposite(a).arrows[0].source == 1


@pytest.mark.parametrize("kind", ["A1", "A5", "D4", "D6", "E6", "E7", "E8"])
def test_dynkin_recognition(kind):
    assert dynkin_type(dynkin_graph(kind))[0].kind == kind


def test_non_dynkin():
    kron = alg("vertices 1\narrow a 1 1\narrow b 1 1\nrelations rad2\n")
    kinds = {c.kind for c in dynkin_type(separated_quiver(kron).quiver)}
    assert kinds == {"NotDynkin"}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        star = parse_algebra("vertices 5\narrow a 1 2\narrow b 1 3\narrow c 1 4\narrow d 1 5\nrelations none\n")
    assert dynkin_type(star.quiver)[0].kind == "NotDynkin"
