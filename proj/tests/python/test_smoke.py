from pathlib import Path

import pytest

import a2zeta

DATA = Path(__file__).resolve().parents[2] / "data"


@pytest.fixture(scope="module")
def bundled():
    return a2zeta.load_complex(str(DATA / "bundled_q2.cx3"))


def expand(coeffs, power):
    out = [0] * (power * (len(coeffs) - 1) + 1)
    for i, c in enumerate(coeffs):
        out[power * i] = c
    return out


def multiply(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_bundled_shape(bundled):
    assert (bundled.q, bundled.vertex_count, bundled.edge_count, bundled.chamber_count) == (2, 3, 21, 21)
    ok, checks, first = a2zeta.validate(bundled)
    assert ok and first is None and all(passed for _, passed, _ in checks)
    assert a2zeta.euler_characteristic(bundled) == 3


def test_identity_recomputed_in_python(bundled):
    b = a2zeta.zeta_bundle(bundled)
    assert a2zeta.check_identity(bundled)
    lhs = [1]
    for _ in range(b["chi"]):
        lhs = multiply(lhs, [1, 0, 0, -1])
    lhs = multiply(multiply(lhs, b["pe"]), b["pe2"])
    assert b["pe2"] == expand(b["pe"], 2)
    assert lhs == multiply(b["dvertex"], b["pb"])


def test_large_integers_survive(bundled):
    tr = a2zeta.edge_traces(bundled, 10)
    assert tr[3] == 186 and tr[6] == 12324
    assert all(isinstance(t, int) for t in tr)
    assert a2zeta.count_type1_geodesics(bundled, 6) == tr[6]


def test_ramanujan_and_galleries(bundled):
    assert a2zeta.ramanujan(bundled) == (True, 9)
    assert a2zeta.count_galleries(bundled, 6) == 222


def test_corrupted_complex_raises():
    bad = a2zeta.load_complex(str(DATA / "corrupted_q2.cx3"))
    ok, _, first = a2zeta.validate(bad)
    assert not ok and first == "edge lies in exactly q+1 chambers"
    with pytest.raises(a2zeta.Error, match="ValidationFailure"):
        a2zeta.zeta_bundle(bad)
    with pytest.raises(ValueError):
        a2zeta.load_complex("/nonexistent.cx3")


def test_search_regenerates_bundled(bundled):
    (found,) = a2zeta.search(2, seed=0, limit=1)
    assert found.serialize() == bundled.serialize()


def test_symbolic_and_building():
    assert a2zeta.satake_recursion(2, 6)
    assert a2zeta.sigma3_identity(6)
    assert a2zeta.tamagawa(2, 2, 3)
    assert a2zeta.geodesic_criterion(2, 2, 3) == (True, 28, 28)


def test_graphs():
    g = a2zeta.petersen_graph()
    (num, den), agree = a2zeta.ihara_zeta(g)
    assert agree and num == [1] and den[0] == 1
    assert a2zeta.graph_ramanujan(g)
    c5 = a2zeta.Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    (num, den), _ = a2zeta.ihara_zeta(c5)
    assert den == multiply([1, 0, 0, 0, 0, -1], [1, 0, 0, 0, 0, -1])
    assert a2zeta.count_Nn(c5, 5) == 10
