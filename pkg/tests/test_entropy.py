"""Connectedness scores, entropy, and information flow on simple graphs."""
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cryptocomb.entropy import (
    EntropyReport,
    SimpleGraph,
    distances_from,
    entropy_report,
    g_psi,
    info_flow,
    psi_values,
)
from cryptocomb.errors import ZeroPsi


def frac(n, d=1):
    return Fraction(n, d)


def test_graph_validation_and_canonical_edges():
    g = SimpleGraph(3, frozenset({(2, 0), (0, 1)}))
    assert g.edges == frozenset({(0, 2), (0, 1)})
    with pytest.raises(ValueError):
        SimpleGraph(1, frozenset())
    with pytest.raises(ValueError):
        SimpleGraph(3, frozenset({(0, 3)}))
    with pytest.raises(ValueError):
        SimpleGraph(3, frozenset({(1, 1)}))


def test_builders():
    assert len(SimpleGraph.complete(5).edges) == 10
    assert SimpleGraph.path(4).edges == frozenset({(0, 1), (1, 2), (2, 3)})
    assert SimpleGraph.edgeless(3).edges == frozenset()


def test_json_round_trip():
    g = SimpleGraph.path(4)
    obj = g.to_json_obj()
    assert obj == {"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}
    assert SimpleGraph.from_json_obj(obj) == g
    with pytest.raises(ValueError):
        SimpleGraph.from_json_obj({"n": 3})


def test_distances():
    g = SimpleGraph.path(4)
    assert distances_from(g, 0) == [0, 1, 2, 3]
    split = SimpleGraph(4, frozenset({(0, 1)}))
    assert distances_from(split, 0) == [0, 1, None, None]


def test_psi_on_path_of_three():
    # endpoints: 1/2 + 1/4; middle: 1/2 + 1/2
    assert psi_values(SimpleGraph.path(3)) == (frac(3, 4), frac(1), frac(3, 4))
    assert g_psi(SimpleGraph.path(3)) == frac(5, 2)


def test_psi_ignores_unreachable():
    split = SimpleGraph(4, frozenset({(0, 1)}))
    assert psi_values(split) == (frac(1, 2), frac(1, 2), frac(0), frac(0))


def test_complete_graph_info_flow_is_one():
    for n in range(2, 9):
        assert info_flow(SimpleGraph.complete(n)) == 1
        assert g_psi(SimpleGraph.complete(n)) == math.comb(n, 2)


def test_edgeless_info_flow_is_zero():
    for n in (2, 5):
        assert info_flow(SimpleGraph.edgeless(n)) == 0


def test_incomplete_graphs_sit_strictly_between():
    for g in (SimpleGraph.path(3), SimpleGraph.path(5), SimpleGraph(4, frozenset({(0, 1)}))):
        assert 0 < info_flow(g) < 1


def test_two_vertex_entropy_is_one_bit():
    report = entropy_report(SimpleGraph.complete(2))
    assert isinstance(report, EntropyReport)
    assert report.probabilities == (frac(1, 2), frac(1, 2))
    assert abs(report.entropy_bits - 1.0) <= 1e-12
    assert report.info_flow == 1


def test_report_fields_consistent():
    g = SimpleGraph.path(3)
    report = entropy_report(g)
    assert report.psi == psi_values(g)
    assert report.g_psi == g_psi(g)
    assert sum(report.probabilities) == 1
    assert report.info_flow == info_flow(g)
    # uniform distribution bounds the entropy from above
    assert 0 <= report.entropy_bits <= math.log2(g.n) + 1e-12


def test_complete_graph_entropy_is_maximal():
    for n in (3, 6):
        report = entropy_report(SimpleGraph.complete(n))
        assert abs(report.entropy_bits - math.log2(n)) <= 1e-12


def test_edgeless_entropy_raises_zero_psi():
    with pytest.raises(ZeroPsi):
        entropy_report(SimpleGraph.edgeless(4))


@given(st.integers(min_value=2, max_value=7), st.data())
def test_random_graph_invariants(n, data):
    all_pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = data.draw(st.sets(st.sampled_from(all_pairs)))
    g = SimpleGraph(n, frozenset(chosen))
    psi = psi_values(g)
    assert all(p >= 0 for p in psi)
    assert 0 <= info_flow(g) <= 1
    if chosen:
        report = entropy_report(g)
        assert report.entropy_bits <= math.log2(n) + 1e-9
        assert sum(report.probabilities) == 1
