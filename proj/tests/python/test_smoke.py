import json

import pytest

import bnscope


def test_example_has_no_fixed_point_and_one_cyclic_attractor():
    f = bnscope.parse_network("f0 = !x1 & x2\nf1 = !x2\nf2 = !x0 & x1\n")
    assert f == bnscope.cyclic_example_network()
    assert bnscope.fixed_points(f) == []
    (attractor,) = bnscope.attractors(f)
    assert attractor.states == list(range(7))
    assert attractor.is_cyclic and not attractor.is_attractive_cycle


def test_parse_error_carries_position():
    with pytest.raises(bnscope.ParseError, match="line 1"):
        bnscope.parse_network("f0 = x0 &")


def test_twelve_dimensional_andnet():
    g = bnscope.fixed_point_free_andnet()
    assert g.n == 12
    assert len(g.edges()) == 24
    f = g.network()
    assert bnscope.fixed_points(f) == []
    assert bnscope.local_cycles(f, "neg") == []


def test_padded_cycle_has_antipodal_attractive_cycle():
    f = bnscope.padded_cycle_network(7)
    cycles = bnscope.attractive_cycles(f)
    assert any(len(c) == 14 for c in cycles)
    assert bnscope.local_cycles(f, "neg") == []


def test_reduce_example():
    f = bnscope.parse_network("f0 = !x1\nf1 = x0\nf2 = x0 ^ x1\n")
    reduced, renumber = bnscope.reduce(f, 2)
    assert reduced == bnscope.parse_network("f0 = !x1\nf1 = x0\n")
    assert renumber == [0, 1, -1]


def test_local_cycle_signs_follow_edges():
    f = bnscope.parse_network("f0 = !x1\nf1 = x0\n")
    for cycle in bnscope.local_cycles(f):
        product = 1
        for s in cycle["signs"]:
            product *= s
        assert product == cycle["sign"]
    assert bnscope.jacobian(f, 0) == [[0, 1], [1, 0]]


def test_analysis_json_is_parseable():
    report = json.loads(bnscope.analyze_json(bnscope.cyclic_example_network()))
    assert report["network"]["n"] == 3
    assert report["fixed_points"] == []


def test_verify_reports_pass():
    assert bnscope.verify_fixed_point_free_construction()["passed"]
    assert bnscope.verify_padded_cycle([7])["passed"]
    assert bnscope.verify_isometries()["passed"]
