"""Smoke tests for the Python bindings."""

import pytest

try:
    import kcbg
except ImportError:
    import _kcbg as kcbg


def test_construct_and_verify():
    g = kcbg.bar_g(6, 5)
    assert (g.n, g.m, g.edge_count) == (6, 5, 10)
    report = kcbg.is_kcb_fast(g)
    assert report["verdict"] is True
    assert report["witness"] is None

    bad = kcbg.ddot_g(6, 5, 2)
    brute = kcbg.is_kcb_bruteforce(bad)
    assert brute["verdict"] is False
    assert brute["witness"]["kind"] == "fault_set_U"
    assert brute["witness"]["vertices"] == [0]


def test_degree_stats_and_tilde():
    g = kcbg.bar_g(6, 5)
    stats = kcbg.degree_stats(g)
    assert stats == {
        "delta_U": 1,
        "Delta_U": 2,
        "delta_V": 2,
        "Delta_V": 2,
        "edge_count": 10,
    }
    tilde = kcbg.build_tilde(g)
    assert (tilde.n, tilde.m) == (6, 6)
    assert kcbg.is_k_extendable(tilde, 1)


def test_serialize_round_trip():
    g = kcbg.hat_g(6, 5, 2)
    for fmt in ("edgelist", "dot", "json"):
        assert kcbg.parse(kcbg.serialize(g, fmt), fmt) == g


def test_numeric_helpers():
    assert kcbg.count_solutions(6, 5, 0) == 2
    assert kcbg.max_solution_index(7, 4, 3) == 5
    profile = kcbg.degree_profile(6, 5, 2)
    assert profile.P == [2, 2, 2, 2, 1, 1]
    assert profile.D == [0, 2, 4, 1, 3, 4]
    bigraphic, realization = kcbg.is_bigraphic([2, 2, 2, 2, 1, 1], [2, 2, 2, 2, 2])
    assert bigraphic and len(realization) == 10


def test_connectivity():
    g = kcbg.bar_g(6, 5)
    assert kcbg.kappa(g) == 1
    report = kcbg.check_connectivity_bounds(g)
    assert report["kappa_V"] == 1
    assert report["kappa_V_ge_k"] is True
    assert kcbg.local_connectivity(g, ("u", 0), ("u", 3)) == 1
    assert kcbg.strongly_k_connected(4, [(0, 1), (1, 2), (2, 3), (3, 0)], 1)


def test_errors_surface_as_exceptions():
    with pytest.raises(kcbg.KcbgError):
        kcbg.check_g(6, 5)
    with pytest.raises(kcbg.KcbgError):
        kcbg.BipartiteGraph(2, 1, [(0, 5)])


def test_fixtures_and_sweep():
    names = [name for name, _ in kcbg.reference_fixtures()]
    assert names == [
        "bar_6_5",
        "hat_6_5_a2",
        "dot_6_5_b2",
        "ddot_6_5_b2",
        "small_delta_7_4",
    ]
    csv = kcbg.sweep_csv(3, 6, ["bar"], jobs=2)
    assert csv.startswith("n,m,k,family,status,")
    assert "false" not in csv
