from fractions import Fraction

import pytest

import avgdeg


def triangle():
    return avgdeg.Graph(3, [(0, 1), (0, 2), (1, 2)])


def test_graph_basics():
    g = triangle()
    assert (g.n, g.m) == (3, 3)
    assert g.neighbors(0) == [1, 2]
    assert avgdeg.precedes(1, 2, g) and not avgdeg.precedes(2, 1, g)
    assert avgdeg.out_degrees(g) == [2, 1, 0]
    assert avgdeg.cn_sum(g) == 6
    assert avgdeg.exact_arboricity(g) == 2
    labels, edges = avgdeg.forest_decomposition(g)
    assert labels == 2 and len(edges) == 3
    with pytest.raises(ValueError):
        avgdeg.Graph(2, [(0, 0)])


def test_exact_moments_are_fractions():
    r = avgdeg.exact_moments(avgdeg.Graph(3, [(0, 1), (1, 2)]))
    assert r["e_x"] == Fraction(4, 3) == r["d"]
    assert r["var_x"] == Fraction(8, 9)
    assert r["bound_var"] == Fraction(32, 3)


def test_oracle_and_errors():
    g = avgdeg.Graph(3, [(0, 1)])
    s = avgdeg.OracleSession(g, 5)
    assert s.random_neighbor(0) == 1
    with pytest.raises(avgdeg.NoNeighborError):
        s.random_neighbor(2)
    assert s.query_count() == {"vertex": 0, "degree": 0, "neighbor": 1, "total": 1}
    t = avgdeg.OracleSession(triangle(), 1)
    avgdeg.draw_sample(t)
    assert t.query_count()["total"] == 4


def test_ers_on_star():
    g, cert = avgdeg.generate("star:2000")
    assert cert["alpha"] == 1 and cert["m"] == 1999
    rep = avgdeg.ers(avgdeg.OracleSession(g, 3), 1.0, 0.1, c=400)
    assert rep.terminated
    assert abs(rep.estimate - float(cert["d"])) <= 0.1 * float(cert["d"])
    assert rep.estimate > rep.final_tau
    s0 = rep.passes[0][0]
    assert all(s * tau == s0 for s, tau, _ in rep.passes)


def test_ers_gen_and_birthday():
    g, cert = avgdeg.generate("complete:60")
    rep = avgdeg.ers_gen(avgdeg.OracleSession(g, 4), 60, 0.1, c=400)
    assert rep.terminated and abs(rep.estimate - 59) <= 5.9
    b = avgdeg.estimate_n_birthday(avgdeg.OracleSession(avgdeg.Graph(1, []), 1), 0.5)
    assert b["estimate"] == 1


def test_checks_and_validation(tmp_path):
    k5, _ = avgdeg.generate("complete:5")
    assert avgdeg.check_cn_bound(k5)["pass"]
    assert avgdeg.check_sqrt2m_bound(k5)["alpha"] == 3
    ok, checks = avgdeg.validate_graph(k5)
    assert ok and len(checks) == 4
    with pytest.raises(avgdeg.InstanceTooLarge):
        avgdeg.exact_arboricity(avgdeg.Graph(30, []))

    path = tmp_path / "k5.txt"
    avgdeg.write_edge_list(k5, str(path))
    assert avgdeg.read_edge_list(str(path)) == k5
    path.write_text("2 1\n0 0\n")
    with pytest.raises(avgdeg.LoadError, match="line 2"):
        avgdeg.read_edge_list(str(path))


def test_termination_profile_is_deterministic():
    g, _ = avgdeg.generate("star:500")
    a = avgdeg.termination_profile(g, "ers", 1.0, 0.1, c=50, trials=8, seed=2)
    b = avgdeg.termination_profile(g, "ers", 1.0, 0.1, c=50, trials=8, seed=2, workers=2)
    assert a == b
    assert a["success_rate"] >= 2 / 3
