"""End-to-end smoke tests for the Python extension module."""

import json
import math

import pytest

import netvuln as nv


def path_graph(n):
    return nv.build_graph([(str(v), str(v + 1)) for v in range(n - 1)])


def test_graph_surface():
    g = nv.parse_edge_list("a b\nb c\nc d\n# note\nv loner\n")
    assert g.vertex_count == 5
    assert g.edge_count == 3
    assert g.labels[0] == "a"
    assert g.index_of("loner") == 4
    assert g.degree(g.index_of("loner")) == 0
    assert g.neighbors(1) == [0, 2]

    round_tripped = nv.parse_edge_list(nv.edge_list(g))
    assert round_tripped.labels == g.labels
    assert round_tripped.edges == g.edges


def test_distances_and_metrics():
    g = path_graph(4)
    dm = nv.all_pairs_distances(g)
    assert dm.distance(0, 3) == 3
    assert dm.diameter == 3
    assert dm.component_count == 1

    assert nv.inverse_geodesic_length(g) == pytest.approx(13 / 18)
    assert nv.largest_component_fraction(g) == 1.0


def test_betweenness_and_index():
    g = path_graph(4)
    profile = nv.edge_betweenness(g)
    assert profile.edge_values == pytest.approx([3.0, 4.0, 3.0])
    assert nv.average_betweenness(profile) == pytest.approx(10 / 3)
    assert nv.normalized_betweenness(profile) == pytest.approx(1.0)

    normalized = nv.multiscale_vulnerability(profile, 1.0, nv.Normalization.PAIR_NORMALIZED)
    assert nv.fractal_vulnerability(profile, 1.0) == normalized


def test_report_and_optionals():
    report = nv.compute_report(path_graph(4), box_runs=25)
    assert report.n == 4
    assert report.b1_raw == pytest.approx(10 / 3)
    assert 0.5 < report.d_b < 1.5

    two = nv.compute_report(path_graph(2), with_fractal=False)
    assert two.b_nor is None
    assert two.d_b is None
    assert two.inv_geodesic == pytest.approx(1.0)


def test_box_covering_and_fit():
    g = nv.build_graph([(a, b) for a, b in [("0", "1"), ("0", "2"), ("0", "3"),
                                            ("1", "2"), ("1", "3"), ("2", "3")]])
    curve = nv.box_cover_curve(g, runs=10, seed=1)
    assert curve.sizes == [1, 2]
    assert curve.mean_boxes == pytest.approx([4.0, 1.0])
    fit = nv.fit_dimension(curve)
    assert fit.dimension == pytest.approx(2.0)
    assert fit.r2 == pytest.approx(1.0)

    with pytest.raises(nv.FitError):
        nv.fit_dimension(curve, size_range=(5, 6))


def test_attack():
    star = nv.build_graph([("hub", f"leaf{i}") for i in range(10)])
    trace = nv.betweenness_attack(star, fraction=0.05)
    assert [r.label for r in trace.removed] == ["hub"]
    assert trace.post.inv_geodesic == 0.0
    assert trace.post.lcs == pytest.approx(0.1)
    assert trace.inv_geodesic_ratio == 0.0


def test_p_search_and_tie():
    result = nv.p_search(path_graph(4), nv.build_graph(
        [("0", "1"), ("1", "2"), ("2", "3"), ("0", "3")]))
    assert result.p_star == 1
    assert result.more_vulnerable == 0

    k4_edges = [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]
    with pytest.raises(nv.IndistinguishableError):
        nv.p_search(nv.build_graph(k4_edges), nv.build_graph(k4_edges))


def test_generators():
    er = nv.generate_erdos_renyi(100, 4.0, seed=3)
    assert er.vertex_count == 100
    assert er.edge_count == 200

    ba = nv.generate_barabasi_albert(100, 2, seed=3)
    assert ba.edge_count == 3 + 2 * 97

    with pytest.raises(nv.ParameterError):
        nv.generate_erdos_renyi(10, 20.0, seed=1)


def test_json_runners_are_deterministic():
    g = nv.generate_erdos_renyi(60, 4.0, seed=5)
    first = nv.analyze_json(g, box_runs=20, seed=9)
    second = nv.analyze_json(g, box_runs=20, seed=9)
    assert first == second

    payload = json.loads(first)
    assert set(payload) == {"n", "edgeCount", "b1Raw", "b1Normalized", "bNor",
                            "dB", "vDB", "invGeo", "lcs"}
    assert payload["n"] == 60

    compare = json.loads(nv.compare_json(g, g, name_first="L", name_second="R"))
    assert compare["distinguishable"] is False
    assert compare["pStar"] is None

    attack = json.loads(nv.attack_json(g, fraction=0.05))
    assert attack["removedCount"] == 3
    assert attack["initial"]["n"] == 60

    cover = json.loads(nv.boxcover_json(g, box_runs=15, seed=2))
    assert cover["curve"][0]["lB"] == 1
    assert cover["curve"][0]["meanNB"] == 60.0


def test_input_errors_translate():
    with pytest.raises(nv.InputError):
        nv.parse_edge_list("a a\n")
    with pytest.raises(nv.InputError):
        nv.build_graph([])
    assert math.isclose(nv.UNREACHABLE, -1)
