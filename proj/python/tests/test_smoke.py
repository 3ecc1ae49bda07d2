import json
import math

import pytest

import ksplit


def test_field_examples():
    f4 = ksplit.Field.quadratic(2)
    assert f4.elements() == [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert f4.mul((0, 1), (0, 1)) == (1, 1)
    assert f4.invert((0, 1)) == (1, 1)
    assert ksplit.Field.quadratic(5).reduction == (2, 0)
    with pytest.raises(ksplit.KsplitError) as err:
        ksplit.Field.prime(9)
    assert ksplit.error_kind(err.value) == "CompositeCharacteristic"


def test_affine_split_and_verification():
    s = ksplit.build_affine_split(3)
    assert (s.n, s.k, s.graph.vertex_count) == (27, 6, 162)
    assert ksplit.verify_split(s, "lax")["passed"]
    assert not ksplit.verify_split(s, "strict")["passed"]
    assert ksplit.is_c4_free(s.graph)
    pruned = ksplit.prune_to_split(s)
    assert pruned.graph.edge_count == 27 * 26 // 2
    assert ksplit.SplitGraph.from_text(pruned.to_text()) == pruned


def test_pipeline_and_bounds():
    s = ksplit.construct_c4_free_split(1000)
    assert (s.n, s.k) == (1000, 22)
    assert ksplit.verify_split(s)["passed"]
    report = ksplit.split_bounds(ksplit.forbidden("C4"), 1000, certify=True)
    assert report["lower"]["value"] == 9
    assert report["upper"]["value"] == 22
    assert report["upper"]["certified"]
    assert ksplit.necessary_k_lower(ksplit.forbidden("C4"), 1000) == 9
    with pytest.raises(ksplit.KsplitError) as err:
        ksplit.construct_c4_free_split(100000)
    assert ksplit.error_kind(err.value) == "SizeGuard"


def test_freeness():
    c6 = ksplit.Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    assert ksplit.contains_subgraph(c6, ksplit.forbidden("C4")) is None
    assert ksplit.contains_subgraph(c6, ksplit.forbidden("P4")) is not None
    k22 = ksplit.Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert not ksplit.is_c4_free(k22)
    with pytest.raises(ksplit.KsplitError):
        ksplit.forbidden("C2")


def test_probabilistic():
    c6 = ksplit.Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    d = ksplit.janson_diagnostics(c6, 2)
    assert d["mu"] == pytest.approx(3.0)
    assert d["D"] == pytest.approx(1.5)
    assert d["bound_pair"] == pytest.approx(math.exp(-0.125), rel=1e-12)
    est = ksplit.estimate_pair_failure(c6, 2, 100000, seed=0)
    assert abs(est["estimate"] - 1 / 32) <= 4 * est["stderr"]
    split, trial = ksplit.random_split(c6, 3, 2, 1000, seed=0)
    assert ksplit.verify_split(split)["passed"]
    again, trial2 = ksplit.random_split(c6, 3, 2, 1000, seed=0, threads=2)
    assert again == split and trial == trial2
    cap = ksplit.concentration_report(10000, 100)["size_cap"]
    assert cap == pytest.approx(100 + 10 * math.log(100))


def test_star_and_coloring():
    s = ksplit.build_star_free_split(8, 4)
    assert s.k == 3 and s.graph.max_degree() <= 3
    pairs = [(i, j, 0 if (j - i) in (1, 4) else 1) for i in range(5) for j in range(i + 1, 5)]
    r = ksplit.split_from_coloring(5, 2, pairs)
    assert (r.n, r.k) == (5, 2)
    assert ksplit.find_forbidden(r.graph, ksplit.forbidden("K3")) is None


def test_trim():
    tri = ksplit.Graph(12, [e for c in range(4) for e in ((3 * c, 3 * c + 1), (3 * c, 3 * c + 2), (3 * c + 1, 3 * c + 2))])
    result, trimmed = ksplit.trim_max_degree(tri, q=3)
    assert result["case"] == 1 and trimmed is None
    assert result["case1"]["union_edges"] >= 3


def test_cli(tmp_path):
    out = tmp_path / "a.sg"
    code, stdout, _ = ksplit.run_cli(["construct", "affine", "--p", "2", "-o", str(out)])
    assert code == 0
    assert json.loads(stdout)["verified"]
    assert ksplit.read_split_file(str(out)) == ksplit.build_affine_split(2)
    code, _, stderr = ksplit.run_cli(["construct", "affine", "--p", "4"])
    assert code == 2 and stderr.strip()
