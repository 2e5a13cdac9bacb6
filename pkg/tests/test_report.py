import json

import pytest

from tlstar.graphs import parse_graph
from tlstar.report import analyze, cross_validate


class TestAnalyze:
    def test_both_methods_populate_everything(self):
        r = analyze(parse_graph("K(5; 1-2,2-3,4-5)"))
        assert r.theorem.coarse == "exponential"
        assert r.growth.coarse == "exponential"
        assert r.groebner.complete
        assert r.free_pair is not None
        assert not r.discrepancy
        assert r.hilbert[0] == 1

    def test_theorem_only_skips_engine(self):
        r = analyze(parse_graph("K(4; 1-2,3-4)"), method="theorem")
        assert r.groebner is None and r.growth is None and r.hilbert is None
        assert r.theorem.coarse == "polynomial-linear"
        assert not r.discrepancy

    def test_truncated_completion_flags_discrepancy(self):
        r = analyze(parse_graph("K(5; 1-2,2-3,4-5)"), degree_bound=4)
        assert not r.groebner.complete
        assert r.growth.upper_bound_only
        assert r.discrepancy

    def test_specialised_mode_label(self):
        r = analyze(parse_graph("K(2; 1-2)"), t_mode="1/3")
        assert r.t_mode == "t=1/3"
        assert not r.discrepancy

    def test_unknown_method_rejected(self):
        with pytest.raises(ValueError):
            analyze(parse_graph("K(2;)"), method="guess")

    def test_json_roundtrip_and_schema(self):
        r = analyze(parse_graph("K(4; 1-2,3-4)"), max_degree=8)
        payload = r.to_json_dict()
        blob = json.dumps(payload, sort_keys=True)
        again = json.loads(blob)
        assert again["graph"] == {"n": 4, "dashed": [[1, 2], [3, 4]]}
        assert again["growth"]["coarse"] == "polynomial"
        assert again["growth"]["gk_degree"] == 1
        assert again["theorem"]["branch"] == "(ii)"
        assert again["discrepancy"] is False
        assert "timings" not in again
        assert "timings" in r.to_json_dict(include_timings=True)

    def test_finite_dimensions_both_conventions(self):
        r = analyze(parse_graph("K(2;)"))
        growth = r.to_json_dict()["growth"]
        assert growth["dimension"] == 10
        assert growth["dimension_nonunital"] == 9


class TestCrossValidate:
    def test_small_sweep_counts(self):
        sweep = cross_validate(3)
        assert len(sweep.rows) == 1 + 2 + 4
        assert sweep.engine_runs == 4  # pruned classes: empty, edge, path, triangle
        assert sweep.all_agree and sweep.all_complete
        matrix = sweep.agreement_matrix()
        assert matrix["finite"]["finite"] == 7
        assert sum(matrix[a][b] for a in matrix for b in matrix[a]) == 7

    def test_four_leaf_sweep_finds_linear_classes(self):
        sweep = cross_validate(4)
        assert sweep.all_agree and sweep.all_complete
        linear = [row for row in sweep.rows if row.theorem.coarse == "polynomial-linear"]
        assert len(linear) == 6
        assert all(row.engine_growth.gk_degree == 1 for row in linear)

    def test_rows_cover_enumeration_and_dedup_engine_runs(self):
        sweep = cross_validate(4)
        assert len(sweep.rows) == 1 + 2 + 4 + 11
        assert sweep.engine_runs == 1 + 1 + 2 + 7

    def test_json_shape(self):
        payload = cross_validate(2).to_json_dict()
        assert payload["class_count"] == 3
        assert payload["all_agree"] is True
        assert {row["text"] for row in payload["rows"]} == {"K(1;)", "K(2;)", "K(2; 1-2)"}
