import json

import pytest

from dickeprep.errors import ResourceLimitError
from dickeprep.search import (
    RecordStore,
    SearchRecord,
    childs_record,
    dj_record,
    exhaustive_search,
    optimize_r,
    table_one,
)
from dickeprep.symfunc import SymmetricBooleanFunction, optimal_function
from dickeprep.symstate import (
    biased_dj_state,
    childs_probability,
    dj_state,
    success_probability,
)


class TestOptimizeR:
    def test_reference_points(self):
        r, p = optimize_r(SymmetricBooleanFunction.from_hex(4, "02"), 2)
        assert r == pytest.approx(0.298698, abs=1e-2)
        assert p == pytest.approx(0.981763, abs=1e-4)
        r, p = optimize_r(SymmetricBooleanFunction.from_hex(5, "03"), 1)
        assert r == pytest.approx(1.42458, abs=1e-2)
        assert p == pytest.approx(0.748304, abs=1e-4)

    def test_beats_unbiased(self):
        # the optimum over r can only improve on the r = n/2 slice
        f = optimal_function(6, 2)
        unbiased = success_probability(dj_state(f), 2)
        _, p = optimize_r(f, 2)
        assert p >= unbiased - 1e-12

    def test_optimum_is_a_maximum_nearby(self):
        f = SymmetricBooleanFunction.from_hex(4, "02")
        r, p = optimize_r(f, 2)
        for dr in (-1e-4, 1e-4):
            assert p >= success_probability(biased_dj_state(f, r + dr), 2) - 1e-12

    def test_half_bias_reduction_point(self):
        # evaluating at r = n/2 only (no optimization) recovers the unbiased value
        f = optimal_function(6, 2)
        p_half = success_probability(biased_dj_state(f, 3.0), 2)
        assert p_half == pytest.approx(success_probability(dj_state(f), 2), abs=1e-12)

    def test_domain_errors(self):
        f = optimal_function(4, 1)
        with pytest.raises(ValueError, match="w="):
            optimize_r(f, 5)
        with pytest.raises(ValueError, match="grid_points"):
            optimize_r(f, 1, grid_points=1)


class TestExhaustiveSearch:
    def test_reference_point(self):
        rec = exhaustive_search(4, 1)
        assert rec.probability == pytest.approx(0.833609, abs=1e-4)
        assert rec.method == "biased"

    def test_record_reproducible(self):
        rec = exhaustive_search(5, 2)
        f = SymmetricBooleanFunction.from_hex(5, rec.f_hex)
        p = success_probability(biased_dj_state(f, rec.r), 2)
        assert p == pytest.approx(rec.probability, abs=1e-9)

    def test_mirror_equality_and_dominance(self):
        # one scan per (n, w): probabilities agree at w and n-w, and the
        # optimized pair beats both the unbiased-DJ and plain-bias baselines
        for n in range(2, 10):
            recs = {w: exhaustive_search(n, w) for w in range(1, n)}
            for w in range(1, n):
                assert recs[w].probability == pytest.approx(
                    recs[n - w].probability, abs=1e-9
                )
                dj = success_probability(dj_state(optimal_function(n, w)), w)
                assert recs[w].probability >= dj - 1e-9
                assert recs[w].probability >= childs_probability(n, w) - 1e-9

    def test_deterministic_and_jobs_invariant(self):
        a = exhaustive_search(5, 2)
        b = exhaustive_search(5, 2)
        c = exhaustive_search(5, 2, jobs=3)
        assert a == b == c

    def test_scan_bound(self):
        with pytest.raises(ResourceLimitError, match="max-n"):
            exhaustive_search(13, 2)
        with pytest.raises(ValueError, match="w="):
            exhaustive_search(4, 5)


class TestBaselineRecords:
    def test_dj_record(self):
        rec = dj_record(6, 2)
        assert rec.method == "dj"
        assert rec.r == 3.0
        assert rec.probability == pytest.approx(0.527344, abs=1e-6)
        assert rec.f_hex == "1C"

    def test_childs_record(self):
        rec = childs_record(6, 3)
        assert rec.method == "childs"
        assert rec.f_hex == ""
        assert rec.probability == pytest.approx(0.3125, abs=0)


class TestTableOne:
    def test_layout_and_rows(self):
        rows = table_one([4])
        assert len(rows) == 9  # three weights x three methods
        assert [r.method for r in rows[:3]] == ["biased", "dj", "childs"]
        assert all(r.n == 4 for r in rows)

    def test_middle_weight_coincidence(self):
        rows = {(r.w, r.method): r for r in table_one([6])}
        assert rows[(3, "dj")].probability == pytest.approx(rows[(3, "childs")].probability, abs=1e-12)

    def test_store_reuse(self, tmp_path):
        store = RecordStore(tmp_path / "db.jsonl")
        first = table_one([4], store=store)
        text = (tmp_path / "db.jsonl").read_text()
        again = table_one([4], store=store)
        assert first == again
        # cached: no new biased records were appended on the second pass
        assert (tmp_path / "db.jsonl").read_text() == text


class TestRecordStore:
    def test_round_trip(self, tmp_path):
        store = RecordStore(tmp_path / "records.jsonl")
        rec = SearchRecord(n=4, w=2, f_hex="8", r=3.7013, probability=0.981763)
        store.append(rec)
        store.append(SearchRecord(n=4, w=2, f_hex="2", r=0.2987, probability=0.981763))
        assert list(store.records())[0] == rec
        lines = (tmp_path / "records.jsonl").read_text().splitlines()
        assert len(lines) == 2
        assert set(json.loads(lines[0])) == {"n", "w", "f_hex", "r", "probability", "method"}

    def test_index_prefers_probability_then_value(self, tmp_path):
        store = RecordStore(tmp_path / "records.jsonl")
        store.append(SearchRecord(n=4, w=1, f_hex="A", r=1.0, probability=0.5))
        store.append(SearchRecord(n=4, w=1, f_hex="3", r=2.0, probability=0.7))
        store.append(SearchRecord(n=4, w=1, f_hex="B", r=0.5, probability=0.7))
        store.append(SearchRecord(n=4, w=2, f_hex="2", r=0.3, probability=0.9))
        index = store.index()
        assert index[(4, 1)].f_hex == "3"
        assert index[(4, 2)].probability == 0.9

    def test_missing_file_is_empty(self, tmp_path):
        store = RecordStore(tmp_path / "nope.jsonl")
        assert list(store.records()) == []
        assert store.index() == {}
