import pytest

from crosseval.crossgrid import CellMissingError
from crosseval.store import ScoreRecord, ScoreStore, config_fingerprint


def record(sample_id, value, metric="rouge1", fingerprint="fp1"):
    return ScoreRecord(sample_id, "sys", "a", "b", metric, value, fingerprint)


class TestScoreStore:
    def test_mean_of_three(self):
        store = ScoreStore()
        store.put_records([record("s1", 0.2), record("s2", 0.4), record("s3", 0.6)])
        assert store.get_cell("sys", "a", "b", "rouge1", "fp1") == pytest.approx(0.4)

    def test_absent_cell_not_found(self):
        store = ScoreStore()
        store.put_records([record("s1", 0.0)])
        assert store.get_cell("sys", "a", "b", "rouge1", "fp1") == 0.0
        with pytest.raises(CellMissingError):
            store.get_cell("sys", "b", "a", "rouge1", "fp1")

    def test_fingerprint_mismatch_is_a_miss(self):
        store = ScoreStore()
        store.put_records([record("s1", 0.5, fingerprint="old")])
        assert store.has_cell("sys", "a", "b", "rouge1", "old")
        assert not store.has_cell("sys", "a", "b", "rouge1", "new")
        with pytest.raises(CellMissingError):
            store.get_cell("sys", "a", "b", "rouge1", "new")

    def test_duplicate_key_rejected(self):
        store = ScoreStore()
        store.put_records([record("s1", 0.5)])
        with pytest.raises(ValueError, match="duplicate"):
            store.put_records([record("s1", 0.7)])

    def test_non_finite_rejected(self):
        store = ScoreStore()
        with pytest.raises(ValueError, match="finite"):
            store.put_records([record("s1", float("inf"))])

    def test_unknown_metric_rejected(self):
        store = ScoreStore()
        with pytest.raises(ValueError, match="metric"):
            store.put_records([record("s1", 0.5, metric="bleu")])

    def test_round_trip_bit_exact(self, tmp_path):
        path = tmp_path / "scores.jsonl"
        values = [0.1, 1 / 3, 0.7071067811865476, 5e-324, 1e300]
        store = ScoreStore(path)
        store.put_records([record(f"s{i}", v) for i, v in enumerate(values)])
        reloaded = ScoreStore(path)
        assert sorted(r.value for r in reloaded) == sorted(values)
        assert reloaded.get_cell("sys", "a", "b", "rouge1", "fp1") == \
            store.get_cell("sys", "a", "b", "rouge1", "fp1")

    def test_aggregate_order_independent(self):
        values = [0.1 * i for i in range(1, 8)]
        forward = ScoreStore()
        forward.put_records([record(f"s{i}", v) for i, v in enumerate(values)])
        backward = ScoreStore()
        backward.put_records(
            [record(f"s{i}", v) for i, v in reversed(list(enumerate(values)))]
        )
        assert forward.get_cell("sys", "a", "b", "rouge1", "fp1") == \
            backward.get_cell("sys", "a", "b", "rouge1", "fp1")

    def test_append_accumulates(self, tmp_path):
        path = tmp_path / "scores.jsonl"
        store = ScoreStore(path)
        store.put_records([record("s1", 0.5)])
        again = ScoreStore(path)
        again.put_records([record("s2", 0.7)])
        assert len(ScoreStore(path)) == 2

    def test_systems_sorted(self):
        store = ScoreStore()
        store.put_records([
            ScoreRecord("s1", "zeta", "a", "b", "rouge1", 0.1),
            ScoreRecord("s1", "alpha", "a", "b", "rouge1", 0.2),
        ])
        assert store.systems() == ["alpha", "zeta"]


class TestFingerprint:
    def test_stable_and_sensitive(self):
        base = config_fingerprint("rouge1", {"stemming": True})
        assert base == config_fingerprint("rouge1", {"stemming": True})
        assert base != config_fingerprint("rouge1", {"stemming": False})
        assert base != config_fingerprint("rouge2", {"stemming": True})
