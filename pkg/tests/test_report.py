import json

import numpy as np
import pytest

from crosseval.bias import BiasProfile
from crosseval.crossgrid import CrossMatrix, normalized_matrix
from crosseval.report import (
    emit_heatmap,
    emit_profile,
    emit_ranking,
    fmt,
    read_grid_csv,
    round_half_up,
    write_matrix_csv,
    write_matrix_json,
    write_significance_csv,
)
from crosseval.stats import wilcoxon_signed_rank

from grids import TOY_A


def toy_matrix():
    return CrossMatrix("A", "rouge1", ("a", "b"), np.asarray(TOY_A))


class TestRounding:
    def test_half_up_at_integer_precision(self):
        assert round_half_up(43.5) == 44.0
        assert round_half_up(54.75) == 55.0
        assert round_half_up(93.57638888888889) == 94.0
        assert round_half_up(84.43216916132097) == 84.0

    def test_half_up_two_decimals(self):
        assert fmt(88.88888888888889, 2) == "88.89"
        assert fmt(85.41666666666667, 2) == "85.42"
        assert fmt(0.875, 2) == "0.88"
        assert fmt(2.5, 0) == "3"
        assert fmt(-2.5, 0) == "-3"


class TestMatrixCsv:
    def test_layout_with_averages(self, tmp_path):
        path = tmp_path / "m.csv"
        write_matrix_csv(toy_matrix(), path)
        lines = path.read_text().splitlines()
        assert lines[0] == "train\\test,a,b,avg"
        assert lines[1] == "a,48.00,40.00,44.00"
        assert lines[2] == "b,41.00,45.00,43.00"
        assert lines[3] == "avg,44.50,42.50,43.50"

    def test_round_trip_through_reader(self, tmp_path):
        path = tmp_path / "m.csv"
        write_matrix_csv(toy_matrix(), path)
        order, values = read_grid_csv(path)
        assert order == ("a", "b")
        assert values.tolist() == TOY_A

    def test_reader_accepts_plain_grid(self, tmp_path):
        path = tmp_path / "m.csv"
        path.write_text("train\\test,a,b\na,48,40\nb,41,45\n")
        order, values = read_grid_csv(path)
        assert order == ("a", "b")
        assert values.tolist() == TOY_A

    def test_json_mirrors_axes(self, tmp_path):
        path = tmp_path / "m.json"
        write_matrix_json(toy_matrix(), path)
        payload = json.loads(path.read_text())
        assert payload["rows"] == "train_dataset"
        assert payload["columns"] == "test_dataset"
        assert payload["values"] == TOY_A
        assert payload["overall_avg"] == 43.5


class TestRanking:
    def test_three_rows_descending(self, tmp_path):
        path = tmp_path / "r.csv"
        emit_ranking({"x": 1.0, "y": 3.0, "z": 2.0}, "stiffness", path)
        lines = path.read_text().splitlines()
        assert lines[0] == "rank,system,stiffness"
        assert lines[1].startswith("1,y")
        assert lines[3].startswith("3,x")


class TestHeatmap:
    def test_cell_and_label_counts(self, tmp_path):
        path = tmp_path / "h.svg"
        emit_heatmap([[1.0, -2.0], [0.0, 3.0]], ["a", "b"], ["a", "b"], path)
        svg = path.read_text()
        assert svg.count("<rect") == 4
        assert svg.count('class="val"') == 4

    def test_sign_convention(self, tmp_path):
        path = tmp_path / "h.svg"
        emit_heatmap([[5.0, -5.0], [0.0, 2.5]], ["a", "b"], ["a", "b"], path)
        svg = path.read_text()
        # positive extreme: grey; negative extreme: red; zero: white
        assert 'fill="#646464"' in svg
        assert 'fill="#ff6464"' in svg
        assert 'fill="#ffffff"' in svg

    def test_all_zero_grid_neutral(self, tmp_path):
        path = tmp_path / "h.svg"
        emit_heatmap([[0.0, 0.0], [0.0, 0.0]], ["a", "b"], ["a", "b"], path)
        assert path.read_text().count('fill="#ffffff"') == 4

    def test_non_finite_rejected(self, tmp_path):
        with pytest.raises(ValueError):
            emit_heatmap([[float("nan")]], ["a"], ["a"], tmp_path / "h.svg")

    def test_deterministic_bytes(self, tmp_path):
        one, two = tmp_path / "1.svg", tmp_path / "2.svg"
        grid = [[1.25, -3.5], [0.0, 9.0]]
        emit_heatmap(grid, ["a", "b"], ["a", "b"], one, title="t")
        emit_heatmap(grid, ["a", "b"], ["a", "b"], two, title="t")
        assert one.read_bytes() == two.read_bytes()


def profile(dataset, value):
    return BiasProfile(
        dataset=dataset,
        coverage=value,
        copy_length=2.0,
        novelty={1: 0.1, 2: 0.2, 3: 0.3, 4: 0.4},
        repetition={1: 0.0, 2: 0.0, 3: 0.05, 4: 0.1},
        fusion_score=0.5,
        counts={"coverage": 10},
    )


class TestProfileEmission:
    def test_one_row_per_dataset_fixed_columns(self, tmp_path):
        csv_path, json_path = tmp_path / "p.csv", tmp_path / "p.json"
        profiles = [profile(f"d{i}", 0.1 * i) for i in range(5)]
        emit_profile(profiles, csv_path, json_path)
        lines = csv_path.read_text().splitlines()
        assert lines[0] == "dataset,coverage,copy_length,novelty,fusion,repetition"
        assert len(lines) == 6

    def test_csv_json_round_trip(self, tmp_path):
        csv_path, json_path = tmp_path / "p.csv", tmp_path / "p.json"
        emit_profile([profile("d", 0.75)], csv_path, json_path,
                     novelty_n=2, repetition_n=3)
        payload = json.loads(json_path.read_text())
        row = csv_path.read_text().splitlines()[1].split(",")
        assert float(row[1]) == payload["d"]["coverage"]
        assert float(row[3]) == payload["d"]["novelty"]["2"]
        assert float(row[5]) == payload["d"]["repetition"]["3"]


class TestSignificanceCsv:
    def test_rows(self, tmp_path):
        path = tmp_path / "s.csv"
        result = wilcoxon_signed_rank([1, 2, 3, 4, 5, 6], [0, 0, 0, 0, 0, 0])
        write_significance_csv([("A", "B", "rouge1", "cells", result)], path)
        lines = path.read_text().splitlines()
        assert lines[0].startswith("system_a,system_b,")
        assert lines[1] == "A,B,rouge1,cells,6,0.0,0.03125,exact,yes"


class TestDeterminism:
    def test_matrix_csv_bytes_stable(self, tmp_path):
        one, two = tmp_path / "1.csv", tmp_path / "2.csv"
        write_matrix_csv(toy_matrix(), one)
        write_matrix_csv(toy_matrix(), two)
        assert one.read_bytes() == two.read_bytes()

    def test_normalized_matrix_bytes_stable(self, tmp_path):
        one, two = tmp_path / "1.csv", tmp_path / "2.csv"
        write_matrix_csv(normalized_matrix(toy_matrix()), one)
        write_matrix_csv(normalized_matrix(toy_matrix()), two)
        assert one.read_bytes() == two.read_bytes()
