"""Tests for strategy files, rational formatting and report serialization."""

import io
import json
from fractions import Fraction

import pandas as pd
import pytest

from src.game import GameParams, RandomizedStrategy, majority_strategy
from src.improve import normalize
from src.optimality import certify, count_optimal, oracle_enumerate
from src.storage.files import (
    load_matrix,
    load_strategy,
    matrix_from_dict,
    save_strategy,
    strategy_from_dict,
)
from src.storage.reports import (
    certification_to_dict,
    count_to_dict,
    oracle_to_dict,
    table_frame,
    table_to_csv,
    table_to_dict,
    trace_to_dict,
    value_report_to_dict,
)
from src.utils.errors import InvalidInputError
from src.utils.rationals import format_rational, parse_rational, to_decimal_string
from src.value import optimal_value_report, optimal_value_table
from tests.helpers import m


class TestRationals:
    @pytest.mark.parametrize(
        "value, text",
        [(Fraction(3, 4), "3/4"), (Fraction(1), "1/1"), (Fraction(0), "0/1"), (Fraction(11, 16), "11/16")],
    )
    def test_format(self, value, text):
        assert format_rational(value) == text

    @pytest.mark.parametrize(
        "value, digits, text",
        [
            (Fraction(3, 4), 12, "0.75"),
            (Fraction(1), 12, "1.0"),
            (Fraction(0), 12, "0.0"),
            (Fraction(2, 3), 4, "0.6667"),
            (Fraction(1, 8), 2, "0.12"),  # half-even
            (Fraction(3, 8), 2, "0.38"),
        ],
    )
    def test_decimal(self, value, digits, text):
        assert to_decimal_string(value, digits) == text

    def test_parse(self):
        assert parse_rational("3/4") == Fraction(3, 4)
        assert parse_rational("1") == 1
        assert parse_rational(2) == 2

    @pytest.mark.parametrize("text", [0.5, True, "abc", "1/0", None])
    def test_parse_rejects(self, text):
        with pytest.raises(InvalidInputError):
            parse_rational(text)


class TestMatrixFiles:
    def test_round_trip(self, tmp_path):
        g = m("012", "120", "201")
        path = save_strategy(g, tmp_path / "nested" / "g.json")
        assert load_matrix(path) == g

    @pytest.mark.parametrize(
        "data",
        [
            [[0, 1], [1, 0]],
            {"n": 2, "d": 2},
            {"n": 2, "d": 2, "rows": "0011"},
            {"n": 2, "d": 2, "rows": [[0, 1], [1, 2]]},
            {"n": 2, "d": 2, "rows": [[0, 1]]},
            {"n": 0, "d": 2, "rows": []},
            {"n": 2, "d": 2, "rows": [[0, 1.0], [1, 0]]},
        ],
    )
    def test_rejects_malformed(self, data):
        with pytest.raises(InvalidInputError):
            matrix_from_dict(data)

    def test_rejects_bad_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(InvalidInputError):
            load_strategy(path)

    def test_rejects_invalid_utf8(self, tmp_path):
        path = tmp_path / "latin1.json"
        path.write_bytes(b'{"n": 2, "d": 2, "rows": [[0, 0], [1, 1]], "x": "\xff\xfe"}')
        with pytest.raises(InvalidInputError):
            load_strategy(path)

    def test_rejects_missing_file(self, tmp_path):
        with pytest.raises(InvalidInputError):
            load_strategy(tmp_path / "absent.json")


class TestRandomizedFiles:
    def test_parse(self):
        data = {
            "components": [
                {"weight": "1/2", "matrix": {"n": 2, "d": 2, "rows": [[0, 0], [1, 1]]}},
                {"weight": "1/2", "matrix": {"n": 2, "d": 2, "rows": [[0, 0], [0, 0]]}},
            ]
        }
        r = strategy_from_dict(data)
        assert isinstance(r, RandomizedStrategy)
        assert [w for w, _ in r.components] == [Fraction(1, 2), Fraction(1, 2)]

    def test_round_trip(self, tmp_path):
        params = GameParams(n=2, d=2)
        r = RandomizedStrategy(((Fraction(1, 3), majority_strategy(params)), (Fraction(2, 3), m("10", "01"))))
        path = save_strategy(r, tmp_path / "r.json")
        assert load_strategy(path) == r

    def test_rejects_float_weights(self):
        data = {"components": [{"weight": 1.0, "matrix": {"n": 1, "d": 1, "rows": [[0]]}}]}
        with pytest.raises(InvalidInputError):
            strategy_from_dict(data)

    def test_rejects_weights_not_summing_to_one(self):
        data = {"components": [{"weight": "1/2", "matrix": {"n": 1, "d": 1, "rows": [[0]]}}]}
        with pytest.raises(InvalidInputError):
            strategy_from_dict(data)

    def test_load_matrix_refuses_mixtures(self, strategy_file):
        path = strategy_file({"components": [{"weight": "1", "matrix": {"n": 1, "d": 1, "rows": [[0]]}}]})
        with pytest.raises(InvalidInputError):
            load_matrix(path)


class TestReports:
    def test_value_report(self):
        data = value_report_to_dict(optimal_value_report(GameParams(n=2, d=5)))
        assert data == {
            "n": 2,
            "d": 5,
            "value": "3/5",
            "decimal": "0.6",
            "method": "closed-form-two-positions",
        }

    def test_trace(self):
        data = trace_to_dict(normalize(m("00", "00")))
        assert data["final"]["rows"] == [[1, 1], [0, 0]]
        assert data["steps"][0] == {"j": 0, "y": 0, "from": 0, "to": 1}
        assert data["values"] == ["1/2", "3/4", "3/4"]
        json.dumps(data)

    def test_count_with_oracle(self):
        params = GameParams(n=2, d=2)
        data = count_to_dict(count_optimal(params), oracle_enumerate(params))
        assert data["count"] == "12"
        assert data["oracle_count"] == "12"
        assert data["verdict"] == "AGREE"

    def test_count_without_oracle(self):
        data = count_to_dict(count_optimal(GameParams(n=3, d=3)))
        assert data["basis"] == "theorem"
        assert "verdict" not in data

    def test_oracle_optimizers(self):
        data = oracle_to_dict(oracle_enumerate(GameParams(n=3, d=2)))
        assert data["max_value"] == "3/4"
        assert len(data["optimizers"]) == 8

    def test_certification(self):
        data = certification_to_dict(certify(m("00", "00")))
        assert data["optimal"] is False
        assert data["gap"] == "1/4"
        assert data["gap_decimal"] == "0.25"
        json.dumps(data)


class TestTable:
    def test_csv_and_dict_agree(self):
        frame = table_frame(optimal_value_table(6, 5))
        assert list(frame.index) == list(range(1, 7))
        assert list(frame.columns) == list(range(1, 6))

        parsed = pd.read_csv(io.StringIO(table_to_csv(frame)), index_col="n", dtype=str)
        parsed.index = parsed.index.astype(int)
        data = table_to_dict(frame)
        assert data["n_max"] == 6 and data["d_max"] == 5
        assert len(data["cells"]) == 30
        for cell in data["cells"]:
            assert parsed.loc[cell["n"], str(cell["d"])] == cell["value"]

    def test_cells(self):
        frame = table_frame(optimal_value_table(4, 3))
        assert frame.loc[2, 2] == "3/4"
        assert frame.loc[1, 3] == "1/1"
        assert frame.loc[4, 2] == "11/16"
        assert table_to_csv(frame).splitlines()[0] == "n,1,2,3"
