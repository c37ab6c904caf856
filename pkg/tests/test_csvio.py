"""
Unit Tests for CSV input/output
"""

import pytest

from erws.cli.csvio import (
    format_value,
    numeric_column,
    parse_csv,
    parse_value,
    read_csv,
    render_csv,
    write_csv,
)
from erws.errors import CsvFormatError


class TestFormatting:
    """값 포맷 테스트"""

    def test_float_uses_17_digits(self):
        assert format_value(0.1) == "0.10000000000000001"
        assert float(format_value(1 / 3)) == 1 / 3

    def test_other_values(self):
        assert format_value(None) == ""
        assert format_value(42) == "42"
        assert format_value("closed_form") == "closed_form"

    def test_parse_value(self):
        assert parse_value("") is None
        assert parse_value("7") == 7
        assert parse_value("2.5") == 2.5
        assert parse_value("recurrence") == "recurrence"


class TestRoundTrip:
    """읽고 다시 쓰면 같은 바이트"""

    def test_rewrite_is_byte_identical(self):
        header = ["t", "m2", "method"]
        rows = [[1, 1.0, "closed_form"], [2, 2.4000000000000004, "closed_form"], [3, None, "recurrence"]]
        text = render_csv(header, rows)

        parsed_header, parsed_rows = parse_csv(text)
        again = render_csv(parsed_header, [[row[name] for name in parsed_header] for row in parsed_rows])

        assert again == text
        assert text.splitlines()[0] == "t,m2,method"

    def test_file_round_trip(self, tmp_path):
        path = tmp_path / "curve.csv"
        write_csv(str(path), ["t", "msd"], [[1, 1.0], [2, 2.5]])

        header, rows = read_csv(str(path))

        assert header == ["t", "msd"]
        assert numeric_column(rows, "msd") == [1.0, 2.5]

    def test_stdout(self, capsys):
        write_csv("-", ["t"], [[1]])

        assert capsys.readouterr().out == "t\n1\n"


class TestParseErrors:
    """CSV 형식 오류 테스트"""

    def test_empty(self):
        with pytest.raises(CsvFormatError):
            parse_csv("")

    def test_ragged_row(self):
        with pytest.raises(CsvFormatError):
            parse_csv("t,m2\n1,1.0,extra\n")

    def test_non_numeric_column(self):
        _, rows = parse_csv("t,m2\n1,abc\n")

        with pytest.raises(CsvFormatError):
            numeric_column(rows, "m2")

    def test_missing_file(self, tmp_path):
        with pytest.raises(CsvFormatError):
            read_csv(str(tmp_path / "missing.csv"))
