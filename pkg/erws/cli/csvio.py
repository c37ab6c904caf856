"""
CSV 입출력

실수는 유효숫자 17자리('.17g')로 써서 64비트 부동소수점이 왕복 보존되고,
읽은 값을 다시 쓰면 바이트 단위로 같은 파일이 됩니다. 줄 끝은 '\\n'입니다.
"""

import csv
import io
import math
import sys
from contextlib import contextmanager
from typing import IO, Any, Dict, Iterable, Iterator, List, Sequence, Tuple

from erws.errors import CsvFormatError


def format_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def parse_value(text: str) -> Any:
    """빈 칸 -> None, 정수 -> int, 실수 -> float, 그 외 문자열"""
    if text == "":
        return None
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


@contextmanager
def open_output(path: str) -> Iterator[IO[str]]:
    """'-'이면 stdout, 아니면 파일"""
    if path == "-":
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        yield handle


def write_rows(stream: IO[str], header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(value) for value in row])


def write_csv(path: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    with open_output(path) as stream:
        write_rows(stream, header, rows)


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    write_rows(buffer, header, rows)
    return buffer.getvalue()


def parse_csv(text: str) -> Tuple[List[str], List[Dict[str, Any]]]:
    """
    CSV 텍스트 파싱

    Raises:
        CsvFormatError: 헤더가 없거나 열 개수가 맞지 않을 때
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise CsvFormatError("empty CSV input")
    if not header or any(not name for name in header):
        raise CsvFormatError("CSV header has empty column names")

    rows = []
    for line_number, cells in enumerate(reader, start=2):
        if not cells:
            continue
        if len(cells) != len(header):
            raise CsvFormatError(
                f"line {line_number}: expected {len(header)} cells, got {len(cells)}"
            )
        rows.append(dict(zip(header, (parse_value(cell) for cell in cells))))
    return header, rows


def read_csv(path: str) -> Tuple[List[str], List[Dict[str, Any]]]:
    try:
        with open(path, "r", encoding="utf-8", newline="") as handle:
            return parse_csv(handle.read())
    except OSError as e:
        raise CsvFormatError(f"cannot read {path}: {e}")


def numeric_column(rows: List[Dict[str, Any]], name: str) -> List[float]:
    """
    숫자 열 추출

    Raises:
        CsvFormatError: 값이 숫자가 아니거나 유한하지 않을 때
    """
    values = []
    for index, row in enumerate(rows):
        value = row.get(name)
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise CsvFormatError(f"row {index + 1}: column '{name}' is not numeric")
        if not math.isfinite(value):
            raise CsvFormatError(f"row {index + 1}: column '{name}' is not finite")
        values.append(float(value))
    return values
