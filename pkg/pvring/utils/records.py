"""
Flat key-value report format.

One ``key = value`` pair per line, keys dotted (``level.2.elimination_ok``),
values single-line strings. The order of records is the order they were
produced, so output is deterministic whenever the producer is.
"""

from typing import Iterable, List, Tuple

Record = Tuple[str, str]


def format_records(records: Iterable[Record]) -> str:
    """
    Render records as text.

    Args:
        records: (key, value) pairs

    Returns:
        Text with one ``key = value`` line per record and a trailing newline
    """
    lines = []
    for key, value in records:
        if "\n" in value:
            raise ValueError(f"record {key!r} spans several lines")
        lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"


def parse_records(text: str) -> List[Record]:
    """
    Parse text produced by :func:`format_records`.

    Args:
        text: Record text

    Returns:
        (key, value) pairs in file order
    """
    records = []
    for line in text.splitlines():
        if not line.strip():
            continue
        key, sep, value = line.partition(" = ")
        if not sep:
            raise ValueError(f"malformed record line: {line!r}")
        records.append((key, value))
    return records
