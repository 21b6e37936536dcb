import csv
import io
import json
from enum import Enum
from typing import Any, Iterable

import inflect
import yaml

from .schema import CountReport, GroupTag, VerificationReport

p_engine = inflect.engine()


class OutputFormat(str, Enum):
    TEXT = "text"
    CSV = "csv"
    YAML = "yaml"
    JSON = "json"


def stringify_integers(val: Any) -> Any:
    """
    Recursively replace every int (bools excepted) by its decimal string, so
    structured consumers never see a number wider than they can hold.
    """
    if isinstance(val, bool) or val is None:
        return val
    if isinstance(val, int):
        return str(val)
    if isinstance(val, Enum):
        return val.value
    if isinstance(val, dict):
        return {str(key): stringify_integers(item) for key, item in val.items()}
    if isinstance(val, (list, tuple)):
        return [stringify_integers(item) for item in val]
    return val


def dump_document(document: Any, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return json.dumps(document, indent=2)
    return yaml.safe_dump(document, sort_keys=False).rstrip("\n")


def load_document(text: str, fmt: OutputFormat) -> Any:
    if fmt == OutputFormat.JSON:
        return json.loads(text)
    return yaml.safe_load(text)


def report_document(report: CountReport) -> dict[str, Any]:
    return stringify_integers(report.dict(exclude_none=True))


def _degree_line(report: CountReport, connected: bool) -> str:
    return " ".join(str(val) for val in report.degree_vector(connected=connected))


def _report_rows(report: CountReport) -> list[list[Any]]:
    rows = []
    for row in report.per_degree:
        circulant = row.circulant.value if row.circulant is not None else ""
        rows.append([report.group_tag, row.k, row.total.value, circulant, row.connected.value])
    return rows


def render_count(
    report: CountReport,
    fmt: OutputFormat = OutputFormat.TEXT,
    connected: bool = False,
    by_degree: bool = False,
    group_tag: GroupTag | None = None,
    k: int | None = None,
) -> str:
    """
    Render a :py:class:`CountReport` for the ``count`` command.

    The text form prints exactly the requested number (or the out-degree
    vector with ``by_degree``); reports carrying a ``full_aut`` companion
    print one line per group, prefixed by its tag.  ``k`` narrows every form
    to the counts for that out-degree.
    """
    reports = [report] + ([report.full_aut] if report.full_aut is not None else [])
    if group_tag is not None:
        reports = [r for r in reports if r.group_tag == GroupTag(group_tag).value] or [report]

    if fmt == OutputFormat.TEXT:
        several = len(reports) > 1
        lines = []
        for current in reports:
            if k is not None:
                row = current.per_degree[k]
                total, connected_count = row.total.value, row.connected.value
            else:
                total, connected_count = current.total.value, current.connected.value
            if by_degree and k is None:
                line = _degree_line(current, connected)
            elif connected:
                line = str(connected_count)
            elif several:
                line = f"total {total}, connected {connected_count}"
            else:
                line = str(total)
            lines.append(f"{current.group_tag}: {line}" if several else line)
        return "\n".join(lines)

    if fmt == OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["group", "k", "total", "circulant", "connected"])
        for current in reports:
            writer.writerows(row for row in _report_rows(current) if k is None or row[1] == k)
        return buffer.getvalue().rstrip("\n")

    selected = reports[0] if len(reports) == 1 else report
    if k is not None:
        document = {"p": selected.p, "group_tag": selected.group_tag}
        document.update(selected.per_degree[k].dict(exclude_none=True))
        return dump_document(stringify_integers(document), fmt)
    return dump_document(report_document(selected), fmt)


def table_row(report: CountReport) -> tuple[int, list[int], int]:
    return report.p, report.connected_row(), report.connected.value


def render_table(reports: Iterable[CountReport], fmt: OutputFormat = OutputFormat.TEXT) -> str:
    """
    One row per prime: the connected counts for out-degrees ``2 .. 4p-1``,
    then their total.
    """
    rows = [table_row(report) for report in reports]

    if fmt == OutputFormat.TEXT:
        return "\n".join(
            f"{p} ({', '.join(str(val) for val in row)}) {total}" for p, row, total in rows
        )

    if fmt == OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["p", "connected_by_degree", "connected_total"])
        for p, row, total in rows:
            writer.writerow([p, " ".join(str(val) for val in row), total])
        return buffer.getvalue().rstrip("\n")

    document = [
        {"p": p, "connected_by_degree": row, "connected_total": total} for p, row, total in rows
    ]
    return dump_document(stringify_integers(document), fmt)


def render_verification(report: VerificationReport) -> str:
    lines = []
    for comparison in report.comparisons:
        if comparison.informational:
            status = "INFO"
        else:
            status = "PASS" if comparison.passed else "FAIL"
        if comparison.error is not None:
            lines.append(f"{status} {comparison.name}: {comparison.error}")
            continue
        lines.append(
            f"{status} {comparison.name}: expected {comparison.expected} "
            f"({comparison.expected_source}), got {comparison.actual} ({comparison.actual_source})"
        )
    lines.extend(f"note: {note}" for note in report.notes)
    failures = len(report.failures())
    checked = len(report.comparisons)
    lines.append(
        f"p={report.p}: {checked} {p_engine.plural('comparison', checked)}, "
        f"{failures} {p_engine.plural('failure', failures)}"
    )
    return "\n".join(lines)
