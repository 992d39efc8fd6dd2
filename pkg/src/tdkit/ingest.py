"""Importing tracker exports into issues through a field-mapping config.

Supports delimited tables (comma/semicolon/tab, autodetected or explicit) and
record-structured exports (JSON array or JSON lines). The import is strictly
deterministic: the same file and mapping always produce the same issues in the
same order and a byte-identical report.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass, field
from datetime import date, datetime
from pathlib import Path
from typing import Any, ClassVar, Mapping

from .errors import SchemaError
from .model import GenericIssue, IssueType

#: GenericIssue fields that a mapping may bind to a source column or key.
BINDABLE_FIELDS = frozenset(
    {
        "id",
        "title",
        "opened_on",
        "closed_on",
        "description",
        "labels",
        "issue_type",
        "talked_about_td",
        "is_td_repayment",
        "creates_td",
        "quality_attributes_discussed",
        "drawbacks",
        "risks",
        "alternatives",
        "linked_td_ids",
    }
)


@dataclass(frozen=True)
class ImportMapping:
    """How to read one tracker's export format."""

    bindings: Mapping[str, str]
    date_format: str = "year-month-day"
    delimiter: str | None = None
    label_separator: str = ";"
    td_label_values: tuple[str, ...] = ("TD", "TS")
    non_td_label_values: tuple[str, ...] = ("Non-TD", "Non-TS")
    td_label: str = "TD"
    non_td_label: str = "Non-TD"
    opened_after: date | None = None

    def __post_init__(self):
        for required in ("id", "title"):
            if required not in self.bindings:
                raise SchemaError(f"{required} binding is required", field=required)
        for name in self.bindings:
            if name not in BINDABLE_FIELDS:
                raise SchemaError(f"unknown binding {name}", field=name)
        if not re.fullmatch(r"(day|month|year)(\D+(day|month|year)){2}", self.date_format):
            raise SchemaError(
                f"date_format {self.date_format!r} must name day, month, and year",
                field="date_format",
            )

    @property
    def strptime_format(self) -> str:
        return (
            self.date_format.replace("year", "%Y")
            .replace("month", "%m")
            .replace("day", "%d")
        )


def mapping_from_file(path: str | Path) -> ImportMapping:
    """Read an ImportMapping from its JSON config file."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"mapping file is not valid JSON: {exc}") from None
    if not isinstance(data, dict) or not isinstance(data.get("fields"), dict):
        raise SchemaError("mapping file must contain a 'fields' object", field="fields")
    known = {
        "fields",
        "date_format",
        "delimiter",
        "label_separator",
        "td_label_values",
        "non_td_label_values",
        "td_label",
        "non_td_label",
        "opened_after",
    }
    for key in data:
        if key not in known:
            raise SchemaError(f"unknown mapping option {key}", field=key)
    opened_after = None
    if data.get("opened_after") is not None:
        try:
            opened_after = date.fromisoformat(data["opened_after"])
        except (TypeError, ValueError):
            raise SchemaError(
                f"invalid opened_after date {data['opened_after']!r}",
                field="opened_after",
            ) from None
    return ImportMapping(
        bindings=dict(data["fields"]),
        date_format=data.get("date_format", "year-month-day"),
        delimiter=data.get("delimiter"),
        label_separator=data.get("label_separator", ";"),
        td_label_values=tuple(data.get("td_label_values", ("TD", "TS"))),
        non_td_label_values=tuple(data.get("non_td_label_values", ("Non-TD", "Non-TS"))),
        td_label=data.get("td_label", "TD"),
        non_td_label=data.get("non_td_label", "Non-TD"),
        opened_after=opened_after,
    )


@dataclass(frozen=True)
class SkippedRow:
    number: int
    reason: str


@dataclass(frozen=True)
class ImportReport:
    total_rows: int
    imported: int
    skipped: tuple[SkippedRow, ...]

    def to_text(self) -> str:
        lines = [
            "import report",
            f"rows: {self.total_rows}",
            f"imported: {self.imported}",
            f"skipped: {len(self.skipped)}",
        ]
        lines.extend(f"  row {s.number}: {s.reason}" for s in self.skipped)
        return "\n".join(lines) + "\n"


_ISSUE_TYPE_ALIASES = {
    "story": IssueType.Functional,
    "feature": IssueType.Functional,
    "functional": IssueType.Functional,
    "bug": IssueType.Bug,
    "defect": IssueType.Bug,
    "epic": IssueType.Epic,
    "technical debt": IssueType.TechnicalDebt,
    "technicaldebt": IssueType.TechnicalDebt,
    "td": IssueType.TechnicalDebt,
}


def _parse_issue_type(raw: str) -> IssueType:
    return _ISSUE_TYPE_ALIASES.get(raw.strip().lower(), IssueType.Other)


def _parse_bool(raw: str) -> bool | None:
    value = raw.strip().lower()
    if value in ("true", "yes", "1", "x"):
        return True
    if value in ("false", "no", "0"):
        return False
    return None


def _as_text(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    return json.dumps(value, ensure_ascii=False, sort_keys=True)


def _split_list(value: Any, separator: str) -> list[str]:
    if isinstance(value, list):
        return [str(v).strip() for v in value if str(v).strip()]
    return [part.strip() for part in _as_text(value).split(separator) if part.strip()]


def _detect_delimiter(header_line: str) -> str:
    candidates = [",", ";", "\t"]
    counts = [header_line.count(c) for c in candidates]
    return candidates[counts.index(max(counts))]


def _read_records(text: str, path_name: str) -> list[dict[str, Any]]:
    stripped = text.lstrip()
    if stripped.startswith("["):
        data = json.loads(text)
        if not isinstance(data, list):
            raise SchemaError(f"{path_name}: expected an array of records")
        return [dict(rec) for rec in data]
    records = []
    for line in text.splitlines():
        if line.strip():
            records.append(dict(json.loads(line)))
    return records


def import_issues(
    path: str | Path, mapping: ImportMapping
) -> tuple[list[GenericIssue], ImportReport]:
    """Read one export file into GenericIssues plus a skip-accounting report.

    Rows missing mandatory values, with unparseable dates, duplicating an
    earlier id, or older than the opened-after cutoff are skipped with a
    per-row reason; nothing is ever silently dropped.
    """
    source = Path(path)
    text = source.read_text(encoding="utf-8")
    stripped = text.lstrip()
    if source.suffix in (".json", ".jsonl") or stripped[:1] in ("[", "{"):
        try:
            rows = _read_records(text, source.name)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{source.name}: not valid JSON records: {exc}") from None
        first_row_number = 1
    else:
        if not stripped:
            return [], ImportReport(0, 0, ())
        delimiter = mapping.delimiter or _detect_delimiter(text.splitlines()[0])
        reader = csv.DictReader(io.StringIO(text), delimiter=delimiter)
        rows = [dict(row) for row in reader]
        first_row_number = 2

    def bound(row: dict[str, Any], name: str) -> Any:
        column = mapping.bindings.get(name)
        return row.get(column) if column is not None else None

    issues: list[GenericIssue] = []
    skipped: list[SkippedRow] = []
    seen_ids: set[str] = set()
    bound_columns = set(mapping.bindings.values())
    for offset, row in enumerate(rows):
        number = first_row_number + offset

        def skip(reason: str):
            skipped.append(SkippedRow(number, reason))

        issue_id = _as_text(bound(row, "id")).strip()
        if not issue_id:
            skip("missing id")
            continue
        if issue_id in seen_ids:
            skip(f"duplicate id {issue_id}")
            continue
        title = _as_text(bound(row, "title")).strip()
        if not title:
            skip("missing title")
            continue

        def parse_date_field(name: str) -> date | None:
            raw = _as_text(bound(row, name)).strip()
            if not raw:
                return None
            return datetime.strptime(raw, mapping.strptime_format).date()

        try:
            opened_on = parse_date_field("opened_on")
        except ValueError:
            skip(f"invalid date {_as_text(bound(row, 'opened_on')).strip()!r} for opened_on")
            continue
        if opened_on is None:
            opened_on = date(1970, 1, 1)
        try:
            closed_on = parse_date_field("closed_on")
        except ValueError:
            skip(f"invalid date {_as_text(bound(row, 'closed_on')).strip()!r} for closed_on")
            continue
        if mapping.opened_after is not None and opened_on <= mapping.opened_after:
            skip(f"opened on or before {mapping.opened_after.isoformat()}")
            continue

        labels = set()
        for label in _split_list(bound(row, "labels"), mapping.label_separator):
            if label.lower() in (v.lower() for v in mapping.td_label_values):
                labels.add(mapping.td_label)
            elif label.lower() in (v.lower() for v in mapping.non_td_label_values):
                labels.add(mapping.non_td_label)
            else:
                labels.add(label)

        extras = {
            str(column): _as_text(value)
            for column, value in sorted(row.items(), key=lambda kv: str(kv[0]))
            if column not in bound_columns and value is not None
        }
        issues.append(
            GenericIssue(
                id=issue_id,
                title=title,
                opened_on=opened_on,
                closed_on=closed_on,
                description=_as_text(bound(row, "description")),
                issue_type=_parse_issue_type(_as_text(bound(row, "issue_type"))),
                labels=frozenset(labels),
                talked_about_td=_parse_bool(_as_text(bound(row, "talked_about_td")))
                or False,
                is_td_repayment=_parse_bool(_as_text(bound(row, "is_td_repayment"))),
                creates_td=_parse_bool(_as_text(bound(row, "creates_td"))),
                quality_attributes_discussed=(
                    _as_text(bound(row, "quality_attributes_discussed")).strip() or None
                ),
                drawbacks=_as_text(bound(row, "drawbacks")).strip() or None,
                risks=_as_text(bound(row, "risks")).strip() or None,
                alternatives=_as_text(bound(row, "alternatives")).strip() or None,
                linked_td_ids=tuple(
                    _split_list(bound(row, "linked_td_ids"), mapping.label_separator)
                ),
                extras=extras,
            )
        )
        seen_ids.add(issue_id)
    report = ImportReport(len(rows), len(issues), tuple(skipped))
    return issues, report
