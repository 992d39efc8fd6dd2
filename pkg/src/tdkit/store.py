"""Persistent store for issues, TD items, components, and config.

One JSON file, canonical layout: keys sorted, items ordered by id, enums by
name, dates ISO. Equal logical stores therefore serialize to equal bytes,
which makes the file diffable and lets tests compare stores directly. Writes
go through a temp file and an atomic rename.

All mutations funnel through `Store` methods (single writer); every TD item
carries a version counter for optimistic concurrency at the API boundary.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field, fields, replace
from datetime import date
from pathlib import Path
from typing import Any, Mapping

from .errors import (
    DomainRuleViolation,
    IntegrityError,
    SchemaError,
    UnknownId,
    VersionConflict,
)
from .identification import bootstrap_tag
from .model import (
    SCHEMA_VERSION,
    ComponentNode,
    Contagion,
    DebtType,
    FrequencyLevel,
    FrequencyMapping,
    GenericIssue,
    InterestLevel,
    IssueType,
    PriorityMethod,
    QualityAttribute,
    TDItem,
    forest_contains,
    validate_item,
)
from .prioritization import ROI_PRIORITY_BANDS, PrioritizationResult


@dataclass(frozen=True)
class StoreConfig:
    """Team-level knobs persisted with the data they apply to."""

    frequency_profile: str = "default"
    roi_bands: tuple[tuple[float, int], ...] = ROI_PRIORITY_BANDS
    qa_ranking: tuple[str, ...] = ()
    quota_fraction: float | None = None
    capacity_sp: float | None = None
    td_label: str = "TD"
    non_td_label: str = "Non-TD"
    prove_benefits_roi_months: float = 3.0

    def mapping(self) -> FrequencyMapping:
        return FrequencyMapping.from_profile(self.frequency_profile)


@dataclass
class Store:
    issues: dict[str, GenericIssue] = field(default_factory=dict)
    td_items: dict[str, TDItem] = field(default_factory=dict)
    components: tuple[ComponentNode, ...] = ()
    config: StoreConfig = field(default_factory=StoreConfig)
    versions: dict[str, int] = field(default_factory=dict)
    prioritizations: tuple[PrioritizationResult, ...] = ()

    def items_by_id(self) -> list[TDItem]:
        return [self.td_items[key] for key in sorted(self.td_items)]

    def issues_by_id(self) -> list[GenericIssue]:
        return [self.issues[key] for key in sorted(self.issues)]

    def open_items(self) -> list[TDItem]:
        return [item for item in self.items_by_id() if item.is_open]

    def _check_item_refs(self, item: TDItem):
        if item.component_path is not None and not forest_contains(
            self.components, item.component_path
        ):
            raise UnknownId("component", item.component_path)
        if item.origin_issue_id is not None and item.origin_issue_id not in self.issues:
            raise UnknownId("issue", item.origin_issue_id)

    def add_issue(self, issue: GenericIssue):
        if issue.id in self.issues or issue.id in self.td_items:
            raise IntegrityError(f"id {issue.id} already exists")
        for linked_id in issue.linked_td_ids:
            if linked_id not in self.td_items:
                raise UnknownId("item", linked_id)
        self.issues[issue.id] = issue

    def add_item(self, item: TDItem):
        if item.id in self.issues or item.id in self.td_items:
            raise IntegrityError(f"id {item.id} already exists")
        violations = validate_item(item)
        if violations:
            raise DomainRuleViolation("; ".join(violations))
        self._check_item_refs(item)
        self.td_items[item.id] = item
        self.versions[item.id] = 1

    def update_item(
        self,
        item_id: str,
        changes: Mapping[str, Any],
        expected_version: int | None = None,
    ) -> TDItem:
        """Apply field changes; bumps the item's version on success."""
        current = self.td_items.get(item_id)
        if current is None:
            raise UnknownId("item", item_id)
        actual = self.versions.get(item_id, 1)
        if expected_version is not None and expected_version != actual:
            raise VersionConflict(item_id, actual, expected_version)
        if "id" in changes:
            raise DomainRuleViolation("id cannot be changed", field="id")
        known = {f.name for f in fields(TDItem)}
        for key in changes:
            if key not in known:
                raise DomainRuleViolation(f"unknown field {key}", field=key)
        updated = replace(current, **changes)
        violations = validate_item(updated)
        if violations:
            raise DomainRuleViolation("; ".join(violations))
        self._check_item_refs(updated)
        self.td_items[item_id] = updated
        self.versions[item_id] = actual + 1
        return updated

    def record_prioritization(self, result: PrioritizationResult) -> TDItem:
        """Persist a scoring run and stamp its priority onto the item."""
        if result.item_id not in self.td_items:
            raise UnknownId("item", result.item_id)
        updated = self.update_item(
            result.item_id,
            {"priority": result.priority, "priority_method": result.method},
        )
        self.prioritizations = self.prioritizations + (result,)
        return updated

    def tag_issue(self, issue_id: str, is_td: bool) -> GenericIssue:
        tagged = bootstrap_tag(
            self.issues_by_id(),
            {issue_id: is_td},
            td_label=self.config.td_label,
            non_td_label=self.config.non_td_label,
        )
        for issue in tagged:
            self.issues[issue.id] = issue
        return self.issues[issue_id]

    def set_components(self, components: tuple[ComponentNode, ...]):
        names = [node.name for node in components]
        if len(names) != len(set(names)):
            raise IntegrityError("duplicate top-level component names")
        dangling = [
            f"TD item {item.id} references unknown component {item.component_path}"
            for item in self.items_by_id()
            if item.component_path is not None
            and not forest_contains(components, item.component_path)
        ]
        if dangling:
            raise IntegrityError("; ".join(dangling))
        self.components = components

    def migrate_issue(self, issue_id: str, refinement: Mapping[str, Any]) -> TDItem:
        """Turn a TD-labeled issue into a TD item and cross-link the two.

        The source issue is kept untouched except for the new link. Rejected
        with all violations listed when the refined item would be invalid.
        """
        issue = self.issues.get(issue_id)
        if issue is None:
            raise UnknownId("issue", issue_id)
        if self.config.td_label not in issue.labels:
            raise DomainRuleViolation(
                f"issue {issue_id} is not labeled {self.config.td_label}"
            )
        item_fields: dict[str, Any] = {
            "id": refinement.get("id", f"TD-{issue.id}"),
            "title": issue.title,
            "description": issue.description,
            "opened_on": issue.opened_on,
            "origin_issue_id": issue.id,
        }
        known = {f.name for f in fields(TDItem)}
        for key, value in refinement.items():
            if key not in known:
                raise DomainRuleViolation(f"unknown field {key}", field=key)
            item_fields[key] = value
        item = TDItem(**item_fields)
        violations = validate_item(item)
        if violations:
            raise DomainRuleViolation("migration rejected: " + "; ".join(violations))
        self.add_item(item)
        self.issues[issue_id] = replace(
            issue, linked_td_ids=issue.linked_td_ids + (item.id,)
        )
        return item


def integrity_check(store: Store) -> list[str]:
    """Every cross-reference must resolve; returns all violations by name."""
    problems = []
    names = [node.name for node in store.components]
    if len(names) != len(set(names)):
        problems.append("duplicate top-level component names")
    for shared in sorted(set(store.issues) & set(store.td_items)):
        problems.append(f"id {shared} used by both an issue and a TD item")
    for issue_id in sorted(store.issues):
        for linked_id in store.issues[issue_id].linked_td_ids:
            if linked_id not in store.td_items:
                problems.append(f"issue {issue_id} links unknown TD item {linked_id}")
    for item_id in sorted(store.td_items):
        item = store.td_items[item_id]
        if item.origin_issue_id is not None and item.origin_issue_id not in store.issues:
            problems.append(
                f"TD item {item_id} references unknown origin issue {item.origin_issue_id}"
            )
        if item.component_path is not None and not forest_contains(
            store.components, item.component_path
        ):
            problems.append(
                f"TD item {item_id} references unknown component {item.component_path}"
            )
        if item_id not in store.versions:
            problems.append(f"TD item {item_id} has no version entry")
    for version_id in sorted(store.versions):
        if version_id not in store.td_items:
            problems.append(f"version entry for unknown TD item {version_id}")
    for result in store.prioritizations:
        if result.item_id not in store.td_items:
            problems.append(
                f"prioritization references unknown TD item {result.item_id}"
            )
    return problems


def _parse_date(value, field_name: str, required: bool = False) -> date | None:
    if value is None:
        if required:
            raise SchemaError(f"{field_name} is required", field=field_name)
        return None
    try:
        return date.fromisoformat(value)
    except (TypeError, ValueError):
        raise SchemaError(f"invalid date {value!r}", field=field_name) from None


def _parse_enum(enum_cls, value, field_name: str):
    if value is None:
        return None
    try:
        return enum_cls[value]
    except KeyError:
        raise SchemaError(
            f"unknown {enum_cls.__name__} {value!r}", field=field_name
        ) from None


def _parse_str_tuple(value, field_name: str) -> tuple[str, ...]:
    if not isinstance(value, list) or any(not isinstance(v, str) for v in value):
        raise SchemaError(f"{field_name} must be a list of strings", field=field_name)
    return tuple(value)


_ITEM_ENUM_FIELDS = {
    "contagion": Contagion,
    "interest": InterestLevel,
    "interest_frequency": FrequencyLevel,
    "priority_method": PriorityMethod,
    "debt_type": DebtType,
}


def parse_item_field(name: str, value):
    """Convert one wire-format item field (JSON types) to its domain type."""
    if name in ("id", "title"):
        if not isinstance(value, str) or not value:
            raise SchemaError(f"{name} must be a non-empty string", field=name)
        return value
    if name == "description":
        if not isinstance(value, str):
            raise SchemaError("description must be a string", field=name)
        return value
    if name in ("component_path", "origin_issue_id"):
        if value is not None and not isinstance(value, str):
            raise SchemaError(f"{name} must be a string or null", field=name)
        return value
    if name == "opened_on":
        return _parse_date(value, name, required=True)
    if name in ("closed_on", "resubmission_date"):
        return _parse_date(value, name)
    if name in ("priority", "pain_factor"):
        if value is not None and (isinstance(value, bool) or not isinstance(value, int)):
            raise SchemaError(f"{name} must be an integer", field=name)
        return value
    if name in ("effort_sp", "effort_pd"):
        if value is None:
            return None
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise SchemaError(f"{name} must be a number", field=name)
        return float(value)
    if name in _ITEM_ENUM_FIELDS:
        return _parse_enum(_ITEM_ENUM_FIELDS[name], value, name)
    if name == "quality_attributes":
        if not isinstance(value, list):
            raise SchemaError("quality_attributes must be a list", field=name)
        return frozenset(_parse_enum(QualityAttribute, v, name) for v in value)
    if name in ("risks_of_nonrepayment", "risks_of_repayment"):
        return _parse_str_tuple(value, name)
    if name == "breaking_change":
        if not isinstance(value, bool):
            raise SchemaError("breaking_change must be a boolean", field=name)
        return value
    if name == "comments":
        if not isinstance(value, list):
            raise SchemaError("comments must be a list", field=name)
        comments = []
        for entry in value:
            if not isinstance(entry, list) or len(entry) != 2 or not isinstance(entry[1], str):
                raise SchemaError(
                    "comments entries must be [date, text] pairs", field=name
                )
            comments.append((_parse_date(entry[0], name, required=True), entry[1]))
        return tuple(comments)
    raise SchemaError(f"unknown field {name}", field=name)


def parse_item_changes(data: Mapping[str, Any]) -> dict[str, Any]:
    return {name: parse_item_field(name, value) for name, value in data.items()}


def item_from_dict(data: Mapping[str, Any]) -> TDItem:
    for required in ("id", "title", "opened_on"):
        if required not in data:
            raise SchemaError(f"{required} is required", field=required)
    return TDItem(**parse_item_changes(data))


def item_to_dict(item: TDItem) -> dict[str, Any]:
    return {
        "id": item.id,
        "title": item.title,
        "description": item.description,
        "opened_on": item.opened_on.isoformat(),
        "closed_on": item.closed_on.isoformat() if item.closed_on else None,
        "risks_of_nonrepayment": list(item.risks_of_nonrepayment),
        "risks_of_repayment": list(item.risks_of_repayment),
        "effort_sp": item.effort_sp,
        "effort_pd": item.effort_pd,
        "contagion": item.contagion.name if item.contagion else None,
        "interest": item.interest.name if item.interest else None,
        "interest_frequency": (
            item.interest_frequency.name if item.interest_frequency else None
        ),
        "priority": item.priority,
        "priority_method": item.priority_method.name if item.priority_method else None,
        "resubmission_date": (
            item.resubmission_date.isoformat() if item.resubmission_date else None
        ),
        "pain_factor": item.pain_factor,
        "quality_attributes": sorted(a.name for a in item.quality_attributes),
        "breaking_change": item.breaking_change,
        "component_path": item.component_path,
        "debt_type": item.debt_type.name if item.debt_type else None,
        "origin_issue_id": item.origin_issue_id,
        "comments": [[when.isoformat(), text] for when, text in item.comments],
    }


def issue_to_dict(issue: GenericIssue) -> dict[str, Any]:
    return {
        "id": issue.id,
        "title": issue.title,
        "description": issue.description,
        "opened_on": issue.opened_on.isoformat(),
        "closed_on": issue.closed_on.isoformat() if issue.closed_on else None,
        "issue_type": issue.issue_type.name,
        "labels": sorted(issue.labels),
        "talked_about_td": issue.talked_about_td,
        "is_td_repayment": issue.is_td_repayment,
        "creates_td": issue.creates_td,
        "quality_attributes_discussed": issue.quality_attributes_discussed,
        "drawbacks": issue.drawbacks,
        "risks": issue.risks,
        "alternatives": issue.alternatives,
        "linked_td_ids": list(issue.linked_td_ids),
        "extras": dict(issue.extras),
    }


def issue_from_dict(data: Mapping[str, Any]) -> GenericIssue:
    for required in ("id", "title", "opened_on"):
        if required not in data:
            raise SchemaError(f"{required} is required", field=required)
    known = {
        "id",
        "title",
        "description",
        "opened_on",
        "closed_on",
        "issue_type",
        "labels",
        "talked_about_td",
        "is_td_repayment",
        "creates_td",
        "quality_attributes_discussed",
        "drawbacks",
        "risks",
        "alternatives",
        "linked_td_ids",
        "extras",
    }
    for key in data:
        if key not in known:
            raise SchemaError(f"unknown field {key}", field=key)
    extras = data.get("extras", {})
    if not isinstance(extras, dict):
        raise SchemaError("extras must be an object", field="extras")
    return GenericIssue(
        id=data["id"],
        title=data["title"],
        description=data.get("description", ""),
        opened_on=_parse_date(data["opened_on"], "opened_on", required=True),
        closed_on=_parse_date(data.get("closed_on"), "closed_on"),
        issue_type=_parse_enum(IssueType, data.get("issue_type", "Other"), "issue_type")
        or IssueType.Other,
        labels=frozenset(_parse_str_tuple(data.get("labels", []), "labels")),
        talked_about_td=bool(data.get("talked_about_td", False)),
        is_td_repayment=data.get("is_td_repayment"),
        creates_td=data.get("creates_td"),
        quality_attributes_discussed=data.get("quality_attributes_discussed"),
        drawbacks=data.get("drawbacks"),
        risks=data.get("risks"),
        alternatives=data.get("alternatives"),
        linked_td_ids=_parse_str_tuple(data.get("linked_td_ids", []), "linked_td_ids"),
        extras={str(k): str(v) for k, v in extras.items()},
    )


def component_to_dict(node: ComponentNode) -> dict[str, Any]:
    return {
        "name": node.name,
        "children": [component_to_dict(child) for child in node.children],
    }


def component_from_dict(data: Mapping[str, Any]) -> ComponentNode:
    name = data.get("name")
    if not isinstance(name, str) or not name:
        raise SchemaError("component name must be a non-empty string", field="name")
    if "/" in name:
        raise SchemaError(f"component name {name!r} must not contain '/'", field="name")
    children = data.get("children", [])
    if not isinstance(children, list):
        raise SchemaError("component children must be a list", field="children")
    try:
        return ComponentNode(name, tuple(component_from_dict(c) for c in children))
    except ValueError as exc:
        raise SchemaError(str(exc), field="children") from None


def config_to_dict(config: StoreConfig) -> dict[str, Any]:
    return {
        "frequency_profile": config.frequency_profile,
        "roi_bands": [[bound, priority] for bound, priority in config.roi_bands],
        "qa_ranking": list(config.qa_ranking),
        "quota_fraction": config.quota_fraction,
        "capacity_sp": config.capacity_sp,
        "td_label": config.td_label,
        "non_td_label": config.non_td_label,
        "prove_benefits_roi_months": config.prove_benefits_roi_months,
    }


def config_from_dict(data: Mapping[str, Any]) -> StoreConfig:
    known = set(config_to_dict(StoreConfig()))
    for key in data:
        if key not in known:
            raise SchemaError(f"unknown config field {key}", field=key)
    bands_raw = data.get("roi_bands")
    if bands_raw is None:
        bands = ROI_PRIORITY_BANDS
    else:
        try:
            bands = tuple((float(bound), int(priority)) for bound, priority in bands_raw)
        except (TypeError, ValueError):
            raise SchemaError(
                "roi_bands must be [bound, priority] pairs", field="roi_bands"
            ) from None
        bounds = [bound for bound, _ in bands]
        if sorted(bounds) != bounds or len(set(bounds)) != len(bounds):
            raise SchemaError(
                "roi_bands bounds must be strictly increasing", field="roi_bands"
            )
    profile = data.get("frequency_profile", "default")
    try:
        FrequencyMapping.from_profile(profile)
    except ValueError as exc:
        raise SchemaError(str(exc), field="frequency_profile") from None
    for qa in data.get("qa_ranking", []):
        _parse_enum(QualityAttribute, qa, "qa_ranking")
    return StoreConfig(
        frequency_profile=profile,
        roi_bands=bands,
        qa_ranking=tuple(data.get("qa_ranking", [])),
        quota_fraction=data.get("quota_fraction"),
        capacity_sp=data.get("capacity_sp"),
        td_label=data.get("td_label", "TD"),
        non_td_label=data.get("non_td_label", "Non-TD"),
        prove_benefits_roi_months=data.get("prove_benefits_roi_months", 3.0),
    )


def result_to_dict(result: PrioritizationResult) -> dict[str, Any]:
    return {
        "item_id": result.item_id,
        "method": result.method.name,
        "priority": result.priority,
        "roi_months": result.roi_months,
        "scores": dict(result.scores) if result.scores is not None else None,
        "computed_on": result.computed_on.isoformat() if result.computed_on else None,
    }


def result_from_dict(data: Mapping[str, Any]) -> PrioritizationResult:
    return PrioritizationResult(
        item_id=data["item_id"],
        method=_parse_enum(PriorityMethod, data["method"], "method"),
        priority=data["priority"],
        roi_months=data.get("roi_months"),
        scores=data.get("scores"),
        computed_on=_parse_date(data.get("computed_on"), "computed_on"),
    )


def dumps(store: Store) -> str:
    """Serialize to the canonical text form (stable ids, sorted keys)."""
    payload = {
        "schema_version": SCHEMA_VERSION,
        "config": config_to_dict(store.config),
        "components": [component_to_dict(node) for node in store.components],
        "issues": [issue_to_dict(issue) for issue in store.issues_by_id()],
        "td_items": [item_to_dict(item) for item in store.items_by_id()],
        "versions": dict(sorted(store.versions.items())),
        "prioritizations": [result_to_dict(r) for r in store.prioritizations],
    }
    return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def save(store: Store, path: str | Path):
    """Check integrity, then write atomically (temp file + rename)."""
    problems = integrity_check(store)
    if problems:
        raise IntegrityError("; ".join(problems))
    target = Path(path)
    handle = tempfile.NamedTemporaryFile(
        "w",
        encoding="utf-8",
        dir=target.parent,
        prefix=f".{target.name}.",
        delete=False,
    )
    try:
        with handle as fh:
            fh.write(dumps(store))
        os.replace(handle.name, target)
    except BaseException:
        os.unlink(handle.name)
        raise


def load(path: str | Path) -> Store:
    """Read and validate a store file; every dangling reference is named."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"store file is not valid JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise SchemaError("store file must contain an object")
    version = payload.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema version {version!r}")
    store = Store(
        config=config_from_dict(payload.get("config", {})),
        components=tuple(
            component_from_dict(c) for c in payload.get("components", [])
        ),
    )
    for data in payload.get("issues", []):
        issue = issue_from_dict(data)
        if issue.id in store.issues:
            raise SchemaError(f"duplicate issue id {issue.id}", field="id")
        store.issues[issue.id] = issue
    for data in payload.get("td_items", []):
        item = item_from_dict(data)
        if item.id in store.td_items:
            raise SchemaError(f"duplicate TD item id {item.id}", field="id")
        store.td_items[item.id] = item
    versions = payload.get("versions", {})
    if not isinstance(versions, dict):
        raise SchemaError("versions must be an object", field="versions")
    store.versions = {str(k): int(v) for k, v in versions.items()}
    store.prioritizations = tuple(
        result_from_dict(r) for r in payload.get("prioritizations", [])
    )
    problems = integrity_check(store)
    if problems:
        raise IntegrityError("; ".join(problems))
    return store
