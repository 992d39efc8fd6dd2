"""HTTP API over one store file.

Thin adapter: every endpoint parses, calls the same functions the CLI uses,
persists, and serializes. Domain objects stay dataclasses; payloads are plain
dicts so the wire schema is explicit in one place. Writes serialize through a
lock and are saved to disk before the response returns.
"""

from __future__ import annotations

import re
import threading
from dataclasses import replace
from datetime import date
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import analytics, planning
from .errors import (
    DomainRuleViolation,
    IntegrityError,
    SchemaError,
    UnknownId,
    VersionConflict,
)
from .identification import (
    Classification,
    MatrixAnswer,
    Stakeholder,
    classify,
    lint_component,
    lint_prevention,
)
from .model import (
    SCHEMA_VERSION,
    FrequencyLevel,
    InterestLevel,
    IssueType,
    PriorityMethod,
    TDItem,
    path_is_within,
)
from .prioritization import item_burden, prioritize, roi_months
from .store import (
    Store,
    config_to_dict,
    item_from_dict,
    item_to_dict,
    load,
    parse_item_changes,
    result_to_dict,
    save,
)

_METHOD_NAMES = {
    "roi": PriorityMethod.ROI,
    "mean": PriorityMethod.MeanValue,
    "guess": PriorityMethod.EducatedGuess,
}


def _error_response(status: int, code: str, message: str, field: str | None):
    return JSONResponse(
        status_code=status,
        content={
            "error": {
                "status": status,
                "code": code,
                "message": message,
                "field": field,
            }
        },
    )


def _parse_month(value: str, field_name: str) -> tuple[int, int]:
    match = re.fullmatch(r"(\d{4})-(\d{2})", value)
    if not match or not 1 <= int(match.group(2)) <= 12:
        raise SchemaError(f"{field_name} must be YYYY-MM, got {value!r}", field=field_name)
    return int(match.group(1)), int(match.group(2))


def _parse_iso_date(value: str | None, field_name: str) -> date | None:
    if value is None:
        return None
    try:
        return date.fromisoformat(value)
    except ValueError:
        raise SchemaError(f"invalid date {value!r}", field=field_name) from None


def _item_payload(store: Store, item: TDItem) -> dict:
    payload = item_to_dict(item)
    payload["version"] = store.versions.get(item.id, 1)
    mapping = store.config.mapping()
    payload["interest_burden"] = item_burden(item, mapping)
    # the dashboard displays ROI but never computes it, so ship it precomputed
    payload["roi_months"] = (
        roi_months(item.effort_pd, item.interest, item.interest_frequency, mapping)
        if item.effort_pd is not None
        and item.interest is not None
        and item.interest_frequency is not None
        else None
    )
    return payload


def _require(body: dict, key: str):
    if key not in body or body[key] is None:
        raise SchemaError(f"{key} is required", field=key)
    return body[key]


def create_app(store_path: str | Path, ui_dir: str | Path | None = None) -> FastAPI:
    """Build the API app bound to one store file."""
    app = FastAPI(title="tdkit", docs_url=None, redoc_url=None, openapi_url=None)
    path = Path(store_path)
    state = {"store": load(path)}
    write_lock = threading.Lock()

    def store() -> Store:
        return state["store"]

    def persist():
        save(store(), path)

    @app.exception_handler(UnknownId)
    def _unknown_id(_req: Request, exc: UnknownId):
        return _error_response(404, "unknown_id", str(exc), exc.item_id)

    @app.exception_handler(VersionConflict)
    def _version_conflict(_req: Request, exc: VersionConflict):
        return _error_response(409, "version_conflict", str(exc), "version")

    @app.exception_handler(IntegrityError)
    def _integrity(_req: Request, exc: IntegrityError):
        return _error_response(409, "conflict", str(exc), "id")

    @app.exception_handler(DomainRuleViolation)
    def _domain_rule(_req: Request, exc: DomainRuleViolation):
        return _error_response(422, "domain_rule", str(exc), exc.field)

    @app.exception_handler(SchemaError)
    def _schema(_req: Request, exc: SchemaError):
        return _error_response(400, "validation", str(exc), exc.field)

    @app.exception_handler(RequestValidationError)
    def _request_validation(_req: Request, exc: RequestValidationError):
        first = exc.errors()[0]
        field = ".".join(str(part) for part in first.get("loc", ()))
        return _error_response(400, "validation", first.get("msg", "invalid request"), field)

    @app.get("/items")
    def list_items(
        effort: float | None = None,
        priority: int | None = None,
        component: str | None = None,
        qa: str | None = None,
        open: bool | None = None,
    ):
        items = store().items_by_id()
        if effort is not None:
            items = [it for it in items if it.effort_sp == effort]
        if priority is not None:
            items = [it for it in items if it.priority == priority]
        if component is not None:
            items = [
                it
                for it in items
                if it.component_path is not None
                and path_is_within(it.component_path, component)
            ]
        if qa is not None:
            items = [it for it in items if any(a.name == qa for a in it.quality_attributes)]
        if open is not None:
            items = [it for it in items if it.is_open == open]
        return {"items": [_item_payload(store(), it) for it in items]}

    @app.post("/items", status_code=201)
    def create_item(body: dict):
        item = item_from_dict(body)
        with write_lock:
            store().add_item(item)
            persist()
        return {"item": _item_payload(store(), item)}

    @app.get("/items/{item_id}")
    def get_item(item_id: str):
        item = store().td_items.get(item_id)
        if item is None:
            raise UnknownId("item", item_id)
        return {"item": _item_payload(store(), item)}

    @app.patch("/items/{item_id}")
    def patch_item(item_id: str, body: dict):
        version = _require(body, "version")
        if not isinstance(version, int) or isinstance(version, bool):
            raise SchemaError("version must be an integer", field="version")
        changes = parse_item_changes(
            {k: v for k, v in body.items() if k != "version"}
        )
        with write_lock:
            item = store().update_item(item_id, changes, expected_version=version)
            persist()
        return {"item": _item_payload(store(), item)}

    @app.post("/items/{item_id}/prioritize")
    def prioritize_item(item_id: str, body: dict):
        item = store().td_items.get(item_id)
        if item is None:
            raise UnknownId("item", item_id)
        method_name = str(_require(body, "method")).lower()
        if method_name not in _METHOD_NAMES:
            raise SchemaError(
                f"method must be one of {sorted(_METHOD_NAMES)}", field="method"
            )
        guess = body.get("value")
        if guess is not None and (isinstance(guess, bool) or not isinstance(guess, int)):
            raise SchemaError("value must be an integer", field="value")
        persist_result = body.get("persist", True)
        if not isinstance(persist_result, bool):
            raise SchemaError("persist must be a boolean", field="persist")
        overrides = body.get("overrides", {})
        if not isinstance(overrides, dict):
            raise SchemaError("overrides must be an object", field="overrides")
        if overrides:
            item = replace(item, **parse_item_changes(overrides))
        cfg = store().config
        result = prioritize(
            item,
            _METHOD_NAMES[method_name],
            mapping=cfg.mapping(),
            computed_on=_parse_iso_date(body.get("computed_on"), "computed_on"),
            guess=guess,
            bands=cfg.roi_bands,
        )
        if not persist_result:
            # previews carry the burden too: the form displays it live and
            # must not recompute it client-side
            return {
                "result": result_to_dict(result),
                "persisted": False,
                "interest_burden": item_burden(item, cfg.mapping()),
            }
        with write_lock:
            updated = store().record_prioritization(result)
            persist()
        return {
            "result": result_to_dict(result),
            "item": _item_payload(store(), updated),
            "persisted": True,
        }

    @app.get("/due")
    def due(today: str | None = None):
        reference = _parse_iso_date(today, "today") or date.today()
        items = store().items_by_id()
        return {
            "today": reference.isoformat(),
            "due": [_item_payload(store(), it) for it in planning.due_items(items, reference)],
            "undated": [_item_payload(store(), it) for it in planning.undated_open(items)],
        }

    @app.get("/analytics/lhf")
    def analytics_lhf():
        items = store().items_by_id()
        points = analytics.lhf_scatter(items)
        return {
            "points": [
                {
                    "effort_sp": pt.effort_sp,
                    "priority": pt.priority,
                    "count": pt.count,
                    "item_ids": list(pt.item_ids),
                }
                for pt in points
            ],
            "excluded": analytics.scatter_excluded(items),
        }

    @app.get("/analytics/components")
    def analytics_components(depth: int = 1):
        counts = analytics.by_component(store().items_by_id(), depth=depth)
        return {"depth": depth, "counts": counts}

    @app.get("/analytics/quality-attributes")
    def analytics_quality_attributes():
        return {"counts": analytics.by_quality_attribute(store().items_by_id())}

    @app.get("/analytics/series")
    def analytics_series(request: Request):
        params = request.query_params
        start = _parse_month(_require(dict(params), "from"), "from")
        end = _parse_month(_require(dict(params), "to"), "to")
        series = analytics.monthly_series(
            store().items_by_id(), start, end, mapping=store().config.mapping()
        )
        return {
            "months": [f"{y:04d}-{m:02d}" for y, m in series.months],
            "opened": list(series.opened),
            "closed": list(series.closed),
            "open_at_end": list(series.open_at_end),
            "burden_min_per_month": list(series.burden_min_per_month),
        }

    @app.post("/plan")
    def plan(body: dict):
        cfg = store().config
        capacity = body.get("capacity_sp", cfg.capacity_sp)
        quota = body.get("quota_fraction", cfg.quota_fraction)
        if capacity is None:
            raise SchemaError("capacity_sp is required", field="capacity_sp")
        if quota is None:
            raise SchemaError("quota_fraction is required", field="quota_fraction")
        sprint = planning.plan_quota_sprint(store().items_by_id(), capacity, quota)
        return {
            "capacity_sp": sprint.capacity_sp,
            "quota_fraction": sprint.quota_fraction,
            "td_budget_sp": sprint.td_budget_sp,
            "selected": [
                {"item_id": item_id, "effort_sp": effort}
                for item_id, effort in sprint.selected
            ],
            "spent_sp": sprint.spent_sp,
        }

    @app.post("/classify")
    def classify_answer(body: dict):
        def stakeholders(key: str) -> frozenset[Stakeholder]:
            raw = body.get(key, [])
            if not isinstance(raw, list):
                raise SchemaError(f"{key} must be a list", field=key)
            out = set()
            for name in raw:
                try:
                    out.add(Stakeholder[name])
                except KeyError:
                    raise SchemaError(
                        f"unknown stakeholder {name!r}", field=key
                    ) from None
            return frozenset(out)

        try:
            answer = MatrixAnswer(
                wants_fix=stakeholders("wants_fix"),
                pays_for_fix=stakeholders("pays_for_fix"),
                causes_team_extra_work=bool(body.get("causes_team_extra_work", False)),
                pain_only=bool(body.get("pain_only", False)),
            )
        except ValueError as exc:
            raise SchemaError(str(exc), field="wants_fix") from None
        verdict: Classification = classify(answer)
        return {"verdict": verdict.verdict.name, "rationale": verdict.rationale}

    @app.get("/lint")
    def lint(today: str | None = None):
        reference = _parse_iso_date(today, "today") or date.today()
        current = store()
        prevention = []
        for issue in current.issues_by_id():
            if issue.issue_type is IssueType.TechnicalDebt:
                continue
            findings = lint_prevention(issue)
            if findings:
                prevention.append({"issue_id": issue.id, "findings": findings})
        component_warnings = []
        for node in current.components:
            finding = lint_component(node.name, functional_change_possible=True)
            component_warnings.extend(f"{node.name}: {w}" for w in finding.warnings)
        _, link_errors = planning.polluter_followups(
            current.issues_by_id(), current.items_by_id()
        )
        return {
            "prevention": prevention,
            "resubmission": planning.lint_resubmission(current.items_by_id(), reference),
            "components": component_warnings,
            "link_errors": link_errors,
        }

    @app.get("/config")
    def get_config():
        cfg = store().config
        mapping = cfg.mapping()
        return {
            "schema_version": SCHEMA_VERSION,
            "config": config_to_dict(cfg),
            "frequency_mapping": {
                "profile": mapping.profile,
                "interest_minutes": {
                    level.name: mapping.interest_minutes[level] for level in InterestLevel
                },
                "per_month": {
                    level.name: mapping.per_month[level] for level in FrequencyLevel
                },
                "pd_minutes": mapping.pd_minutes,
            },
            "interest_labels": {level.name: level.label for level in InterestLevel},
            "frequency_labels": {level.name: level.label for level in FrequencyLevel},
        }

    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
