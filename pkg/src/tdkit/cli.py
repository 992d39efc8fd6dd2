"""Command-line interface.

Every command is a thin adapter: load store, call the same domain functions
the HTTP API uses, save, print. Output defaults to human-readable text;
``--format records`` switches to one JSON object per line for scripting, and
that output round-trips through the importer.
"""

from __future__ import annotations

import functools
import json
from datetime import date
from pathlib import Path

import click

from . import analytics, planning
from .charts import render_chart
from .errors import TdkitError
from .identification import (
    MatrixAnswer,
    Stakeholder,
    classify,
    lint_component,
    lint_prevention,
    load_patterns,
    load_stems,
    scan_issue,
)
from .ingest import import_issues, mapping_from_file
from .model import (
    Contagion,
    DebtType,
    FrequencyLevel,
    InterestLevel,
    IssueType,
    PriorityMethod,
    QualityAttribute,
    forest_paths,
    path_is_within,
)
from .prioritization import prioritize
from .store import (
    Store,
    StoreConfig,
    component_from_dict,
    item_from_dict,
    item_to_dict,
    load,
    parse_item_changes,
    save,
)

_METHOD_NAMES = {
    "roi": PriorityMethod.ROI,
    "mean": PriorityMethod.MeanValue,
    "guess": PriorityMethod.EducatedGuess,
}


def _adapt_errors(fn):
    """Translate domain errors into clean nonzero exits on standard error."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except TdkitError as exc:
            raise click.ClickException(str(exc)) from exc
        except FileNotFoundError as exc:
            raise click.ClickException(str(exc)) from exc

    return wrapper


def _load_store(store_path: Path) -> Store:
    if not store_path.exists():
        raise click.ClickException(
            f"store not found: {store_path} (run 'tdkit init' first)"
        )
    return load(store_path)


def _parse_day(value: str | None, name: str) -> date | None:
    if value is None:
        return None
    try:
        return date.fromisoformat(value)
    except ValueError:
        raise click.ClickException(f"invalid {name} date {value!r}") from None


def _parse_month_flag(value: str, name: str) -> tuple[int, int]:
    parts = value.split("-")
    if len(parts) == 2 and parts[0].isdigit() and parts[1].isdigit():
        year, month = int(parts[0]), int(parts[1])
        if 1 <= month <= 12:
            return year, month
    raise click.ClickException(f"invalid {name} month {value!r}, expected YYYY-MM")


def _attribute_options(fn):
    """Shared TD item attribute flags for add/edit/migrate."""
    options = [
        click.option("--title", default=None, help="Item title."),
        click.option("--description", default=None),
        click.option(
            "--interest",
            type=click.Choice([level.name for level in InterestLevel]),
            default=None,
            help="Extra effort per occurrence.",
        ),
        click.option(
            "--frequency",
            "interest_frequency",
            type=click.Choice([level.name for level in FrequencyLevel]),
            default=None,
            help="How often the interest is paid.",
        ),
        click.option("--effort-sp", type=float, default=None),
        click.option("--effort-pd", type=float, default=None),
        click.option("--pain", "pain_factor", type=int, default=None),
        click.option(
            "--contagion",
            type=click.Choice([c.name for c in Contagion]),
            default=None,
        ),
        click.option("--priority", type=int, default=None),
        click.option("--resubmission", "resubmission_date", default=None),
        click.option("--component", "component_path", default=None),
        click.option(
            "--debt-type",
            type=click.Choice([d.name for d in DebtType]),
            default=None,
        ),
        click.option(
            "--qa",
            "quality_attributes",
            multiple=True,
            type=click.Choice([qa.name for qa in QualityAttribute]),
        ),
        click.option(
            "--breaking-change/--no-breaking-change",
            "breaking_change",
            default=None,
        ),
        click.option("--closed-on", default=None),
        click.option(
            "--comment",
            "comments",
            multiple=True,
            help="DATE:TEXT, may repeat.",
        ),
        click.option(
            "--risk-nonrepayment",
            "risks_of_nonrepayment",
            multiple=True,
        ),
        click.option("--risk-repayment", "risks_of_repayment", multiple=True),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def _collect_attributes(values: dict) -> dict:
    """Turn provided attribute flags into wire-format field values."""
    wire: dict = {}
    for name, value in values.items():
        if value is None or value == ():
            continue
        if name == "comments":
            entries = []
            for raw in value:
                day, sep, text = raw.partition(":")
                if not sep:
                    raise click.ClickException(
                        f"comment {raw!r} must look like DATE:TEXT"
                    )
                entries.append([day, text])
            wire[name] = entries
        elif name == "quality_attributes":
            wire[name] = list(value)
        elif name in ("risks_of_nonrepayment", "risks_of_repayment"):
            wire[name] = list(value)
        else:
            wire[name] = value
    return wire


def _item_line(item) -> str:
    parts = [item.id]
    parts.append(f"p{item.priority}" if item.priority is not None else "p?")
    parts.append(f"{item.effort_sp:g}sp" if item.effort_sp is not None else "?sp")
    if not item.is_open:
        parts.append("closed")
    parts.append(item.title)
    return "  ".join(parts)


def _emit_record(payload: dict):
    click.echo(json.dumps(payload, ensure_ascii=False, sort_keys=True))


@click.group()
@click.option(
    "--store",
    "store_path",
    envvar="TDKIT_STORE",
    default="td-store.json",
    show_default=True,
    type=click.Path(path_type=Path),
    help="Path to the store file (or set TDKIT_STORE).",
)
@click.pass_context
def main(ctx, store_path: Path):
    """Identify, document, prioritize, plan, and monitor technical debt."""
    ctx.obj = store_path


@main.command()
@click.option(
    "--profile",
    type=click.Choice(["default", "calendar"]),
    default="default",
    show_default=True,
    help="Frequency-to-rate profile.",
)
@click.option("--quota", type=float, default=None, help="Default sprint quota fraction.")
@click.option("--capacity", type=float, default=None, help="Default sprint capacity in SP.")
@click.option("--force", is_flag=True, help="Overwrite an existing store file.")
@click.pass_obj
@_adapt_errors
def init(store_path: Path, profile: str, quota: float | None, capacity: float | None, force: bool):
    """Create an empty store with default config."""
    if store_path.exists() and not force:
        raise click.ClickException(f"{store_path} already exists (use --force)")
    config = StoreConfig(
        frequency_profile=profile, quota_fraction=quota, capacity_sp=capacity
    )
    save(Store(config=config), store_path)
    click.echo(f"initialized empty store at {store_path}")


@main.command("import")
@click.argument("file", type=click.Path(exists=True, path_type=Path))
@click.option(
    "--mapping",
    "mapping_path",
    required=True,
    type=click.Path(exists=True, path_type=Path),
    help="Field-mapping config file.",
)
@click.pass_obj
@_adapt_errors
def import_(store_path: Path, file: Path, mapping_path: Path):
    """Import a tracker export into the store."""
    store = _load_store(store_path)
    issues, report = import_issues(file, mapping_from_file(mapping_path))
    added = 0
    for issue in issues:
        if issue.id in store.issues or issue.id in store.td_items:
            click.echo(f"skipping {issue.id}: already in store")
            continue
        store.add_issue(issue)
        added += 1
    save(store, store_path)
    click.echo(report.to_text(), nl=False)
    click.echo(f"added to store: {added}")


@main.command()
@click.option("--format", "fmt", type=click.Choice(["text", "records"]), default="text")
@click.option(
    "--phrasebook",
    type=click.Path(exists=True, path_type=Path),
    default=None,
    help="Custom phrase patterns, one per line.",
)
@click.option(
    "--stems",
    type=click.Path(exists=True, path_type=Path),
    default=None,
    help="Custom indicator stems, one 'stem = label' per line.",
)
@click.pass_obj
@_adapt_errors
def scan(store_path: Path, fmt: str, phrasebook: Path | None, stems: Path | None):
    """Scan untagged issues for TD indicators."""
    store = _load_store(store_path)
    phrases = load_patterns(phrasebook) if phrasebook else None
    stem_table = load_stems(stems) if stems else None
    tags = {store.config.td_label, store.config.non_td_label}
    hits = 0
    for issue in store.issues_by_id():
        if issue.labels & tags or issue.issue_type is IssueType.TechnicalDebt:
            continue
        hit = scan_issue(issue, stems=stem_table, phrasebook=phrases)
        if hit is None:
            continue
        hits += 1
        if fmt == "records":
            _emit_record(
                {
                    "issue_id": hit.issue_id,
                    "matched_terms": list(hit.matched_terms),
                    "matched_phrases": list(hit.matched_phrases),
                    "score": hit.score,
                }
            )
        else:
            details = []
            if hit.matched_terms:
                details.append("terms: " + ", ".join(hit.matched_terms))
            if hit.matched_phrases:
                details.append("phrases: " + ", ".join(hit.matched_phrases))
            click.echo(f"{hit.issue_id}  score {hit.score}  ({'; '.join(details)})")
    if fmt == "text" and hits == 0:
        click.echo("no indicator hits")


@main.command()
@click.argument("issue_id")
@click.argument("decision", type=click.Choice(["td", "non-td"]))
@click.pass_obj
@_adapt_errors
def tag(store_path: Path, issue_id: str, decision: str):
    """Tag one issue as TD or Non-TD (mutually exclusive labels)."""
    store = _load_store(store_path)
    issue = store.tag_issue(issue_id, decision == "td")
    save(store, store_path)
    click.echo(f"{issue.id}: labels now {', '.join(sorted(issue.labels))}")


_STAKEHOLDER_NAMES = [s.name for s in Stakeholder]


def _parse_stakeholders(raw: tuple[str, ...], prompt_text: str | None) -> frozenset[Stakeholder]:
    names: list[str] = []
    for chunk in raw:
        names.extend(part.strip() for part in chunk.split(",") if part.strip())
    if not names and prompt_text is not None:
        answer = click.prompt(prompt_text, default="", show_default=False)
        names = [part.strip() for part in answer.split(",") if part.strip()]
    out = set()
    for name in names:
        try:
            out.add(Stakeholder[name])
        except KeyError:
            raise click.ClickException(
                f"unknown stakeholder {name!r}; one of {', '.join(_STAKEHOLDER_NAMES)}"
            ) from None
    return frozenset(out)


@main.command("classify")
@click.argument("issue_id")
@click.option(
    "--wants",
    multiple=True,
    help=f"Who wants the fix ({', '.join(_STAKEHOLDER_NAMES)}); may repeat or comma-separate.",
)
@click.option("--pays", multiple=True, help="Who pays for the fix.")
@click.option(
    "--extra-work/--no-extra-work",
    "extra_work",
    default=None,
    help="Does it cause recurring extra work for the team?",
)
@click.option(
    "--pain-only/--no-pain-only",
    "pain_only",
    default=None,
    help="Only annoying, no measurable extra work?",
)
@click.pass_obj
@_adapt_errors
def classify_cmd(store_path: Path, issue_id: str, wants, pays, extra_work, pain_only):
    """Answer the who-wants/who-pays questions for an issue."""
    store = _load_store(store_path)
    if issue_id not in store.issues:
        raise click.ClickException(f"unknown issue {issue_id}")
    interactive = not wants
    wants_fix = _parse_stakeholders(
        wants, "who wants the fix (comma-separated)" if interactive else None
    )
    pays_for_fix = _parse_stakeholders(
        pays, "who pays for the fix (comma-separated)" if interactive and not pays else None
    )
    if extra_work is None:
        extra_work = interactive and click.confirm(
            "does it cause recurring extra work for the team?", default=False
        )
    if pain_only is None:
        pain_only = interactive and click.confirm(
            "is it merely annoying, without measurable extra work?", default=False
        )
    try:
        answer = MatrixAnswer(
            wants_fix=wants_fix,
            pays_for_fix=pays_for_fix,
            causes_team_extra_work=extra_work,
            pain_only=pain_only,
        )
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    result = classify(answer)
    click.echo(f"{issue_id}: {result.verdict.name}")
    click.echo(f"  {result.rationale}")


@main.command()
@click.argument("issue_id")
@click.option("--id", "item_id", default=None, help="Id for the new TD item.")
@_attribute_options
@click.pass_obj
@_adapt_errors
def migrate(store_path: Path, issue_id: str, item_id: str | None, **attribute_flags):
    """Turn a TD-labeled issue into a TD item."""
    store = _load_store(store_path)
    wire = _collect_attributes(attribute_flags)
    refinement = parse_item_changes(wire)
    if item_id is not None:
        refinement["id"] = item_id
    item = store.migrate_issue(issue_id, refinement)
    save(store, store_path)
    click.echo(f"created {item.id} from issue {issue_id}")


@main.command()
@click.argument("item_id")
@click.argument("title")
@click.option("--opened-on", required=True, help="ISO date the debt was identified.")
@_attribute_options
@click.pass_obj
@_adapt_errors
def add(store_path: Path, item_id: str, title: str, opened_on: str, **attribute_flags):
    """Document a new TD item directly."""
    store = _load_store(store_path)
    wire = _collect_attributes(attribute_flags)
    wire.pop("title", None)
    wire.update({"id": item_id, "title": title, "opened_on": opened_on})
    store.add_item(item_from_dict(wire))
    save(store, store_path)
    click.echo(f"added {item_id}")


@main.command()
@click.argument("item_id")
@click.option("--version", type=int, default=None, help="Expected item version.")
@_attribute_options
@click.pass_obj
@_adapt_errors
def edit(store_path: Path, item_id: str, version: int | None, **attribute_flags):
    """Change attributes of an existing TD item."""
    store = _load_store(store_path)
    wire = _collect_attributes(attribute_flags)
    if not wire:
        raise click.ClickException("nothing to change")
    changes = parse_item_changes(wire)
    store.update_item(item_id, changes, expected_version=version)
    save(store, store_path)
    click.echo(f"updated {item_id} (version {store.versions[item_id]})")


@main.command("prioritize")
@click.argument("item_id")
@click.option(
    "--method",
    required=True,
    type=click.Choice(sorted(_METHOD_NAMES)),
    help="Scoring method.",
)
@click.option("--value", type=int, default=None, help="Priority for the guess method.")
@click.option("--computed-on", default=None, help="ISO date stamped onto the result.")
@click.pass_obj
@_adapt_errors
def prioritize_cmd(store_path: Path, item_id: str, method: str, value: int | None, computed_on: str | None):
    """Score one item and persist the resulting priority."""
    store = _load_store(store_path)
    item = store.td_items.get(item_id)
    if item is None:
        raise click.ClickException(f"unknown item {item_id}")
    result = prioritize(
        item,
        _METHOD_NAMES[method],
        mapping=store.config.mapping(),
        computed_on=_parse_day(computed_on, "computed-on"),
        guess=value,
        bands=store.config.roi_bands,
    )
    store.record_prioritization(result)
    save(store, store_path)
    if result.roi_months is not None:
        click.echo(
            f"{item_id}: ROI {result.roi_months:.2f} months, priority {result.priority}"
        )
    elif result.scores is not None:
        detail = ", ".join(f"{k}={v}" for k, v in result.scores.items())
        click.echo(f"{item_id}: mean of ({detail}), priority {result.priority}")
    else:
        click.echo(f"{item_id}: priority {result.priority} (educated guess)")


@main.command()
@click.option("--today", default=None, help="Reference date, defaults to today.")
@click.option("--format", "fmt", type=click.Choice(["text", "records"]), default="text")
@click.pass_obj
@_adapt_errors
def due(store_path: Path, today: str | None, fmt: str):
    """Show the resubmission queue."""
    store = _load_store(store_path)
    reference = _parse_day(today, "today") or date.today()
    items = store.items_by_id()
    due_list = planning.due_items(items, reference)
    undated = planning.undated_open(items)
    if fmt == "records":
        for item in due_list:
            _emit_record({"section": "due", **item_to_dict(item)})
        for item in undated:
            _emit_record({"section": "undated", **item_to_dict(item)})
        return
    if due_list:
        click.echo(f"due on or before {reference.isoformat()}:")
        for item in due_list:
            click.echo(f"  {item.resubmission_date.isoformat()}  {_item_line(item)}")
    else:
        click.echo(f"nothing due on or before {reference.isoformat()}")
    if undated:
        click.echo("needs a resubmission date:")
        for item in undated:
            click.echo(f"  {_item_line(item)}")


@main.command()
@click.option("--capacity", type=float, default=None, help="Sprint capacity in SP.")
@click.option("--quota", type=float, default=None, help="TD share of the capacity, 0..1.")
@click.option("--format", "fmt", type=click.Choice(["text", "records"]), default="text")
@click.pass_obj
@_adapt_errors
def plan(store_path: Path, capacity: float | None, quota: float | None, fmt: str):
    """Fill the TD quota of a sprint with low-hanging fruit."""
    store = _load_store(store_path)
    capacity = capacity if capacity is not None else store.config.capacity_sp
    quota = quota if quota is not None else store.config.quota_fraction
    if capacity is None:
        raise click.ClickException("no capacity given and none configured")
    if quota is None:
        raise click.ClickException("no quota given and none configured")
    sprint = planning.plan_quota_sprint(store.items_by_id(), capacity, quota)
    if fmt == "records":
        for item_id, effort in sprint.selected:
            _emit_record({"item_id": item_id, "effort_sp": effort})
        _emit_record(
            {"spent_sp": sprint.spent_sp, "td_budget_sp": sprint.td_budget_sp}
        )
        return
    click.echo(
        f"budget {sprint.td_budget_sp:g} SP "
        f"({sprint.capacity_sp:g} SP x {sprint.quota_fraction:g})"
    )
    for item_id, effort in sprint.selected:
        item = store.td_items[item_id]
        click.echo(f"  {item_id}  {effort:g} SP  p{item.priority}  {item.title}")
    click.echo(f"spent {sprint.spent_sp:g} of {sprint.td_budget_sp:g} SP")


@main.command()
@click.option("--system-replaced", is_flag=True, help="Affected system is being replaced.")
@click.option("--component", default=None, help="Component with a planned change.")
@click.option("--deadline-debt", is_flag=True, help="Debt taken on for a deadline.")
@click.option("--uneconomical", is_flag=True, help="Repayment does not pay off.")
@click.option("--roi", type=float, default=None, help="Known amortization months.")
@click.option("--slack", type=float, default=None, help="Free SP in the coming sprint.")
@click.option("--customer-pressure", is_flag=True, help="Feature pressure is high.")
@click.pass_obj
@_adapt_errors
def recommend(store_path: Path, system_replaced, component, deadline_debt, uneconomical, roi, slack, customer_pressure):
    """Recommend a repayment method for the described situation."""
    store = _load_store(store_path)
    ctx = planning.RepaymentContext(
        customer_pressure_high=customer_pressure,
        planned_component_change=component,
        deadline_created_debt=deadline_debt,
        system_being_replaced=system_replaced,
        repayment_uneconomical=uneconomical,
        roi_months=roi,
        sprint_slack_sp=slack,
    )
    rec = planning.recommend(
        ctx, prove_benefits_roi_months=store.config.prove_benefits_roi_months
    )
    confidence = "" if rec.confident else " (low confidence)"
    click.echo(f"{rec.method.name}{confidence}")
    click.echo(f"  {rec.rationale}")


@main.command()
@click.argument("component_path")
@click.option("--format", "fmt", type=click.Choice(["text", "records"]), default="text")
@click.pass_obj
@_adapt_errors
def evolution(store_path: Path, component_path: str, fmt: str):
    """List open debts in a component about to change anyway."""
    store = _load_store(store_path)
    candidates = planning.evolution_candidates(
        store.items_by_id(), store.components, component_path
    )
    if fmt == "records":
        for item in candidates:
            _emit_record(item_to_dict(item))
        return
    if not candidates:
        click.echo(f"no open TD items under {component_path}")
    for item in candidates:
        click.echo(_item_line(item))


@main.command()
@click.option("--format", "fmt", type=click.Choice(["text", "records"]), default="text")
@click.pass_obj
@_adapt_errors
def followups(store_path: Path, fmt: str):
    """List owed cleanups: deployed debt-creating changes with open TD items."""
    store = _load_store(store_path)
    worklist, errors = planning.polluter_followups(
        store.issues_by_id(), store.items_by_id()
    )
    if fmt == "records":
        for entry in worklist:
            _emit_record(
                {
                    "issue_id": entry.issue.id,
                    "open_items": [item.id for item in entry.open_items],
                }
            )
        return
    for entry in worklist:
        click.echo(f"{entry.issue.id}  {entry.issue.title}")
        for item in entry.open_items:
            click.echo(f"  owes {_item_line(item)}")
    if not worklist:
        click.echo("no outstanding follow-ups")
    for error in errors:
        click.echo(f"data error: {error}", err=True)


@main.command("list")
@click.option("--format", "fmt", type=click.Choice(["text", "records"]), default="text")
@click.option("--effort", type=float, default=None)
@click.option("--priority", type=int, default=None)
@click.option("--component", default=None)
@click.option("--qa", default=None)
@click.option("--all", "include_closed", is_flag=True, help="Include closed items.")
@click.pass_obj
@_adapt_errors
def list_cmd(store_path: Path, fmt: str, effort, priority, component, qa, include_closed):
    """List TD items, optionally filtered like the dashboard's charts."""
    store = _load_store(store_path)
    items = store.items_by_id()
    if not include_closed:
        items = [it for it in items if it.is_open]
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
    for item in items:
        if fmt == "records":
            payload = item_to_dict(item)
            payload["version"] = store.versions.get(item.id, 1)
            _emit_record(payload)
        else:
            click.echo(_item_line(item))


@main.command()
@click.option(
    "--chart",
    required=True,
    type=click.Choice(["lhf", "components", "quality-attributes", "burden"]),
)
@click.option("--out", type=click.Path(path_type=Path), default=None, help="Write SVG here.")
@click.option("--depth", type=int, default=1, show_default=True)
@click.option("--from", "from_month", default=None, help="First month, YYYY-MM.")
@click.option("--to", "to_month", default=None, help="Last month, YYYY-MM.")
@click.option("--format", "fmt", type=click.Choice(["text", "records"]), default="text")
@click.pass_obj
@_adapt_errors
def report(store_path: Path, chart: str, out: Path | None, depth: int, from_month, to_month, fmt: str):
    """Export chart data, or render it as a deterministic SVG with --out."""
    store = _load_store(store_path)
    items = store.items_by_id()
    if chart == "lhf":
        data = analytics.lhf_scatter(items)
        records = [
            {
                "effort_sp": pt.effort_sp,
                "priority": pt.priority,
                "count": pt.count,
                "item_ids": list(pt.item_ids),
            }
            for pt in data
        ]
        lines = [
            f"{pt.effort_sp:g} SP  p{pt.priority}  {pt.count} item(s): {', '.join(pt.item_ids)}"
            for pt in data
        ]
    elif chart in ("components", "quality-attributes"):
        counts = (
            analytics.by_component(items, depth=depth)
            if chart == "components"
            else analytics.by_quality_attribute(items)
        )
        data = counts
        records = [{"label": label, "count": count} for label, count in counts.items()]
        lines = [f"{label}: {count}" for label, count in counts.items()]
    else:
        if from_month is None or to_month is None:
            raise click.ClickException("burden chart needs --from and --to (YYYY-MM)")
        series = analytics.monthly_series(
            items,
            _parse_month_flag(from_month, "from"),
            _parse_month_flag(to_month, "to"),
            mapping=store.config.mapping(),
        )
        data = series
        records = [
            {
                "month": f"{y:04d}-{m:02d}",
                "opened": series.opened[i],
                "closed": series.closed[i],
                "open_at_end": series.open_at_end[i],
                "burden_min_per_month": series.burden_min_per_month[i],
            }
            for i, (y, m) in enumerate(series.months)
        ]
        lines = [
            f"{rec['month']}  opened {rec['opened']}  closed {rec['closed']}  "
            f"open {rec['open_at_end']}  burden {rec['burden_min_per_month']:g} min/month"
            for rec in records
        ]
    if out is not None:
        out.write_text(render_chart(data, chart), encoding="utf-8")
        click.echo(f"wrote {out}")
        return
    if fmt == "records":
        for record in records:
            _emit_record(record)
    else:
        for line in lines:
            click.echo(line)


@main.command()
@click.option("--today", default=None, help="Reference date for resubmission checks.")
@click.pass_obj
@_adapt_errors
def lint(store_path: Path, today: str | None):
    """Report prevention gaps, hygiene problems, and dangling links."""
    store = _load_store(store_path)
    reference = _parse_day(today, "today") or date.today()
    findings = 0
    for issue in store.issues_by_id():
        if issue.issue_type is IssueType.TechnicalDebt:
            continue
        problems = lint_prevention(issue)
        if problems:
            findings += len(problems)
            click.echo(f"{issue.id}:")
            for problem in problems:
                click.echo(f"  {problem}")
    for warning in planning.lint_resubmission(store.items_by_id(), reference):
        findings += 1
        click.echo(warning)
    for node in store.components:
        finding = lint_component(node.name, functional_change_possible=True)
        for warning in finding.warnings:
            findings += 1
            click.echo(f"component {node.name}: {warning}")
    _, link_errors = planning.polluter_followups(
        store.issues_by_id(), store.items_by_id()
    )
    for error in link_errors:
        findings += 1
        click.echo(error)
    if findings == 0:
        click.echo("no findings")


@main.group()
def component():
    """Manage and counter-test the component hierarchy."""


@component.command("set")
@click.argument("file", type=click.Path(exists=True, path_type=Path))
@click.pass_obj
@_adapt_errors
def component_set(store_path: Path, file: Path):
    """Replace the hierarchy from a JSON file (a list of component trees)."""
    store = _load_store(store_path)
    data = json.loads(file.read_text(encoding="utf-8"))
    if not isinstance(data, list):
        raise click.ClickException("component file must contain a list of nodes")
    store.set_components(tuple(component_from_dict(node) for node in data))
    save(store, store_path)
    click.echo(f"components: {len(store.components)} top-level")


@component.command("list")
@click.pass_obj
@_adapt_errors
def component_list(store_path: Path):
    """Print every component path."""
    store = _load_store(store_path)
    for path in forest_paths(store.components):
        click.echo(path)


@component.command("check")
@click.argument("name")
@click.option(
    "--functional-change/--no-functional-change",
    "functional_change",
    default=True,
    help="Could a functional change ever target this component?",
)
@_adapt_errors
def component_check(name: str, functional_change: bool):
    """Counter-test a proposed component name."""
    finding = lint_component(name, functional_change_possible=functional_change)
    for warning in finding.warnings:
        click.echo(f"warning: {warning}")
    if not finding.accepted:
        raise click.ClickException(finding.reason)
    click.echo(f"{name}: ok")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option(
    "--ui-dir",
    type=click.Path(exists=True, file_okay=False, path_type=Path),
    default=None,
    help="Directory of dashboard static assets to host at /.",
)
@click.pass_obj
@_adapt_errors
def serve(store_path: Path, host: str, port: int, ui_dir: Path | None):
    """Serve the HTTP API (and optionally the dashboard) over the store."""
    import uvicorn

    from .api import create_app

    _load_store(store_path)
    uvicorn.run(create_app(store_path, ui_dir=ui_dir), host=host, port=port)


if __name__ == "__main__":
    main()
