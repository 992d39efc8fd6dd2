"""Repayment planning: method recommendation, quota sprints, worklists.

Everything here is a pure function over store snapshots; plans are advice,
the team still moves the actual tickets.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date, timedelta

from .errors import DomainRuleViolation, UnknownId
from .model import (
    ComponentNode,
    GenericIssue,
    RepaymentMethod,
    TDItem,
    forest_contains,
    path_is_within,
)
from .prioritization import lhf_eligible, lhf_order


@dataclass(frozen=True)
class RepaymentContext:
    """Situation answers that drive the repayment-method recommendation."""

    customer_pressure_high: bool = False
    planned_component_change: str | None = None
    deadline_created_debt: bool = False
    system_being_replaced: bool = False
    repayment_uneconomical: bool = False
    roi_months: float | None = None
    sprint_slack_sp: float | None = None


@dataclass(frozen=True)
class Recommendation:
    method: RepaymentMethod
    rationale: str
    confident: bool = True


def recommend(
    ctx: RepaymentContext, prove_benefits_roi_months: float = 3.0
) -> Recommendation:
    """Pick one repayment method for the situation. Total: always answers.

    The cascade order encodes precedence: a dying system beats everything
    (repayment there is wasted), a planned change beats deadlines, and so on.
    The threshold for "amortizes soon" is configurable; teams disagree on it.
    """
    if ctx.system_being_replaced:
        return Recommendation(
            RepaymentMethod.Magic,
            "the affected system is on its way out; its debt disappears with "
            "it, so do not spend repayment effort there",
        )
    if ctx.planned_component_change is not None:
        return Recommendation(
            RepaymentMethod.EvolutionBased,
            f"a change to component {ctx.planned_component_change!r} is already "
            "planned; repaying its debts alongside reduces risk and shares the "
            "warm-up cost",
        )
    if ctx.deadline_created_debt:
        return Recommendation(
            RepaymentMethod.PolluterPays,
            "this debt was taken on deliberately to hit a deadline; the change "
            "that caused it should fund the cleanup right after shipping",
        )
    if ctx.repayment_uneconomical:
        return Recommendation(
            RepaymentMethod.PayInterest,
            "repayment does not pay for itself; keep paying the small interest "
            "and revisit on the resubmission date",
        )
    if (
        ctx.roi_months is not None
        and ctx.roi_months < prove_benefits_roi_months
        and ctx.sprint_slack_sp is not None
        and ctx.sprint_slack_sp > 0
    ):
        return Recommendation(
            RepaymentMethod.ProveBenefits,
            f"amortization in {ctx.roi_months:.2f} months with {ctx.sprint_slack_sp:g} "
            "SP of slack available: repay now and show the win",
        )
    if ctx.customer_pressure_high:
        return Recommendation(
            RepaymentMethod.Contingent,
            "feature pressure is high; reserve a fixed share of each sprint so "
            "repayment happens anyway",
        )
    return Recommendation(
        RepaymentMethod.ProveBenefits,
        "no strong signal either way; repay something small and visible to "
        "build the case for a real repayment budget",
        confident=False,
    )


@dataclass(frozen=True)
class SprintPlan:
    capacity_sp: float
    quota_fraction: float
    td_budget_sp: float
    selected: tuple[tuple[str, float], ...]
    spent_sp: float

    def __post_init__(self):
        if self.spent_sp > self.td_budget_sp:
            raise ValueError("spent_sp exceeds td_budget_sp")


def plan_quota_sprint(
    items, capacity_sp: float, quota_fraction: float
) -> SprintPlan:
    """Fill the TD share of a sprint, first-fit greedy over low-hanging fruit.

    Walks the LHF order and takes every open item whose effort still fits the
    remaining budget; items that do not fit are skipped, not a stop signal.
    First-fit is deliberately not knapsack-optimal: the outcome must be
    explainable in a planning meeting.
    """
    if capacity_sp <= 0:
        raise DomainRuleViolation("capacity_sp must be positive", field="capacity_sp")
    if not 0 <= quota_fraction <= 1:
        raise DomainRuleViolation(
            "quota_fraction out of range 0..1", field="quota_fraction"
        )
    budget = capacity_sp * quota_fraction
    selected = []
    spent = 0.0
    for item in lhf_order(item for item in items if item.is_open):
        if spent + item.effort_sp <= budget:
            selected.append((item.id, item.effort_sp))
            spent += item.effort_sp
    return SprintPlan(capacity_sp, quota_fraction, budget, tuple(selected), spent)


def due_items(items, today: date) -> list[TDItem]:
    """Open items whose resubmission date has arrived, oldest first."""
    due = [
        item
        for item in items
        if item.is_open
        and item.resubmission_date is not None
        and item.resubmission_date <= today
    ]
    return sorted(due, key=lambda it: (it.resubmission_date, it.id))


def undated_open(items) -> list[TDItem]:
    """Open items that still need a resubmission date, by id."""
    pending = [
        item for item in items if item.is_open and item.resubmission_date is None
    ]
    return sorted(pending, key=lambda it: it.id)


#: Comment phrases that mark a resubmission date as event-driven rather than
#: guessed ("reassessment necessary after the migration", ...).
RESUBMISSION_EVENT_MARKERS: tuple[str, ...] = (
    "necessary after",
    "obsolete after",
)


def lint_resubmission(items, today: date, near_days: int = 14) -> list[str]:
    """Hygiene warnings for the resubmission queue.

    A date close in time without a recorded triggering event is usually set
    too soon and will just bounce through refinement again.
    """
    warnings = []
    horizon = today + timedelta(days=near_days)
    for item in sorted(items, key=lambda it: it.id):
        if not item.is_open:
            continue
        if item.resubmission_date is None:
            warnings.append(f"{item.id}: no resubmission date set")
            continue
        if item.resubmission_date > horizon:
            continue
        texts = [text.lower() for _, text in item.comments]
        texts.append(item.description.lower())
        if not any(marker in text for marker in RESUBMISSION_EVENT_MARKERS for text in texts):
            warnings.append(
                f"{item.id}: resubmission date {item.resubmission_date.isoformat()} "
                "is near but no triggering event is recorded; likely set too soon"
            )
    return warnings


def evolution_candidates(
    items, components: tuple[ComponentNode, ...], component_path: str
) -> list[TDItem]:
    """Open debts sitting in the subtree of a component about to change.

    Repaying them inside the planned change minimizes risk and leverages the
    shared warm-up. Ranked items come first in LHF order; matching items not
    yet rankable follow by id so the worklist stays complete.
    """
    if not forest_contains(components, component_path):
        raise UnknownId("component", component_path)
    matching = [
        item
        for item in items
        if item.is_open
        and item.component_path is not None
        and path_is_within(item.component_path, component_path)
    ]
    ranked = lhf_order(matching)
    unranked = sorted(
        (item for item in matching if not lhf_eligible(item)), key=lambda it: it.id
    )
    return ranked + unranked


@dataclass(frozen=True)
class FollowUp:
    """One deployed debt-creating change and the cleanup it still owes."""

    issue: GenericIssue
    open_items: tuple[TDItem, ...]


def polluter_followups(
    issues, td_items
) -> tuple[list[FollowUp], list[str]]:
    """Repayment worklist for debts incurred deliberately.

    For every closed issue that declared it creates TD, lists the linked TD
    items still open: the change shipped, the cleanup is now owed. Open source
    issues are ignored (deployment not done yet). Dangling links are returned
    as data errors, not raised, so one bad link does not hide the rest.
    """
    by_id = {item.id: item for item in td_items}
    followups = []
    errors = []
    for issue in sorted(issues, key=lambda iss: iss.id):
        if issue.is_open or not issue.creates_td:
            continue
        open_items = []
        for linked_id in issue.linked_td_ids:
            linked = by_id.get(linked_id)
            if linked is None:
                errors.append(f"issue {issue.id} links unknown TD item {linked_id}")
            elif linked.is_open:
                open_items.append(linked)
        if open_items:
            open_items.sort(key=lambda it: it.id)
            followups.append(FollowUp(issue, tuple(open_items)))
    return followups, errors
