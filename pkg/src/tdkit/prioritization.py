"""Priority scoring for TD items.

Three methods coexist, from cheap to defensible: an educated guess, the mean
of five 0..5 value scores, and amortization ROI computed from interest burden.
All math is on plain floats; the level-to-minutes tables live in
``FrequencyMapping`` so teams can recalibrate without touching code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from datetime import date

from .errors import DomainRuleViolation
from .model import (
    Contagion,
    FrequencyLevel,
    FrequencyMapping,
    InterestLevel,
    PriorityMethod,
    QualityAttribute,
    TDItem,
)


def interest_burden(
    interest: InterestLevel,
    frequency: FrequencyLevel,
    mapping: FrequencyMapping | None = None,
) -> float:
    """Expected interest payments in minutes per month."""
    table = mapping or FrequencyMapping.default()
    return table.interest_minutes[interest] * table.per_month[frequency]


def roi_months(
    effort_pd: float,
    interest: InterestLevel,
    frequency: FrequencyLevel,
    mapping: FrequencyMapping | None = None,
) -> float:
    """Months of interest payments that equal the one-off repayment effort.

    Smaller is better: the repayment amortizes sooner.
    """
    table = mapping or FrequencyMapping.default()
    if effort_pd < 0:
        raise DomainRuleViolation("effort_pd must not be negative", field="effort_pd")
    return effort_pd * table.pd_minutes / interest_burden(interest, frequency, table)


#: (strict upper bound on months, priority). Below one month of amortization
#: the repayment is a clear win; beyond three years it barely matters.
ROI_PRIORITY_BANDS: tuple[tuple[float, int], ...] = (
    (1.0, 5),
    (2.0, 4),
    (12.0, 3),
    (36.0, 2),
)


def roi_band(
    months: float, bands: tuple[tuple[float, int], ...] = ROI_PRIORITY_BANDS
) -> int:
    """Map amortization months to a 1..5 priority. Bounds are strict: 1.0 -> 4."""
    for bound, priority in bands:
        if months < bound:
            return priority
    return 1


CONTAGION_SCORES: dict[Contagion, int] = {
    Contagion.Decreasing: 0,
    Contagion.Stagnant: 3,
    Contagion.Increasing: 5,
}


def quality_attribute_score(attributes) -> int:
    """Count affected quality attributes, clamped to 1..5.

    Maintainability is excluded: every TD item hurts maintainability by
    definition, so it carries no signal.
    """
    count = sum(1 for attr in attributes if attr is not QualityAttribute.Maintainability)
    return min(5, max(1, count))


def round_half_up(value: float) -> int:
    """Round to nearest integer, ties away from zero for positive input."""
    return math.floor(value + 0.5)


def mean_value_scores(item: TDItem) -> dict[str, int]:
    """The five 0..5 scores feeding the mean-value priority.

    Raises when a required assessment attribute is still unset, naming all of
    the missing ones.
    """
    missing = [
        name
        for name in ("interest", "interest_frequency", "pain_factor", "contagion")
        if getattr(item, name) is None
    ]
    if missing:
        raise DomainRuleViolation(
            "required for mean-value priority: " + ", ".join(missing),
            field=missing[0],
        )
    return {
        "interest": item.interest.rank,
        "frequency": item.interest_frequency.rank,
        "pain": item.pain_factor,
        "quality_attributes": quality_attribute_score(item.quality_attributes),
        "contagion": CONTAGION_SCORES[item.contagion],
    }


def mean_value_priority(item: TDItem) -> int:
    scores = mean_value_scores(item)
    mean = sum(scores.values()) / len(scores)
    return min(5, max(1, round_half_up(mean)))


@dataclass(frozen=True)
class PrioritizationResult:
    """Outcome of one scoring run, kept so the number can be re-derived later."""

    item_id: str
    method: PriorityMethod
    priority: int
    roi_months: float | None = None
    scores: dict[str, int] | None = None
    computed_on: date | None = None


def prioritize(
    item: TDItem,
    method: PriorityMethod,
    mapping: FrequencyMapping | None = None,
    computed_on: date | None = None,
    guess: int | None = None,
    bands: tuple[tuple[float, int], ...] = ROI_PRIORITY_BANDS,
) -> PrioritizationResult:
    """Score one item with the chosen method; the item itself is not mutated."""
    if method is PriorityMethod.EducatedGuess:
        if guess is None:
            raise DomainRuleViolation(
                "educated-guess scoring needs an explicit priority", field="priority"
            )
        if not 1 <= guess <= 5:
            raise DomainRuleViolation("priority out of range 1..5", field="priority")
        return PrioritizationResult(item.id, method, guess, computed_on=computed_on)
    if method is PriorityMethod.MeanValue:
        scores = mean_value_scores(item)
        mean = sum(scores.values()) / len(scores)
        priority = min(5, max(1, round_half_up(mean)))
        return PrioritizationResult(
            item.id, method, priority, scores=scores, computed_on=computed_on
        )
    missing = [
        name
        for name in ("effort_pd", "interest", "interest_frequency")
        if getattr(item, name) is None
    ]
    if missing:
        raise DomainRuleViolation(
            "required for ROI priority: " + ", ".join(missing), field=missing[0]
        )
    months = roi_months(item.effort_pd, item.interest, item.interest_frequency, mapping)
    return PrioritizationResult(
        item.id,
        method,
        roi_band(months, bands),
        roi_months=months,
        computed_on=computed_on,
    )


def apply_result(item: TDItem, result: PrioritizationResult) -> TDItem:
    if result.item_id != item.id:
        raise DomainRuleViolation(
            f"result for {result.item_id} applied to {item.id}", field="item_id"
        )
    return replace(item, priority=result.priority, priority_method=result.method)


def item_burden(item: TDItem, mapping: FrequencyMapping | None = None) -> float | None:
    """Monthly interest burden of one item; None while not yet assessed."""
    if item.interest is None or item.interest_frequency is None:
        return None
    return interest_burden(item.interest, item.interest_frequency, mapping)


def lhf_eligible(item: TDItem) -> bool:
    """An item can be ranked as low-hanging fruit once both axes are assessed."""
    return item.priority is not None and item.effort_sp is not None


def lhf_order(items) -> list[TDItem]:
    """Low-hanging-fruit order: priority descending, then cheapest first.

    Ids break remaining ties so the order is total and reproducible. Items
    still missing priority or story-point effort are excluded; callers report
    them via ``lhf_excluded``.
    """
    eligible = [item for item in items if lhf_eligible(item)]
    return sorted(eligible, key=lambda it: (-it.priority, it.effort_sp, it.id))


def lhf_excluded(items) -> list[TDItem]:
    """Items skipped by ``lhf_order``, in input order, for exclusion reports."""
    return [item for item in items if not lhf_eligible(item)]
