"""Domain types for technical-debt items, backlog issues, and shared config.

All types here are immutable values; mutation goes through the store module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import date
from enum import Enum
from typing import Iterator, Mapping

SCHEMA_VERSION = 1


class InterestLevel(Enum):
    """Effort magnitude of one interest occurrence, as offered in the combo box."""

    Min15 = 1
    Hour1 = 2
    Hours4 = 3
    Day1 = 4
    Days2Plus = 5

    @property
    def rank(self) -> int:
        return self.value

    @property
    def label(self) -> str:
        return _INTEREST_LABELS[self]


_INTEREST_LABELS = {
    InterestLevel.Min15: "15 min.",
    InterestLevel.Hour1: "1 hr.",
    InterestLevel.Hours4: "4 hrs.",
    InterestLevel.Day1: "1 day",
    InterestLevel.Days2Plus: "≥ 2 days",
}


class FrequencyLevel(Enum):
    """How often interest is actually incurred. Ordered from most to least frequent."""

    Daily = 5
    Weekly = 4
    Monthly = 3
    Quarterly = 2
    YearlyOrLess = 1

    @property
    def rank(self) -> int:
        """Higher rank = more frequent."""
        return self.value

    @property
    def label(self) -> str:
        return _FREQUENCY_LABELS[self]


_FREQUENCY_LABELS = {
    FrequencyLevel.Daily: "1x/day",
    FrequencyLevel.Weekly: "1x/week",
    FrequencyLevel.Monthly: "1x/month",
    FrequencyLevel.Quarterly: "1x/quarter",
    FrequencyLevel.YearlyOrLess: "≥ 1x/year",
}


class Contagion(Enum):
    """Whether the cost of repaying a debt changes over time."""

    Decreasing = "Decreasing"
    Stagnant = "Stagnant"
    Increasing = "Increasing"


class PriorityMethod(Enum):
    EducatedGuess = "EducatedGuess"
    MeanValue = "MeanValue"
    ROI = "ROI"


class QualityAttribute(Enum):
    """The nine ISO-25010 quality attributes."""

    FunctionalSuitability = "FunctionalSuitability"
    PerformanceEfficiency = "PerformanceEfficiency"
    Compatibility = "Compatibility"
    InteractionCapability = "InteractionCapability"
    Reliability = "Reliability"
    Security = "Security"
    Maintainability = "Maintainability"
    Flexibility = "Flexibility"
    Safety = "Safety"


#: Common alternate labels teams use; each resolves to exactly one canonical attribute.
DEFAULT_QA_ALIASES: dict[str, QualityAttribute] = {
    "performance": QualityAttribute.PerformanceEfficiency,
    "usability": QualityAttribute.InteractionCapability,
}


def resolve_quality_attribute(
    label: str, aliases: Mapping[str, QualityAttribute] | None = None
) -> QualityAttribute:
    """Resolve a label (canonical name or registered alias) to a quality attribute.

    Raises ValueError for labels that resolve to nothing.
    """
    key = label.strip().lower()
    for qa in QualityAttribute:
        if qa.value.lower() == key:
            return qa
    table = DEFAULT_QA_ALIASES if aliases is None else aliases
    lowered = {k.lower(): v for k, v in table.items()}
    if key in lowered:
        return lowered[key]
    raise ValueError(f"unknown quality attribute label: {label!r}")


class DebtType(Enum):
    Code = "Code"
    Architecture = "Architecture"
    Documentation = "Documentation"
    Test = "Test"
    Infrastructure = "Infrastructure"
    Requirements = "Requirements"
    BuildAutomation = "BuildAutomation"
    Security = "Security"
    Social = "Social"
    Versioning = "Versioning"
    Update = "Update"
    Hardware = "Hardware"
    Other = "Other"


class IssueType(Enum):
    Functional = "Functional"
    Bug = "Bug"
    Epic = "Epic"
    TechnicalDebt = "TechnicalDebt"
    Other = "Other"


class RepaymentMethod(Enum):
    ImpedimentRoadblock = "ImpedimentRoadblock"
    PayInterest = "PayInterest"
    Magic = "Magic"
    ProveBenefits = "ProveBenefits"
    Contingent = "Contingent"
    EvolutionBased = "EvolutionBased"
    PolluterPays = "PolluterPays"


@dataclass(frozen=True)
class FrequencyMapping:
    """Maps combo-box levels to minutes and per-month rates for burden/ROI math.

    The stock rates put the two rarest levels at 0.0027 and 0.0013 events per
    month, which look suspiciously like per-day rates; the
    ``calendar_consistent`` profile replaces them with 1/3 and 1/12.
    """

    interest_minutes: Mapping[InterestLevel, float] = field(
        default_factory=lambda: dict(_DEFAULT_INTEREST_MINUTES)
    )
    per_month: Mapping[FrequencyLevel, float] = field(
        default_factory=lambda: dict(_DEFAULT_PER_MONTH)
    )
    pd_minutes: float = 480.0
    profile: str = "default"

    def __post_init__(self):
        for level in InterestLevel:
            if level not in self.interest_minutes:
                raise ValueError(f"interest_minutes missing {level.name}")
            if self.interest_minutes[level] <= 0:
                raise ValueError(f"interest_minutes[{level.name}] must be positive")
        for level in FrequencyLevel:
            if level not in self.per_month:
                raise ValueError(f"per_month missing {level.name}")
            if self.per_month[level] <= 0:
                raise ValueError(f"per_month[{level.name}] must be positive")
        if self.pd_minutes <= 0:
            raise ValueError("pd_minutes must be positive")
        ordered = sorted(InterestLevel, key=lambda lv: lv.rank)
        minutes = [self.interest_minutes[lv] for lv in ordered]
        if any(a >= b for a, b in zip(minutes, minutes[1:])):
            raise ValueError("interest_minutes must be strictly increasing with level")
        by_freq = sorted(FrequencyLevel, key=lambda lv: lv.rank, reverse=True)
        rates = [self.per_month[lv] for lv in by_freq]
        if any(a <= b for a, b in zip(rates, rates[1:])):
            raise ValueError("per_month must be strictly decreasing toward rarer levels")

    @classmethod
    def default(cls) -> "FrequencyMapping":
        return cls()

    @classmethod
    def calendar_consistent(cls) -> "FrequencyMapping":
        rates = dict(_DEFAULT_PER_MONTH)
        rates[FrequencyLevel.Quarterly] = 1 / 3
        rates[FrequencyLevel.YearlyOrLess] = 1 / 12
        return cls(per_month=rates, profile="calendar")

    @classmethod
    def from_profile(cls, name: str) -> "FrequencyMapping":
        if name == "default":
            return cls.default()
        if name == "calendar":
            return cls.calendar_consistent()
        raise ValueError(f"unknown frequency profile: {name!r}")


_DEFAULT_INTEREST_MINUTES = {
    InterestLevel.Min15: 15.0,
    InterestLevel.Hour1: 60.0,
    InterestLevel.Hours4: 240.0,
    InterestLevel.Day1: 480.0,
    InterestLevel.Days2Plus: 960.0,
}

_DEFAULT_PER_MONTH = {
    FrequencyLevel.Daily: 30.0,
    FrequencyLevel.Weekly: 4.5,
    FrequencyLevel.Monthly: 1.0,
    FrequencyLevel.Quarterly: 0.0027,
    FrequencyLevel.YearlyOrLess: 0.0013,
}


@dataclass(frozen=True)
class TDItem:
    """One documented technical-debt issue with its assessment attributes.

    Assessment attributes (interest, frequency, effort, priority, ...) start
    unset and are filled in during refinement; ``validate_item`` checks the
    cross-field rules.
    """

    id: str
    title: str
    opened_on: date
    description: str = ""
    risks_of_nonrepayment: tuple[str, ...] = ()
    effort_sp: float | None = None
    effort_pd: float | None = None
    contagion: Contagion | None = None
    interest: InterestLevel | None = None
    interest_frequency: FrequencyLevel | None = None
    priority: int | None = None
    priority_method: PriorityMethod | None = None
    resubmission_date: date | None = None
    pain_factor: int | None = None
    quality_attributes: frozenset[QualityAttribute] = frozenset()
    risks_of_repayment: tuple[str, ...] = ()
    breaking_change: bool = False
    component_path: str | None = None
    debt_type: DebtType | None = None
    closed_on: date | None = None
    origin_issue_id: str | None = None
    comments: tuple[tuple[date, str], ...] = ()

    @property
    def is_open(self) -> bool:
        return self.closed_on is None


def validate_item(item: TDItem) -> list[str]:
    """Return all schema violations of the item; empty list means valid.

    Violations are data, not failures: each entry names the field and the rule.
    """
    violations = []
    if item.priority is not None and not 1 <= item.priority <= 5:
        violations.append("priority out of range 1..5")
    if item.pain_factor is not None and not 1 <= item.pain_factor <= 5:
        violations.append("pain_factor out of range 1..5")
    if item.closed_on is not None and item.closed_on < item.opened_on:
        violations.append("closed_on before opened_on")
    if item.effort_sp is not None and item.effort_sp < 0:
        violations.append("effort_sp negative")
    if item.effort_pd is not None and item.effort_pd < 0:
        violations.append("effort_pd negative")
    if item.priority_method is PriorityMethod.ROI:
        for name in ("effort_pd", "interest", "interest_frequency"):
            if getattr(item, name) is None:
                violations.append(f"{name} required for ROI priority")
    return violations


@dataclass(frozen=True)
class GenericIssue:
    """An imported backlog issue of any type, carrying the prevention attributes."""

    id: str
    title: str
    opened_on: date
    description: str = ""
    issue_type: IssueType = IssueType.Other
    labels: frozenset[str] = frozenset()
    talked_about_td: bool = False
    is_td_repayment: bool | None = None
    creates_td: bool | None = None
    quality_attributes_discussed: str | None = None
    drawbacks: str | None = None
    risks: str | None = None
    alternatives: str | None = None
    linked_td_ids: tuple[str, ...] = ()
    closed_on: date | None = None
    extras: Mapping[str, str] = field(default_factory=dict)

    @property
    def is_open(self) -> bool:
        return self.closed_on is None


@dataclass(frozen=True)
class ComponentNode:
    """A node in the (architectural) component hierarchy."""

    name: str
    children: tuple["ComponentNode", ...] = ()

    def __post_init__(self):
        names = [child.name for child in self.children]
        if len(names) != len(set(names)):
            raise ValueError(f"duplicate child names under component {self.name!r}")

    def walk(self, prefix: str = "") -> Iterator[str]:
        """Yield every path in the subtree, including this node's own path."""
        path = f"{prefix}/{self.name}" if prefix else self.name
        yield path
        for child in self.children:
            yield from child.walk(path)

    def find(self, path: str) -> "ComponentNode | None":
        """Resolve a slash-separated path starting at this node; None if absent."""
        parts = [p for p in path.split("/") if p]
        if not parts or parts[0] != self.name:
            return None
        node = self
        for part in parts[1:]:
            node = next((c for c in node.children if c.name == part), None)
            if node is None:
                return None
        return node

    def contains(self, path: str) -> bool:
        return self.find(path) is not None


def path_is_within(candidate: str, ancestor: str) -> bool:
    """True if candidate equals ancestor or lies in its subtree (slash paths)."""
    cand = [p for p in candidate.split("/") if p]
    anc = [p for p in ancestor.split("/") if p]
    return len(cand) >= len(anc) and cand[: len(anc)] == anc


def forest_contains(components: tuple[ComponentNode, ...], path: str) -> bool:
    """True if the slash path resolves in any of the top-level components."""
    return any(node.contains(path) for node in components)


def forest_paths(components: tuple[ComponentNode, ...]) -> list[str]:
    paths = []
    for node in components:
        paths.extend(node.walk())
    return paths
