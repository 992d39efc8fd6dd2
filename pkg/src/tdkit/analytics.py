"""Chart data for planning and monitoring views.

All functions are pure over item snapshots and deterministic: equal inputs
give equal outputs including ordering, so exports diff cleanly. Burden sums
use ``math.fsum`` (exactly rounded), which makes the totals independent of
summation order.
"""

from __future__ import annotations

import calendar
import math
from dataclasses import dataclass
from datetime import date

from .errors import DomainRuleViolation
from .model import FrequencyMapping, TDItem
from .prioritization import item_burden, lhf_eligible


@dataclass(frozen=True)
class ScatterPoint:
    """One dot on the planning scatter: all open items sharing (effort, priority)."""

    effort_sp: float
    priority: int
    item_ids: tuple[str, ...]

    @property
    def count(self) -> int:
        return len(self.item_ids)


def lhf_scatter(items) -> list[ScatterPoint]:
    """Group open items by exact (effort_sp, priority) for the planning scatter.

    Ordered best-first: priority descending, then effort ascending. Items
    missing either axis are excluded; ``scatter_excluded`` reports them.
    """
    groups: dict[tuple[float, int], list[str]] = {}
    for item in items:
        if item.is_open and lhf_eligible(item):
            groups.setdefault((item.effort_sp, item.priority), []).append(item.id)
    points = [
        ScatterPoint(effort, priority, tuple(sorted(ids)))
        for (effort, priority), ids in groups.items()
    ]
    return sorted(points, key=lambda pt: (-pt.priority, pt.effort_sp))


def scatter_excluded(items) -> list[str]:
    """Ids of open items the scatter cannot place yet, by id."""
    return sorted(item.id for item in items if item.is_open and not lhf_eligible(item))


UNASSIGNED_COMPONENT = "(unassigned)"


def rollup_path(path: str, depth: int) -> str:
    return "/".join(path.split("/")[:depth])


def by_component(items, depth: int = 1) -> dict[str, int]:
    """Open-item counts per component, descendants rolled up to the given depth.

    Items without a component land in a visible "(unassigned)" bucket rather
    than disappearing. Keys ordered by count descending, then name.
    """
    if depth < 1:
        raise DomainRuleViolation("depth must be at least 1", field="depth")
    counts: dict[str, int] = {}
    for item in items:
        if not item.is_open:
            continue
        if item.component_path is None:
            key = UNASSIGNED_COMPONENT
        else:
            key = rollup_path(item.component_path, depth)
        counts[key] = counts.get(key, 0) + 1
    return dict(sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])))


def by_quality_attribute(items) -> dict[str, int]:
    """Open-item counts per affected quality attribute (multiset semantics).

    An item tagged with n attributes contributes to n buckets. Keys ordered
    by count descending, then name.
    """
    counts: dict[str, int] = {}
    for item in items:
        if not item.is_open:
            continue
        for attr in item.quality_attributes:
            counts[attr.name] = counts.get(attr.name, 0) + 1
    return dict(sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])))


Month = tuple[int, int]


def month_range(start: Month, end: Month) -> list[Month]:
    """All (year, month) pairs from start to end inclusive."""
    if start > end:
        raise DomainRuleViolation("start month is after end month", field="from")
    months = []
    year, month = start
    while (year, month) <= end:
        months.append((year, month))
        month += 1
        if month == 13:
            year, month = year + 1, 1
    return months


def last_day(year: int, month: int) -> date:
    return date(year, month, calendar.monthrange(year, month)[1])


@dataclass(frozen=True)
class MonthlySeries:
    """Per-month counts and burden for the monitoring time series."""

    months: tuple[Month, ...]
    opened: tuple[int, ...]
    closed: tuple[int, ...]
    open_at_end: tuple[int, ...]
    burden_min_per_month: tuple[float, ...]

    def __post_init__(self):
        n = len(self.months)
        for name in ("opened", "closed", "open_at_end", "burden_min_per_month"):
            if len(getattr(self, name)) != n:
                raise ValueError(f"{name} length differs from months")


def monthly_series(
    items,
    start: Month,
    end: Month,
    mapping: FrequencyMapping | None = None,
) -> MonthlySeries:
    """Iterate the months and count/weigh every item against each one.

    An item counts as open in month M when it was opened by M's last day and
    not closed on or before it (month-end snapshot). Burden sums the monthly
    interest of exactly that open set; items not yet assessed contribute 0.
    """
    table = mapping or FrequencyMapping.default()
    months = month_range(start, end)
    opened, closed, open_at_end, burden = [], [], [], []
    for year, month in months:
        first = date(year, month, 1)
        last = last_day(year, month)
        opened.append(sum(1 for it in items if first <= it.opened_on <= last))
        closed.append(
            sum(
                1
                for it in items
                if it.closed_on is not None and first <= it.closed_on <= last
            )
        )
        open_set = [
            it
            for it in items
            if it.opened_on <= last and (it.closed_on is None or it.closed_on > last)
        ]
        open_at_end.append(len(open_set))
        burdens = [item_burden(it, table) for it in open_set]
        burden.append(math.fsum(b for b in burdens if b is not None))
    return MonthlySeries(
        tuple(months),
        tuple(opened),
        tuple(closed),
        tuple(open_at_end),
        tuple(burden),
    )


NAIVE_BURDEN_WARNING = (
    "misleading: keyed by open date and computed from currently-open items "
    "only, so every closed item is erased retroactively from the history"
)


@dataclass(frozen=True)
class NaiveBurdenSeries:
    """The tempting-but-wrong burden chart; kept to demonstrate why it lies."""

    points: tuple[tuple[date, float], ...]
    warning: str = NAIVE_BURDEN_WARNING


def naive_burden_by_open_date(
    items, mapping: FrequencyMapping | None = None
) -> NaiveBurdenSeries:
    """Cumulative burden of currently-open items, keyed by their open date.

    Do not put this on a wall: it has no time axis in the honest sense.
    ``monthly_series`` is the correct computation; this one exists so tests
    and docs can show the two diverging as soon as anything closes.
    """
    table = mapping or FrequencyMapping.default()
    open_items = sorted(
        (it for it in items if it.is_open), key=lambda it: (it.opened_on, it.id)
    )
    cumulative: dict[date, float] = {}
    running: list[float] = []
    for item in open_items:
        value = item_burden(item, table)
        running.append(0.0 if value is None else value)
        cumulative[item.opened_on] = math.fsum(running)
    return NaiveBurdenSeries(tuple(sorted(cumulative.items())))


def naive_burden_at_month_ends(
    items,
    start: Month,
    end: Month,
    mapping: FrequencyMapping | None = None,
) -> list[float]:
    """The naive chart read at month ends, for comparison against the truth.

    Value for month M is the cumulative naive burden of currently-open items
    opened by M's last day.
    """
    table = mapping or FrequencyMapping.default()
    values = []
    for year, month in month_range(start, end):
        last = last_day(year, month)
        burdens = [
            item_burden(it, table)
            for it in items
            if it.is_open and it.opened_on <= last
        ]
        values.append(math.fsum(b for b in burdens if b is not None))
    return values
