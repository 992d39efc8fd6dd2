"""Create a small demo store with enough variety to exercise every command."""

import argparse
from datetime import date
from pathlib import Path

from tdkit.model import ComponentNode, GenericIssue, PriorityMethod
from tdkit.prioritization import prioritize
from tdkit.store import Store, StoreConfig, item_from_dict, save

FOREST = (
    ComponentNode(
        "shop",
        (
            ComponentNode("checkout", (ComponentNode("payment"),)),
            ComponentNode("catalog"),
        ),
    ),
    ComponentNode("warehouse"),
)

ISSUES = [
    GenericIssue(
        id="ISS-101",
        title="Refactor the session module",
        opened_on=date(2024, 1, 8),
        labels=frozenset({"TD"}),
        talked_about_td=True,
        creates_td=False,
    ),
    GenericIssue(
        id="ISS-102",
        title="Checkout blocks orders above 10k",
        opened_on=date(2024, 1, 22),
        labels=frozenset({"Non-TD"}),
    ),
    GenericIssue(
        id="ISS-103",
        title="Clean up dead feature flags",
        opened_on=date(2024, 2, 5),
        labels=frozenset({"TD"}),
        talked_about_td=True,
    ),
]

# wire-format records, exactly what the importer and the API accept
ITEMS = [
    {
        "id": "TD-001",
        "title": "Session handling mixes auth and caching",
        "opened_on": "2024-01-10",
        "interest": "Hours4",
        "interest_frequency": "Weekly",
        "pain_factor": 4,
        "contagion": "Increasing",
        "effort_pd": 2.0,
        "effort_sp": 3.0,
        "quality_attributes": ["Maintainability", "Security"],
        "component_path": "shop/checkout",
        "origin_issue_id": "ISS-101",
    },
    {
        "id": "TD-002",
        "title": "Nightly import rewrites the whole catalog",
        "opened_on": "2024-01-15",
        "interest": "Day1",
        "interest_frequency": "Monthly",
        "pain_factor": 3,
        "contagion": "Stagnant",
        "effort_pd": 4.0,
        "effort_sp": 5.0,
        "quality_attributes": ["PerformanceEfficiency"],
        "component_path": "shop/catalog",
    },
    {
        "id": "TD-003",
        "title": "Feature flags linger after rollout",
        "opened_on": "2024-02-06",
        "interest": "Hour1",
        "interest_frequency": "Weekly",
        "pain_factor": 2,
        "contagion": "Stagnant",
        "effort_sp": 1.0,
        "effort_pd": 0.5,
        "origin_issue_id": "ISS-103",
        "resubmission_date": "2024-08-01",
    },
    {
        "id": "TD-004",
        "title": "Warehouse sync lacks retries",
        "opened_on": "2024-02-20",
        "interest": "Min15",
        "interest_frequency": "Daily",
        "pain_factor": 3,
        "contagion": "Increasing",
        "effort_sp": 2.0,
        "effort_pd": 1.0,
        "component_path": "warehouse",
    },
    {
        "id": "TD-005",
        "title": "Payment provider mock drifted from the real API",
        "opened_on": "2024-03-04",
        "closed_on": "2024-06-14",
        "interest": "Hours4",
        "interest_frequency": "Monthly",
        "pain_factor": 2,
        "contagion": "Decreasing",
        "effort_sp": 3.0,
        "effort_pd": 1.5,
        "component_path": "shop/checkout/payment",
    },
    {
        "id": "TD-006",
        "title": "No one wrote down the release steps",
        "opened_on": "2024-04-02",
        "effort_sp": 1.0,
        "resubmission_date": "2024-09-15",
    },
]


def build() -> Store:
    store = Store(
        config=StoreConfig(quota_fraction=0.15, capacity_sp=30.0),
        components=FOREST,
    )
    for issue in ISSUES:
        store.issues[issue.id] = issue
    for record in ITEMS:
        store.add_item(item_from_dict(record))
    computed_on = date(2024, 5, 1)
    for item_id in ("TD-001", "TD-002", "TD-004"):
        result = prioritize(
            store.td_items[item_id], PriorityMethod.ROI, computed_on=computed_on
        )
        store.record_prioritization(result)
    result = prioritize(
        store.td_items["TD-003"], PriorityMethod.MeanValue, computed_on=computed_on
    )
    store.record_prioritization(result)
    return store


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "path",
        nargs="?",
        default="demo_store.json",
        type=Path,
        help="where to write the store file",
    )
    args = parser.parse_args()
    store = build()
    save(store, args.path)
    print(f"wrote {args.path} ({len(store.td_items)} items, {len(store.issues)} issues)")


if __name__ == "__main__":
    main()
