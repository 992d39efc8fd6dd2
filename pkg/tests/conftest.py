"""Shared builders and strategies for the test suite."""

from __future__ import annotations

from datetime import date, timedelta

import pytest
from hypothesis import strategies as st

from tdkit.model import (
    ComponentNode,
    Contagion,
    FrequencyLevel,
    GenericIssue,
    InterestLevel,
    IssueType,
    QualityAttribute,
    TDItem,
)


def make_item(item_id: str = "TD-1", **overrides) -> TDItem:
    fields = {
        "id": item_id,
        "title": f"debt item {item_id}",
        "opened_on": date(2024, 1, 10),
    }
    fields.update(overrides)
    return TDItem(**fields)


def make_issue(issue_id: str = "ISS-1", **overrides) -> GenericIssue:
    fields = {
        "id": issue_id,
        "title": f"issue {issue_id}",
        "opened_on": date(2024, 1, 5),
    }
    fields.update(overrides)
    return GenericIssue(**fields)


def answered_issue(issue_id: str = "ISS-1", **overrides) -> GenericIssue:
    """An issue with every prevention attribute filled in."""
    fields = {
        "issue_type": IssueType.Functional,
        "talked_about_td": True,
        "is_td_repayment": False,
        "creates_td": False,
        "quality_attributes_discussed": "security reviewed",
        "drawbacks": "none found",
        "risks": "low",
        "alternatives": "rejected library swap",
    }
    fields.update(overrides)
    return make_issue(issue_id, **fields)


SHOP_FOREST = (
    ComponentNode(
        "shop",
        (
            ComponentNode("checkout", (ComponentNode("payment"),)),
            ComponentNode("catalog"),
        ),
    ),
    ComponentNode("warehouse"),
)


st_interest = st.sampled_from(list(InterestLevel))
st_frequency = st.sampled_from(list(FrequencyLevel))
st_contagion = st.sampled_from(list(Contagion))
st_quality_attributes = st.frozensets(
    st.sampled_from(list(QualityAttribute)), max_size=5
)
st_day = st.dates(min_value=date(2022, 1, 1), max_value=date(2025, 12, 31))


@st.composite
def st_assessed_item(draw, item_id: str | None = None):
    """An item with all scoring attributes present."""
    opened = draw(st_day)
    closed = draw(
        st.one_of(st.none(), st.integers(min_value=0, max_value=600).map(
            lambda days: opened + timedelta(days=days)
        ))
    )
    return make_item(
        item_id or draw(st.uuids().map(lambda u: f"TD-{u.hex[:8]}")),
        opened_on=opened,
        closed_on=closed,
        interest=draw(st_interest),
        interest_frequency=draw(st_frequency),
        contagion=draw(st_contagion),
        pain_factor=draw(st.integers(min_value=1, max_value=5)),
        quality_attributes=draw(st_quality_attributes),
        effort_sp=draw(st.integers(min_value=1, max_value=16).map(lambda n: n / 2)),
        effort_pd=draw(st.integers(min_value=1, max_value=40).map(lambda n: n / 4)),
        priority=draw(st.integers(min_value=1, max_value=5)),
    )


@pytest.fixture
def store_path(tmp_path):
    return tmp_path / "store.json"
