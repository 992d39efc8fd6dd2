"""Enums, item schema validation, and component hierarchy behaviour."""

from datetime import date

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tdkit.model import (
    ComponentNode,
    FrequencyLevel,
    FrequencyMapping,
    InterestLevel,
    PriorityMethod,
    QualityAttribute,
    forest_contains,
    forest_paths,
    path_is_within,
    resolve_quality_attribute,
    validate_item,
)

from conftest import SHOP_FOREST, make_item


def test_interest_levels_rank_and_label():
    assert [lvl.rank for lvl in InterestLevel] == [1, 2, 3, 4, 5]
    assert InterestLevel.Min15.label == "15 min."
    assert InterestLevel.Days2Plus.label == "≥ 2 days"


def test_frequency_levels_rank_most_frequent_highest():
    assert FrequencyLevel.Daily.rank == 5
    assert FrequencyLevel.YearlyOrLess.rank == 1
    assert FrequencyLevel.Weekly.label == "1x/week"


def test_default_mapping_tables():
    m = FrequencyMapping.default()
    assert m.interest_minutes[InterestLevel.Hours4] == 240.0
    assert m.per_month[FrequencyLevel.Weekly] == 4.5
    assert m.per_month[FrequencyLevel.Quarterly] == 0.0027
    assert m.pd_minutes == 480.0


def test_calendar_mapping_fixes_rare_frequencies():
    m = FrequencyMapping.calendar_consistent()
    assert m.per_month[FrequencyLevel.Quarterly] == pytest.approx(1 / 3)
    assert m.per_month[FrequencyLevel.YearlyOrLess] == pytest.approx(1 / 12)
    # the frequent end is unchanged
    assert m.per_month[FrequencyLevel.Daily] == 30.0


def test_mapping_rejects_non_monotone_tables():
    base = FrequencyMapping.default()
    bad = dict(base.per_month)
    bad[FrequencyLevel.Weekly] = 0.5  # less frequent than monthly: nonsense
    with pytest.raises(ValueError):
        FrequencyMapping(interest_minutes=base.interest_minutes, per_month=bad)


def test_mapping_rejects_nonpositive_minutes():
    base = FrequencyMapping.default()
    bad = dict(base.interest_minutes)
    bad[InterestLevel.Min15] = 0.0
    with pytest.raises(ValueError):
        FrequencyMapping(interest_minutes=bad, per_month=base.per_month)


def test_from_profile():
    assert FrequencyMapping.from_profile("default").profile == "default"
    assert FrequencyMapping.from_profile("calendar").profile == "calendar"
    with pytest.raises(ValueError):
        FrequencyMapping.from_profile("lunar")


@pytest.mark.parametrize(
    "label, expected",
    [
        ("Security", QualityAttribute.Security),
        ("security", QualityAttribute.Security),
        ("performance", QualityAttribute.PerformanceEfficiency),
        ("Usability", QualityAttribute.InteractionCapability),
        ("  maintainability ", QualityAttribute.Maintainability),
    ],
)
def test_resolve_quality_attribute(label, expected):
    assert resolve_quality_attribute(label) is expected


def test_resolve_quality_attribute_unknown():
    with pytest.raises(ValueError):
        resolve_quality_attribute("shininess")


def test_valid_item_has_no_violations():
    assert validate_item(make_item()) == []


def test_priority_range_checked():
    assert validate_item(make_item(priority=6)) == ["priority out of range 1..5"]
    assert validate_item(make_item(priority=0)) == ["priority out of range 1..5"]
    assert validate_item(make_item(priority=5)) == []


def test_pain_factor_range_checked():
    assert validate_item(make_item(pain_factor=0)) == ["pain_factor out of range 1..5"]


def test_closed_before_opened_rejected():
    bad = make_item(opened_on=date(2024, 3, 1), closed_on=date(2024, 2, 1))
    assert "closed_on before opened_on" in validate_item(bad)
    ok = make_item(opened_on=date(2024, 3, 1), closed_on=date(2024, 3, 1))
    assert validate_item(ok) == []


def test_negative_efforts_rejected():
    assert validate_item(make_item(effort_sp=-1)) == ["effort_sp negative"]
    assert validate_item(make_item(effort_pd=-0.5)) == ["effort_pd negative"]


def test_roi_method_requires_inputs():
    bad = make_item(priority=3, priority_method=PriorityMethod.ROI)
    assert validate_item(bad) == [
        "effort_pd required for ROI priority",
        "interest required for ROI priority",
        "interest_frequency required for ROI priority",
    ]


def test_is_open():
    assert make_item().is_open
    assert not make_item(closed_on=date(2024, 2, 1)).is_open


def test_component_walk_and_find():
    shop = SHOP_FOREST[0]
    assert list(shop.walk()) == [
        "shop",
        "shop/checkout",
        "shop/checkout/payment",
        "shop/catalog",
    ]
    assert shop.find("shop/checkout/payment").name == "payment"
    assert shop.find("shop/billing") is None
    assert shop.find("warehouse") is None


def test_component_duplicate_children_rejected():
    with pytest.raises(ValueError):
        ComponentNode("a", (ComponentNode("x"), ComponentNode("x")))


def test_forest_helpers():
    assert forest_contains(SHOP_FOREST, "warehouse")
    assert forest_contains(SHOP_FOREST, "shop/catalog")
    assert not forest_contains(SHOP_FOREST, "shop/warehouse")
    assert forest_paths(SHOP_FOREST) == [
        "shop",
        "shop/checkout",
        "shop/checkout/payment",
        "shop/catalog",
        "warehouse",
    ]


def test_path_is_within():
    assert path_is_within("shop/checkout/payment", "shop/checkout")
    assert path_is_within("shop/checkout", "shop/checkout")
    assert not path_is_within("shop/checkout", "shop/checkout/payment")
    assert not path_is_within("shopfront", "shop")


segments = st.lists(
    st.text(alphabet="abcxyz", min_size=1, max_size=3), min_size=1, max_size=4
)


@given(segments, segments)
def test_path_is_within_matches_segment_prefix(cand, anc):
    assert path_is_within("/".join(cand), "/".join(anc)) == (cand[: len(anc)] == anc)
