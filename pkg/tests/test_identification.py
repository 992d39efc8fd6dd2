"""Title/phrase scanners, stakeholder classification, and the lint helpers."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tdkit.errors import UnknownId
from tdkit.identification import (
    CROSS_CUTTING_STEMS,
    DEFAULT_INDICATOR_STEMS,
    DEFAULT_PHRASEBOOK,
    Classification,
    MatrixAnswer,
    Stakeholder,
    Verdict,
    bootstrap_tag,
    classify,
    lint_component,
    lint_prevention,
    load_patterns,
    load_stems,
    scan_issue,
    scan_text,
    scan_title,
)
from tdkit.model import IssueType

from conftest import answered_issue, make_issue


@pytest.mark.parametrize(
    "title, expected",
    [
        ("Optimize the cache layer", ["optimize"]),
        ("Optimizing DB queries", ["optimize"]),
        ("Improve error handling", ["improve"]),
        ("Improvements to startup time", ["improve"]),
        ("Revise the retry policy", ["revise"]),
        ("Add tests for the parser", ["test"]),
        ("Testing harness is flaky", ["test"]),
        ("Document the deploy steps", ["document"]),
        ("Documentation for the admin API", ["document"]),
        ("Performance of the search page", ["performance"]),
        ("Upgrade to Postgres 16", ["upgrade"]),
        ("Upgrading CI runners", ["upgrade"]),
        ("Update 3rd-party libraries", ["update"]),
        ("Updating the schema documentation", ["document", "update"]),
        ("Refactor the session module", ["refactor"]),
        ("Clean up dead feature flags", ["clean up"]),
        ("Cleanup of orphaned records", ["clean up"]),
        ("Cleaning up the build scripts", ["clean up"]),
        ("Convert config to YAML", ["convert"]),
    ],
)
def test_scan_title_matches(title, expected):
    assert scan_title(title) == expected


@pytest.mark.parametrize(
    "title",
    [
        "Currency conversion fails for JPY",  # convers != convert
        "Login button misaligned on mobile",
        "Add two-factor authentication",
        "Support the latest TLS ciphers",
        "Attestation endpoint returns 500",
        "Cleanliness report for QA",  # "clean" alone is not "clean up"
        "Crash when uploading large files",
    ],
)
def test_scan_title_controls_stay_silent(title):
    assert scan_title(title) == []


def test_scan_title_deduplicates_and_sorts():
    got = scan_title("Update deps, update docs, refactor and improve the build")
    assert got == ["improve", "refactor", "update"]


def test_scan_title_custom_stems():
    assert scan_title("Rewrite the parser", {"rewrit": "rewrite"}) == ["rewrite"]
    assert scan_title("Update the parser", {"rewrit": "rewrite"}) == []


@pytest.mark.parametrize(
    "text, expected",
    [
        ("we did it quickly before the demo", ["did it quickly"]),
        ("this is hard-coded for now", ["hard-coded"]),
        ("the path is hardcoded", ["hard-coded"]),
        ("the path is hard coded", ["hard-coded"]),
        ("we shouldn't have done that", ["shouldn't have done"]),
        ("we shouldn’t have done that", ["shouldn't have done"]),
        ("next time we should do it right", ["do it right"]),
        ("too many special cases in here", ["special cases"]),
        ("the order doesn't matter here", ["doesn't matter"]),
        ("forgot to expand the mapping table", ["forgot to expand"]),
        ("it is not optimal but works", ["not optimal"]),
        ("I thought that would be good enough", ["thought that would be good"]),
        ("nothing suspicious in this text", []),
    ],
)
def test_scan_text(text, expected):
    assert scan_text(text) == expected


def test_scan_text_keeps_phrasebook_order():
    text = "not optimal, and we did it quickly"
    assert scan_text(text) == ["did it quickly", "not optimal"]
    assert list(DEFAULT_PHRASEBOOK).index("did it quickly") < list(
        DEFAULT_PHRASEBOOK
    ).index("not optimal")


def test_scan_issue_combines_title_and_description():
    issue = make_issue(
        "ISS-9",
        title="Refactor the invoice exporter",
        description="we did it quickly and it is not optimal",
    )
    hit = scan_issue(issue)
    assert hit.issue_id == "ISS-9"
    assert hit.matched_terms == ("refactor",)
    assert hit.matched_phrases == ("did it quickly", "not optimal")
    assert hit.score == 3


def test_scan_issue_none_when_clean():
    assert scan_issue(make_issue(title="Fix typo on login page")) is None


def test_load_stems_and_patterns(tmp_path):
    stems = tmp_path / "stems.txt"
    stems.write_text("# comment\nrewrit = rewrite\nmigrat\n\n")
    assert load_stems(stems) == {"rewrit": "rewrite", "migrat": "migrat"}
    phrases = tmp_path / "phrases.txt"
    phrases.write_text("quick fix\n# noise\nband-aid\n")
    assert load_patterns(phrases) == ["quick fix", "band-aid"]


# --- stakeholder classification ---


def answer(wants, pays=(), extra_work=False, pain_only=False):
    return MatrixAnswer(
        wants_fix=frozenset(wants),
        pays_for_fix=frozenset(pays),
        causes_team_extra_work=extra_work,
        pain_only=pain_only,
    )


def test_customer_paid_fix_is_functional_requirement():
    got = classify(
        answer({Stakeholder.Customer}, {Stakeholder.Customer}, extra_work=True)
    )
    assert got.verdict is Verdict.FunctionalRequirement


def test_user_wanted_customer_paid_is_functional_requirement():
    got = classify(answer({Stakeholder.Users}, {Stakeholder.Customer}))
    assert got.verdict is Verdict.FunctionalRequirement


def test_team_paid_extra_work_is_team_td():
    got = classify(answer({Stakeholder.Developers}, {Stakeholder.Team}, True))
    assert got.verdict is Verdict.TeamLevelTD


def test_developer_paid_extra_work_is_team_td():
    got = classify(answer({Stakeholder.Team}, {Stakeholder.Developers}, True))
    assert got.verdict is Verdict.TeamLevelTD


def test_company_paid_is_higher_level_td():
    got = classify(answer({Stakeholder.Team}, {Stakeholder.Company}, True))
    assert got.verdict is Verdict.HigherLevelTD


def test_it_department_paid_is_higher_level_td():
    got = classify(answer({Stakeholder.Developers}, {Stakeholder.ITDepartment}))
    assert got.verdict is Verdict.HigherLevelTD


def test_pain_only_is_team_td():
    got = classify(answer({Stakeholder.Developers}, pain_only=True))
    assert got.verdict is Verdict.TeamLevelTD
    assert "pain" in got.rationale


def test_nothing_applies_is_not_td():
    got = classify(answer({Stakeholder.Developers}))
    assert got.verdict is Verdict.NotTD


def test_wants_fix_must_not_be_empty():
    with pytest.raises(ValueError):
        MatrixAnswer(wants_fix=frozenset())


def test_classification_needs_rationale():
    with pytest.raises(ValueError):
        Classification(Verdict.NotTD, "")


st_stakeholders = st.frozensets(st.sampled_from(list(Stakeholder)), max_size=4)


@given(
    st_stakeholders.filter(bool),
    st_stakeholders,
    st.booleans(),
    st.booleans(),
)
def test_classify_is_total_and_explained(wants, pays, extra, pain):
    got = classify(answer(wants, pays, extra, pain))
    assert got.verdict in Verdict
    assert got.rationale


# --- prevention lint, bootstrap tagging, component counter-test ---


def test_lint_prevention_complete_issue_is_clean():
    assert lint_prevention(answered_issue()) == []


def test_lint_prevention_reports_every_gap():
    findings = lint_prevention(make_issue())
    assert findings == [
        "talked_about_td unchecked",
        "is_td_repayment unanswered",
        "quality attributes not discussed",
        "drawbacks not discussed",
        "risks not discussed",
        "alternatives not discussed",
    ]


def test_lint_prevention_requires_dismantling_link():
    issue = answered_issue(creates_td=True)
    assert lint_prevention(issue) == ["creates TD but no dismantling issue linked"]
    linked = answered_issue(creates_td=True, linked_td_ids=("TD-7",))
    assert lint_prevention(linked) == []


def test_lint_prevention_rejects_td_issues():
    with pytest.raises(ValueError):
        lint_prevention(make_issue(issue_type=IssueType.TechnicalDebt))


def test_bootstrap_tag_applies_exclusive_labels():
    issues = [
        make_issue("A", labels=frozenset({"Non-TD", "ui"})),
        make_issue("B"),
        make_issue("C"),
    ]
    tagged = bootstrap_tag(issues, {"A": True, "B": False})
    by_id = {i.id: i for i in tagged}
    assert by_id["A"].labels == frozenset({"TD", "ui"})
    assert by_id["B"].labels == frozenset({"Non-TD"})
    assert by_id["C"].labels == frozenset()


def test_bootstrap_tag_custom_labels():
    tagged = bootstrap_tag(
        [make_issue("A")], {"A": True}, td_label="TS", non_td_label="Non-TS"
    )
    assert tagged[0].labels == frozenset({"TS"})


def test_bootstrap_tag_unknown_id():
    with pytest.raises(UnknownId):
        bootstrap_tag([make_issue("A")], {"B": True})


def test_lint_component_accepts_real_component():
    finding = lint_component("checkout", functional_change_possible=True)
    assert finding.accepted
    assert finding.warnings == ()


def test_lint_component_warns_on_cross_cutting_name():
    finding = lint_component("Logging", functional_change_possible=True)
    assert finding.accepted
    assert any("logging" in w for w in finding.warnings)


def test_lint_component_rejects_without_functional_change():
    finding = lint_component("test suite", functional_change_possible=False)
    assert not finding.accepted
    assert finding.reason
    assert "test" in finding.warnings[0]


def test_cross_cutting_stems_cover_usual_suspects():
    assert {"test", "logging", "documentation"} <= set(CROSS_CUTTING_STEMS)


def test_default_stem_table_labels_are_words():
    # every label must itself be reported when used as a plain title
    for label in DEFAULT_INDICATOR_STEMS.values():
        assert label in scan_title(f"please {label} this")
