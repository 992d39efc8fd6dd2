"""Acceptance gate: one test per release criterion, one printed line each.

Every test recomputes its expectation from scratch (literal tables, day
iteration, exact fractions) instead of trusting the library's own helpers,
then prints a single PASS/FAIL line even under pytest's capture.
"""

import json
import math
import random
import time
from datetime import date, timedelta
from fractions import Fraction

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from tdkit.analytics import monthly_series, naive_burden_at_month_ends
from tdkit.api import create_app
from tdkit.cli import main as cli_main
from tdkit.identification import (
    MatrixAnswer,
    Stakeholder,
    Verdict,
    classify,
    scan_title,
)
from tdkit.ingest import ImportMapping, import_issues
from tdkit.model import (
    ComponentNode,
    Contagion,
    FrequencyLevel,
    GenericIssue,
    InterestLevel,
    PriorityMethod,
    QualityAttribute,
    TDItem,
)
from tdkit.planning import plan_quota_sprint
from tdkit.prioritization import (
    PrioritizationResult,
    lhf_order,
    mean_value_priority,
    roi_band,
    roi_months,
)
from tdkit.store import Store, StoreConfig, dumps, load, save

pytestmark = pytest.mark.acceptance


def verdict(capsys, name: str, failures: list, detail: str = ""):
    status = "PASS" if not failures else "FAIL"
    suffix = f" ({detail})" if detail else ""
    # the verdict line must reach the terminal even while pytest captures
    with capsys.disabled():
        print(f"[{status}] {name}{suffix}")
    assert not failures, f"{name}: first failures: {failures[:5]}"


# independent copies of the published rate tables, typed out by hand
MINUTES = {
    InterestLevel.Min15: 15.0,
    InterestLevel.Hour1: 60.0,
    InterestLevel.Hours4: 240.0,
    InterestLevel.Day1: 480.0,
    InterestLevel.Days2Plus: 960.0,
}
PER_MONTH = {
    FrequencyLevel.Daily: 30.0,
    FrequencyLevel.Weekly: 4.5,
    FrequencyLevel.Monthly: 1.0,
    FrequencyLevel.Quarterly: 0.0027,
    FrequencyLevel.YearlyOrLess: 0.0013,
}


def band_oracle(months: float) -> int:
    if months < 1.0:
        return 5
    if months < 2.0:
        return 4
    if months < 12.0:
        return 3
    if months < 36.0:
        return 2
    return 1


def item(item_id, opened, closed=None, **extra) -> TDItem:
    return TDItem(
        id=item_id, title=item_id, opened_on=opened, closed_on=closed, **extra
    )


def test_burden_and_roi_chain(capsys):
    started = time.perf_counter()
    failures = []
    pair = roi_months(2.0, InterestLevel.Hours4, FrequencyLevel.Weekly)
    if abs(240.0 * 4.5 - 1080.0) > 1e-9 * 1080.0:
        failures.append("burden for (Hours4, Weekly) is not 1080")
    if abs(pair - 0.8889) > 1e-4 or abs(pair - 2 * 480 / 1080) > 1e-9 * pair:
        failures.append(f"ROI for 2 PD over (Hours4, Weekly) was {pair}")
    for interest in InterestLevel:
        for frequency in FrequencyLevel:
            expected_months = (2.0 * 480.0) / (MINUTES[interest] * PER_MONTH[frequency])
            got_months = roi_months(2.0, interest, frequency)
            if got_months != expected_months:
                failures.append(f"months mismatch at {interest.name}/{frequency.name}")
            if roi_band(got_months) != band_oracle(expected_months):
                failures.append(f"band mismatch at {interest.name}/{frequency.name}")
    elapsed = time.perf_counter() - started
    if elapsed >= 1.0:
        failures.append(f"took {elapsed:.2f}s, bound is 1s")
    verdict(
        capsys,
        "burden/ROI chain: worked pair at 1e-9 relative, 25-combo grid exact",
        failures,
        f"{elapsed:.3f}s < 1s",
    )


def test_roi_priority_boundaries(capsys):
    table = {
        0.999: 5,
        1.0: 4,
        1.999: 4,
        2.0: 3,
        11.999: 3,
        12.0: 2,
        35.999: 2,
        36.0: 1,
    }
    failures = [
        f"{months} -> {roi_band(months)}, expected {expected}"
        for months, expected in table.items()
        if roi_band(months) != expected
    ]
    verdict(capsys, "ROI banding: strict bounds at 1/2/12/36 months, exact", failures)


def test_mean_value_against_oracle(capsys):
    rng = random.Random(20240814)
    non_maint = [qa for qa in QualityAttribute if qa is not QualityAttribute.Maintainability]
    failures = []
    cases = 10_000
    for _ in range(cases):
        interest = rng.choice(list(InterestLevel))
        frequency = rng.choice(list(FrequencyLevel))
        pain = rng.randint(1, 5)
        contagion = rng.choice(list(Contagion))
        attrs = set(rng.sample(non_maint, rng.randint(0, len(non_maint))))
        if rng.random() < 0.5:
            attrs.add(QualityAttribute.Maintainability)
        candidate = item(
            "TD-X",
            date(2024, 1, 1),
            interest=interest,
            interest_frequency=frequency,
            pain_factor=pain,
            contagion=contagion,
            quality_attributes=frozenset(attrs),
        )
        counted = sum(1 for a in attrs if a is not QualityAttribute.Maintainability)
        scores = [
            interest.rank,
            frequency.rank,
            pain,
            min(5, max(1, counted)),
            {"Decreasing": 0, "Stagnant": 3, "Increasing": 5}[contagion.name],
        ]
        mean = Fraction(sum(scores), 5)
        expected = min(5, max(1, math.floor(mean + Fraction(1, 2))))
        got = mean_value_priority(candidate)
        if got != expected:
            failures.append(f"scores {scores}: got {got}, expected {expected}")
        if not 1 <= got <= 5:
            failures.append(f"scores {scores}: {got} out of range")
    verdict(
        capsys,
        "mean-value priority: exact against fraction oracle, output in 1..5",
        failures,
        f"{cases} random cases",
    )


def random_population(rng: random.Random, size: int, window_start: date):
    """Items opened around the window; some closed, some assessed."""
    items = []
    for index in range(size):
        opened = window_start + timedelta(days=rng.randint(-90, 36 * 30))
        closed = None
        if rng.random() < 0.45:
            closed = opened + timedelta(days=rng.randint(0, 500))
        assessed = rng.random() < 0.8
        items.append(
            item(
                f"TD-{index:03d}",
                opened,
                closed,
                interest=rng.choice(list(InterestLevel)) if assessed else None,
                interest_frequency=(
                    rng.choice(list(FrequencyLevel)) if assessed else None
                ),
            )
        )
    return items


def test_monthly_series_against_day_iteration(capsys):
    started = time.perf_counter()
    start, end = (2024, 1), (2026, 12)  # 36 months
    failures = []
    seeds = 200

    def month_days(year, month):
        first = date(year, month, 1)
        nxt = date(year + (month == 12), month % 12 + 1, 1)
        return first, nxt - timedelta(days=1)

    months = [(y, m) for y in (2024, 2025, 2026) for m in range(1, 13)]
    for seed in range(seeds):
        rng = random.Random(seed)
        items = random_population(rng, 100, date(2024, 1, 1))
        series = monthly_series(items, start, end)
        for index, (year, month) in enumerate(months):
            first, last = month_days(year, month)
            opened = sum(1 for it in items if first <= it.opened_on <= last)
            closed = sum(
                1
                for it in items
                if it.closed_on is not None and first <= it.closed_on <= last
            )
            open_set = [
                it
                for it in items
                if it.opened_on <= last
                and (it.closed_on is None or it.closed_on > last)
            ]
            burden = math.fsum(
                MINUTES[it.interest] * PER_MONTH[it.interest_frequency]
                for it in open_set
                if it.interest is not None and it.interest_frequency is not None
            )
            got = (
                series.opened[index],
                series.closed[index],
                series.open_at_end[index],
                series.burden_min_per_month[index],
            )
            if got != (opened, closed, len(open_set), burden):
                failures.append(f"seed {seed} {year}-{month:02d}: {got}")
                break
        if failures:
            break
    elapsed = time.perf_counter() - started
    if elapsed >= 30.0:
        failures.append(f"took {elapsed:.1f}s, bound is 30s")
    verdict(
        capsys,
        "monthly series: all four vectors equal the per-day oracle exactly",
        failures,
        f"{seeds} seeds x 100 items x 36 months, {elapsed:.1f}s < 30s",
    )


def test_naive_chart_always_diverges(capsys):
    start, end = (2024, 1), (2026, 12)
    failures = []
    seeds = 200
    for seed in range(seeds):
        rng = random.Random(1_000_000 + seed)
        items = random_population(rng, 100, date(2024, 1, 1))
        # a debt that was repaid mid-window: the naive chart erases its past
        items.append(
            item(
                "TD-repaid",
                date(2024, 3, rng.randint(1, 28)),
                date(2024, 7, rng.randint(1, 28)),
                interest=rng.choice(list(InterestLevel)),
                interest_frequency=rng.choice(list(FrequencyLevel)),
            )
        )
        truth = monthly_series(items, start, end).burden_min_per_month
        naive = naive_burden_at_month_ends(items, start, end)
        if not any(a != b for a, b in zip(truth, naive)):
            failures.append(f"seed {seed}: naive series matches the honest one")
    verdict(
        capsys,
        "burden chart keyed by open date diverges from the honest series",
        failures,
        f"{seeds} seeds, each store contains closed items",
    )


def test_quota_planner_invariants(capsys):
    failures = []
    instances = 10_000
    for seed in range(instances):
        rng = random.Random(seed)
        items = []
        for index in range(rng.randint(0, 10)):
            items.append(
                item(
                    f"TD-{index}",
                    date(2024, 1, 1),
                    closed=date(2024, 6, 1) if rng.random() < 0.15 else None,
                    priority=rng.randint(1, 5) if rng.random() < 0.9 else None,
                    effort_sp=rng.choice([0.5, 1, 2, 3, 5, 8]),
                )
            )
        capacity = rng.uniform(1, 60)
        quota = rng.random()
        plan = plan_quota_sprint(items, capacity, quota)
        if plan.spent_sp > plan.td_budget_sp + 1e-9:
            failures.append(f"seed {seed}: spent exceeds budget")
        shuffled = items[:]
        rng.shuffle(shuffled)
        if plan_quota_sprint(shuffled, capacity, quota).selected != plan.selected:
            failures.append(f"seed {seed}: selection depends on input order")

    # the low-hanging-fruit ranking must be a total order; check the axioms
    # exhaustively on small sets built to contain ties on every axis
    def key(it):
        return (-it.priority, it.effort_sp, it.id)

    for seed in range(50):
        rng = random.Random(7_000 + seed)
        population = [
            item(
                f"TD-{index}",
                date(2024, 1, 1),
                priority=rng.randint(4, 5),
                effort_sp=rng.choice([1, 2]),
            )
            for index in range(8)
        ]
        for a in population:
            for b in population:
                le_ab = key(a) <= key(b)
                le_ba = key(b) <= key(a)
                if not (le_ab or le_ba):
                    failures.append(f"order not total for {a.id},{b.id}")
                if le_ab and le_ba and a.id != b.id:
                    failures.append(f"distinct items tie: {a.id},{b.id}")
                for c in population:
                    if le_ab and key(b) <= key(c) and not key(a) <= key(c):
                        failures.append("transitivity broken")
        ordered = lhf_order(population)
        for _ in range(20):
            shuffled = population[:]
            rng.shuffle(shuffled)
            if lhf_order(shuffled) != ordered:
                failures.append(f"set {seed}: ranking depends on input order")
    verdict(
        capsys,
        "quota planner: spent<=budget, permutation-invariant, ranking is a total order",
        failures,
        f"{instances} planner instances, 50 eight-item order checks",
    )


INDICATOR_TITLES = [
    ("Optimize the image cache", {"optimize"}),
    ("Optimizing slow SQL queries", {"optimize"}),
    ("Optimization of the build pipeline", {"optimize"}),
    ("Improve error handling in the importer", {"improve"}),
    ("Improving startup time", {"improve"}),
    ("Improvement of the session handling", {"improve"}),
    ("Revise the retry policy", {"revise"}),
    ("Revising the pricing rules", {"revise"}),
    ("Revision of the API error codes", {"revise"}),
    ("Add tests for the currency module", {"test"}),
    ("Testing strategy for nightly jobs", {"test"}),
    ("Tests are flaky on slow runners", {"test"}),
    ("Document the deployment steps", {"document"}),
    ("Documentation of the admin endpoints", {"document"}),
    ("Documenting the migration path", {"document"}),
    ("Performance of the search page is poor", {"performance"}),
    ("Performance budget for the report generator", {"performance"}),
    ("Upgrade PostgreSQL to 16", {"upgrade"}),
    ("Upgrading the build agents", {"upgrade"}),
    ("Update third-party libraries", {"update"}),
    ("Updating the TLS configuration", {"update"}),
    ("Updated dependency pins needed", {"update"}),
    ("Refactor the session module", {"refactor"}),
    ("Refactoring of the invoice exporter", {"refactor"}),
    ("Clean up dead feature flags", {"clean up"}),
    ("Cleaning up orphaned records", {"clean up"}),
    ("Cleanup of the temp directories", {"clean up"}),
    ("Convert the config to YAML", {"convert"}),
    ("Converting measurements to SI units", {"convert"}),
    ("Optimize and refactor the export job", {"optimize", "refactor"}),
]

CONTROL_TITLES = [
    "Login button misaligned on mobile",
    "Crash when uploading large attachments",
    "Currency conversion fails for JPY",
    "Add two-factor authentication",
    "Support the latest TLS ciphers",
    "Attestation service returns 500",
    "Wrong totals on the invoice page",
    "Dark mode for the settings screen",
    "Export to CSV drops umlauts",
    "Password reset email never arrives",
    "Pagination skips the last row",
    "Search results flicker while typing",
    "Add Danish translations",
    "Checkout blocks orders above 10k",
    "Contest winners page shows stale data",
    "Protect the admin routes with SSO",
    "Price rounding differs between cart and invoice",
    "Session expires during long uploads",
    "Add webhook retries with backoff",
    "Show shipment tracking on the order page",
    "Cleanliness audit for the warehouse module",
    "Grant analysts read-only database access",
    "Missing currency symbol for CHF",
    "Deadlock when two users merge the same ticket",
    "Allow emoji in project names",
    "Wrong timezone in the audit log",
    "Checkout button overlaps the footer on small screens",
    "Notify the on-call engineer about failed jobs",
    "Round-robin assignment for new leads",
    "Conversation history loads slowly",
]

# who-wants-it / who-pays-for-it scenarios, one per decision branch
D = Stakeholder.Developers
T = Stakeholder.Team
IT = Stakeholder.ITDepartment
C = Stakeholder.Customer
U = Stakeholder.Users
CO = Stakeholder.Company

CLASSIFY_SCENARIOS = [
    # hard-to-read code slows the team down; a manual step runs every morning
    ((frozenset({D}), frozenset({T}), True, False), Verdict.TeamLevelTD),
    # log noise causes no extra work, the developers are merely annoyed
    ((frozenset({D}), frozenset(), False, True), Verdict.TeamLevelTD),
    # slow boot: users shrug it off, developers reboot several times an hour
    ((frozenset({D, U}), frozenset({D}), True, False), Verdict.TeamLevelTD),
    # users saw the error too and the customer decides to expand the handling
    ((frozenset({U, C}), frozenset({C}), False, False), Verdict.FunctionalRequirement),
    # the database every IT team relies on needs the update
    ((frozenset({T, IT}), frozenset({IT}), False, False), Verdict.HigherLevelTD),
    # the company standardizes all teams onto one issue tracker
    ((frozenset({CO}), frozenset({CO}), False, False), Verdict.HigherLevelTD),
    # the team buys its own monitoring licenses out of its own budget
    ((frozenset({T}), frozenset({T}), True, False), Verdict.TeamLevelTD),
]


def test_indicator_corpus_and_classification(capsys):
    failures = []
    covered = set()
    for title, expected in INDICATOR_TITLES:
        got = set(scan_title(title))
        covered |= got
        if got != expected:
            failures.append(f"{title!r}: found {sorted(got)}, expected {sorted(expected)}")
    if len(covered) != 11:
        failures.append(f"corpus covers {len(covered)} of 11 terms: {sorted(covered)}")
    for title in CONTROL_TITLES:
        got = scan_title(title)
        if got:
            failures.append(f"control {title!r} hit {got}")
    for number, ((wants, pays, extra, pain), expected) in enumerate(
        CLASSIFY_SCENARIOS, start=1
    ):
        answer = MatrixAnswer(
            wants_fix=wants,
            pays_for_fix=pays,
            causes_team_extra_work=extra,
            pain_only=pain,
        )
        got = classify(answer).verdict
        if got is not expected:
            failures.append(f"scenario {number}: {got.name}, expected {expected.name}")
    verdict(
        capsys,
        "identification: 30-title corpus, 30 silent controls, 7 classification scenarios",
        failures,
        f"{len(INDICATOR_TITLES)} positive titles, {len(CONTROL_TITLES)} controls",
    )


WORDS = (
    "cache invoice retry importer queue scheduler parser exporter session "
    "checkout billing search index worker pipeline mapper adapter"
).split()


def random_store(seed: int) -> Store:
    rng = random.Random(seed)
    forest = (
        ComponentNode(
            "shop",
            (ComponentNode("checkout", (ComponentNode("payment"),)), ComponentNode("catalog")),
        ),
        ComponentNode("warehouse"),
    )
    paths = ["shop", "shop/checkout", "shop/checkout/payment", "shop/catalog", "warehouse"]
    store = Store(
        config=StoreConfig(
            frequency_profile=rng.choice(["default", "calendar"]),
            quota_fraction=rng.choice([None, 0.1, 0.2]),
            capacity_sp=rng.choice([None, 20.0, 30.0]),
        ),
        components=forest,
    )
    for index in range(100):
        opened = date(2023, 1, 1) + timedelta(days=rng.randint(0, 700))
        store.issues[f"ISS-{seed}-{index}"] = GenericIssue(
            id=f"ISS-{seed}-{index}",
            title=f"{rng.choice(WORDS)} issue {index}",
            opened_on=opened,
            closed_on=opened + timedelta(days=rng.randint(1, 90))
            if rng.random() < 0.4
            else None,
            labels=frozenset(rng.sample(["TD", "backend", "ui"], rng.randint(0, 2))),
            talked_about_td=rng.random() < 0.5,
            creates_td=rng.choice([None, True, False]),
            extras={"Team": rng.choice(["Red", "Blue"])},
        )
    issue_ids = list(store.issues)
    for index in range(1000):
        item_id = f"TD-{seed}-{index:04d}"
        opened = date(2023, 1, 1) + timedelta(days=rng.randint(0, 700))
        assessed = rng.random() < 0.7
        store.td_items[item_id] = TDItem(
            id=item_id,
            title=f"{rng.choice(WORDS)} debt {index}",
            description=rng.choice(["", "we did it quickly", "umlauts: äöü"]),
            opened_on=opened,
            closed_on=opened + timedelta(days=rng.randint(0, 400))
            if rng.random() < 0.3
            else None,
            interest=rng.choice(list(InterestLevel)) if assessed else None,
            interest_frequency=rng.choice(list(FrequencyLevel)) if assessed else None,
            contagion=rng.choice(list(Contagion)) if assessed else None,
            pain_factor=rng.randint(1, 5) if assessed else None,
            priority=rng.randint(1, 5) if rng.random() < 0.8 else None,
            effort_sp=rng.choice([0.5, 1.0, 2.0, 3.0, 5.0, 8.0, None]),
            effort_pd=rng.choice([0.25, 0.5, 1.0, 2.0, 4.0, None]),
            quality_attributes=frozenset(
                rng.sample(list(QualityAttribute), rng.randint(0, 3))
            ),
            resubmission_date=opened + timedelta(days=rng.randint(30, 300))
            if rng.random() < 0.4
            else None,
            component_path=rng.choice(paths) if rng.random() < 0.6 else None,
            origin_issue_id=rng.choice(issue_ids) if rng.random() < 0.2 else None,
            risks_of_nonrepayment=("slow builds",) if rng.random() < 0.3 else (),
            breaking_change=rng.random() < 0.1,
            comments=((opened, "carried over from review"),)
            if rng.random() < 0.25
            else (),
        )
        store.versions[item_id] = rng.randint(1, 7)
    item_ids = list(store.td_items)
    store.prioritizations = tuple(
        PrioritizationResult(
            item_id=rng.choice(item_ids),
            method=rng.choice(list(PriorityMethod)),
            priority=rng.randint(1, 5),
            roi_months=rng.choice([None, 0.9, 14.2]),
            computed_on=date(2024, 5, 1),
        )
        for _ in range(10)
    )
    return store


def synthetic_export() -> str:
    rng = random.Random(424242)
    lines = ["Key,Summary,Opened,Labels,Type,Points"]
    for index in range(500):
        if index % 50 == 17:
            key = ""  # missing id
        elif index % 97 == 5:
            key = f"ROW-{index - 1:04d}"  # duplicate of the previous row
        else:
            key = f"ROW-{index:04d}"
        opened = (
            "31.12.2023"
            if index % 83 == 7
            else (date(2024, 1, 1) + timedelta(days=rng.randint(0, 300))).isoformat()
        )
        label = rng.choice(["TD", "TS", "Non-TD", "backend", ""])
        kind = rng.choice(["Story", "Bug", "Epic", "Task"])
        lines.append(f"{key},{rng.choice(WORDS)} work {index},{opened},{label},{kind},{rng.randint(1, 8)}")
    return "\n".join(lines) + "\n"


def test_store_round_trip_and_import_determinism(tmp_path, capsys):
    failures = []
    seeds = 50
    for seed in range(seeds):
        store = random_store(seed)
        path = tmp_path / f"store-{seed}.json"
        save(store, path)
        loaded = load(path)
        if loaded != store:
            failures.append(f"seed {seed}: loaded store differs")
        elif dumps(loaded) != dumps(store):
            failures.append(f"seed {seed}: serialization drifts")

    export = tmp_path / "export.csv"
    text = synthetic_export()
    if text != synthetic_export():
        failures.append("synthetic export generator is not deterministic")
    export.write_text(text, encoding="utf-8")
    mapping = ImportMapping(
        bindings={
            "id": "Key",
            "title": "Summary",
            "opened_on": "Opened",
            "labels": "Labels",
            "issue_type": "Type",
        }
    )
    first_issues, first_report = import_issues(export, mapping)
    second_issues, second_report = import_issues(export, mapping)
    if first_issues != second_issues:
        failures.append("imported issues differ between runs")
    if first_report.to_text().encode() != second_report.to_text().encode():
        failures.append("import report is not byte-identical between runs")
    if not first_report.skipped:
        failures.append("synthetic export produced no skipped rows to account for")
    if first_report.imported + len(first_report.skipped) != 500:
        failures.append("report does not account for all 500 rows")
    verdict(
        capsys,
        "store round-trip identity and byte-identical import report",
        failures,
        f"{seeds} seeds x 1000 items; 500-row export",
    )


PARITY_ADD = {
    "TD-01": {"interest": "Hours4", "interest_frequency": "Weekly", "effort_pd": 2.0, "effort_sp": 3.0},
    "TD-02": {"interest": "Hour1", "interest_frequency": "Daily", "pain_factor": 3, "contagion": "Stagnant"},
    "TD-03": {"effort_sp": 5.0, "priority": 3},
    "TD-04": {"effort_sp": 1.0},
    "TD-05": {"effort_sp": 2.0, "priority": 5},
    "TD-06": {"interest": "Min15", "interest_frequency": "Quarterly", "effort_pd": 4.0},
    "TD-07": {"interest": "Day1", "interest_frequency": "Monthly", "pain_factor": 5, "contagion": "Increasing"},
    "TD-08": {"effort_sp": 8.0},
}

PARITY_EDITS = [
    ("TD-01", {"pain_factor": 4}, 1),
    ("TD-02", {"effort_sp": 2.0}, 1),
    ("TD-03", {"resubmission_date": "2024-09-01"}, 1),
    ("TD-04", {"closed_on": "2024-06-01"}, 1),
]

PARITY_PRIORITIZE = [
    ("TD-01", "roi", None, "2024-05-01"),
    ("TD-02", "mean", None, "2024-05-01"),
    ("TD-03", "guess", 4, "2024-05-01"),
    ("TD-06", "roi", None, "2024-05-02"),
    ("TD-07", "mean", None, "2024-05-02"),
    ("TD-08", "guess", 2, "2024-05-02"),
]

PARITY_FINAL_EDIT = ("TD-06", {"quality_attributes": ["Security"]}, 2)


def replay_via_cli(store_path) -> bytes:
    runner = CliRunner()

    def run(*args):
        result = runner.invoke(cli_main, ["--store", str(store_path), *args])
        assert result.exit_code == 0, result.output

    run("init")
    wire_flags = {
        "interest": "--interest",
        "interest_frequency": "--frequency",
        "effort_pd": "--effort-pd",
        "effort_sp": "--effort-sp",
        "pain_factor": "--pain",
        "contagion": "--contagion",
        "priority": "--priority",
        "resubmission_date": "--resubmission",
        "closed_on": "--closed-on",
        "description": "--description",
    }
    for item_id, attrs in PARITY_ADD.items():
        args = ["add", item_id, f"debt {item_id}", "--opened-on", "2024-01-10"]
        for key, value in attrs.items():
            args.extend([wire_flags[key], str(value)])
        run(*args)
    for item_id, changes, version in PARITY_EDITS:
        args = ["edit", item_id, "--version", str(version)]
        for key, value in changes.items():
            args.extend([wire_flags[key], str(value)])
        run(*args)
    for item_id, method, value, computed_on in PARITY_PRIORITIZE:
        args = ["prioritize", item_id, "--method", method, "--computed-on", computed_on]
        if value is not None:
            args.extend(["--value", str(value)])
        run(*args)
    item_id, changes, version = PARITY_FINAL_EDIT
    run("edit", item_id, "--version", str(version), "--qa", changes["quality_attributes"][0])
    return store_path.read_bytes()


def replay_via_api(store_path) -> bytes:
    runner = CliRunner()
    result = runner.invoke(cli_main, ["--store", str(store_path), "init"])
    assert result.exit_code == 0, result.output
    with TestClient(create_app(store_path)) as client:
        for item_id, attrs in PARITY_ADD.items():
            payload = {
                "id": item_id,
                "title": f"debt {item_id}",
                "opened_on": "2024-01-10",
                **attrs,
            }
            response = client.post("/items", json=payload)
            assert response.status_code == 201, response.text
        for item_id, changes, version in PARITY_EDITS:
            response = client.patch(
                f"/items/{item_id}", json={"version": version, **changes}
            )
            assert response.status_code == 200, response.text
        for item_id, method, value, computed_on in PARITY_PRIORITIZE:
            body = {"method": method, "computed_on": computed_on}
            if value is not None:
                body["value"] = value
            response = client.post(f"/items/{item_id}/prioritize", json=body)
            assert response.status_code == 200, response.text
        item_id, changes, version = PARITY_FINAL_EDIT
        response = client.patch(f"/items/{item_id}", json={"version": version, **changes})
        assert response.status_code == 200, response.text
    return store_path.read_bytes()


def test_cli_api_parity(tmp_path, capsys):
    failures = []
    commands = 1 + len(PARITY_ADD) + len(PARITY_EDITS) + len(PARITY_PRIORITIZE) + 1
    via_cli = replay_via_cli(tmp_path / "cli.json")
    via_api = replay_via_api(tmp_path / "api.json")
    if via_cli != via_api:
        failures.append("store files differ between the CLI and API replays")
    verdict(
        capsys,
        "CLI/API parity: the same command script yields byte-identical stores",
        failures,
        f"{commands}-command script",
    )
