"""Finding technical-debt candidates in a backlog and deciding what counts as TD.

Scanner output is advisory only: hits never auto-create TD items, the team
decides. Matching is deliberately dumb (fixed stem prefixes, keyword phrase
patterns) so results stay reproducible across runs and machines.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Mapping, Sequence

from .errors import UnknownId
from .model import GenericIssue, IssueType

#: Indicator stems for title scanning, mapped to the canonical term reported.
#: A word matches when it starts with the stem ("refactoring" -> "refactor").
DEFAULT_INDICATOR_STEMS: dict[str, str] = {
    "optimiz": "optimize",
    "improv": "improve",
    "revis": "revise",
    "test": "test",
    "document": "document",
    "performance": "performance",
    "upgrad": "upgrade",
    "updat": "update",
    "refactor": "refactor",
    "clean up": "clean up",
    "convert": "convert",
}

#: Keyword patterns distilled from phrases that come up when a debt-laden
#: issue is discussed ("we did it quickly back then", ...).
DEFAULT_PHRASEBOOK: tuple[str, ...] = (
    "did it quickly",
    "shouldn't have done",
    "do it right",
    "doing it right",
    "hard-coded",
    "forgot to expand",
    "thought that would be good",
    "not optimal",
    "special cases",
    "doesn't matter",
)


def load_patterns(path) -> list[str]:
    """Read one pattern per line from a plain-text config file; '#' comments."""
    patterns = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            stripped = line.strip()
            if stripped and not stripped.startswith("#"):
                patterns.append(stripped)
    return patterns


def load_stems(path) -> dict[str, str]:
    """Read a stem list: each line is ``stem`` or ``stem = label``."""
    stems = {}
    for line in load_patterns(path):
        if "=" in line:
            stem, label = (part.strip() for part in line.split("=", 1))
        else:
            stem = label = line
        stems[stem.lower()] = label
    return stems


_APOSTROPHES = str.maketrans({"‘": "'", "’": "'", "‛": "'"})


def _normalize(text: str) -> str:
    return text.translate(_APOSTROPHES).lower()


def _words(text: str) -> list[str]:
    return re.findall(r"[a-z0-9']+", _normalize(text))


def scan_title(title: str, stems: Mapping[str, str] | None = None) -> list[str]:
    """Return indicator terms found in the title, deduplicated, in dictionary order.

    Case-insensitive; a word matches a stem by prefix, so "Updating" and
    "updated" both report "update". Multi-word stems match consecutive words
    (first by prefix, the rest exactly) or their fused spelling ("cleanup").
    """
    table = DEFAULT_INDICATOR_STEMS if stems is None else stems
    words = _words(title)
    found = set()
    for stem, label in table.items():
        parts = stem.lower().split()
        if len(parts) == 1:
            if any(word.startswith(parts[0]) for word in words):
                found.add(label)
            continue
        fused = "".join(parts)
        for i, word in enumerate(words):
            if word.startswith(fused):
                found.add(label)
                break
            if word.startswith(parts[0]) and words[i + 1 : i + len(parts)] == parts[1:]:
                found.add(label)
                break
    return sorted(found)


def _phrase_regex(pattern: str) -> re.Pattern:
    chunks = [re.escape(chunk) for chunk in re.split(r"[\s\-]+", _normalize(pattern))]
    return re.compile(r"\b" + r"[\s\-]*".join(chunks) + r"\b")


def scan_text(text: str, phrasebook: Sequence[str] | None = None) -> list[str]:
    """Return phrasebook patterns matched in the text, deduplicated.

    Patterns tolerate hyphen/space variation ("hard-coded" matches
    "hard coded" and "hardcoded") and curly apostrophes.
    """
    patterns = DEFAULT_PHRASEBOOK if phrasebook is None else phrasebook
    normalized = _normalize(text)
    return [p for p in dict.fromkeys(patterns) if _phrase_regex(p).search(normalized)]


@dataclass(frozen=True)
class IndicatorHit:
    """Scanner result for one issue; score counts distinct matches."""

    issue_id: str
    matched_terms: tuple[str, ...]
    matched_phrases: tuple[str, ...]

    @property
    def score(self) -> int:
        return len(self.matched_terms) + len(self.matched_phrases)


def scan_issue(
    issue: GenericIssue,
    stems: Mapping[str, str] | None = None,
    phrasebook: Sequence[str] | None = None,
) -> IndicatorHit | None:
    """Scan title and description of one issue; None when nothing matched."""
    terms = scan_title(issue.title, stems)
    phrases = scan_text(issue.description, phrasebook)
    if not terms and not phrases:
        return None
    return IndicatorHit(issue.id, tuple(terms), tuple(phrases))


class Stakeholder(Enum):
    Developers = "Developers"
    Team = "Team"
    ITDepartment = "ITDepartment"
    Customer = "Customer"
    Users = "Users"
    Company = "Company"


class Verdict(Enum):
    TeamLevelTD = "TeamLevelTD"
    HigherLevelTD = "HigherLevelTD"
    NotTD = "NotTD"
    FunctionalRequirement = "FunctionalRequirement"


@dataclass(frozen=True)
class MatrixAnswer:
    """Answers to the who-wants-it / who-pays-for-it questions for one issue."""

    wants_fix: frozenset[Stakeholder]
    pays_for_fix: frozenset[Stakeholder] = frozenset()
    causes_team_extra_work: bool = False
    pain_only: bool = False

    def __post_init__(self):
        if not self.wants_fix:
            raise ValueError("wants_fix must not be empty")


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    rationale: str

    def __post_init__(self):
        if not self.rationale:
            raise ValueError("rationale must not be empty")


def classify(answer: MatrixAnswer) -> Classification:
    """Apply the stakeholder decision cascade. Deterministic and total.

    Rule order is fixed: a customer-paid fix is a functional requirement no
    matter what else is true, then team-paid extra work, then costs landing
    at company/IT level, then pure pain, else not TD.
    """
    wants = answer.wants_fix
    pays = answer.pays_for_fix
    if (Stakeholder.Customer in wants or Stakeholder.Users in wants) and (
        Stakeholder.Customer in pays
    ):
        return Classification(
            Verdict.FunctionalRequirement,
            "customer pays for a fix wanted on the customer/user side: "
            "fund it from the functional pot, not the TD pot",
        )
    if answer.causes_team_extra_work and (
        Stakeholder.Team in pays or Stakeholder.Developers in pays
    ):
        return Classification(
            Verdict.TeamLevelTD,
            "the team pays for the fix and suffers recurring extra work itself",
        )
    if Stakeholder.Company in pays or Stakeholder.ITDepartment in pays:
        return Classification(
            Verdict.HigherLevelTD,
            "the cost lands above the team (company or IT department pot)",
        )
    if answer.pain_only:
        return Classification(
            Verdict.TeamLevelTD,
            "no measurable extra work, but real annoyance: track it as "
            "team-level TD and let the pain factor drive its priority",
        )
    return Classification(
        Verdict.NotTD,
        "nobody pays from a team-reachable pot and no recurring extra work "
        "or pain was identified",
    )


def lint_prevention(issue: GenericIssue) -> list[str]:
    """Report prevention attributes still missing on a non-TD issue.

    Raises ValueError when called on a TechnicalDebt issue: the prevention
    checklist belongs on all the *other* issue types.
    """
    if issue.issue_type is IssueType.TechnicalDebt:
        raise ValueError("prevention lint does not apply to TechnicalDebt issues")
    findings = []
    if not issue.talked_about_td:
        findings.append("talked_about_td unchecked")
    if issue.is_td_repayment is None:
        findings.append("is_td_repayment unanswered")
    if issue.creates_td and not issue.linked_td_ids:
        findings.append("creates TD but no dismantling issue linked")
    if issue.quality_attributes_discussed is None:
        findings.append("quality attributes not discussed")
    if issue.drawbacks is None:
        findings.append("drawbacks not discussed")
    if issue.risks is None:
        findings.append("risks not discussed")
    if issue.alternatives is None:
        findings.append("alternatives not discussed")
    return findings


def bootstrap_tag(
    issues: Sequence[GenericIssue],
    decisions: Mapping[str, bool],
    td_label: str = "TD",
    non_td_label: str = "Non-TD",
) -> list[GenericIssue]:
    """Apply TD / Non-TD tagging decisions; undecided issues pass through.

    The two labels are mutually exclusive per issue. Unknown ids raise.
    """
    known = {issue.id for issue in issues}
    for issue_id in decisions:
        if issue_id not in known:
            raise UnknownId("issue", issue_id)
    tagged = []
    for issue in issues:
        if issue.id not in decisions:
            tagged.append(issue)
            continue
        labels = set(issue.labels) - {td_label, non_td_label}
        labels.add(td_label if decisions[issue.id] else non_td_label)
        tagged.append(replace(issue, labels=frozenset(labels)))
    return tagged


#: Name stems of well-known cross-cutting concerns that make poor components.
CROSS_CUTTING_STEMS: tuple[str, ...] = (
    "test",
    "documentation",
    "logging",
    "monitoring",
    "refactor",
    "feature flag",
)


@dataclass(frozen=True)
class ComponentFinding:
    name: str
    accepted: bool
    warnings: tuple[str, ...] = ()
    reason: str | None = None


def lint_component(name: str, functional_change_possible: bool) -> ComponentFinding:
    """Counter-test a proposed component name for being a cross-cutting concern.

    Rejected when no functional change could ever target the component; a
    name matching the known cross-cutting list still passes but with a
    warning.
    """
    normalized = name.strip().lower()
    warnings = tuple(
        f"name matches known cross-cutting concern {stem!r}"
        for stem in CROSS_CUTTING_STEMS
        if normalized.startswith(stem)
    )
    if not functional_change_possible:
        return ComponentFinding(
            name,
            accepted=False,
            warnings=warnings,
            reason=(
                "no functional change could be associated with this component; "
                "it is a cross-cutting concern, not a system part"
            ),
        )
    return ComponentFinding(name, accepted=True, warnings=warnings)
