"""Team-scale technical-debt toolkit.

Identify debt candidates in a backlog, document them as first-class TD items,
prioritize by interest burden and amortization ROI, plan repayment, and
monitor the debt level over time. The CLI (`tdkit`) and the HTTP API are thin
adapters over the functions exported here.
"""

from .analytics import (
    MonthlySeries,
    NaiveBurdenSeries,
    ScatterPoint,
    by_component,
    by_quality_attribute,
    lhf_scatter,
    monthly_series,
    naive_burden_by_open_date,
)
from .errors import (
    DomainRuleViolation,
    IntegrityError,
    SchemaError,
    TdkitError,
    UnknownId,
    VersionConflict,
)
from .identification import (
    Classification,
    ComponentFinding,
    IndicatorHit,
    MatrixAnswer,
    Stakeholder,
    Verdict,
    bootstrap_tag,
    classify,
    lint_component,
    lint_prevention,
    scan_issue,
    scan_text,
    scan_title,
)
from .ingest import ImportMapping, ImportReport, import_issues, mapping_from_file
from .model import (
    ComponentNode,
    Contagion,
    DebtType,
    FrequencyLevel,
    FrequencyMapping,
    GenericIssue,
    InterestLevel,
    IssueType,
    PriorityMethod,
    QualityAttribute,
    RepaymentMethod,
    TDItem,
    validate_item,
)
from .planning import (
    FollowUp,
    Recommendation,
    RepaymentContext,
    SprintPlan,
    due_items,
    evolution_candidates,
    plan_quota_sprint,
    polluter_followups,
    recommend,
)
from .prioritization import (
    PrioritizationResult,
    interest_burden,
    lhf_order,
    mean_value_priority,
    prioritize,
    roi_band,
    roi_months,
)
from .store import Store, StoreConfig, load, save

__version__ = "0.1.0"
