// Wire types for the tdkit HTTP API. Field names mirror the JSON payloads.

export type InterestName = "Min15" | "Hour1" | "Hours4" | "Day1" | "Days2Plus";
export type FrequencyName =
  | "Daily"
  | "Weekly"
  | "Monthly"
  | "Quarterly"
  | "YearlyOrLess";
export type ContagionName = "Decreasing" | "Stagnant" | "Increasing";

export interface ItemPayload {
  id: string;
  title: string;
  description: string;
  opened_on: string;
  closed_on: string | null;
  interest: InterestName | null;
  interest_frequency: FrequencyName | null;
  contagion: ContagionName | null;
  pain_factor: number | null;
  priority: number | null;
  priority_method: string | null;
  effort_sp: number | null;
  effort_pd: number | null;
  quality_attributes: string[];
  resubmission_date: string | null;
  component_path: string | null;
  origin_issue_id: string | null;
  debt_type: string | null;
  breaking_change: boolean | null;
  risks_of_nonrepayment: string[];
  risks_of_repayment: string[];
  comments: [string, string][];
  version: number;
  interest_burden: number | null;
  roi_months: number | null;
}

export interface ScatterPoint {
  effort_sp: number;
  priority: number;
  count: number;
  item_ids: string[];
}

export interface LhfPayload {
  points: ScatterPoint[];
  excluded: string[];
}

export interface ComponentsPayload {
  depth: number;
  counts: Record<string, number>;
}

export interface QualityAttributesPayload {
  counts: Record<string, number>;
}

export interface SeriesPayload {
  months: string[];
  opened: number[];
  closed: number[];
  open_at_end: number[];
  burden_min_per_month: number[];
}

export interface DuePayload {
  today: string;
  due: ItemPayload[];
  undated: ItemPayload[];
}

export interface PrioritizeResult {
  item_id: string;
  method: string;
  priority: number;
  roi_months: number | null;
  scores: Record<string, number> | null;
  computed_on: string | null;
}

export interface PrioritizeResponse {
  result: PrioritizeResult;
  persisted: boolean;
  item?: ItemPayload;
  interest_burden?: number | null;
}

export interface LintPayload {
  prevention: { issue_id: string; findings: string[] }[];
  resubmission: string[];
  components: string[];
  link_errors: string[];
}

export interface ConfigPayload {
  schema_version: number;
  config: Record<string, unknown>;
  frequency_mapping: {
    profile: string;
    interest_minutes: Record<InterestName, number>;
    per_month: Record<FrequencyName, number>;
    pd_minutes: number;
  };
  interest_labels: Record<InterestName, string>;
  frequency_labels: Record<FrequencyName, string>;
}

export interface PlanPayload {
  capacity_sp: number;
  quota_fraction: number;
  td_budget_sp: number;
  selected: { item_id: string; effort_sp: number }[];
  spent_sp: number;
}

// One chart selection; null means "no filter, show everything".
export type Selection =
  | { kind: "effort-priority"; effort_sp: number; priority: number }
  | { kind: "component"; path: string }
  | { kind: "unassigned" }
  | { kind: "qa"; attribute: string }
  | null;
