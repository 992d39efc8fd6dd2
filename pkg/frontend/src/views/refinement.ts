// Refinement form: every TD item attribute, live server-computed burden/ROI
// preview, optimistic-version saves, and the prevention checklist for fresh
// entries. Conflicts are surfaced, never merged silently.

import { ApiError } from "../api.js";
import { burdenLabel, el, roiLabel } from "../format.js";
import { section, View } from "./base.js";
import type {
  ConfigPayload,
  ContagionName,
  ItemPayload,
} from "../types.js";

const CONTAGION_NAMES: ContagionName[] = ["Decreasing", "Stagnant", "Increasing"];

const QUALITY_ATTRIBUTE_NAMES = [
  "FunctionalSuitability",
  "PerformanceEfficiency",
  "Compatibility",
  "InteractionCapability",
  "Reliability",
  "Security",
  "Maintainability",
  "Flexibility",
  "Safety",
];

const DEBT_TYPE_NAMES = [
  "Code",
  "Architecture",
  "Documentation",
  "Test",
  "Infrastructure",
  "Requirements",
  "BuildAutomation",
  "Security",
  "Social",
  "Versioning",
  "Update",
  "Hardware",
];

const PREVENTION_QUESTIONS = [
  "Did we talk about whether this creates technical debt?",
  "If it creates debt, is a dismantling issue linked?",
  "Is this work itself repaying documented debt?",
  "Which quality attributes does it touch?",
  "Were drawbacks, risks, and alternatives discussed?",
];

export class RefinementView extends View {
  private item: ItemPayload | null = null;
  private config: ConfigPayload | null = null;
  private newMode = false;
  private form: HTMLFormElement | null = null;

  loadItem(id: string): Promise<void> {
    return this.track(async () => {
      const [item, config] = await Promise.all([
        this.api.getItem(id),
        this.config ? Promise.resolve(this.config) : this.api.config(),
      ]);
      this.item = item;
      this.config = config;
      this.newMode = false;
      this.renderForm();
    });
  }

  newItem(): Promise<void> {
    return this.track(async () => {
      this.config = this.config ?? (await this.api.config());
      this.item = null;
      this.newMode = true;
      this.renderForm();
    });
  }

  private field(name: string): HTMLInputElement | HTMLSelectElement | HTMLTextAreaElement {
    const control = this.form?.elements.namedItem(name);
    if (!control) throw new Error(`no form field ${name}`);
    return control as HTMLInputElement | HTMLSelectElement | HTMLTextAreaElement;
  }

  setField(name: string, value: string): void {
    this.field(name).value = value;
  }

  private textValue(name: string): string | null {
    const raw = this.field(name).value.trim();
    return raw === "" ? null : raw;
  }

  private numberValue(name: string): number | null {
    const raw = this.textValue(name);
    return raw === null ? null : Number(raw);
  }

  private checkedNames(groupName: string): string[] {
    if (!this.form) return [];
    return Array.from(
      this.form.querySelectorAll<HTMLInputElement>(
        `input[name="${groupName}"]:checked`,
      ),
    ).map((box) => box.value);
  }

  private linesValue(name: string): string[] {
    const raw = this.field(name).value;
    return raw
      .split("\n")
      .map((line) => line.trim())
      .filter((line) => line !== "");
  }

  collectChanges(): Record<string, unknown> {
    const changes: Record<string, unknown> = {
      title: this.textValue("title") ?? "",
      description: this.textValue("description") ?? "",
      opened_on: this.textValue("opened_on"),
      closed_on: this.textValue("closed_on"),
      interest: this.textValue("interest"),
      interest_frequency: this.textValue("interest_frequency"),
      contagion: this.textValue("contagion"),
      pain_factor: this.numberValue("pain_factor"),
      priority: this.numberValue("priority"),
      effort_sp: this.numberValue("effort_sp"),
      effort_pd: this.numberValue("effort_pd"),
      quality_attributes: this.checkedNames("quality_attributes"),
      resubmission_date: this.textValue("resubmission_date"),
      component_path: this.textValue("component_path"),
      origin_issue_id: this.textValue("origin_issue_id"),
      debt_type: this.textValue("debt_type"),
      breaking_change: (this.field("breaking_change") as HTMLInputElement)
        .checked,
      risks_of_nonrepayment: this.linesValue("risks_of_nonrepayment"),
      risks_of_repayment: this.linesValue("risks_of_repayment"),
    };
    return changes;
  }

  preview(): Promise<void> {
    return this.track(async () => {
      const panel = this.root.querySelector<HTMLElement>(".preview");
      if (!panel) return;
      const interest = this.textValue("interest");
      const frequency = this.textValue("interest_frequency");
      const effortPd = this.numberValue("effort_pd");
      if (this.newMode || !this.item) {
        panel.textContent = "save the item first to preview ROI";
        return;
      }
      if (interest === null || frequency === null || effortPd === null) {
        panel.textContent =
          "interest, frequency, and repair effort (PD) are needed for ROI";
        delete panel.dataset.roiMonths;
        delete panel.dataset.priority;
        delete panel.dataset.burden;
        return;
      }
      const response = await this.api.previewRoi(this.item.id, {
        interest,
        interest_frequency: frequency,
        effort_pd: effortPd,
      });
      const roi = response.result.roi_months;
      const burden = response.interest_burden ?? null;
      panel.dataset.roiMonths = String(roi);
      panel.dataset.priority = String(response.result.priority);
      panel.dataset.burden = String(burden);
      panel.textContent =
        `burden ${burdenLabel(burden)} | ROI ${roiLabel(roi)} ` +
        `| suggested priority ${response.result.priority}`;
    });
  }

  save(): Promise<void> {
    return this.track(async () => {
      this.clearErrors();
      const changes = this.collectChanges();
      try {
        if (this.newMode) {
          const id = this.textValue("id");
          const created = await this.api.createItem({ id, ...changes });
          this.item = created;
          this.newMode = false;
          this.renderForm();
          this.flash(`created ${created.id}`);
        } else if (this.item) {
          const updated = await this.api.patchItem(
            this.item.id,
            this.item.version,
            changes,
          );
          this.item = updated;
          this.renderForm();
          this.flash(`saved ${updated.id} (version ${updated.version})`);
        }
      } catch (error) {
        if (error instanceof ApiError && error.status === 409) {
          this.showConflict(error);
        } else if (error instanceof ApiError) {
          this.showFieldError(error);
        } else {
          throw error;
        }
      }
    });
  }

  private flash(message: string): void {
    const note = this.root.querySelector<HTMLElement>(".flash");
    if (note) note.textContent = message;
  }

  private clearErrors(): void {
    this.root.querySelector(".conflict-banner")?.remove();
    for (const slot of this.root.querySelectorAll("[data-error-for]")) {
      slot.textContent = "";
    }
  }

  private showConflict(error: ApiError): void {
    const banner = el("div", { class: "conflict-banner", role: "alert" });
    const text = el("p");
    text.textContent = `someone else changed this item: ${error.message}. Reload to merge your edits by hand.`;
    const reload = el("button", { type: "button", class: "reload" });
    reload.textContent = "Reload item";
    reload.addEventListener("click", () => {
      if (this.item) void this.loadItem(this.item.id);
    });
    banner.append(text, reload);
    this.root.prepend(banner);
  }

  private showFieldError(error: ApiError): void {
    const slot = error.field
      ? this.root.querySelector<HTMLElement>(
          `[data-error-for="${error.field}"]`,
        )
      : null;
    if (slot) {
      slot.textContent = error.message;
    } else {
      this.flash(`rejected: ${error.message}`);
    }
  }

  private labeled(
    label: string,
    control: HTMLElement,
    fieldName: string,
  ): HTMLElement {
    const wrap = el("label", { class: "field" });
    const caption = el("span");
    caption.textContent = label;
    const errorSlot = el("em", { class: "field-error", "data-error-for": fieldName });
    wrap.append(caption, control, errorSlot);
    return wrap;
  }

  private selectFor(
    name: string,
    options: [value: string, label: string][],
    current: string | null,
    withBlank = true,
  ): HTMLSelectElement {
    const select = el("select", { name });
    if (withBlank) select.append(el("option", { value: "" }));
    for (const [value, label] of options) {
      const option = el("option", { value });
      option.textContent = label;
      if (value === current) option.setAttribute("selected", "");
      select.append(option);
    }
    return select;
  }

  private renderForm(): void {
    const config = this.config;
    if (!config) return;
    const item = this.item;
    const form = el("form", { class: "refinement" });
    this.form = form;
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.save();
    });

    const input = (
      name: string,
      type: string,
      value: string | number | null,
    ): HTMLInputElement => {
      const box = el("input", { name, type }) as HTMLInputElement;
      if (value !== null) box.value = String(value);
      return box;
    };
    const textarea = (name: string, value: string): HTMLTextAreaElement => {
      const area = el("textarea", { name }) as HTMLTextAreaElement;
      area.value = value;
      return area;
    };
    const oneToFive = (name: string, current: number | null) =>
      this.selectFor(
        name,
        [1, 2, 3, 4, 5].map((n) => [String(n), String(n)] as [string, string]),
        current === null ? null : String(current),
      );

    if (this.newMode) {
      form.append(this.labeled("ID", input("id", "text", null), "id"));
    }
    form.append(
      this.labeled("Title", input("title", "text", item?.title ?? null), "title"),
      this.labeled(
        "Description",
        textarea("description", item?.description ?? ""),
        "description",
      ),
      this.labeled(
        "Opened on",
        input("opened_on", "date", item?.opened_on ?? null),
        "opened_on",
      ),
      this.labeled(
        "Closed on",
        input("closed_on", "date", item?.closed_on ?? null),
        "closed_on",
      ),
      this.labeled(
        "Interest (extra effort per occurrence)",
        this.selectFor(
          "interest",
          Object.entries(config.interest_labels),
          item?.interest ?? null,
        ),
        "interest",
      ),
      this.labeled(
        "Interest frequency",
        this.selectFor(
          "interest_frequency",
          Object.entries(config.frequency_labels),
          item?.interest_frequency ?? null,
        ),
        "interest_frequency",
      ),
      this.labeled(
        "Contagion potential",
        this.selectFor(
          "contagion",
          CONTAGION_NAMES.map((n) => [n, n]),
          item?.contagion ?? null,
        ),
        "contagion",
      ),
      this.labeled("Pain factor", oneToFive("pain_factor", item?.pain_factor ?? null), "pain_factor"),
      this.labeled("Priority", oneToFive("priority", item?.priority ?? null), "priority"),
      this.labeled(
        "Repair effort (SP)",
        input("effort_sp", "number", item?.effort_sp ?? null),
        "effort_sp",
      ),
      this.labeled(
        "Repair effort (PD)",
        input("effort_pd", "number", item?.effort_pd ?? null),
        "effort_pd",
      ),
      this.qaChecklist(item),
      this.labeled(
        "Resubmission date",
        input("resubmission_date", "date", item?.resubmission_date ?? null),
        "resubmission_date",
      ),
      this.labeled(
        "Component",
        input("component_path", "text", item?.component_path ?? null),
        "component_path",
      ),
      this.labeled(
        "Origin issue",
        input("origin_issue_id", "text", item?.origin_issue_id ?? null),
        "origin_issue_id",
      ),
      this.labeled(
        "Debt type",
        this.selectFor(
          "debt_type",
          DEBT_TYPE_NAMES.map((n) => [n, n]),
          item?.debt_type ?? null,
        ),
        "debt_type",
      ),
      this.breakingChangeBox(item),
      this.labeled(
        "Risks of not repaying (one per line)",
        textarea(
          "risks_of_nonrepayment",
          (item?.risks_of_nonrepayment ?? []).join("\n"),
        ),
        "risks_of_nonrepayment",
      ),
      this.labeled(
        "Risks of repaying (one per line)",
        textarea(
          "risks_of_repayment",
          (item?.risks_of_repayment ?? []).join("\n"),
        ),
        "risks_of_repayment",
      ),
    );

    const preview = el("p", { class: "preview" });
    if (item) {
      preview.dataset.roiMonths = String(item.roi_months);
      preview.dataset.burden = String(item.interest_burden);
      preview.textContent = `burden ${burdenLabel(item.interest_burden)} | ROI ${roiLabel(item.roi_months)}`;
    } else {
      preview.textContent = "save the item first to preview ROI";
    }
    for (const name of ["interest", "interest_frequency", "effort_pd"]) {
      this.field(name).addEventListener("change", () => void this.preview());
    }

    const submit = el("button", { type: "submit", class: "save" });
    submit.textContent = this.newMode ? "Create item" : "Save";
    const flash = el("p", { class: "flash", role: "status" });

    const meta = el("p", { class: "meta" });
    if (item) {
      meta.textContent = `version ${item.version}`;
    }

    this.root.replaceChildren(form);
    form.append(preview, submit, flash, meta);
    if (item && item.comments.length > 0) {
      const history = section("Comments", "comments");
      for (const [when, text] of item.comments) {
        const line = el("p");
        line.textContent = `${when}: ${text}`;
        history.append(line);
      }
      this.root.append(history);
    }
    if (this.newMode) {
      this.root.append(this.preventionChecklist());
    }
  }

  private qaChecklist(item: ItemPayload | null): HTMLElement {
    const group = el("fieldset", { class: "qa-group" });
    const legend = el("legend");
    legend.textContent = "Quality attributes";
    group.append(legend);
    for (const name of QUALITY_ATTRIBUTE_NAMES) {
      const box = el("input", {
        type: "checkbox",
        name: "quality_attributes",
        value: name,
      }) as HTMLInputElement;
      box.checked = item?.quality_attributes.includes(name) ?? false;
      const label = el("label", {}, [box, name]);
      group.append(label);
    }
    const errorSlot = el("em", {
      class: "field-error",
      "data-error-for": "quality_attributes",
    });
    group.append(errorSlot);
    return group;
  }

  private breakingChangeBox(item: ItemPayload | null): HTMLElement {
    const box = el("input", {
      type: "checkbox",
      name: "breaking_change",
    }) as HTMLInputElement;
    box.checked = item?.breaking_change ?? false;
    return el("label", { class: "field" }, [box, "Repayment is a breaking change"]);
  }

  private preventionChecklist(): HTMLElement {
    const panel = section("Prevention checklist", "prevention-checklist");
    const hint = el("p");
    hint.textContent =
      "Before documenting new debt, make the decision a conscious one:";
    panel.append(hint);
    const listEl = el("ul");
    for (const question of PREVENTION_QUESTIONS) {
      const entry = el("li");
      const box = el("input", { type: "checkbox" });
      entry.append(box, ` ${question}`);
      listEl.append(entry);
    }
    panel.append(listEl);
    return panel;
  }
}
