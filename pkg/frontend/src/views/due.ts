// Resubmission queue: items whose date has come back around, items that never
// got a date, and the hygiene warnings the linter raises about either.

import { el } from "../format.js";
import { section, View } from "./base.js";
import type { DuePayload, ItemPayload, LintPayload } from "../types.js";

export class DueView extends View {
  onOpenItem: ((id: string) => void) | undefined;

  load(): Promise<void> {
    return this.track(async () => {
      const [due, lint] = await Promise.all([this.api.due(), this.api.lint()]);
      this.render(due, lint);
    });
  }

  // lint lines look like "TD-12: resubmission date ... likely set too soon"
  private warningsFor(id: string, lint: LintPayload): string[] {
    const prefix = `${id}: `;
    return lint.resubmission
      .filter((line) => line.startsWith(prefix))
      .map((line) => line.slice(prefix.length));
  }

  private entry(
    item: ItemPayload,
    today: string,
    lint: LintPayload,
  ): HTMLElement {
    const row = el("li", { class: "due-entry", "data-id": item.id });
    const head = el("p", { class: "due-head" });
    const label = el("strong");
    label.textContent = item.id;
    head.append(label, ` ${item.title}`);
    if (item.resubmission_date !== null) {
      const when = el("span", { class: "due-date" });
      when.textContent = ` resubmit ${item.resubmission_date}`;
      head.append(when);
      if (item.resubmission_date < today) {
        const badge = el("span", { class: "overdue-badge" });
        badge.textContent = "overdue";
        head.append(" ", badge);
      }
    }
    const refine = el("button", { type: "button", class: "refine" });
    refine.textContent = "Refine";
    refine.addEventListener("click", () => this.onOpenItem?.(item.id));
    head.append(" ", refine);
    row.append(head);
    for (const warning of this.warningsFor(item.id, lint)) {
      const note = el("p", { class: "hygiene-warning" });
      note.textContent = warning;
      row.append(note);
    }
    return row;
  }

  private render(due: DuePayload, lint: LintPayload): void {
    const dueSection = section("Due for resubmission", "due-items");
    const today = el("p", { class: "today" });
    today.textContent = `today is ${due.today}`;
    dueSection.append(today);
    if (due.due.length === 0) {
      const empty = el("p", { class: "empty" });
      empty.textContent = "nothing is due; the queue is clear";
      dueSection.append(empty);
    } else {
      const listEl = el("ul", { class: "due-list" });
      for (const item of due.due) {
        listEl.append(this.entry(item, due.today, lint));
      }
      dueSection.append(listEl);
    }

    const undatedSection = section("Needs a resubmission date", "undated-items");
    if (due.undated.length === 0) {
      const empty = el("p", { class: "empty" });
      empty.textContent = "every open item has a resubmission date";
      undatedSection.append(empty);
    } else {
      const listEl = el("ul", { class: "undated-list" });
      for (const item of due.undated) {
        listEl.append(this.entry(item, due.today, lint));
      }
      undatedSection.append(listEl);
    }

    this.root.replaceChildren(dueSection, undatedSection);
  }
}
