// Planning view: clickable charts over the item list. A chart selection is
// translated into an API list filter, never into client-side slicing (except
// for the "(unassigned)" bucket, which the list endpoint cannot express).

import { barChart, scatterChart } from "../charts.js";
import { el, type PriorityStyle } from "../format.js";
import { renderItemList } from "../list.js";
import { section, View } from "./base.js";
import type { ItemPayload, ScatterPoint, Selection } from "../types.js";

export const UNASSIGNED_KEY = "(unassigned)";

export class PlanningView extends View {
  selection: Selection = null;
  priorityStyle: PriorityStyle = "numbers";
  depth = 1;
  qaOrder: "count" | "name" = "count";
  onOpenItem?: (id: string) => void;

  load(): Promise<void> {
    return this.track(() => this.reload());
  }

  select(selection: Selection): Promise<void> {
    this.selection = selection;
    return this.load();
  }

  private async fetchFiltered(): Promise<ItemPayload[]> {
    const sel = this.selection;
    if (sel === null) return this.api.listItems();
    switch (sel.kind) {
      case "effort-priority":
        return this.api.listItems({
          effort: sel.effort_sp,
          priority: sel.priority,
          open: true,
        });
      case "component":
        // the bars count open items, so the drill-down matches that
        return this.api.listItems({ component: sel.path, open: true });
      case "unassigned": {
        const all = await this.api.listItems({ open: true });
        return all.filter((item) => item.component_path === null);
      }
      case "qa":
        return this.api.listItems({ qa: sel.attribute, open: true });
    }
  }

  private async reload(): Promise<void> {
    const [lhf, components, qa, items] = await Promise.all([
      this.api.lhf(),
      this.api.components(this.depth),
      this.api.qualityAttributes(),
      this.fetchFiltered(),
    ]);

    const controls = el("div", { class: "controls" });
    controls.append(
      this.styleToggle(),
      this.depthSelect(),
      this.qaToggle(),
      this.clearButton(),
      this.selectionBadge(),
    );

    const chartRow = el("div", { class: "charts" });
    chartRow.append(
      scatterChart(
        lhf.points,
        (point: ScatterPoint) =>
          void this.select({
            kind: "effort-priority",
            effort_sp: point.effort_sp,
            priority: point.priority,
          }),
        () => void this.select(null),
      ),
      barChart(
        "Items per component",
        components.counts,
        (key) =>
          void this.select(
            key === UNASSIGNED_KEY
              ? { kind: "unassigned" }
              : { kind: "component", path: key },
          ),
        "component",
      ),
      barChart(
        "Items per quality attribute",
        this.orderedQa(qa.counts),
        (key) => void this.select({ kind: "qa", attribute: key }),
        "qa",
      ),
    );

    const excluded = section("Not on the chart yet", "excluded");
    if (lhf.excluded.length === 0) {
      const none = el("p", { class: "empty" });
      none.textContent = "every open item has a priority and an effort";
      excluded.append(none);
    } else {
      const listEl = el("ul", { class: "excluded-ids" });
      for (const id of lhf.excluded) {
        const entry = el("li", { "data-id": id });
        entry.textContent = `${id} still needs priority or effort`;
        listEl.append(entry);
      }
      excluded.append(listEl);
    }

    this.root.replaceChildren(
      controls,
      chartRow,
      excluded,
      renderItemList(items, {
        priorityStyle: this.priorityStyle,
        onOpenItem: this.onOpenItem,
      }),
    );
  }

  private orderedQa(counts: Record<string, number>): Record<string, number> {
    const entries = Object.entries(counts);
    entries.sort(
      this.qaOrder === "count"
        ? (a, b) => b[1] - a[1] || a[0].localeCompare(b[0])
        : (a, b) => a[0].localeCompare(b[0]),
    );
    return Object.fromEntries(entries);
  }

  private styleToggle(): HTMLElement {
    const select = el("select", { "data-role": "priority-style" });
    for (const style of ["numbers", "text"] as const) {
      const option = el("option", { value: style });
      option.textContent = `priorities as ${style}`;
      if (style === this.priorityStyle) option.setAttribute("selected", "");
      select.append(option);
    }
    select.addEventListener("change", () => {
      this.priorityStyle = select.value as PriorityStyle;
      void this.load();
    });
    return select;
  }

  private depthSelect(): HTMLElement {
    const select = el("select", { "data-role": "component-depth" });
    for (const depth of [1, 2, 3]) {
      const option = el("option", { value: String(depth) });
      option.textContent = `component depth ${depth}`;
      if (depth === this.depth) option.setAttribute("selected", "");
      select.append(option);
    }
    select.addEventListener("change", () => {
      this.depth = Number(select.value);
      void this.load();
    });
    return select;
  }

  private qaToggle(): HTMLElement {
    const button = el("button", { type: "button", "data-role": "qa-order" });
    button.textContent =
      this.qaOrder === "count" ? "QA: by count" : "QA: by name";
    button.addEventListener("click", () => {
      this.qaOrder = this.qaOrder === "count" ? "name" : "count";
      void this.load();
    });
    return button;
  }

  private clearButton(): HTMLElement {
    const button = el("button", { type: "button", "data-role": "clear-selection" });
    button.textContent = "Show all";
    button.addEventListener("click", () => void this.select(null));
    return button;
  }

  private selectionBadge(): HTMLElement {
    const badge = el("span", { class: "selection-badge" });
    const sel = this.selection;
    if (sel === null) {
      badge.textContent = "all items";
    } else if (sel.kind === "effort-priority") {
      badge.textContent = `open items at ${sel.effort_sp} SP, priority ${sel.priority}`;
    } else if (sel.kind === "component") {
      badge.textContent = `component ${sel.path}`;
    } else if (sel.kind === "unassigned") {
      badge.textContent = "items without a component";
    } else {
      badge.textContent = `quality attribute ${sel.attribute}`;
    }
    return badge;
  }
}
