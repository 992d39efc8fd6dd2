// Tab shell wiring the four views together. Charts open items in the
// refinement tab; the due queue does the same.

import type { ApiClient } from "./api.js";
import { el } from "./format.js";
import { DueView } from "./views/due.js";
import { MonitoringView } from "./views/monitoring.js";
import { PlanningView } from "./views/planning.js";
import { RefinementView } from "./views/refinement.js";

const TABS = ["Planning", "Monitoring", "Refinement", "Due"] as const;
type TabName = (typeof TABS)[number];

export class App {
  readonly planning: PlanningView;
  readonly monitoring: MonitoringView;
  readonly refinement: RefinementView;
  readonly due: DueView;
  private readonly panelByTab: Map<TabName, HTMLElement> = new Map();
  private readonly buttons: Map<TabName, HTMLButtonElement> = new Map();
  active: TabName = "Planning";

  constructor(api: ApiClient, private readonly root: HTMLElement) {
    const nav = el("nav", { class: "tabs" });
    const panels: Record<TabName, HTMLElement> = {
      Planning: el("div", { class: "panel panel-planning" }),
      Monitoring: el("div", { class: "panel panel-monitoring" }),
      Refinement: el("div", { class: "panel panel-refinement" }),
      Due: el("div", { class: "panel panel-due" }),
    };
    for (const name of TABS) {
      const button = el("button", {
        type: "button",
        class: "tab",
        "data-tab": name,
      });
      button.textContent = name;
      button.addEventListener("click", () => this.show(name));
      this.buttons.set(name, button);
      nav.append(button);
      this.panelByTab.set(name, panels[name]);
    }

    const refinementBody = el("div", { class: "refinement-body" });
    panels.Refinement.append(this.refinementToolbar(), refinementBody);

    this.planning = new PlanningView(api, panels.Planning);
    this.monitoring = new MonitoringView(api, panels.Monitoring);
    this.refinement = new RefinementView(api, refinementBody);
    this.due = new DueView(api, panels.Due);
    this.planning.onOpenItem = (id) => void this.openItem(id);
    this.due.onOpenItem = (id) => void this.openItem(id);

    root.replaceChildren(nav, ...TABS.map((name) => panels[name]));
    this.show("Planning");
  }

  private refinementToolbar(): HTMLElement {
    const bar = el("div", { class: "refinement-toolbar" });
    const idBox = el("input", {
      type: "text",
      placeholder: "item id",
      "data-role": "load-id",
    }) as HTMLInputElement;
    const loadButton = el("button", { type: "button", "data-role": "load-item" });
    loadButton.textContent = "Load";
    loadButton.addEventListener("click", () => {
      const id = idBox.value.trim();
      if (id !== "") void this.refinement.loadItem(id);
    });
    const newButton = el("button", { type: "button", "data-role": "new-item" });
    newButton.textContent = "New item";
    newButton.addEventListener("click", () => void this.refinement.newItem());
    bar.append(idBox, loadButton, newButton);
    return bar;
  }

  show(name: TabName): void {
    this.active = name;
    for (const tab of TABS) {
      const panel = this.panelByTab.get(tab);
      const button = this.buttons.get(tab);
      if (panel) panel.hidden = tab !== name;
      if (button) button.classList.toggle("active", tab === name);
    }
    if (name === "Planning") void this.planning.load();
    if (name === "Monitoring") void this.monitoring.load();
    if (name === "Due") void this.due.load();
  }

  openItem(id: string): Promise<void> {
    this.show("Refinement");
    return this.refinement.loadItem(id);
  }
}
