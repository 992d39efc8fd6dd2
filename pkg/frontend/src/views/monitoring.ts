// Monitoring view: the honest month-end time series, straight off the API.
// The misleading open-date variant is deliberately not available here.

import { burdenChart, countsChart } from "../charts.js";
import { el } from "../format.js";
import { View } from "./base.js";

function defaultWindow(today = new Date()): { from: string; to: string } {
  const to = `${today.getFullYear()}-${String(today.getMonth() + 1).padStart(2, "0")}`;
  const earlier = new Date(today.getFullYear(), today.getMonth() - 11, 1);
  const from = `${earlier.getFullYear()}-${String(earlier.getMonth() + 1).padStart(2, "0")}`;
  return { from, to };
}

export class MonitoringView extends View {
  window = defaultWindow();

  load(): Promise<void> {
    return this.track(() => this.reload());
  }

  setWindow(from: string, to: string): Promise<void> {
    this.window = { from, to };
    return this.load();
  }

  private async reload(): Promise<void> {
    const series = await this.api.series(this.window.from, this.window.to);

    const controls = el("div", { class: "controls" });
    const fromInput = el("input", {
      type: "month",
      value: this.window.from,
      "data-role": "from",
    });
    const toInput = el("input", {
      type: "month",
      value: this.window.to,
      "data-role": "to",
    });
    const apply = el("button", { type: "button", "data-role": "apply-window" });
    apply.textContent = "Apply";
    apply.addEventListener("click", () =>
      void this.setWindow(fromInput.value, toInput.value),
    );
    controls.append(fromInput, toInput, apply);

    const charts = el("div", { class: "charts" });
    charts.append(countsChart(series), burdenChart(series));

    this.root.replaceChildren(controls, charts);
  }
}
