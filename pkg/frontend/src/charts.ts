// Clickable SVG charts built straight from API payloads. Layout arithmetic
// only; every displayed quantity arrives precomputed from the server.

import { svgEl } from "./format.js";
import type { ScatterPoint, SeriesPayload } from "./types.js";

const WIDTH = 640;
const HEIGHT = 360;
const MARGIN = { left: 60, right: 20, top: 20, bottom: 40 };

function plotArea(): { x0: number; x1: number; y0: number; y1: number } {
  return {
    x0: MARGIN.left,
    x1: WIDTH - MARGIN.right,
    y0: HEIGHT - MARGIN.bottom,
    y1: MARGIN.top,
  };
}

function frame(title: string): SVGElement {
  const svg = svgEl("svg", {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    width: String(WIDTH),
    height: String(HEIGHT),
    role: "img",
  });
  const caption = svgEl("text", {
    x: String(WIDTH / 2),
    y: "14",
    "text-anchor": "middle",
    class: "chart-title",
  });
  caption.textContent = title;
  svg.append(caption);
  return svg;
}

function axisLabel(svg: SVGElement, xText: string, yText: string): void {
  const x = svgEl("text", {
    x: String(WIDTH / 2),
    y: String(HEIGHT - 6),
    "text-anchor": "middle",
    class: "axis-label",
  });
  x.textContent = xText;
  const y = svgEl("text", {
    x: "14",
    y: String(HEIGHT / 2),
    "text-anchor": "middle",
    transform: `rotate(-90 14 ${HEIGHT / 2})`,
    class: "axis-label",
  });
  y.textContent = yText;
  svg.append(x, y);
}

// Low-hanging-fruit scatter: x effort, y priority (5 discrete rows),
// point area proportional to the number of items at that spot.
export function scatterChart(
  points: ScatterPoint[],
  onSelect: (point: ScatterPoint) => void,
  onClear: () => void,
): SVGElement {
  const svg = frame("Low-hanging fruit");
  const area = plotArea();
  const backdrop = svgEl("rect", {
    x: String(area.x0),
    y: String(area.y1),
    width: String(area.x1 - area.x0),
    height: String(area.y0 - area.y1),
    fill: "transparent",
    class: "chart-backdrop",
  });
  backdrop.addEventListener("click", onClear);
  svg.append(backdrop);

  const maxEffort = Math.max(1, ...points.map((p) => p.effort_sp));
  const xScale = (sp: number) =>
    area.x0 + ((area.x1 - area.x0) * sp) / (maxEffort * 1.1);
  const yScale = (priority: number) =>
    area.y0 - ((area.y0 - area.y1) * priority) / 6;

  for (let priority = 1; priority <= 5; priority++) {
    const tick = svgEl("text", {
      x: String(area.x0 - 8),
      y: String(yScale(priority) + 4),
      "text-anchor": "end",
      class: "tick",
    });
    tick.textContent = String(priority);
    svg.append(tick);
  }

  for (const point of points) {
    const circle = svgEl("circle", {
      cx: String(xScale(point.effort_sp)),
      cy: String(yScale(point.priority)),
      r: String(6 * Math.sqrt(point.count)),
      class: "scatter-point",
      "data-effort": String(point.effort_sp),
      "data-priority": String(point.priority),
      "data-count": String(point.count),
      "data-ids": JSON.stringify(point.item_ids),
    });
    const label = svgEl("title", {});
    label.textContent = `${point.count} item(s) at ${point.effort_sp} SP, priority ${point.priority}`;
    circle.append(label);
    circle.addEventListener("click", () => onSelect(point));
    svg.append(circle);
  }
  axisLabel(svg, "effort (SP)", "priority");
  return svg;
}

// Horizontal-labeled vertical bars for component / quality-attribute counts.
export function barChart(
  title: string,
  counts: Record<string, number>,
  onSelect: (key: string) => void,
  kind: string,
): SVGElement {
  const svg = frame(title);
  const area = plotArea();
  const entries = Object.entries(counts);
  const maxCount = Math.max(1, ...entries.map(([, n]) => n));
  const slot = (area.x1 - area.x0) / Math.max(1, entries.length);

  entries.forEach(([key, count], index) => {
    const barHeight = ((area.y0 - area.y1) * count) / maxCount;
    const rect = svgEl("rect", {
      x: String(area.x0 + index * slot + slot * 0.15),
      y: String(area.y0 - barHeight),
      width: String(slot * 0.7),
      height: String(barHeight),
      class: "bar",
      "data-kind": kind,
      "data-key": key,
      "data-count": String(count),
    });
    rect.addEventListener("click", () => onSelect(key));
    const label = svgEl("text", {
      x: String(area.x0 + index * slot + slot / 2),
      y: String(area.y0 + 16),
      "text-anchor": "middle",
      class: "tick",
    });
    label.textContent = key;
    const value = svgEl("text", {
      x: String(area.x0 + index * slot + slot / 2),
      y: String(area.y0 - barHeight - 4),
      "text-anchor": "middle",
      class: "tick",
    });
    value.textContent = String(count);
    svg.append(rect, label, value);
  });
  return svg;
}

function polyline(
  values: number[],
  maxValue: number,
  className: string,
  name: string,
): SVGElement {
  const area = plotArea();
  const step =
    values.length > 1 ? (area.x1 - area.x0) / (values.length - 1) : 0;
  const coords = values
    .map((value, index) => {
      const x = area.x0 + index * step;
      const y = area.y0 - ((area.y0 - area.y1) * value) / maxValue;
      return `${x.toFixed(1)},${y.toFixed(1)}`;
    })
    .join(" ");
  return svgEl("polyline", {
    points: coords,
    fill: "none",
    class: className,
    "data-series": name,
    "data-values": JSON.stringify(values),
  });
}

function monthTicks(svg: SVGElement, months: string[]): void {
  const area = plotArea();
  const step = months.length > 1 ? (area.x1 - area.x0) / (months.length - 1) : 0;
  months.forEach((month, index) => {
    const tick = svgEl("text", {
      x: String(area.x0 + index * step),
      y: String(area.y0 + 16),
      "text-anchor": "middle",
      class: "tick month-tick",
      "data-month": month,
    });
    tick.textContent = month;
    svg.append(tick);
  });
}

// Opened / closed / open-at-month-end counts in one chart.
export function countsChart(series: SeriesPayload): SVGElement {
  const svg = frame("Items per month");
  const maxValue = Math.max(
    1,
    ...series.opened,
    ...series.closed,
    ...series.open_at_end,
  );
  svg.append(
    polyline(series.opened, maxValue, "line-opened", "opened"),
    polyline(series.closed, maxValue, "line-closed", "closed"),
    polyline(series.open_at_end, maxValue, "line-open", "open_at_end"),
  );
  monthTicks(svg, series.months);
  axisLabel(svg, "month", "items");
  return svg;
}

// Interest burden of the open debt at each month's end.
export function burdenChart(series: SeriesPayload): SVGElement {
  const svg = frame("Interest burden");
  const maxValue = Math.max(1, ...series.burden_min_per_month);
  svg.append(
    polyline(series.burden_min_per_month, maxValue, "line-burden", "burden"),
  );
  monthTicks(svg, series.months);
  axisLabel(svg, "month", "burden (min/month)");
  return svg;
}
