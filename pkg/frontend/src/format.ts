// Display-only formatting. Raw API values are kept in data attributes so
// tests (and curious users) can verify nothing was recomputed client-side.

export type PriorityStyle = "numbers" | "text";

const PRIORITY_TEXT: Record<number, string> = {
  1: "very low",
  2: "low",
  3: "medium",
  4: "high",
  5: "very high",
};

export function priorityLabel(
  priority: number | null,
  style: PriorityStyle,
): string {
  if (priority === null) return "";
  if (style === "text") return PRIORITY_TEXT[priority] ?? String(priority);
  return String(priority);
}

export function roiLabel(roiMonths: number | null): string {
  if (roiMonths === null) return "";
  return `${roiMonths.toFixed(2)} months`;
}

export function burdenLabel(burden: number | null): string {
  if (burden === null) return "";
  return `${burden.toFixed(1)} min/month`;
}

export function blankIfNull(value: string | number | null): string {
  return value === null ? "" : String(value);
}

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  children: (Node | string)[] = [],
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (key === "class") node.className = value;
    else if (key.startsWith("data-")) node.setAttribute(key, value);
    else node.setAttribute(key, value);
  }
  for (const child of children) {
    node.append(child);
  }
  return node;
}

export function svgEl(
  tag: string,
  attrs: Record<string, string> = {},
): SVGElement {
  const node = document.createElementNS("http://www.w3.org/2000/svg", tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  return node;
}
