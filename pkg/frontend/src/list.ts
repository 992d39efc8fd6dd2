// The TD item table: exactly the published column set, every column sortable.

import {
  blankIfNull,
  burdenLabel,
  el,
  priorityLabel,
  roiLabel,
  type PriorityStyle,
} from "./format.js";
import type { ItemPayload } from "./types.js";

interface Column {
  header: string;
  key: string;
  value: (item: ItemPayload) => string | number | null;
  render?: (item: ItemPayload, style: PriorityStyle) => Node | string;
}

export const COLUMNS: Column[] = [
  { header: "ID", key: "id", value: (it) => it.id },
  { header: "Title", key: "title", value: (it) => it.title },
  {
    header: "Priority",
    key: "priority",
    value: (it) => it.priority,
    render: (it, style) => priorityLabel(it.priority, style),
  },
  { header: "Contagion potential", key: "contagion", value: (it) => it.contagion },
  { header: "Interest", key: "interest", value: (it) => it.interest },
  {
    header: "Interest frequency",
    key: "interest_frequency",
    value: (it) => it.interest_frequency,
  },
  {
    header: "Interest burden",
    key: "interest_burden",
    value: (it) => it.interest_burden,
    render: (it) => burdenLabel(it.interest_burden),
  },
  {
    header: "ROI",
    key: "roi_months",
    value: (it) => it.roi_months,
    render: (it) => roiLabel(it.roi_months),
  },
  {
    header: "Resubmission date",
    key: "resubmission_date",
    value: (it) => it.resubmission_date,
  },
  {
    header: "Origin issue",
    key: "origin_issue_id",
    value: (it) => it.origin_issue_id,
  },
];

function compareValues(a: string | number, b: string | number): number {
  if (typeof a === "number" && typeof b === "number") return a - b;
  return String(a).localeCompare(String(b));
}

export interface ListOptions {
  priorityStyle: PriorityStyle;
  onOpenItem?: (id: string) => void;
}

export function renderItemList(
  items: ItemPayload[],
  options: ListOptions,
): HTMLElement {
  const state = { key: null as string | null, ascending: true };
  const wrapper = el("div", { class: "item-list" });
  const table = el("table", { class: "items" });
  const headRow = el("tr");
  for (const column of COLUMNS) {
    const button = el("button", {
      type: "button",
      class: "sort",
      "data-key": column.key,
    });
    button.textContent = column.header;
    button.addEventListener("click", () => {
      state.ascending = state.key === column.key ? !state.ascending : true;
      state.key = column.key;
      renderBody();
    });
    headRow.append(el("th", {}, [button]));
  }
  const thead = el("thead", {}, [headRow]);
  const tbody = el("tbody");
  table.append(thead, tbody);

  function renderBody(): void {
    const rows = [...items];
    const column = COLUMNS.find((c) => c.key === state.key);
    if (column) {
      rows.sort((a, b) => {
        const left = column.value(a);
        const right = column.value(b);
        // blanks sink to the bottom in either direction
        if (left === null && right === null) return 0;
        if (left === null) return 1;
        if (right === null) return -1;
        return compareValues(left, right) * (state.ascending ? 1 : -1);
      });
    }
    tbody.replaceChildren(
      ...rows.map((item) => {
        const tr = el("tr", { "data-id": item.id });
        for (const col of COLUMNS) {
          const td = el("td", { "data-key": col.key });
          td.append(
            col.render
              ? col.render(item, options.priorityStyle)
              : blankIfNull(col.value(item)),
          );
          tr.append(td);
        }
        if (options.onOpenItem) {
          tr.addEventListener("click", () => options.onOpenItem?.(item.id));
        }
        return tr;
      }),
    );
  }

  renderBody();
  const counter = el("p", { class: "row-count", "data-count": String(items.length) });
  counter.textContent = `${items.length} item(s)`;
  wrapper.append(counter, table);
  return wrapper;
}
