// Shared view plumbing: async work tracking and the visible error state.

import { el } from "../format.js";
import type { ApiClient } from "../api.js";

export abstract class View {
  // tests and callers await this to know the view settled
  pending: Promise<void> = Promise.resolve();

  constructor(
    protected api: ApiClient,
    public root: HTMLElement,
  ) {}

  protected track(work: () => Promise<void>): Promise<void> {
    this.pending = work().catch((error: unknown) => {
      this.renderError(error, () => this.track(work));
    });
    return this.pending;
  }

  protected renderError(error: unknown, retry: () => void): void {
    const message = error instanceof Error ? error.message : String(error);
    const box = el("div", { class: "error-state", role: "alert" });
    const text = el("p");
    text.textContent = `could not reach the API: ${message}`;
    const button = el("button", { type: "button", class: "retry" });
    button.textContent = "Retry";
    button.addEventListener("click", retry);
    box.append(text, button);
    this.root.replaceChildren(box);
  }
}

export function section(title: string, className: string): HTMLElement {
  const box = el("section", { class: className });
  const heading = el("h2");
  heading.textContent = title;
  box.append(heading);
  return box;
}
