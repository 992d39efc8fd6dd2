// Browser entry point. The dashboard is served by `tdkit serve --ui-dir`, so
// the API lives at the same origin.

import { ApiClient } from "./api.js";
import { App } from "./app.js";

function mount(): void {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app mount point");
  new App(new ApiClient(window.location.origin), root);
}

if (document.readyState === "loading") {
  document.addEventListener("DOMContentLoaded", mount);
} else {
  mount();
}
