// Bootstrap: wire the controller to the DOM. The service base URL defaults
// to same-origin and can be overridden with ?api=http://host:port.

import { ApiClient } from "./api.js";
import { renderExplorer } from "./render.js";
import { ExplorerController } from "./state.js";

function baseUrl(): string {
  const override = new URLSearchParams(window.location.search).get("api");
  return override ?? "";
}

export function mount(root: HTMLElement): ExplorerController {
  const controller = new ExplorerController(new ApiClient(baseUrl()));
  controller.onChange(() => renderExplorer(root, controller));
  renderExplorer(root, controller);
  return controller;
}

const appRoot = document.getElementById("app");
if (appRoot) {
  mount(appRoot);
}
