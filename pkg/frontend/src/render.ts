// DOM rendering: search panel, depth controls, message banners, and the SVG
// tree. Everything drawn comes straight from the controller's state; the
// renderer never invents nodes or edges.

import { colorForLevel } from "./colors.js";
import { layout } from "./layout.js";
import type { ExplorerController } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export function renderExplorer(root: HTMLElement, controller: ExplorerController): void {
  const state = controller.state;
  root.textContent = "";

  const panel = document.createElement("div");
  panel.className = "panel";

  const form = document.createElement("form");
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void controller.search(input.value);
  });
  const input = document.createElement("input");
  input.type = "search";
  input.placeholder = "search researchers";
  input.value = state.searchText;
  const button = document.createElement("button");
  button.type = "submit";
  button.textContent = "Search";
  form.append(input, button);
  panel.appendChild(form);

  panel.appendChild(depthControls(controller));

  if (state.banner) {
    const banner = document.createElement("div");
    banner.className = "banner";
    banner.textContent = state.banner;
    const retry = document.createElement("button");
    retry.textContent = "Retry";
    retry.addEventListener("click", () => void controller.retry());
    banner.appendChild(retry);
    panel.appendChild(banner);
  }
  if (state.notice) {
    const notice = document.createElement("div");
    notice.className = "notice";
    notice.textContent = state.notice;
    panel.appendChild(notice);
  }

  const hits = document.createElement("ul");
  hits.className = "hits";
  for (const hit of state.hits) {
    const item = document.createElement("li");
    const link = document.createElement("a");
    link.href = "#";
    link.textContent = `${hit.display_name} (${hit.advisee_count} advisees)`;
    link.addEventListener("click", (event) => {
      event.preventDefault();
      void controller.selectHit(hit.node_id);
    });
    item.appendChild(link);
    hits.appendChild(item);
  }
  if (!state.hits.length && state.searchText.trim() && !state.notice && !state.banner) {
    const empty = document.createElement("li");
    empty.textContent = "no researchers match";
    hits.appendChild(empty);
  }
  panel.appendChild(hits);
  root.appendChild(panel);

  root.appendChild(renderTree(controller));
}

function depthControls(controller: ExplorerController): HTMLElement {
  const wrap = document.createElement("div");
  wrap.className = "depths";
  const upInput = numberInput("up", controller.state.up);
  const downInput = numberInput("down", controller.state.down);
  const apply = document.createElement("button");
  apply.textContent = "Apply depths";
  apply.addEventListener("click", () => {
    void controller.setDepths(Number(upInput.value), Number(downInput.value));
  });
  wrap.append("ancestors:", upInput, "descendants:", downInput, apply);
  return wrap;
}

function numberInput(name: string, value: number): HTMLInputElement {
  const input = document.createElement("input");
  input.type = "number";
  input.name = name;
  input.min = "0";
  input.max = "6";
  input.value = String(value);
  return input;
}

function renderTree(controller: ExplorerController): SVGSVGElement {
  const state = controller.state;
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.classList.add("tree");
  const { placed, width, height } = layout(state.nodes.values());
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("width", String(width));
  svg.setAttribute("height", String(height));

  for (const edge of state.edges) {
    const from = placed.get(edge.advisor);
    const to = placed.get(edge.advisee);
    if (!from || !to) {
      continue; // endpoint outside the current view
    }
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(from.x));
    line.setAttribute("y1", String(from.y));
    line.setAttribute("x2", String(to.x));
    line.setAttribute("y2", String(to.y));
    line.setAttribute("stroke", "#888");
    line.setAttribute("data-edge", `${edge.advisor}->${edge.advisee}`);
    const tooltip = document.createElementNS(SVG_NS, "title");
    tooltip.textContent = `${edge.level} / ${edge.role}`;
    line.appendChild(tooltip);
    svg.appendChild(line);
  }

  for (const node of placed.values()) {
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("data-node", String(node.id));
    group.setAttribute("data-level", String(node.level));
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(node.x));
    circle.setAttribute("cy", String(node.y));
    circle.setAttribute("r", "18");
    circle.setAttribute("fill", colorForLevel(node.level));
    circle.setAttribute(
      "stroke",
      node.id === controller.state.focus ? "#222" : "#ccc",
    );
    circle.addEventListener("click", () => void controller.expandNode(node.id));
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent =
      `${node.name} (level ${node.level}` +
      `${node.hasCurriculum ? "" : ", no curriculum"})`;
    circle.appendChild(title);
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(node.x));
    label.setAttribute("y", String(node.y + 34));
    label.setAttribute("text-anchor", "middle");
    label.textContent = node.name;
    group.append(circle, label);
    svg.appendChild(group);
  }
  if (state.focus === null && state.nodes.size === 0) {
    const hint = document.createElementNS(SVG_NS, "text");
    hint.setAttribute("x", String(width / 2));
    hint.setAttribute("y", String(height / 2));
    hint.setAttribute("text-anchor", "middle");
    hint.textContent = "search a researcher to explore their lineage";
    svg.appendChild(hint);
  }
  return svg;
}
