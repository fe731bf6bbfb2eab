// Layered top-down placement: advisors above the focus, advisees below,
// one row per level. Within a row, nodes are ordered by name (then id) so
// the drawing is stable across renders.

import type { RenderedNode } from "./state.js";

export interface PlacedNode extends RenderedNode {
  x: number;
  y: number;
}

export interface LayoutResult {
  placed: Map<number, PlacedNode>;
  width: number;
  height: number;
}

export const ROW_HEIGHT = 96;
export const COL_WIDTH = 132;
export const MARGIN = 60;

export function layout(nodes: Iterable<RenderedNode>): LayoutResult {
  const byLevel = new Map<number, RenderedNode[]>();
  for (const node of nodes) {
    const row = byLevel.get(node.level);
    if (row) {
      row.push(node);
    } else {
      byLevel.set(node.level, [node]);
    }
  }
  const levels = [...byLevel.keys()].sort((a, b) => a - b);
  const widest = Math.max(1, ...[...byLevel.values()].map((row) => row.length));
  const width = widest * COL_WIDTH + 2 * MARGIN;
  const height = Math.max(1, levels.length) * ROW_HEIGHT + 2 * MARGIN;

  const placed = new Map<number, PlacedNode>();
  levels.forEach((level, rowIndex) => {
    const row = byLevel.get(level)!;
    row.sort((a, b) => (a.name < b.name ? -1 : a.name > b.name ? 1 : a.id - b.id));
    const rowWidth = row.length * COL_WIDTH;
    row.forEach((node, colIndex) => {
      placed.set(node.id, {
        ...node,
        x: (width - rowWidth) / 2 + COL_WIDTH * (colIndex + 0.5),
        y: MARGIN + ROW_HEIGHT * (rowIndex + 0.5),
      });
    });
  });
  return { placed, width, height };
}
