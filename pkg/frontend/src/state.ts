// Explorer view state and the interaction controller.
//
// The controller owns everything the UI renders: the focused researcher,
// the merged level-annotated view, depth settings, the expanded-node set,
// and the search box state. All mutations go through it, every fetched
// payload passes through exactly one merge point, and stale responses are
// discarded by sequence number, so the rendered view is always a function
// of the latest completed interaction.

import { ApiClient, ApiError } from "./api.js";
import { edgeKey, type SearchHit, type ViewEdge, type ViewNode } from "./types.js";

export interface RenderedNode {
  id: number;
  name: string;
  level: number;
  hasCurriculum: boolean;
}

export interface ViewState {
  focus: number | null;
  nodes: Map<number, RenderedNode>;
  edges: ViewEdge[];
  up: number;
  down: number;
  expanded: Set<number>;
  searchText: string;
  hits: SearchHit[];
  banner: string | null; // network failure, offers retry
  notice: string | null; // transient per-interaction message
}

export const MAX_DEPTH = 6;

function clampDepth(value: number): number {
  return Math.max(0, Math.min(MAX_DEPTH, Math.floor(value)));
}

export class ExplorerController {
  readonly state: ViewState = {
    focus: null,
    nodes: new Map(),
    edges: [],
    up: 1,
    down: 2,
    expanded: new Set(),
    searchText: "",
    hits: [],
    banner: null,
    notice: null,
  };

  private listeners: Array<() => void> = [];
  private treeSeq = 0;
  private searchSeq = 0;
  private lastFailed: (() => Promise<void>) | null = null;

  constructor(private api: ApiClient) {}

  onChange(listener: () => void): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) {
      listener();
    }
  }

  async search(text: string): Promise<void> {
    this.state.searchText = text;
    if (!text.trim()) {
      // Empty query is disabled: clear hits without calling the service.
      this.state.hits = [];
      this.emit();
      return;
    }
    const seq = ++this.searchSeq;
    try {
      const hits = await this.api.search(text.trim());
      if (seq !== this.searchSeq) {
        return; // a newer search is in flight
      }
      this.state.hits = hits;
      this.state.banner = null;
      this.state.notice = hits.length ? null : "no researchers match";
    } catch (error) {
      if (seq !== this.searchSeq) {
        return;
      }
      this.fail(() => this.search(text), error);
    }
    this.emit();
  }

  async selectHit(nodeId: number): Promise<void> {
    const seq = ++this.treeSeq;
    try {
      const view = await this.api.tree(nodeId, this.state.up, this.state.down);
      if (seq !== this.treeSeq) {
        return;
      }
      this.state.focus = nodeId;
      this.state.nodes = new Map(
        view.nodes.map((n: ViewNode) => [
          n.id,
          { id: n.id, name: n.name, level: n.level, hasCurriculum: n.has_curriculum },
        ]),
      );
      this.state.edges = dedupeEdges(view.edges);
      this.state.expanded = new Set();
      this.state.banner = null;
      this.state.notice = null;
    } catch (error) {
      if (seq !== this.treeSeq) {
        return;
      }
      this.fail(() => this.selectHit(nodeId), error);
    }
    this.emit();
  }

  async setDepths(up: number, down: number): Promise<void> {
    this.state.up = clampDepth(up);
    this.state.down = clampDepth(down);
    if (this.state.focus !== null) {
      await this.selectHit(this.state.focus);
    } else {
      this.emit();
    }
  }

  async expandNode(nodeId: number): Promise<void> {
    const current = this.state.nodes.get(nodeId);
    if (!current || this.state.expanded.has(nodeId)) {
      return; // not rendered, or repeated expand: no-op
    }
    const seq = ++this.treeSeq;
    try {
      const view = await this.api.tree(nodeId, 0, 1);
      if (seq !== this.treeSeq) {
        return;
      }
      this.state.expanded.add(nodeId);
      // Graft below the expanded node; levels stay relative to the
      // original focus.
      for (const n of view.nodes) {
        if (!this.state.nodes.has(n.id)) {
          this.state.nodes.set(n.id, {
            id: n.id,
            name: n.name,
            level: current.level + n.level,
            hasCurriculum: n.has_curriculum,
          });
        }
      }
      const known = new Set(this.state.edges.map(edgeKey));
      for (const edge of view.edges) {
        if (!known.has(edgeKey(edge))) {
          this.state.edges.push(edge);
          known.add(edgeKey(edge));
        }
      }
      this.state.banner = null;
      const hasAdvisees = view.edges.some((e) => e.advisor === nodeId);
      this.state.notice = hasAdvisees ? null : `${current.name}: no advisees`;
    } catch (error) {
      if (seq !== this.treeSeq) {
        return;
      }
      if (error instanceof ApiError && error.status === 404) {
        // The node vanished from the served graph: drop it with a notice.
        this.state.nodes.delete(nodeId);
        this.state.edges = this.state.edges.filter(
          (e) => e.advisor !== nodeId && e.advisee !== nodeId,
        );
        this.state.notice = `${current.name} is no longer in the graph`;
      } else {
        this.fail(() => this.expandNode(nodeId), error);
      }
    }
    this.emit();
  }

  async retry(): Promise<void> {
    const op = this.lastFailed;
    this.lastFailed = null;
    this.state.banner = null;
    if (op) {
      await op();
    }
  }

  private fail(op: () => Promise<void>, error: unknown): void {
    this.lastFailed = op;
    const reason = error instanceof Error ? error.message : String(error);
    this.state.banner = `request failed (${reason}) — retry`;
  }
}

function dedupeEdges(edges: ViewEdge[]): ViewEdge[] {
  const seen = new Set<string>();
  const out: ViewEdge[] = [];
  for (const edge of edges) {
    const key = edgeKey(edge);
    if (!seen.has(key)) {
      seen.add(key);
      out.push(edge);
    }
  }
  return out;
}
