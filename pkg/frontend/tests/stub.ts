// A stubbed query service for component tests: serves the same wire shapes
// as the real server over an injectable fetch, and records every payload it
// returns so tests can check the UI never draws an edge it was not given.

import type { FetchLike } from "../src/api.js";
import type { SearchHit, ViewEdge, ViewJson, ViewNode } from "../src/types.js";

export interface StubGraph {
  names: Record<number, string>;
  withCurriculum: number[];
  edges: ViewEdge[];
}

// The five-node worked example: P,M -> R -> X,Y (R=0, P=1, M=2, X=3, Y=4).
export function fiveNodeGraph(): StubGraph {
  return {
    names: { 0: "R", 1: "P", 2: "M", 3: "X", 4: "Y" },
    withCurriculum: [0],
    edges: [
      { advisor: 1, advisee: 0, level: "PHD", role: "ADVISOR" },
      { advisor: 2, advisee: 0, level: "MASTERS", role: "ADVISOR" },
      { advisor: 0, advisee: 3, level: "PHD", role: "ADVISOR" },
      { advisor: 0, advisee: 4, level: "MASTERS", role: "ADVISOR" },
    ],
  };
}

// Same graph with a third generation below X (for expand tests).
export function threeGenerationGraph(): StubGraph {
  const graph = fiveNodeGraph();
  graph.names[5] = "Z1";
  graph.names[6] = "Z2";
  graph.edges.push(
    { advisor: 3, advisee: 5, level: "PHD", role: "ADVISOR" },
    { advisor: 3, advisee: 6, level: "MASTERS", role: "ADVISOR" },
  );
  return graph;
}

function treeView(graph: StubGraph, focus: number, up: number, down: number): ViewJson {
  const levelOf = new Map<number, number>([[focus, 0]]);
  let frontier = [focus];
  for (let depth = 1; depth <= up; depth++) {
    const next: number[] = [];
    for (const node of frontier) {
      for (const e of graph.edges) {
        if (e.advisee === node && !levelOf.has(e.advisor)) {
          levelOf.set(e.advisor, -depth);
          next.push(e.advisor);
        }
      }
    }
    frontier = next;
  }
  frontier = [focus];
  for (let depth = 1; depth <= down; depth++) {
    const next: number[] = [];
    for (const node of frontier) {
      for (const e of graph.edges) {
        if (e.advisor === node && !levelOf.has(e.advisee)) {
          levelOf.set(e.advisee, depth);
          next.push(e.advisee);
        }
      }
    }
    frontier = next;
  }
  const nodes: ViewNode[] = [...levelOf.entries()].map(([id, level]) => ({
    id,
    name: graph.names[id],
    level,
    has_curriculum: graph.withCurriculum.includes(id),
  }));
  const edges = graph.edges.filter(
    (e) => levelOf.has(e.advisor) && levelOf.has(e.advisee),
  );
  return { focus, nodes, edges };
}

export interface StubService {
  fetch: FetchLike;
  served: ViewJson[]; // every tree payload handed to the client
  requests: string[];
  vanish: Set<number>; // ids that 404 (stale-node tests)
}

export function stubService(graph: StubGraph): StubService {
  const served: ViewJson[] = [];
  const requests: string[] = [];
  const vanish = new Set<number>();

  const fetchStub: FetchLike = async (url: string) => {
    requests.push(url);
    const parsed = new URL(url, "http://stub");
    const treeMatch = parsed.pathname.match(/^\/api\/researchers\/(\d+)\/tree$/);
    if (treeMatch) {
      const id = Number(treeMatch[1]);
      if (!(id in graph.names) || vanish.has(id)) {
        return new Response("{}", { status: 404 });
      }
      const up = Number(parsed.searchParams.get("up") ?? 1);
      const down = Number(parsed.searchParams.get("down") ?? 2);
      const view = treeView(graph, id, up, down);
      served.push(view);
      return new Response(JSON.stringify(view), { status: 200 });
    }
    if (parsed.pathname === "/api/researchers") {
      const q = (parsed.searchParams.get("q") ?? "").toLowerCase();
      if (!q) {
        return new Response("{}", { status: 400 });
      }
      const hits: SearchHit[] = Object.entries(graph.names)
        .filter(([, name]) => name.toLowerCase().includes(q))
        .map(([id, name]) => ({
          node_id: Number(id),
          display_name: name,
          institutions: [],
          has_curriculum: graph.withCurriculum.includes(Number(id)),
          advisee_count: graph.edges.filter((e) => e.advisor === Number(id)).length,
        }));
      return new Response(JSON.stringify({ hits }), { status: 200 });
    }
    return new Response("{}", { status: 404 });
  };

  return { fetch: fetchStub, served, requests, vanish };
}

export function failingFetch(): FetchLike {
  return async () => {
    throw new Error("network down");
  };
}
