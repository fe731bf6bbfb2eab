// Wire shapes of the query service (VIEW_JSON and search hits).

export interface ViewNode {
  id: number;
  name: string;
  level: number;
  has_curriculum: boolean;
}

export interface ViewEdge {
  advisor: number;
  advisee: number;
  level: string; // MASTERS | PHD
  role: string; // ADVISOR | COADVISOR
}

export interface ViewJson {
  focus: number | null;
  nodes: ViewNode[];
  edges: ViewEdge[];
}

export interface SearchHit {
  node_id: number;
  display_name: string;
  institutions: string[];
  has_curriculum: boolean;
  advisee_count: number;
}

export function edgeKey(e: ViewEdge): string {
  return `${e.advisor}->${e.advisee}:${e.level}:${e.role}`;
}
