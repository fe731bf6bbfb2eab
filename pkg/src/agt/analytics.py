"""Graph characterization: tree profiles, aggregate metrics, distributions.

Terminology: a *tree* is the set of nodes reachable from a root (a node with
no known advisor), root included; trees may overlap because the graph is a
DAG. Two distinct averages are exposed on purpose: ``avg_out_degree`` is the
literal edges-over-nodes quotient, while ``avg_branching`` divides edges by
the number of nodes that advised anyone. On real genealogy data they differ
wildly (most nodes never advise), which is why both are part of the report.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field

import numpy as np

from .errors import NoTrees, NotARoot
from .graph import GenealogyGraph
from .identity import normalize_text
from .records import Corpus, DegreeEntry, Level
from .treewalk import tree_stats

DEFAULT_HOME_COUNTRY = "Brazil"


@dataclass(frozen=True)
class TreeProfile:
    root: int
    size: int
    depth: int
    max_width: int


@dataclass
class MetricsReport:
    num_nodes: int
    num_edges: int
    num_trees: int
    num_components: int
    avg_tree_size: float
    avg_branching: float
    avg_out_degree: float
    mean_width_depth_ratio: float
    size_cdf: list[tuple[int, float]] = field(default_factory=list)
    depth_histogram: dict[int, int] = field(default_factory=dict)
    country_table: dict[tuple[str, Level], int] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "num_nodes": self.num_nodes,
            "num_edges": self.num_edges,
            "num_trees": self.num_trees,
            "num_components": self.num_components,
            "avg_tree_size": self.avg_tree_size,
            "avg_branching": self.avg_branching,
            "avg_out_degree": self.avg_out_degree,
            "mean_width_depth_ratio": self.mean_width_depth_ratio,
            "size_cdf": [[size, frac] for size, frac in self.size_cdf],
            "depth_histogram": {
                str(depth): count for depth, count in sorted(self.depth_histogram.items())
            },
            "country_table": country_rows(self.country_table),
        }


def country_rows(table: dict[tuple[str, Level], int]) -> list[dict]:
    """Flatten a (country, level) count map into PhD-descending rows."""
    countries = sorted({c for c, _ in table})
    rows = [
        {
            "country": c,
            "phd": table.get((c, Level.PHD), 0),
            "masters": table.get((c, Level.MASTERS), 0),
        }
        for c in countries
    ]
    rows.sort(key=lambda r: (-r["phd"], -r["masters"], r["country"]))
    return rows


# --- basic structure ------------------------------------------------------

def roots(graph: GenealogyGraph) -> set[int]:
    """Nodes without a known advisor; each defines one tree."""
    return {n for n in graph.nodes if not graph.advisors(n)}


def components(graph: GenealogyGraph) -> int:
    """Number of weakly connected components (edge direction ignored)."""
    parent = {n: n for n in graph.nodes}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in graph.nodes:
        for v in graph.advisees(u):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    return len({find(n) for n in graph.nodes})


def _csr(graph: GenealogyGraph):
    """CSR out-adjacency over unique advisor->advisee pairs."""
    n = graph.node_count()
    indptr = np.zeros(n + 1, dtype=np.int64)
    for u in range(n):
        indptr[u + 1] = indptr[u] + len(graph.advisees(u))
    indices = np.zeros(int(indptr[-1]), dtype=np.int32)
    for u in range(n):
        neighbors = sorted(graph.advisees(u))
        indices[indptr[u] : indptr[u + 1]] = neighbors
    return indptr, indices


def _kahn_order(graph: GenealogyGraph) -> np.ndarray:
    n = graph.node_count()
    in_deg = [len(graph.advisors(v)) for v in range(n)]
    order = np.zeros(n, dtype=np.int32)
    queue = deque(v for v in range(n) if in_deg[v] == 0)
    k = 0
    while queue:
        u = queue.popleft()
        order[k] = u
        k += 1
        for v in sorted(graph.advisees(u)):
            in_deg[v] -= 1
            if in_deg[v] == 0:
                queue.append(v)
    if k != n:
        raise AssertionError("graph invariant violated: cycle detected")
    return order


def _profiles_for(graph: GenealogyGraph, root_ids: list[int]) -> list[TreeProfile]:
    indptr, indices = _csr(graph)
    topo = _kahn_order(graph)
    root_arr = np.asarray(root_ids, dtype=np.int32)
    sizes, depths, widths = tree_stats(indptr, indices, topo, root_arr)
    return [
        TreeProfile(root=r, size=int(s), depth=int(d), max_width=int(w))
        for r, s, d, w in zip(root_ids, sizes, depths, widths)
    ]


def tree_profile(graph: GenealogyGraph, root: int) -> TreeProfile:
    """Size / depth / max width of one root's tree.

    Raises NotARoot when the node has incoming edges.
    """
    graph.require_node(root)
    if graph.advisors(root):
        raise NotARoot(f"node {root} has an advisor")
    return _profiles_for(graph, [root])[0]


def all_profiles(graph: GenealogyGraph) -> list[TreeProfile]:
    """Profiles for every root, in ascending root-id order."""
    return _profiles_for(graph, sorted(roots(graph)))


# --- distributions --------------------------------------------------------

def _cdf(sizes: list[int]) -> list[tuple[int, float]]:
    total = len(sizes)
    counts = Counter(sizes)
    out: list[tuple[int, float]] = []
    seen = 0
    for size in sorted(counts):
        seen += counts[size]
        out.append((size, seen / total))
    return out


def size_cdf(graph: GenealogyGraph) -> list[tuple[int, float]]:
    """Cumulative fraction of trees with size <= s, for each distinct size s."""
    profiles = all_profiles(graph)
    if not profiles:
        raise NoTrees("graph has no roots")
    return _cdf([p.size for p in profiles])


# --- aggregates -----------------------------------------------------------

def summarize(graph: GenealogyGraph, home_country: str = DEFAULT_HOME_COUNTRY) -> MetricsReport:
    """Compute the full metrics report for a built graph.

    Graphs without trees yield zero for every average. The country table is
    derived from the degrees stored on curriculum-bearing nodes, which are
    exactly the corpus records that built the graph.
    """
    num_nodes = graph.node_count()
    num_edges = graph.edge_count()
    profiles = all_profiles(graph)
    num_trees = len(profiles)
    num_components = components(graph)

    advisors = sum(1 for n in graph.nodes if graph.out_degree(n) > 0)
    avg_branching = num_edges / advisors if advisors else 0.0
    avg_out_degree = num_edges / num_nodes if num_nodes else 0.0
    avg_tree_size = sum(p.size for p in profiles) / num_trees if num_trees else 0.0

    ratios = [p.max_width / p.depth for p in profiles if p.depth >= 1]
    mean_width_depth_ratio = sum(ratios) / len(ratios) if ratios else 0.0

    depth_histogram: dict[int, int] = {}
    for p in profiles:
        depth_histogram[p.depth] = depth_histogram.get(p.depth, 0) + 1

    degrees = (d for node in graph.nodes.values() if node.has_curriculum for d in node.degrees)
    return MetricsReport(
        num_nodes=num_nodes,
        num_edges=num_edges,
        num_trees=num_trees,
        num_components=num_components,
        avg_tree_size=avg_tree_size,
        avg_branching=avg_branching,
        avg_out_degree=avg_out_degree,
        mean_width_depth_ratio=mean_width_depth_ratio,
        size_cdf=_cdf([p.size for p in profiles]) if profiles else [],
        depth_histogram=depth_histogram,
        country_table=_count_foreign(degrees, home_country),
    )


def country_table(
    corpus: Corpus, home_country: str = DEFAULT_HOME_COUNTRY
) -> dict[tuple[str, Level], int]:
    """Foreign-degree counts by (country, level) over a corpus.

    Degrees earned in the home country, or lacking a country, are excluded.
    """
    degrees = (d for r in corpus.records for d in r.degrees)
    return _count_foreign(degrees, home_country)


def _count_foreign(degrees, home_country: str) -> dict[tuple[str, Level], int]:
    home = normalize_text(home_country)
    table: dict[tuple[str, Level], int] = {}
    for degree in degrees:
        if not degree.country:
            continue
        if normalize_text(degree.country) == home:
            continue
        key = (degree.country, degree.level)
        table[key] = table.get(key, 0) + 1
    return table


def distributions_csv(report: MetricsReport) -> dict[str, str]:
    """Two-column CSV renderings of the report's distributions."""
    size_lines = ["size,cumulative_fraction"]
    size_lines += [f"{size},{frac:.10g}" for size, frac in report.size_cdf]
    depth_lines = ["depth,tree_count"]
    depth_lines += [f"{d},{c}" for d, c in sorted(report.depth_histogram.items())]
    country_lines = ["country,phd,masters"]
    country_lines += [
        f"{row['country']},{row['phd']},{row['masters']}"
        for row in country_rows(report.country_table)
    ]
    return {
        "size_cdf.csv": "\n".join(size_lines) + "\n",
        "depth_histogram.csv": "\n".join(depth_lines) + "\n",
        "country_table.csv": "\n".join(country_lines) + "\n",
    }
