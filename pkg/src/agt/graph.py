"""The genealogy DAG: researcher nodes, advising edges, acyclicity enforcement.

Edges are stored advisor -> advisee. The graph maintains a topological order
incrementally (Pearce-Kelly style): an edge that agrees with the current
order is accepted without search; otherwise a bounded forward/backward sweep
of the affected region either finds a cycle (edge rejected and logged) or
reorders the region. The graph is therefore acyclic at all times.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import UnknownNode
from .identity import IdentityIndex
from .records import DegreeEntry, Level, Role


class CreatedFrom(str, enum.Enum):
    OWN_CURRICULUM = "OWN_CURRICULUM"
    ADVISOR_MENTION = "ADVISOR_MENTION"
    ADVISEE_MENTION = "ADVISEE_MENTION"


class Evidence(str, enum.Enum):
    ADVISEE_SIDE = "ADVISEE_SIDE"
    ADVISOR_SIDE = "ADVISOR_SIDE"
    BOTH = "BOTH"


class RejectReason(str, enum.Enum):
    SELF_LOOP = "SELF_LOOP"
    CYCLE = "CYCLE"


@dataclass
class ResearcherNode:
    node_id: int
    display_name: str
    created_from: CreatedFrom
    platform_id: str | None = None
    has_curriculum: bool = False
    institutions: set[str] = field(default_factory=set)
    degrees: list[DegreeEntry] = field(default_factory=list)


@dataclass
class AdvisingEdge:
    advisor: int
    advisee: int
    level: Level
    role: Role
    evidence: Evidence
    year: int | None = None

    def key(self) -> tuple[int, int, Level, Role]:
        return (self.advisor, self.advisee, self.level, self.role)


@dataclass(frozen=True)
class RejectedEdge:
    advisor: int
    advisee: int
    reason: RejectReason


class EdgeStatus(str, enum.Enum):
    ADDED = "ADDED"
    DEDUPLICATED = "DEDUPLICATED"
    REJECTED = "REJECTED"


@dataclass(frozen=True)
class EdgeOutcome:
    status: EdgeStatus
    reason: RejectReason | None = None


class GenealogyGraph:
    """Id-addressed node collection plus advisor->advisee adjacency."""

    def __init__(self):
        self.nodes: dict[int, ResearcherNode] = {}
        self.out_edges: dict[int, list[AdvisingEdge]] = {}
        self.in_edges: dict[int, list[AdvisingEdge]] = {}
        self.rejected_edges: list[RejectedEdge] = []
        self.anomalies: list[str] = []
        self.index = IdentityIndex()
        # Provenance: mention locator -> resolved node; record fingerprint -> node.
        self.mention_map: dict[str, int] = {}
        self.record_fingerprints: dict[str, int] = {}
        self._edge_index: dict[tuple, AdvisingEdge] = {}
        self._out_pairs: dict[int, set[int]] = {}
        self._in_pairs: dict[int, set[int]] = {}
        # Incremental topological order: position per node, node per slot.
        self._pos: dict[int, int] = {}
        self._slot: list[int] = []

    # --- nodes -----------------------------------------------------------

    def add_node(self, display_name: str, created_from: CreatedFrom) -> int:
        node_id = len(self.nodes)
        self.nodes[node_id] = ResearcherNode(node_id, display_name, created_from)
        self.out_edges[node_id] = []
        self.in_edges[node_id] = []
        self._out_pairs[node_id] = set()
        self._in_pairs[node_id] = set()
        self._pos[node_id] = len(self._slot)
        self._slot.append(node_id)
        self.index.add_node(node_id)
        return node_id

    def require_node(self, node_id: int) -> ResearcherNode:
        try:
            return self.nodes[node_id]
        except KeyError:
            raise UnknownNode(f"node {node_id} does not exist") from None

    def node_count(self) -> int:
        return len(self.nodes)

    def edge_count(self) -> int:
        return len(self._edge_index)

    def edges(self) -> list[AdvisingEdge]:
        return [e for out in self.out_edges.values() for e in out]

    def out_degree(self, node_id: int) -> int:
        return len(self.out_edges[node_id])

    def advisees(self, node_id: int) -> set[int]:
        return self._out_pairs[node_id]

    def advisors(self, node_id: int) -> set[int]:
        return self._in_pairs[node_id]

    # --- edges -----------------------------------------------------------

    def add_edge_checked(
        self,
        advisor: int,
        advisee: int,
        level: Level,
        role: Role,
        evidence: Evidence,
        year: int | None = None,
    ) -> EdgeOutcome:
        """Insert an edge iff it keeps the graph a DAG.

        Duplicates of the (advisor, advisee, level, role) quadruple merge
        their evidence (upgrading to BOTH when the sides differ) and fill a
        missing year. Self-loops and cycle-closing edges are rejected and
        logged, never applied.
        """
        self.require_node(advisor)
        self.require_node(advisee)
        if advisor == advisee:
            self.rejected_edges.append(RejectedEdge(advisor, advisee, RejectReason.SELF_LOOP))
            return EdgeOutcome(EdgeStatus.REJECTED, RejectReason.SELF_LOOP)

        key = (advisor, advisee, level, role)
        existing = self._edge_index.get(key)
        if existing is not None:
            if existing.evidence is not Evidence.BOTH and existing.evidence is not evidence:
                existing.evidence = Evidence.BOTH
            if existing.year is None and year is not None:
                existing.year = year
            return EdgeOutcome(EdgeStatus.DEDUPLICATED)

        if advisee not in self._out_pairs[advisor]:
            # New adjacency pair: must not close a directed cycle.
            if not self._order_insert(advisor, advisee):
                self.rejected_edges.append(RejectedEdge(advisor, advisee, RejectReason.CYCLE))
                return EdgeOutcome(EdgeStatus.REJECTED, RejectReason.CYCLE)
            self._out_pairs[advisor].add(advisee)
            self._in_pairs[advisee].add(advisor)

        edge = AdvisingEdge(advisor, advisee, level, role, evidence, year)
        self._edge_index[key] = edge
        self.out_edges[advisor].append(edge)
        self.in_edges[advisee].append(edge)
        return EdgeOutcome(EdgeStatus.ADDED)

    def _order_insert(self, u: int, v: int) -> bool:
        """Maintain the topological order across inserting u -> v.

        Returns False when the edge would create a cycle (order untouched).
        """
        pos = self._pos
        if pos[u] < pos[v]:
            return True
        lb, ub = pos[v], pos[u]
        # Forward from v within [lb, ub]; existing edges only ever move
        # forward in the order, so any v ~> u path stays inside the region.
        forward: list[int] = []
        seen = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            if x == u:
                return False
            forward.append(x)
            for y in self._out_pairs[x]:
                if y not in seen and pos[y] <= ub:
                    seen.add(y)
                    stack.append(y)
        # Backward from u within [lb, ub].
        backward: list[int] = []
        seen_b = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            backward.append(x)
            for y in self._in_pairs[x]:
                if y not in seen_b and pos[y] >= lb:
                    seen_b.add(y)
                    stack.append(y)
        # Reorder: everything reaching u goes before everything v reaches,
        # reusing the same slot positions in sorted order.
        forward.sort(key=pos.__getitem__)
        backward.sort(key=pos.__getitem__)
        slots = sorted(pos[x] for x in backward + forward)
        for node, slot in zip(backward + forward, slots):
            self._pos[node] = slot
            self._slot[slot] = node
        return True

    def topological_order(self) -> list[int]:
        """Current maintained topological order (advisors before advisees)."""
        return list(self._slot)

    # --- structural equality (save/load round trips) ----------------------

    def same_as(self, other: GenealogyGraph) -> bool:
        def node_view(g: GenealogyGraph):
            return {
                n.node_id: (
                    n.display_name,
                    n.created_from,
                    n.platform_id,
                    n.has_curriculum,
                    tuple(sorted(n.institutions)),
                    tuple(n.degrees),
                )
                for n in g.nodes.values()
            }

        def edge_view(g: GenealogyGraph):
            return {k: (e.evidence, e.year) for k, e in g._edge_index.items()}

        return (
            node_view(self) == node_view(other)
            and edge_view(self) == edge_view(other)
            and self.rejected_edges == other.rejected_edges
            and self.anomalies == other.anomalies
            and self.mention_map == other.mention_map
            and self.record_fingerprints == other.record_fingerprints
        )
