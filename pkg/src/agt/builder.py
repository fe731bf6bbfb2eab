"""Genealogy construction: folds a sorted corpus into the global DAG.

Each record is applied in three steps: claim or create the owner's node,
link the owner's advisors (edges advisor -> owner, advisee-side evidence),
then link the owner's advisees (edges owner -> advisee, advisor-side
evidence). Mentions are matched through the identity index.

Linking policy: only tiers T1 (platform id), T2 (name+title+year) and
T3 (name+institution) are strong enough to merge a mention into an existing
node. A bare-name match (tier T4) or an ambiguous candidate set creates a
new node instead; wrong merges corrupt lineages irreversibly, duplicate
nodes remain mergeable. Owner records additionally never claim a node that
already carries a curriculum, except through a platform-id or identical
record-content match.
"""

from __future__ import annotations

import hashlib

from .graph import CreatedFrom, EdgeOutcome, Evidence, GenealogyGraph
from .identity import IdentityQuery
from .records import Corpus, CurriculumRecord, Level, Role, emit_record


def record_fingerprint(record: CurriculumRecord) -> str:
    return hashlib.sha1(emit_record(record).encode("utf-8")).hexdigest()


def locator_prefix(record: CurriculumRecord) -> str:
    """Stable per-record key for mention locators and provenance."""
    if record.record_id:
        return record.record_id
    return "h" + record_fingerprint(record)[:12]


def _resolve_mention(
    graph: GenealogyGraph,
    name: str,
    platform_id: str | None = None,
    titles: list[tuple[str, int]] = (),
    institutions: list[str] = (),
    unclaimed_only: bool = False,
) -> int | None:
    """Tier walk over all of a mention's signals; None means create a node.

    Ambiguity at any probe (two or more candidates) aborts the walk, per the
    conservative non-merge policy.
    """
    index = graph.index
    if platform_id is not None:
        node = index.by_platform_id.get(platform_id)
        if node is not None:
            return node

    def admissible(candidates: set[int]) -> set[int]:
        if not unclaimed_only:
            return candidates
        return {n for n in candidates if not graph.nodes[n].has_curriculum}

    for title, year in titles:
        cands = admissible(index.candidates_t2(name, title, year))
        if len(cands) == 1:
            return next(iter(cands))
        if len(cands) > 1:
            return None
    for institution in institutions:
        cands = admissible(index.candidates_t3(name, institution))
        if len(cands) == 1:
            return next(iter(cands))
        if len(cands) > 1:
            return None
    return None


def _register_signals(
    graph: GenealogyGraph,
    node_id: int,
    name: str,
    platform_id: str | None = None,
    titles: list[tuple[str, int]] = (),
    institutions: list[str] = (),
) -> None:
    graph.index.register(node_id, IdentityQuery(name=name, platform_id=platform_id))
    for title, year in titles:
        graph.index.register(
            node_id, IdentityQuery(name=name, work_title=title, year=year)
        )
    node = graph.nodes[node_id]
    for institution in institutions:
        graph.index.register(node_id, IdentityQuery(name=name, institution=institution))
        node.institutions.add(institution)


def upsert_researcher(graph: GenealogyGraph, record: CurriculumRecord) -> int:
    """Claim the owner's node, creating it when no safe match exists."""
    fingerprint = record_fingerprint(record)
    prefix = locator_prefix(record)
    node_id = graph.record_fingerprints.get(fingerprint)
    if node_id is None:
        titles = [
            (d.thesis_title, d.year)
            for d in record.degrees
            if d.thesis_title and d.year is not None
        ]
        institutions = _dedup(
            [record.institution] + [d.institution for d in record.degrees]
        )
        node_id = _resolve_mention(
            graph,
            record.full_name,
            platform_id=record.record_id,
            titles=titles,
            institutions=institutions,
            unclaimed_only=True,
        )
        if node_id is None:
            node_id = graph.add_node(record.full_name, CreatedFrom.OWN_CURRICULUM)
    _apply_curriculum(graph, node_id, record)
    graph.record_fingerprints[fingerprint] = node_id
    graph.mention_map[f"{prefix}:owner"] = node_id
    return node_id


def _apply_curriculum(graph: GenealogyGraph, node_id: int, record: CurriculumRecord) -> None:
    node = graph.nodes[node_id]
    node.display_name = record.full_name
    node.has_curriculum = True
    if record.record_id:
        node.platform_id = record.record_id
    node.degrees = list(record.degrees)
    titles = [
        (d.thesis_title, d.year)
        for d in record.degrees
        if d.thesis_title and d.year is not None
    ]
    institutions = _dedup([record.institution] + [d.institution for d in record.degrees])
    for alias in [record.full_name] + record.citation_names:
        graph.index.register(node_id, IdentityQuery(name=alias))
    _register_signals(
        graph,
        node_id,
        record.full_name,
        platform_id=record.record_id,
        titles=titles,
        institutions=institutions,
    )


def link_advisors(graph: GenealogyGraph, node_id: int, record: CurriculumRecord) -> list[EdgeOutcome]:
    """Resolve each degree's advisor(s) and connect them to the owner.

    Advisors are matched by name plus the institution where the degree was
    earned; unresolved names become new advisor-mention nodes.
    """
    prefix = locator_prefix(record)
    outcomes = []
    for i, degree in enumerate(record.degrees):
        mentions = []
        if degree.advisor_name:
            mentions.append((f"{prefix}:deg{i}:adv", degree.advisor_name, Role.ADVISOR))
        for j, coadvisor in enumerate(degree.coadvisor_names):
            mentions.append((f"{prefix}:deg{i}:co{j}", coadvisor, Role.COADVISOR))
        for locator, raw_name, role in mentions:
            advisor_id = graph.mention_map.get(locator)
            if advisor_id is None:
                institutions = [degree.institution] if degree.institution else []
                advisor_id = _resolve_mention(graph, raw_name, institutions=institutions)
                if advisor_id is None:
                    advisor_id = graph.add_node(raw_name, CreatedFrom.ADVISOR_MENTION)
                _register_signals(graph, advisor_id, raw_name, institutions=institutions)
                graph.mention_map[locator] = advisor_id
            outcomes.append(
                graph.add_edge_checked(
                    advisor_id,
                    node_id,
                    degree.level,
                    role,
                    Evidence.ADVISEE_SIDE,
                    year=degree.year,
                )
            )
    return outcomes


def link_advisees(graph: GenealogyGraph, node_id: int, record: CurriculumRecord) -> list[EdgeOutcome]:
    """Resolve each mentorship's advisee and connect the owner to it."""
    prefix = locator_prefix(record)
    outcomes = []
    for i, mentorship in enumerate(record.mentorships):
        level = mentorship.level
        if level is None:
            level = Level.MASTERS
            graph.anomalies.append(
                f"{prefix}:men{i}: mentorship level missing, defaulted to MASTERS"
            )
        locator = f"{prefix}:men{i}"
        advisee_id = graph.mention_map.get(locator)
        if advisee_id is None:
            titles = (
                [(mentorship.work_title, mentorship.year)]
                if mentorship.work_title and mentorship.year is not None
                else []
            )
            institutions = [mentorship.institution] if mentorship.institution else []
            advisee_id = _resolve_mention(
                graph, mentorship.advisee_name, titles=titles, institutions=institutions
            )
            if advisee_id is None:
                advisee_id = graph.add_node(
                    mentorship.advisee_name, CreatedFrom.ADVISEE_MENTION
                )
            _register_signals(
                graph,
                advisee_id,
                mentorship.advisee_name,
                titles=titles,
                institutions=institutions,
            )
            graph.mention_map[locator] = advisee_id
        outcomes.append(
            graph.add_edge_checked(
                node_id,
                advisee_id,
                level,
                mentorship.role,
                Evidence.ADVISOR_SIDE,
                year=mentorship.year,
            )
        )
    return outcomes


def build_graph(corpus: Corpus) -> GenealogyGraph:
    """Fold every record of a sorted corpus into a fresh genealogy graph."""
    graph = GenealogyGraph()
    for record in corpus.records:
        node_id = upsert_researcher(graph, record)
        link_advisors(graph, node_id, record)
        link_advisees(graph, node_id, record)
    return graph


def _dedup(items: list[str | None]) -> list[str]:
    seen = []
    for item in items:
        if item and item not in seen:
            seen.append(item)
    return seen
