"""Seeded ground-truth genealogies rendered as CV corpora.

The generator grows a forest of advising trees, assigns every entity a
globally-unique (or deliberately colliding) name, and emits one curriculum
record per entity with mutually consistent signals: the mentorship entry an
advisor writes for a student carries the same title, year and institution as
the student's own degree entry. Ground-truth bookkeeping (entities, edges,
mention map, and the full metric suite computed by direct tree recursion) is
returned alongside, so graph construction and analytics can be scored
against an independent oracle.

``field_dropout`` removes optional signals: at 1.0 every mention is
name-only. Record ids, names, degree levels, advisor names and the PhD year
are never dropped (they anchor locators, edges and the chronological sort).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .analytics import MetricsReport
from .errors import TruthMismatch
from .graph import GenealogyGraph
from .records import (
    Corpus,
    CurriculumRecord,
    DegreeEntry,
    Level,
    MentorshipEntry,
    Role,
    SourceStats,
    emit_record,
    sort_records,
)

FIRST_NAMES = [
    "Ana", "Beatriz", "Bruno", "Camila", "Carlos", "Cecilia", "Daniel",
    "Davi", "Eduardo", "Elisa", "Fabio", "Fernanda", "Gabriel", "Gilberto",
    "Helena", "Henrique", "Isabela", "Joao", "Jorge", "Julia", "Larissa",
    "Leonardo", "Lucas", "Luiza", "Marcelo", "Marcos", "Mariana", "Mateus",
    "Natalia", "Otavio", "Paulo", "Pedro", "Rafaela", "Renato", "Ricardo",
    "Roberta", "Rodrigo", "Sandra", "Sergio", "Silvia", "Tatiana", "Thiago",
    "Vanessa", "Vinicius", "Vitor", "Wellington", "Yasmin", "Zelia",
]
LAST_NAMES = [
    "Almeida", "Alves", "Andrade", "Araujo", "Barbosa", "Barros", "Batista",
    "Borges", "Campos", "Cardoso", "Carvalho", "Castro", "Costa", "Cunha",
    "Dias", "Duarte", "Farias", "Fernandes", "Ferreira", "Fonseca", "Freitas",
    "Gomes", "Goncalves", "Lima", "Lopes", "Machado", "Martins", "Medeiros",
    "Melo", "Mendes", "Miranda", "Monteiro", "Moreira", "Moura", "Nascimento",
    "Nogueira", "Nunes", "Oliveira", "Pereira", "Pinto", "Ramos", "Reis",
    "Ribeiro", "Rocha", "Rodrigues", "Santana", "Santos", "Silva", "Soares",
    "Souza", "Teixeira", "Vieira",
]
PARTICLES = ["de", "da", "do", "dos", "das"]
TITLE_ADJECTIVES = [
    "Modelos", "Metodos", "Algoritmos", "Estruturas", "Analises", "Estudos",
    "Redes", "Sistemas", "Abordagens", "Propriedades", "Fundamentos",
    "Aplicacoes", "Tecnicas", "Limites", "Representacoes", "Medidas",
]
TITLE_TOPICS = [
    "estocasticos", "distribuidos", "combinatorios", "adaptativos",
    "hierarquicos", "geometricos", "probabilisticos", "evolutivos",
    "semanticos", "numericos", "paralelos", "dinamicos", "espectrais",
    "relacionais", "topologicos", "quanticos",
]
HOME_INSTITUTIONS = [
    "Universidade Federal de Minas Gerais", "Universidade de Sao Paulo",
    "Universidade Estadual de Campinas", "Universidade Federal do Rio de Janeiro",
    "Universidade Federal de Pernambuco", "Universidade Federal do Rio Grande do Sul",
    "Universidade de Brasilia", "Universidade Federal do Ceara",
    "Universidade Federal da Bahia", "Universidade Federal de Santa Catarina",
    "Universidade Federal do Parana", "Pontificia Universidade Catolica do Rio",
]
FOREIGN_INSTITUTIONS = [
    ("Universidade do Porto", "Portugal"),
    ("Universidade de Lisboa", "Portugal"),
    ("Massachusetts Institute of Technology", "USA"),
    ("Stanford University", "USA"),
    ("University of Oxford", "UK"),
    ("Universidad de Buenos Aires", "Argentina"),
    ("Sorbonne Universite", "France"),
    ("Universidad Complutense de Madrid", "Spain"),
]
HOME_COUNTRY = "Brazil"
MAX_YEAR = 2025


@dataclass(frozen=True)
class SynthParams:
    num_trees: int
    max_depth: int
    branching: float
    name_collision_rate: float = 0.0
    field_dropout: float = 0.0
    seed: int = 0

    def validate(self) -> None:
        if self.num_trees < 0 or self.max_depth < 0 or self.branching < 0:
            raise ValueError("counts and branching must be non-negative")
        if not 0.0 <= self.name_collision_rate <= 1.0:
            raise ValueError("name_collision_rate must be in [0, 1]")
        if not 0.0 <= self.field_dropout <= 1.0:
            raise ValueError("field_dropout must be in [0, 1]")


@dataclass
class TrueEntity:
    entity_id: int
    name: str
    record_id: str
    workplace: str
    depth: int
    year: int
    level: Level | None  # edge level to the advisor; None for roots
    parent: int | None
    children: list[int] = field(default_factory=list)
    thesis_title: str | None = None


@dataclass
class GroundTruth:
    entities: dict[int, TrueEntity] = field(default_factory=dict)
    edges: list[tuple[int, int, Level]] = field(default_factory=list)
    # locator -> (mention text, entity id), for every emitted name occurrence
    mentions: dict[str, tuple[str, int]] = field(default_factory=dict)
    metrics: MetricsReport | None = None


class _Names:
    """Unique-by-normalized-key name factory with controllable collisions."""

    def __init__(self, rng: random.Random, collision_rate: float):
        self.rng = rng
        self.collision_rate = collision_rate
        self.used: set[tuple[str, str]] = set()
        self.issued: list[tuple[str, str, str]] = []

    def draw(self) -> str:
        if self.issued and self.rng.random() < self.collision_rate:
            return self._render(*self.rng.choice(self.issued))
        for attempt in range(64):
            first = self.rng.choice(FIRST_NAMES)
            last = self.rng.choice(LAST_NAMES)
            if (first, last) not in self.used:
                break
        else:
            last = f"{last} {len(self.used)}"
        self.used.add((first, last))
        particle = self.rng.choice(PARTICLES) if self.rng.random() < 0.35 else ""
        self.issued.append((first, particle, last))
        return self._render(first, particle, last)

    @staticmethod
    def _render(first: str, particle: str, last: str) -> str:
        return f"{first} {particle} {last}" if particle else f"{first} {last}"


def generate(params: SynthParams) -> tuple[Corpus, GroundTruth]:
    """Grow a truth forest and render it as a corpus; deterministic per seed."""
    params.validate()
    rng = random.Random(params.seed)
    names = _Names(rng, params.name_collision_rate)
    truth = GroundTruth()
    inst_country = {inst: HOME_COUNTRY for inst in HOME_INSTITUTIONS}
    inst_country.update({inst: country for inst, country in FOREIGN_INSTITUTIONS})

    titles_used = 0

    def next_title() -> str:
        nonlocal titles_used
        adjective = TITLE_ADJECTIVES[titles_used % len(TITLE_ADJECTIVES)]
        topic = TITLE_TOPICS[(titles_used // len(TITLE_ADJECTIVES)) % len(TITLE_TOPICS)]
        serial = titles_used // (len(TITLE_ADJECTIVES) * len(TITLE_TOPICS))
        titles_used += 1
        title = f"{adjective} {topic} em genealogia"
        return f"{title} {serial}" if serial else title

    def draw_workplace(parent: TrueEntity | None) -> str:
        if parent is not None and rng.random() < 0.3:
            return parent.workplace
        if rng.random() < 0.12:
            return rng.choice(FOREIGN_INSTITUTIONS)[0]
        return rng.choice(HOME_INSTITUTIONS)

    def child_count() -> int:
        base = int(params.branching)
        fraction = params.branching - base
        return base + (1 if fraction > 0 and rng.random() < fraction else 0)

    # Per-tree bookkeeping for the metric oracle.
    tree_sizes: list[int] = []
    tree_depths: list[int] = []
    tree_widths: list[int] = []

    for _ in range(params.num_trees):
        root = TrueEntity(
            entity_id=len(truth.entities),
            name=names.draw(),
            record_id=f"L{len(truth.entities):06d}",
            workplace=draw_workplace(None),
            depth=0,
            year=rng.randrange(1930, 1985),
            level=None,
            parent=None,
            thesis_title=next_title(),
        )
        truth.entities[root.entity_id] = root
        level_counts = {0: 1}
        frontier = [root]
        depth_reached = 0
        size = 1
        while frontier:
            entity = frontier.pop(0)
            if entity.depth >= params.max_depth:
                continue
            for _ in range(child_count()):
                child = TrueEntity(
                    entity_id=len(truth.entities),
                    name=names.draw(),
                    record_id=f"L{len(truth.entities):06d}",
                    workplace=draw_workplace(entity),
                    depth=entity.depth + 1,
                    year=min(entity.year + rng.randrange(3, 9), MAX_YEAR),
                    level=Level.PHD if rng.random() < 0.6 else Level.MASTERS,
                    parent=entity.entity_id,
                    thesis_title=next_title(),
                )
                truth.entities[child.entity_id] = child
                entity.children.append(child.entity_id)
                truth.edges.append((entity.entity_id, child.entity_id, child.level))
                level_counts[child.depth] = level_counts.get(child.depth, 0) + 1
                depth_reached = max(depth_reached, child.depth)
                size += 1
                frontier.append(child)
        tree_sizes.append(size)
        tree_depths.append(depth_reached)
        tree_widths.append(max(level_counts.values()))

    records, country_counts = _render_records(params, rng, truth, inst_country)
    truth.metrics = _truth_metrics(
        truth, tree_sizes, tree_depths, tree_widths, country_counts
    )
    corpus = Corpus(
        records=sort_records(records),
        source_manifest=[SourceStats("<synthetic>", len(records), 0)],
    )
    return corpus, truth


def _render_records(params, rng, truth: GroundTruth, inst_country):
    """Emit one record per entity; returns records plus foreign-degree counts."""

    def keep(value):
        # One dropout coin per optional field instance.
        return value if rng.random() >= params.field_dropout else None

    country_counts: dict[tuple[str, Level], int] = {}

    def degree_country(institution: str) -> str | None:
        country = inst_country[institution]
        if country != HOME_COUNTRY:
            return country
        return HOME_COUNTRY if rng.random() < 0.3 else None

    records = []
    for entity in truth.entities.values():
        rid = entity.record_id
        parent = truth.entities[entity.parent] if entity.parent is not None else None
        degrees = []
        if parent is None:
            country = keep(degree_country(entity.workplace))
            degrees.append(
                DegreeEntry(
                    level=Level.PHD,
                    year=entity.year,
                    institution=keep(entity.workplace),
                    country=country,
                    thesis_title=keep(entity.thesis_title),
                )
            )
            if country and country != HOME_COUNTRY:
                key = (country, Level.PHD)
                country_counts[key] = country_counts.get(key, 0) + 1
        else:
            country = keep(degree_country(parent.workplace))
            degrees.append(
                DegreeEntry(
                    level=entity.level,
                    year=entity.year,
                    institution=keep(parent.workplace),
                    country=country,
                    thesis_title=keep(entity.thesis_title),
                    advisor_name=parent.name,
                )
            )
            truth.mentions[f"{rid}:deg0:adv"] = (parent.name, parent.entity_id)
            if country and country != HOME_COUNTRY:
                key = (country, entity.level)
                country_counts[key] = country_counts.get(key, 0) + 1
            if entity.level is not Level.PHD and entity.children:
                # Advisors hold a PhD. The +2 offset stays below the minimum
                # child-year gap (+3), so a parent's record always sorts
                # before its children's: resolution meets advisors already
                # claimed, which exact recovery relies on.
                own_phd_year = min(entity.year + 2, MAX_YEAR)
                country = keep(degree_country(entity.workplace))
                degrees.append(
                    DegreeEntry(
                        level=Level.PHD,
                        year=own_phd_year,
                        institution=keep(entity.workplace),
                        country=country,
                    )
                )
                if country and country != HOME_COUNTRY:
                    key = (country, Level.PHD)
                    country_counts[key] = country_counts.get(key, 0) + 1

        mentorships = []
        for j, child_id in enumerate(entity.children):
            child = truth.entities[child_id]
            mentorships.append(
                MentorshipEntry(
                    advisee_name=child.name,
                    level=child.level,
                    year=keep(child.year),
                    institution=keep(entity.workplace),
                    work_title=keep(child.thesis_title),
                    role=Role.ADVISOR,
                )
            )
            truth.mentions[f"{rid}:men{j}"] = (child.name, child_id)

        citation = None
        if rng.random() < 0.3:
            tokens = entity.name.split()
            citation = f"{tokens[-1]}, {tokens[0][0]}."
        record = CurriculumRecord(
            full_name=entity.name,
            record_id=rid,
            citation_names=[citation] if keep(citation) else [],
            institution=keep(entity.workplace),
            degrees=degrees,
            mentorships=mentorships,
        )
        truth.mentions[f"{rid}:owner"] = (entity.name, entity.entity_id)
        records.append(record)
    return records, country_counts


def _truth_metrics(truth, sizes, depths, widths, country_counts) -> MetricsReport:
    num_nodes = len(truth.entities)
    num_edges = len(truth.edges)
    num_trees = len(sizes)
    internal = sum(1 for e in truth.entities.values() if e.children)
    ratios = [w / d for w, d in zip(widths, depths) if d >= 1]

    cdf: list[tuple[int, float]] = []
    seen = 0
    for size in sorted(set(sizes)):
        seen += sizes.count(size)
        cdf.append((size, seen / num_trees))

    histogram: dict[int, int] = {}
    for depth in depths:
        histogram[depth] = histogram.get(depth, 0) + 1

    return MetricsReport(
        num_nodes=num_nodes,
        num_edges=num_edges,
        num_trees=num_trees,
        num_components=num_trees,  # generated trees are disjoint
        avg_tree_size=sum(sizes) / num_trees if num_trees else 0.0,
        avg_branching=num_edges / internal if internal else 0.0,
        avg_out_degree=num_edges / num_nodes if num_nodes else 0.0,
        mean_width_depth_ratio=sum(ratios) / len(ratios) if ratios else 0.0,
        size_cdf=cdf,
        depth_histogram=histogram,
        country_table=country_counts,
    )


def write_corpus(corpus: Corpus, path) -> None:
    lines = [emit_record(r) for r in corpus.records]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + ("\n" if lines else ""))


def write_truth_sidecar(truth: GroundTruth, path) -> None:
    """One mention mapping per line: locator, mention text, true entity id."""
    with open(path, "w", encoding="utf-8") as fh:
        for locator in sorted(truth.mentions):
            text, entity_id = truth.mentions[locator]
            fh.write(f"{locator}\t{text}\t{entity_id}\n")


def score_resolution(graph: GenealogyGraph, truth: GroundTruth) -> tuple[float, float]:
    """Pairwise precision/recall of the graph's mention clustering.

    Both are 1.0 on an empty corpus (vacuous truth). Raises TruthMismatch
    when the graph's mention locators differ from the truth's.
    """
    if set(graph.mention_map) != set(truth.mentions):
        raise TruthMismatch("graph was not built from this truth's corpus")
    true_sizes: dict[int, int] = {}
    pred_sizes: dict[int, int] = {}
    cell_sizes: dict[tuple[int, int], int] = {}
    for locator, (_, entity_id) in truth.mentions.items():
        node_id = graph.mention_map[locator]
        true_sizes[entity_id] = true_sizes.get(entity_id, 0) + 1
        pred_sizes[node_id] = pred_sizes.get(node_id, 0) + 1
        cell = (node_id, entity_id)
        cell_sizes[cell] = cell_sizes.get(cell, 0) + 1

    def pairs(counts) -> int:
        return sum(c * (c - 1) // 2 for c in counts)

    true_pairs = pairs(true_sizes.values())
    pred_pairs = pairs(pred_sizes.values())
    both = pairs(cell_sizes.values())
    precision = both / pred_pairs if pred_pairs else 1.0
    recall = both / true_pairs if true_pairs else 1.0
    return precision, recall
