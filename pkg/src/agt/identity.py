"""Name normalization and tiered identity resolution.

A mention of a researcher (curriculum owner, advisor name, advisee name) is
matched against the index by trying increasingly weak signals, strongest
first:

    T1  platform id
    T2  name + work title + defense year
    T3  name + institution
    T4  name alone, when globally unique in the index

The first tier with exactly one candidate wins; a tier with two or more
candidates is ambiguous and stops the walk.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass, field

from .errors import EmptyName, UnknownNode

# Portuguese name particles dropped during normalization.
PARTICLES = frozenset({"de", "da", "do", "dos", "das", "e"})


def _fold(raw: str, drop_particles: bool) -> str:
    # NFKD + mark stripping twice: casefolding can reintroduce decomposable
    # characters, and idempotence is a contract.
    text = raw
    for _ in range(2):
        text = unicodedata.normalize("NFKD", text)
        text = "".join(c for c in text if unicodedata.category(c) != "Mn")
        text = text.casefold()
    text = "".join(c if c.isalnum() else " " for c in text)
    tokens = text.split()
    if drop_particles:
        tokens = [t for t in tokens if t not in PARTICLES]
    return " ".join(tokens)


@dataclass(frozen=True)
class NameKey:
    """Case/diacritic/particle-insensitive key for a personal name."""

    normalized: str


def normalize_name(raw: str) -> NameKey:
    """Normalize a name to its matching key.

    Case-folded, diacritics stripped, punctuation collapsed to spaces, and the
    Portuguese particles de/da/do/dos/das/e dropped. Idempotent.
    """
    if not raw or not raw.strip():
        raise EmptyName("cannot normalize an empty name")
    return NameKey(_fold(raw, drop_particles=True))


def normalize_text(raw: str) -> str:
    """Normalization for titles and other free text: as names, particles kept."""
    return _fold(raw, drop_particles=False)


class Tier(enum.IntEnum):
    T1_PLATFORM_ID = 1
    T2_NAME_TITLE_YEAR = 2
    T3_NAME_INSTITUTION = 3
    T4_UNIQUE_NAME = 4


class Outcome(str, enum.Enum):
    FOUND = "FOUND"
    AMBIGUOUS = "AMBIGUOUS"
    NOT_FOUND = "NOT_FOUND"


@dataclass(frozen=True)
class MatchResult:
    outcome: Outcome
    node_id: int | None = None
    tier: Tier | None = None
    candidates: tuple[int, ...] = ()

    @staticmethod
    def found(node_id: int, tier: Tier) -> MatchResult:
        return MatchResult(Outcome.FOUND, node_id=node_id, tier=tier)

    @staticmethod
    def ambiguous(candidates) -> MatchResult:
        return MatchResult(Outcome.AMBIGUOUS, candidates=tuple(sorted(candidates)))

    @staticmethod
    def not_found() -> MatchResult:
        return MatchResult(Outcome.NOT_FOUND)


@dataclass(frozen=True)
class IdentityQuery:
    """Signals accompanying one name mention."""

    name: str
    platform_id: str | None = None
    institution: str | None = None
    work_title: str | None = None
    year: int | None = None


@dataclass
class _NodeAttrs:
    institutions: set[str] = field(default_factory=set)
    titles: set[tuple[str, int]] = field(default_factory=set)


class IdentityIndex:
    """Mutable lookup structure mapping mention signals to node ids."""

    def __init__(self):
        self.by_platform_id: dict[str, int] = {}
        self.by_name: dict[str, set[int]] = {}
        self._attrs: dict[int, _NodeAttrs] = {}

    def add_node(self, node_id: int) -> None:
        self._attrs.setdefault(node_id, _NodeAttrs())

    def known(self, node_id: int) -> bool:
        return node_id in self._attrs

    def register(self, node_id: int, attrs: IdentityQuery) -> None:
        """Index every non-empty signal of ``attrs`` under ``node_id``.

        Idempotent; raises UnknownNode for ids that were never added.
        """
        if node_id not in self._attrs:
            raise UnknownNode(f"node {node_id} is not in the index")
        store = self._attrs[node_id]
        if attrs.name and attrs.name.strip():
            key = normalize_name(attrs.name).normalized
            if key:
                self.by_name.setdefault(key, set()).add(node_id)
        if attrs.platform_id:
            existing = self.by_platform_id.get(attrs.platform_id)
            if existing is not None and existing != node_id:
                raise ValueError(
                    f"platform id {attrs.platform_id!r} already mapped to node {existing}"
                )
            self.by_platform_id[attrs.platform_id] = node_id
        if attrs.institution:
            inst = _fold(attrs.institution, drop_particles=True)
            if inst:
                store.institutions.add(inst)
        if attrs.work_title and attrs.year is not None:
            title = normalize_text(attrs.work_title)
            if title:
                store.titles.add((title, attrs.year))

    # Candidate sets per tier. Nodes can be filtered by an arbitrary
    # predicate so the graph builder can exclude already-claimed nodes.
    def name_bucket(self, name: str) -> set[int]:
        key = normalize_name(name).normalized
        return set(self.by_name.get(key, ()))

    def candidates_t2(self, name: str, work_title: str, year: int) -> set[int]:
        title = normalize_text(work_title)
        return {
            n for n in self.name_bucket(name) if (title, year) in self._attrs[n].titles
        }

    def candidates_t3(self, name: str, institution: str) -> set[int]:
        inst = _fold(institution, drop_particles=True)
        return {n for n in self.name_bucket(name) if inst in self._attrs[n].institutions}

    def size(self) -> int:
        return sum(len(b) for b in self.by_name.values()) + len(self.by_platform_id)


def resolve(index: IdentityIndex, query: IdentityQuery) -> MatchResult:
    """Walk tiers T1..T4 for a single mention query.

    The first tier yielding exactly one candidate returns FOUND with that
    tier; a tier yielding two or more returns AMBIGUOUS immediately;
    otherwise NOT_FOUND.
    """
    if query.platform_id is not None:
        node = index.by_platform_id.get(query.platform_id)
        if node is not None:
            return MatchResult.found(node, Tier.T1_PLATFORM_ID)
    if query.work_title and query.year is not None:
        cands = index.candidates_t2(query.name, query.work_title, query.year)
        if len(cands) == 1:
            return MatchResult.found(next(iter(cands)), Tier.T2_NAME_TITLE_YEAR)
        if len(cands) > 1:
            return MatchResult.ambiguous(cands)
    if query.institution:
        cands = index.candidates_t3(query.name, query.institution)
        if len(cands) == 1:
            return MatchResult.found(next(iter(cands)), Tier.T3_NAME_INSTITUTION)
        if len(cands) > 1:
            return MatchResult.ambiguous(cands)
    cands = index.name_bucket(query.name)
    if len(cands) == 1:
        return MatchResult.found(next(iter(cands)), Tier.T4_UNIQUE_NAME)
    if len(cands) > 1:
        return MatchResult.ambiguous(cands)
    return MatchResult.not_found()


def register(index: IdentityIndex, node_id: int, attrs: IdentityQuery) -> None:
    """Module-level alias for IdentityIndex.register."""
    index.register(node_id, attrs)
