"""Curriculum-vitae record model and corpus ingestion.

Two interchangeable on-disk representations are supported:

* the canonical line format: UTF-8 JSON Lines, one record per line, with the
  fixed key set ``id, name, citation_names, institution, degrees, mentorships``
  (absent optional fields are simply omitted);
* a Lattes-like XML layout: one ``CURRICULO`` document per file with
  ``IDENTIFICACAO``, ``FORMACAO`` and ``ORIENTACAO`` children.

Both parse to the same :class:`CurriculumRecord`.
"""

from __future__ import annotations

import datetime
import enum
import json
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from pathlib import Path

from .errors import InvalidEnum, IoError, MalformedRecord, MalformedXml, MissingField

MIN_YEAR = 1900


class Level(str, enum.Enum):
    MASTERS = "MASTERS"
    PHD = "PHD"


class Role(str, enum.Enum):
    ADVISOR = "ADVISOR"
    COADVISOR = "COADVISOR"


@dataclass(frozen=True)
class DegreeEntry:
    """One degree held by a researcher, with the advisor(s) who supervised it."""

    level: Level
    year: int | None = None
    institution: str | None = None
    country: str | None = None
    thesis_title: str | None = None
    advisor_name: str | None = None
    coadvisor_names: tuple[str, ...] = ()


@dataclass(frozen=True)
class MentorshipEntry:
    """One advisee listed in a researcher's mentorship section.

    ``level`` is None when the source record omitted it; the graph builder
    applies the MASTERS default and logs an anomaly.
    """

    advisee_name: str
    level: Level | None = None
    year: int | None = None
    institution: str | None = None
    work_title: str | None = None
    role: Role = Role.ADVISOR


@dataclass
class CurriculumRecord:
    """One researcher's curriculum: identification, degrees, mentorships."""

    full_name: str
    record_id: str | None = None
    citation_names: list[str] = field(default_factory=list)
    institution: str | None = None
    degrees: list[DegreeEntry] = field(default_factory=list)
    mentorships: list[MentorshipEntry] = field(default_factory=list)

    def phd_year(self) -> int | None:
        """Earliest PhD degree year, or None when the record has no dated PhD."""
        years = [d.year for d in self.degrees if d.level is Level.PHD and d.year is not None]
        return min(years) if years else None


@dataclass
class SourceStats:
    path: str
    record_count: int
    error_count: int


@dataclass
class Corpus:
    """Parsed records in canonical processing order (nondecreasing PhD year)."""

    records: list[CurriculumRecord]
    source_manifest: list[SourceStats] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)


def _current_year() -> int:
    return datetime.date.today().year


def _clean(value) -> str | None:
    """Trim a string field; empty or non-string values become None."""
    if value is None:
        return None
    if not isinstance(value, str):
        raise MalformedRecord(f"expected string, got {type(value).__name__}")
    value = value.strip()
    return value or None


def _parse_year(value, where: str) -> int | None:
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedRecord(f"{where}: year must be an integer, got {value!r}")
    if not MIN_YEAR <= value <= _current_year():
        raise MalformedRecord(f"{where}: year {value} outside [{MIN_YEAR}, {_current_year()}]")
    return value


def _parse_level(token, where: str, required: bool) -> Level | None:
    if token is None:
        if required:
            raise MissingField(f"{where}: degree level is required")
        return None
    try:
        return Level(token)
    except ValueError:
        raise InvalidEnum(f"{where}: unknown level {token!r}") from None


def _parse_role(token, where: str) -> Role:
    if token is None:
        return Role.ADVISOR
    try:
        return Role(token)
    except ValueError:
        raise InvalidEnum(f"{where}: unknown role {token!r}") from None


def _dedupe_degrees(degrees: list[DegreeEntry]) -> list[DegreeEntry]:
    # Corpus invariant: at most one degree per (level, year, institution);
    # the first occurrence wins.
    seen: set[tuple] = set()
    out = []
    for d in degrees:
        key = (d.level, d.year, d.institution)
        if key in seen:
            continue
        seen.add(key)
        out.append(d)
    return out


def _record_from_dict(doc: dict) -> CurriculumRecord:
    if not isinstance(doc, dict):
        raise MalformedRecord("record is not an object")
    name = _clean(doc.get("name"))
    if name is None:
        raise MissingField("record has no name")

    citation_names = []
    raw_citations = doc.get("citation_names") or []
    if not isinstance(raw_citations, list):
        raise MalformedRecord("citation_names must be a list")
    for c in raw_citations:
        c = _clean(c)
        if c:
            citation_names.append(c)

    degrees = []
    for i, d in enumerate(doc.get("degrees") or []):
        if not isinstance(d, dict):
            raise MalformedRecord(f"degrees[{i}] is not an object")
        degrees.append(degree_from_dict(d, where=f"degrees[{i}]"))

    mentorships = []
    for i, m in enumerate(doc.get("mentorships") or []):
        if not isinstance(m, dict):
            raise MalformedRecord(f"mentorships[{i}] is not an object")
        where = f"mentorships[{i}]"
        advisee = _clean(m.get("advisee"))
        if advisee is None:
            raise MissingField(f"{where}: advisee name is required")
        mentorships.append(
            MentorshipEntry(
                advisee_name=advisee,
                level=_parse_level(m.get("level"), where, required=False),
                year=_parse_year(m.get("year"), where),
                institution=_clean(m.get("institution")),
                work_title=_clean(m.get("title")),
                role=_parse_role(m.get("role"), where),
            )
        )

    return CurriculumRecord(
        full_name=name,
        record_id=_clean(doc.get("id")),
        citation_names=citation_names,
        institution=_clean(doc.get("institution")),
        degrees=_dedupe_degrees(degrees),
        mentorships=mentorships,
    )


def parse_record(text: str) -> CurriculumRecord:
    """Parse one canonical-format line into a CurriculumRecord.

    Raises MalformedRecord (with a UTF-8 byte offset for syntax errors),
    MissingField, or InvalidEnum.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        offset = len(text[: exc.pos].encode("utf-8"))
        raise MalformedRecord(exc.msg, byte_offset=offset) from None
    return _record_from_dict(doc)


def degree_to_dict(d: DegreeEntry) -> dict:
    entry: dict = {"level": d.level.value}
    if d.year is not None:
        entry["year"] = d.year
    if d.institution:
        entry["institution"] = d.institution
    if d.country:
        entry["country"] = d.country
    if d.thesis_title:
        entry["title"] = d.thesis_title
    if d.advisor_name:
        entry["advisor"] = d.advisor_name
    if d.coadvisor_names:
        entry["coadvisors"] = list(d.coadvisor_names)
    return entry


def degree_from_dict(doc: dict, where: str = "degree") -> DegreeEntry:
    coadvisors = tuple(c for c in (_clean(x) for x in (doc.get("coadvisors") or [])) if c)
    return DegreeEntry(
        level=_parse_level(doc.get("level"), where, required=True),
        year=_parse_year(doc.get("year"), where),
        institution=_clean(doc.get("institution")),
        country=_clean(doc.get("country")),
        thesis_title=_clean(doc.get("title")),
        advisor_name=_clean(doc.get("advisor")),
        coadvisor_names=coadvisors,
    )


def emit_record(record: CurriculumRecord) -> str:
    """Render a record as its canonical line (no trailing newline).

    Output is byte-deterministic: fixed key order, empty optionals omitted.
    """
    doc: dict = {}
    if record.record_id:
        doc["id"] = record.record_id
    doc["name"] = record.full_name
    if record.citation_names:
        doc["citation_names"] = list(record.citation_names)
    if record.institution:
        doc["institution"] = record.institution
    degrees = [degree_to_dict(d) for d in record.degrees]
    if degrees:
        doc["degrees"] = degrees
    mentorships = []
    for m in record.mentorships:
        entry = {"advisee": m.advisee_name}
        if m.level is not None:
            entry["level"] = m.level.value
        if m.year is not None:
            entry["year"] = m.year
        if m.institution:
            entry["institution"] = m.institution
        if m.work_title:
            entry["title"] = m.work_title
        entry["role"] = m.role.value
        mentorships.append(entry)
    if mentorships:
        doc["mentorships"] = mentorships
    return json.dumps(doc, ensure_ascii=False, separators=(",", ":"))


# --- Lattes-like XML layout ---------------------------------------------

def parse_lattes_xml(document: str) -> CurriculumRecord:
    """Parse one Lattes-like XML curriculum into the same record shape.

    Layout: root CURRICULO[@id] with IDENTIFICACAO[@nome, @instituicao],
    FORMACAO[@nivel, @ano, @instituicao, @pais, @titulo, @orientador,
    @coorientadores (pipe-separated)] and ORIENTACAO[@nome, @nivel, @ano,
    @instituicao, @titulo, @papel] children, in any order.
    """
    try:
        root = ET.fromstring(document)
    except ET.ParseError as exc:
        raise MalformedXml(str(exc)) from None
    if root.tag != "CURRICULO":
        raise MalformedXml(f"expected CURRICULO root, got {root.tag!r}")

    ident = root.find("IDENTIFICACAO")
    if ident is None:
        raise MissingField("IDENTIFICACAO element is required")
    doc: dict = {
        "id": root.get("id"),
        "name": ident.get("nome"),
        "institution": ident.get("instituicao"),
        "degrees": [],
        "mentorships": [],
    }
    for el in root.findall("FORMACAO"):
        coadvisors = [c for c in (el.get("coorientadores") or "").split("|") if c.strip()]
        doc["degrees"].append(
            {
                "level": el.get("nivel"),
                "year": _xml_year(el.get("ano")),
                "institution": el.get("instituicao"),
                "country": el.get("pais"),
                "title": el.get("titulo"),
                "advisor": el.get("orientador"),
                "coadvisors": coadvisors,
            }
        )
    for el in root.findall("ORIENTACAO"):
        doc["mentorships"].append(
            {
                "advisee": el.get("nome"),
                "level": el.get("nivel"),
                "year": _xml_year(el.get("ano")),
                "institution": el.get("instituicao"),
                "title": el.get("titulo"),
                "role": el.get("papel"),
            }
        )
    try:
        return _record_from_dict(doc)
    except MalformedRecord as exc:
        raise MalformedXml(str(exc)) from None


def _xml_year(token: str | None) -> int | None:
    if token is None or not token.strip():
        return None
    try:
        return int(token)
    except ValueError:
        raise MalformedXml(f"non-numeric year {token!r}") from None


def emit_lattes_xml(record: CurriculumRecord) -> str:
    """Render a record in the Lattes-like XML layout.

    citation_names have no XML counterpart and are not emitted.
    """
    root = ET.Element("CURRICULO")
    if record.record_id:
        root.set("id", record.record_id)
    ident = ET.SubElement(root, "IDENTIFICACAO", nome=record.full_name)
    if record.institution:
        ident.set("instituicao", record.institution)
    for d in record.degrees:
        el = ET.SubElement(root, "FORMACAO", nivel=d.level.value)
        if d.year is not None:
            el.set("ano", str(d.year))
        if d.institution:
            el.set("instituicao", d.institution)
        if d.country:
            el.set("pais", d.country)
        if d.thesis_title:
            el.set("titulo", d.thesis_title)
        if d.advisor_name:
            el.set("orientador", d.advisor_name)
        if d.coadvisor_names:
            el.set("coorientadores", "|".join(d.coadvisor_names))
    for m in record.mentorships:
        el = ET.SubElement(root, "ORIENTACAO", nome=m.advisee_name)
        if m.level is not None:
            el.set("nivel", m.level.value)
        if m.year is not None:
            el.set("ano", str(m.year))
        if m.institution:
            el.set("instituicao", m.institution)
        if m.work_title:
            el.set("titulo", m.work_title)
        el.set("papel", m.role.value)
    return ET.tostring(root, encoding="unicode")


# --- Corpus loading -------------------------------------------------------

def sort_key(record: CurriculumRecord) -> tuple:
    """Total deterministic order: PhD year (undated last), record id, name.

    The canonical line is the final tie-break so the order never depends on
    input order, even for records that agree on all three keys.
    """
    year = record.phd_year()
    return (
        year is None,
        year or 0,
        record.record_id or "",
        record.full_name,
        emit_record(record),
    )


def sort_records(records: list[CurriculumRecord]) -> list[CurriculumRecord]:
    return sorted(records, key=sort_key)


def load_corpus(paths: list[str | Path]) -> Corpus:
    """Load and sort all parseable records from the given files.

    Format is detected by extension (.xml -> one XML curriculum per file,
    anything else -> canonical lines). Unparseable records are counted in the
    source manifest and skipped; an unreadable path raises IoError. Records
    sharing a record_id are deduplicated order-independently (the canonical
    line that sorts lexicographically smallest wins).
    """
    parsed: list[tuple[CurriculumRecord, int]] = []
    manifest: list[SourceStats] = []
    for path_index, path in enumerate(paths):
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise IoError(f"cannot read {path}: {exc}") from None
        ok = errors = 0
        if path.suffix.lower() == ".xml":
            try:
                parsed.append((parse_lattes_xml(text), path_index))
                ok += 1
            except (MalformedXml, MissingField, InvalidEnum):
                errors += 1
        else:
            for line in text.splitlines():
                if not line.strip():
                    continue
                try:
                    parsed.append((parse_record(line), path_index))
                    ok += 1
                except (MalformedRecord, MissingField, InvalidEnum):
                    errors += 1
        manifest.append(SourceStats(str(path), ok, errors))

    # Enforce record_id uniqueness with a file-order-independent rule: among
    # same-id records, keep the one whose canonical line sorts smallest and
    # count the rest as errors against their source files.
    by_id: dict[str, tuple[str, CurriculumRecord, int]] = {}
    kept: list[CurriculumRecord] = []
    for r, path_index in parsed:
        if r.record_id is None:
            kept.append(r)
            continue
        line = emit_record(r)
        prev = by_id.get(r.record_id)
        if prev is None:
            by_id[r.record_id] = (line, r, path_index)
            continue
        loser = prev[2] if line < prev[0] else path_index
        manifest[loser].error_count += 1
        manifest[loser].record_count -= 1
        if line < prev[0]:
            by_id[r.record_id] = (line, r, path_index)
    kept.extend(r for _, r, _ in by_id.values())
    return Corpus(records=sort_records(kept), source_manifest=manifest)
