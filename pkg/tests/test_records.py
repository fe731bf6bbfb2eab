"""Corpus model: canonical format, XML layout, corpus loading."""

from __future__ import annotations

import json

import pytest
from hypothesis import given, settings, strategies as st

from agt.errors import InvalidEnum, IoError, MalformedRecord, MalformedXml, MissingField
from agt.records import (
    CurriculumRecord,
    DegreeEntry,
    Level,
    MentorshipEntry,
    Role,
    emit_lattes_xml,
    emit_record,
    load_corpus,
    parse_lattes_xml,
    parse_record,
)

# --- parse_record ----------------------------------------------------------

def test_minimal_record():
    record = parse_record('{"name": "Ana Souza"}')
    assert record.full_name == "Ana Souza"
    assert record.degrees == [] and record.mentorships == []
    assert record.record_id is None and record.institution is None


def test_fields_are_trimmed():
    record = parse_record('{"name": "  Ana Souza  ", "institution": " UFMG "}')
    assert record.full_name == "Ana Souza"
    assert record.institution == "UFMG"


def test_missing_name_rejected():
    with pytest.raises(MissingField):
        parse_record('{"institution": "UFMG"}')
    with pytest.raises(MissingField):
        parse_record('{"name": "   "}')


def test_unknown_level_rejected():
    with pytest.raises(InvalidEnum):
        parse_record('{"name": "R", "degrees": [{"level": "DOCTORATE"}]}')


def test_unknown_role_rejected():
    with pytest.raises(InvalidEnum):
        parse_record(
            '{"name": "R", "mentorships": [{"advisee": "X", "role": "TUTOR"}]}'
        )


def test_syntax_error_reports_byte_offset():
    line = '{"name": "João"'
    with pytest.raises(MalformedRecord) as err:
        parse_record(line)
    # Error is at end-of-input; ã is two bytes in UTF-8.
    assert err.value.byte_offset == len(line.encode("utf-8"))


def test_year_out_of_range_rejected():
    with pytest.raises(MalformedRecord):
        parse_record('{"name": "R", "degrees": [{"level": "PHD", "year": 1899}]}')
    with pytest.raises(MalformedRecord):
        parse_record('{"name": "R", "degrees": [{"level": "PHD", "year": 3000}]}')


def test_duplicate_degree_triples_keep_first():
    line = json.dumps(
        {
            "name": "R",
            "degrees": [
                {"level": "PHD", "year": 2001, "institution": "UFMG", "advisor": "P"},
                {"level": "PHD", "year": 2001, "institution": "UFMG", "advisor": "Q"},
            ],
        }
    )
    record = parse_record(line)
    assert len(record.degrees) == 1
    assert record.degrees[0].advisor_name == "P"


def test_mentorship_without_level_parses_to_none():
    record = parse_record('{"name": "R", "mentorships": [{"advisee": "X"}]}')
    assert record.mentorships[0].level is None


def test_structured_round_trip():
    record = CurriculumRecord(
        full_name="R",
        degrees=[DegreeEntry(level=Level.PHD, year=2001, advisor_name="P")],
        mentorships=[MentorshipEntry(advisee_name="X", level=Level.PHD, year=2010)],
    )
    parsed = parse_record(emit_record(record))
    assert parsed == record
    assert len(parsed.degrees) == 1 and len(parsed.mentorships) == 1


# --- property: round trips -------------------------------------------------

_name = (
    st.text(
        alphabet=st.characters(
            whitelist_categories=("Lu", "Ll", "Lo", "Nd"), whitelist_characters=" -'"
        ),
        min_size=1,
        max_size=24,
    )
    .map(str.strip)
    .filter(bool)
)
_opt_name = st.none() | _name
_year = st.none() | st.integers(min_value=1900, max_value=2025)
_level = st.sampled_from([Level.MASTERS, Level.PHD])


def _dedupe(degrees):
    seen, out = set(), []
    for d in degrees:
        key = (d.level, d.year, d.institution)
        if key not in seen:
            seen.add(key)
            out.append(d)
    return out


_degree = st.builds(
    DegreeEntry,
    level=_level,
    year=_year,
    institution=_opt_name,
    country=_opt_name,
    thesis_title=_opt_name,
    advisor_name=_opt_name,
    coadvisor_names=st.lists(_name, max_size=2).map(tuple),
)
_mentorship = st.builds(
    MentorshipEntry,
    advisee_name=_name,
    level=st.none() | _level,
    year=_year,
    institution=_opt_name,
    work_title=_opt_name,
    role=st.sampled_from([Role.ADVISOR, Role.COADVISOR]),
)
_record = st.builds(
    CurriculumRecord,
    full_name=_name,
    record_id=_opt_name,
    citation_names=st.lists(_name, max_size=2),
    institution=_opt_name,
    degrees=st.lists(_degree, max_size=3).map(_dedupe),
    mentorships=st.lists(_mentorship, max_size=3),
)


@settings(max_examples=150, deadline=None)
@given(_record)
def test_round_trip_canonical(record):
    assert parse_record(emit_record(record)) == record


@settings(max_examples=150, deadline=None)
@given(_record)
def test_cross_format_equality(record):
    # The XML layout has no citation_names element; restrict to what both
    # formats can carry.
    record.citation_names = []
    assert parse_lattes_xml(emit_lattes_xml(record)) == parse_record(emit_record(record))


# --- parse_lattes_xml ------------------------------------------------------

def test_xml_minimal_matches_canonical():
    xml = '<CURRICULO><IDENTIFICACAO nome="Ana Souza"/></CURRICULO>'
    assert parse_lattes_xml(xml) == parse_record('{"name": "Ana Souza"}')


def test_xml_formation_with_advisor():
    xml = (
        '<CURRICULO id="L1"><IDENTIFICACAO nome="R" instituicao="UFMG"/>'
        '<FORMACAO nivel="PHD" ano="2001" orientador="P" coorientadores="C1|C2"/>'
        "</CURRICULO>"
    )
    record = parse_lattes_xml(xml)
    assert record.record_id == "L1"
    assert record.degrees[0].level is Level.PHD
    assert record.degrees[0].advisor_name == "P"
    assert record.degrees[0].coadvisor_names == ("C1", "C2")


def test_xml_element_order_is_irrelevant():
    a = (
        '<CURRICULO><ORIENTACAO nome="X" nivel="PHD"/>'
        '<IDENTIFICACAO nome="R"/><FORMACAO nivel="MASTERS"/></CURRICULO>'
    )
    b = (
        '<CURRICULO><IDENTIFICACAO nome="R"/><FORMACAO nivel="MASTERS"/>'
        '<ORIENTACAO nome="X" nivel="PHD"/></CURRICULO>'
    )
    assert parse_lattes_xml(a) == parse_lattes_xml(b)


def test_xml_missing_name_rejected():
    with pytest.raises(MissingField):
        parse_lattes_xml('<CURRICULO><IDENTIFICACAO instituicao="UFMG"/></CURRICULO>')
    with pytest.raises(MissingField):
        parse_lattes_xml("<CURRICULO></CURRICULO>")


def test_xml_not_wellformed():
    with pytest.raises(MalformedXml):
        parse_lattes_xml("<CURRICULO><IDENTIFICACAO")
    with pytest.raises(MalformedXml):
        parse_lattes_xml('<WRONG><IDENTIFICACAO nome="R"/></WRONG>')
    with pytest.raises(MalformedXml):
        parse_lattes_xml(
            '<CURRICULO><IDENTIFICACAO nome="R"/><FORMACAO nivel="PHD" ano="MMXX"/></CURRICULO>'
        )


# --- load_corpus -----------------------------------------------------------

def _write_lines(path, lines):
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def test_load_corpus_empty_input():
    corpus = load_corpus([])
    assert len(corpus) == 0
    assert corpus.source_manifest == []


def test_load_corpus_sorts_by_phd_year(tmp_path):
    lines = [
        '{"id":"C","name":"Carla","degrees":[{"level":"PHD","year":2010}]}',
        '{"id":"A","name":"Ana","degrees":[{"level":"PHD","year":1995}]}',
        '{"id":"B","name":"Bia"}',
    ]
    f = tmp_path / "corpus.jsonl"
    _write_lines(f, lines)
    corpus = load_corpus([f])
    assert [r.full_name for r in corpus.records] == ["Ana", "Carla", "Bia"]


def test_load_corpus_tie_breaks_on_record_id(tmp_path):
    lines = [
        '{"id":"B","name":"Zoe","degrees":[{"level":"PHD","year":2000}]}',
        '{"id":"A","name":"Ana","degrees":[{"level":"PHD","year":2000}]}',
    ]
    f = tmp_path / "corpus.jsonl"
    _write_lines(f, lines)
    corpus = load_corpus([f])
    # Oracle: lexicographic sort of (year, record_id, full_name).
    expected = sorted([(2000, "B", "Zoe"), (2000, "A", "Ana")])
    assert [(2000, r.record_id, r.full_name) for r in corpus.records] == expected


def test_load_corpus_earliest_phd_year_wins(tmp_path):
    lines = [
        '{"id":"A","name":"Ana","degrees":[{"level":"PHD","year":2010},'
        '{"level":"PHD","year":1990,"institution":"X"}]}',
        '{"id":"B","name":"Bia","degrees":[{"level":"PHD","year":2000}]}',
    ]
    f = tmp_path / "corpus.jsonl"
    _write_lines(f, lines)
    corpus = load_corpus([f])
    assert [r.record_id for r in corpus.records] == ["A", "B"]


def test_load_corpus_skips_bad_records_and_counts_them(tmp_path):
    f = tmp_path / "corpus.jsonl"
    _write_lines(f, ['{"name":"Ana"}', "not json at all", '{"nope": 1}'])
    corpus = load_corpus([f])
    assert len(corpus) == 1
    stats = corpus.source_manifest[0]
    assert stats.record_count == 1 and stats.error_count == 2


def test_load_corpus_unreadable_path_aborts(tmp_path):
    with pytest.raises(IoError):
        load_corpus([tmp_path / "missing.jsonl"])


def test_load_corpus_order_invariant_under_file_order(tmp_path):
    lines = [
        '{"id":"A","name":"Ana","degrees":[{"level":"PHD","year":2001}]}',
        '{"id":"B","name":"Bia","degrees":[{"level":"PHD","year":1999}]}',
        '{"id":"C","name":"Cris"}',
    ]
    f1, f2 = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    _write_lines(f1, lines[:1])
    _write_lines(f2, lines[1:])
    order_a = [r.record_id for r in load_corpus([f1, f2]).records]
    order_b = [r.record_id for r in load_corpus([f2, f1]).records]
    assert order_a == order_b == ["B", "A", "C"]


def test_load_corpus_duplicate_ids_deduplicated_order_independently(tmp_path):
    rec1 = '{"id":"A","name":"Ana","institution":"UFMG"}'
    rec2 = '{"id":"A","name":"Ana","institution":"USP"}'
    f1, f2 = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    _write_lines(f1, [rec1])
    _write_lines(f2, [rec2])
    kept_a = load_corpus([f1, f2]).records
    kept_b = load_corpus([f2, f1]).records
    assert len(kept_a) == len(kept_b) == 1
    assert kept_a[0] == kept_b[0]


def test_load_corpus_mixed_xml_and_canonical(tmp_path):
    xml_file = tmp_path / "one.xml"
    xml_file.write_text(
        '<CURRICULO id="L9"><IDENTIFICACAO nome="Ana"/>'
        '<FORMACAO nivel="PHD" ano="1990"/></CURRICULO>',
        encoding="utf-8",
    )
    jsonl = tmp_path / "two.jsonl"
    _write_lines(jsonl, ['{"id":"L8","name":"Bia","degrees":[{"level":"PHD","year":2000}]}'])
    corpus = load_corpus([jsonl, xml_file])
    assert [r.record_id for r in corpus.records] == ["L9", "L8"]
