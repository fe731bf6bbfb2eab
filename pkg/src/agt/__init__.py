"""agt: academic genealogy graph engine.

Reconstructs advisor-advisee lineages from CV corpora: parses canonical and
Lattes-like XML records, disambiguates researcher identities, builds the
global genealogy DAG, computes the characterization metrics, and serves the
graph for interactive browsing.
"""

from .analytics import (
    MetricsReport,
    TreeProfile,
    components,
    country_table,
    roots,
    size_cdf,
    summarize,
    tree_profile,
)
from .builder import build_graph, link_advisees, link_advisors, upsert_researcher
from .exports import ExportFormat, SubtreeView, export_interchange, export_subtree
from .graph import AdvisingEdge, GenealogyGraph, ResearcherNode
from .identity import IdentityIndex, IdentityQuery, MatchResult, normalize_name, resolve
from .records import (
    Corpus,
    CurriculumRecord,
    DegreeEntry,
    Level,
    MentorshipEntry,
    Role,
    emit_record,
    load_corpus,
    parse_lattes_xml,
    parse_record,
)
from .storage import load_graph, save_graph
from .synth import GroundTruth, SynthParams, generate, score_resolution

__version__ = "0.1.0"

__all__ = [
    "AdvisingEdge",
    "Corpus",
    "CurriculumRecord",
    "DegreeEntry",
    "ExportFormat",
    "GenealogyGraph",
    "GroundTruth",
    "IdentityIndex",
    "IdentityQuery",
    "Level",
    "MatchResult",
    "MentorshipEntry",
    "MetricsReport",
    "ResearcherNode",
    "Role",
    "SubtreeView",
    "SynthParams",
    "TreeProfile",
    "build_graph",
    "components",
    "country_table",
    "emit_record",
    "export_interchange",
    "export_subtree",
    "generate",
    "link_advisees",
    "link_advisors",
    "load_corpus",
    "load_graph",
    "normalize_name",
    "parse_lattes_xml",
    "parse_record",
    "resolve",
    "roots",
    "save_graph",
    "score_resolution",
    "size_cdf",
    "summarize",
    "tree_profile",
    "upsert_researcher",
    "__version__",
]
