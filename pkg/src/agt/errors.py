"""Exception types shared across the package."""


class AgtError(Exception):
    """Base class for all package errors."""


class MalformedRecord(AgtError):
    """A canonical-format record line could not be parsed.

    ``byte_offset`` points at the failing position within the line (UTF-8).
    """

    def __init__(self, message: str, byte_offset: int = 0):
        super().__init__(f"{message} (byte offset {byte_offset})")
        self.byte_offset = byte_offset


class MalformedXml(AgtError):
    """An XML curriculum document is not well-formed or not the expected layout."""


class MissingField(AgtError):
    """A required field (e.g. the researcher's name) is absent."""


class InvalidEnum(AgtError):
    """A degree level or mentorship role token is not a known enum value."""


class EmptyName(AgtError):
    """normalize_name was called with an empty or whitespace-only string."""


class UnknownNode(AgtError):
    """A node id does not exist in the graph / identity index."""


class NotARoot(AgtError):
    """tree_profile was asked for a node that has incoming edges."""


class NoTrees(AgtError):
    """A distribution over trees was requested for a graph without roots."""


class IoError(AgtError):
    """An input path could not be read or an output path could not be written."""


class VersionMismatch(AgtError):
    """A saved graph file was written by an incompatible format version."""


class CorruptFile(AgtError):
    """A saved graph file failed its integrity check."""


class TruthMismatch(AgtError):
    """score_resolution was given a graph not built from the truth's corpus."""
