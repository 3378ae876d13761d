from .detect import detect_format
from .qa import QaDocument, SourceDocument, parse_algebra, parse_document, parse_module, parse_source
from .serialize import serialize

__all__ = [
    "QaDocument",
    "SourceDocument",
    "detect_format",
    "parse_algebra",
    "parse_document",
    "parse_module",
    "parse_source",
    "serialize",
]
