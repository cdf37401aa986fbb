"""
Pydantic documents for the JSON formats read and written by the toolkit.
"""
from .tree_schema import TreeDocument, tree_to_document, tree_from_document, free_tree_from_document
from .complex_schema import (
    CellDocument, ComplexDocument, complex_to_document, complex_from_document
)
from .report_schema import (
    SignatureDocument, CheckDocument, ReportDocument,
    signature_to_document, report_to_document
)

__all__ = [
    "TreeDocument",
    "tree_to_document",
    "tree_from_document",
    "free_tree_from_document",
    "CellDocument",
    "ComplexDocument",
    "complex_to_document",
    "complex_from_document",
    "SignatureDocument",
    "CheckDocument",
    "ReportDocument",
    "signature_to_document",
    "report_to_document"
]
