"""
Signature and verification report documents.
"""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from src.models.reconstruction import Signature
from src.models.report import VerificationReport


class SignatureDocument(BaseModel):
    ord: int
    attached: int
    code: str


class CheckDocument(BaseModel):
    name: str
    instances: int
    failures: int
    counterexample: Optional[Dict[str, Any]] = None


class ReportDocument(BaseModel):
    """Elapsed time is logged, not serialized, so reports stay byte-stable."""
    scope: int
    passed: bool
    checks: List[CheckDocument]
    notes: Dict[str, Any] = Field(default_factory=dict)


def signature_to_document(signature: Signature) -> SignatureDocument:
    return SignatureDocument(
        ord=signature.basepoint_order,
        attached=signature.attached_count,
        code=signature.code.code,
    )


def report_to_document(report: VerificationReport) -> ReportDocument:
    return ReportDocument(
        scope=report.scope,
        passed=report.passed,
        checks=[
            CheckDocument(
                name=check.name,
                instances=check.instances,
                failures=check.failures,
                counterexample=check.counterexample,
            )
            for check in report.checks
        ],
        notes=dict(report.notes),
    )
