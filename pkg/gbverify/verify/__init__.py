"""
검증 하네스 - Construction 항목, S-다항식 인증서, Example
"""
from .certificates import (
    check_certificate_list,
    check_spoly_certificates,
    corpus_text,
    f_certificates,
    g_certificates,
    parse_pairs,
)
from .construction import verify_construction
from .example import verify_example
from .objects import ConstructionObjects, build_construction_objects
from .params import ConstructionParams, ExampleParams
from .report import ClaimRecord, VerificationReport

__all__ = [
    "ClaimRecord",
    "ConstructionObjects",
    "ConstructionParams",
    "ExampleParams",
    "VerificationReport",
    "build_construction_objects",
    "check_certificate_list",
    "check_spoly_certificates",
    "corpus_text",
    "f_certificates",
    "g_certificates",
    "parse_pairs",
    "verify_construction",
    "verify_example",
]
