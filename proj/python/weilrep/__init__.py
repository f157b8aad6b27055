"""Local Galois representations determined by their Euler factors."""

from ._core import (
    DomainError,
    ParseError,
    VerificationError,
    corpus_roundtrip,
    count_points,
    euler_factor,
    fixture,
    fixture_names,
    reconstruct,
    reprint,
    roundtrip,
    stoll,
    twist_root_number,
    zeta,
)

__all__ = [
    "DomainError",
    "ParseError",
    "VerificationError",
    "corpus_roundtrip",
    "count_points",
    "euler_factor",
    "fixture",
    "fixture_names",
    "reconstruct",
    "reprint",
    "roundtrip",
    "stoll",
    "twist_root_number",
    "zeta",
]
