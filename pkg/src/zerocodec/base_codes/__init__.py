"""Terminal codes used at the bottom of the recursive construction."""

from __future__ import annotations

from .limited import LimitedMagnitudeCode, cardinality as limited_cardinality, code_length as limited_length
from .rs_balanced import (ReedSolomon, RsBalancedCode, RsBalancedParams, balanced_beta, balanced_beta_inverse,
                          balanced_length, balanced_table)
from .simple import DistinctWeightCode, IdentityCode, RepetitionCode

__all__ = [
    "DistinctWeightCode", "IdentityCode", "LimitedMagnitudeCode", "ReedSolomon", "RepetitionCode",
    "RsBalancedCode", "RsBalancedParams", "balanced_beta", "balanced_beta_inverse", "balanced_length",
    "balanced_table", "distinct_weight_encode", "limited_cardinality", "limited_length",
    "limited_magnitude_decode", "limited_magnitude_encode", "repetition_encode", "rs_base_decode",
    "rs_base_encode", "rs_ee_decode",
]


def repetition_encode(x: str, t: int) -> str:
    return RepetitionCode(len(x), t).encode(x)


def distinct_weight_encode(x: str) -> str:
    return DistinctWeightCode(len(x)).encode(x)


def limited_magnitude_encode(x: str, t: int) -> str:
    return LimitedMagnitudeCode(len(x), t).encode(x)


def limited_magnitude_decode(y: str, k: int, t: int) -> tuple[str, str, int]:
    return LimitedMagnitudeCode(k, t).decode(y)


def rs_base_encode(x: str, p: RsBalancedParams) -> str:
    return RsBalancedCode(p).encode(x)


def rs_base_decode(y: str, p: RsBalancedParams) -> tuple[str, int]:
    e, _, cor = RsBalancedCode(p).decode(y)
    return e, cor


def rs_ee_decode(r, code: ReedSolomon):
    """Errors-and-erasures decoding; erasures are ``None`` entries of r."""
    return code.decode(r)
