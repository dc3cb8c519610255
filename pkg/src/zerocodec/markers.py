"""Marker parsing shared by every code that chains blocks with ``0^s 1``."""

from __future__ import annotations


def marker(s: int) -> str:
    return "0" * s + "1"


def extract(y: str, s: int, i: int) -> tuple[str, str]:
    """Split y after the first 1 at (1-based) position >= i.

    The prefix ``W 0^v 1`` is returned as ``W 0^(v ∸ s)`` together with the
    remaining suffix.  If no such 1 exists the whole word is treated as the
    prefix (without a terminal 1) and the suffix is empty.
    """
    cut = y.find("1", max(i - 1, 0))
    if cut < 0:
        body, rest = y, ""
    else:
        body, rest = y[:cut], y[cut + 1:]
    head = body.rstrip("0")
    v = len(body) - len(head)
    return head + "0" * max(v - s, 0), rest
