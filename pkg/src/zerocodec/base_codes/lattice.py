"""Decoding profiles whose head digits are multiples of D = t + 1."""

from __future__ import annotations

from typing import Sequence


def lattice_decode(y: Sequence[int], d: int, total: int, t: int) -> tuple[int, ...] | None:
    """Nearest profile with head digits ≡ 0 mod d and digit sum ``total``.

    The net length change fixes how many of the t errors may be deletions
    (tau_minus) and insertions (tau_plus = t - tau_minus); since
    tau_minus + tau_plus < d, each head residue identifies its error uniquely.
    Returns None unless the result lies within t of y.
    """
    delta = sum(y) - total
    if abs(delta) > t:
        return None
    tau_plus = t - (t - delta) // 2
    head = []
    for v in y[:-1]:
        r = v % d
        head.append(v - r if r <= tau_plus else v - r + d)
    parity = total - sum(head)
    if parity < 0:
        return None
    x = tuple(head) + (parity,)
    if sum(abs(a - b) for a, b in zip(x, y)) > t:
        return None
    return x
