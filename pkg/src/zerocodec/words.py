"""Binary words, their bucket-of-zeros profiles, and the distances between them.

Binary words are plain ``str`` objects over ``'0'``/``'1'``.  Natural-number
words (profiles) are tuples of non-negative ints.  A binary word
``0^v1 1 0^v2 1 ... 1 0^v(w+1)`` is identified with its profile
``(v1, ..., v(w+1))``; deletions and insertions of zeros become unit moves on
the profile, so the 0-error distance is the L1 distance between profiles.
"""

from __future__ import annotations

import math
from collections import deque
from math import comb
from typing import Sequence

INF = math.inf

NatWord = tuple[int, ...]


def check_bits(x: str) -> str:
    if any(c not in "01" for c in x):
        raise ValueError(f"not a binary word: {x!r}")
    return x


def v_map(x: str) -> NatWord:
    """Lengths of the zero runs between consecutive ones (w+1 entries)."""
    return tuple(len(run) for run in x.split("1"))


def v_hat_map(x: str) -> NatWord:
    """The profile without its last run."""
    return v_map(x)[:-1]


def v_inverse(v: Sequence[int]) -> str:
    if any(d < 0 for d in v):
        raise ValueError("negative run length")
    return "1".join("0" * d for d in v)


def format_natword(v: Sequence[int]) -> str:
    return "(" + ",".join(str(d) for d in v) + ")"


def parse_natword(s: str) -> NatWord:
    body = s.strip().removeprefix("(").removesuffix(")")
    return tuple(int(d) for d in body.split(",")) if body.strip() else ()


def l1_weight(v: Sequence[int]) -> int:
    return sum(v)


def monus(x: Sequence[int], y: Sequence[int]) -> NatWord:
    """Digitwise truncated subtraction x ∸ y."""
    _same_length(x, y)
    return tuple(a - b if a > b else 0 for a, b in zip(x, y))


def support(x: Sequence[int]) -> NatWord:
    return tuple(1 if d else 0 for d in x)


def multiset_ops(x: Sequence[int], y: Sequence[int]) -> tuple[NatWord, NatWord, NatWord, NatWord, NatWord]:
    """Return ``(cap, cup, sum, x∸y, y∸x)`` computed digit by digit."""
    _same_length(x, y)
    cap = tuple(map(min, x, y))
    cup = tuple(map(max, x, y))
    total = tuple(a + b for a, b in zip(x, y))
    return cap, cup, total, monus(x, y), monus(y, x)


def l1_distances(x: Sequence[int], y: Sequence[int]) -> tuple[int, int, int, int]:
    """Symmetric L1, asymmetric L1, Hamming and max-digit distances."""
    _same_length(x, y)
    up = down = ham = top = 0
    for a, b in zip(x, y):
        if b > a:
            up += b - a
        elif a > b:
            down += a - b
        if a != b:
            ham += 1
            top = max(top, abs(a - b))
    return up + down, max(up, down), ham, top


def l1_sym(x: Sequence[int], y: Sequence[int]) -> int:
    _same_length(x, y)
    return sum(abs(a - b) for a, b in zip(x, y))


def d0di(x: str, y: str) -> int | float:
    """Least number of 0-deletions and 0-insertions turning x into y."""
    vx, vy = v_map(x), v_map(y)
    if len(vx) != len(vy):
        return INF
    return sum(abs(a - b) for a, b in zip(vx, vy))


def d0di_bfs_oracle(x: str, y: str, max_length: int = 12, max_states: int = 1 << 16) -> int | float:
    """Graph distance over single 0-insert/0-delete moves, by breadth-first search.

    The search never visits words longer than ``max_length``.
    """
    if len(x) > max_length or len(y) > max_length:
        raise ValueError("word longer than the oracle bound")
    if x.count("1") != y.count("1"):
        return INF
    return bfs_distances(x, max_length, max_states, target=y).get(y, INF)


def bfs_distances(x: str, max_length: int = 12, max_states: int = 1 << 16,
                  target: str | None = None) -> dict[str, int]:
    """Distances from x to every word reachable within ``max_length``."""
    seen = {x: 0}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if u == target:
            break
        d = seen[u] + 1
        nbrs = {u[:i] + u[i + 1:] for i, c in enumerate(u) if c == "0"}
        if len(u) < max_length:
            nbrs.update(u[:i] + "0" + u[i:] for i in range(len(u) + 1))
        for v in nbrs:
            if v not in seen:
                if len(seen) >= max_states:
                    raise RuntimeError("state space bound exceeded")
                seen[v] = d
                queue.append(v)
    return seen


def mnomial(n: int, w: int, m: int | float = INF) -> int:
    """Number of words in {0..m-1}^n with digit sum w (m may be ``INF``)."""
    if n < 0 or w < 0:
        return 0
    if m == INF:
        return comb(n + w - 1, w) if n > 0 else int(w == 0)
    m = int(m)
    if m <= 0:
        return 0
    # inclusion-exclusion over digits forced to reach m
    total = 0
    for j in range(min(n, w // m) + 1):
        total += (-1) ** j * comb(n, j) * (comb(n - 1 + w - j * m, n - 1) if n > 0 else int(w - j * m == 0))
    return total


def concat_q(x1: str, x2: str, y1: str, y2: str) -> int:
    """Distance lost when joining two pairs whose first parts share a weight.

    ``d0di(x1 x2, y1 y2) == d0di(x1, y1) + d0di(x2, y2) - concat_q(...)``.
    """
    vx1, vy1 = v_map(x1), v_map(y1)
    if len(vx1) != len(vy1):
        raise ValueError("first parts must have equal weight")
    a, b = vx1[-1], vy1[-1]
    c, d = v_map(x2)[0], v_map(y2)[0]
    return abs(a - b) + abs(c - d) - abs((a + c) - (b + d))


def _same_length(x: Sequence[int], y: Sequence[int]) -> None:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} != {len(y)}")
