"""Limited-magnitude codes: every zero run but the last is a multiple of D = t + 1.

For length n and weight w the last run carries the residue ``(n - w) mod D``,
so the weight-w codewords correspond to compositions of ``(n - w) // D`` into
``w + 1`` parts and there are ``sum_w C(w + (n - w) // D, w)`` codewords in
all.  Information words are mapped to codewords by enumerative unranking
(weight first, then compositions in lexicographic order).
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .lattice import lattice_decode
from ..markers import extract, marker
from ..words import check_bits, d0di, v_inverse, v_map

CHUNK_BITS = 32


def cardinality(n: int, t: int) -> int:
    d = t + 1
    return sum(comb(w + (n - w) // d, w) for w in range(n + 1))


@lru_cache(maxsize=None)
def chunk_length(bits: int, t: int) -> int:
    """Smallest n whose limited-magnitude code has at least 2^bits words."""
    target = 1 << bits
    lo, hi = bits, max(bits, (t + 1) * bits)  # the repetition code fits at (t+1)·bits
    while lo < hi:
        mid = (lo + hi) // 2
        if cardinality(mid, t) >= target:
            hi = mid
        else:
            lo = mid + 1
    return lo


def chunk_sizes(k: int, chunk_bits: int = CHUNK_BITS) -> list[int]:
    sizes = [chunk_bits] * (k // chunk_bits)
    if k % chunk_bits or not sizes:
        sizes.append(k % chunk_bits)
    return sizes


def code_length(k: int, t: int, chunk_bits: int = CHUNK_BITS) -> int:
    sizes = chunk_sizes(k, chunk_bits)
    return sum(chunk_length(s, t) for s in sizes) + (len(sizes) - 1) * (t + 1)


def _compositions(total: int, parts: int) -> int:
    if parts == 0:
        return int(total == 0)
    return comb(total + parts - 1, parts - 1)


def unrank(index: int, n: int, t: int) -> str:
    d = t + 1
    for w in range(n + 1):
        q = (n - w) // d
        count = comb(w + q, w)
        if index < count:
            parts = []
            left = q
            for slot in range(w, 0, -1):  # slot = parts remaining after this one
                u = 0
                while index >= _compositions(left - u, slot):
                    index -= _compositions(left - u, slot)
                    u += 1
                parts.append(u)
                left -= u
            parts.append(left)
            runs = [d * u for u in parts]
            runs[-1] += (n - w) % d
            return v_inverse(runs)
        index -= count
    raise ValueError("index out of range")


def rank(word: str, t: int) -> int | None:
    """Inverse of :func:`unrank`; None if the word is not a codeword."""
    d, n = t + 1, len(word)
    runs = v_map(word)
    w = len(runs) - 1
    if any(r % d for r in runs[:-1]) or runs[-1] % d != (n - w) % d:
        return None
    index = sum(comb(v + (n - v) // d, v) for v in range(w))
    parts = [r // d for r in runs]
    left = sum(parts)
    for slot, u in zip(range(w, 0, -1), parts):
        index += sum(_compositions(left - j, slot) for j in range(u))
        left -= u
    return index


class LimitedMagnitudeChunk:
    """A single block carrying ``k`` bits."""

    kind = "M"

    def __init__(self, k: int, t: int, n: int | None = None):
        self.k, self.t = k, t
        self.n = chunk_length(k, t) if n is None else n
        if cardinality(self.n, t) < 1 << k:
            raise ValueError("length too short for the information size")

    def encode(self, x: str) -> str:
        check_bits(x)
        if len(x) != self.k:
            raise ValueError(f"expected {self.k} information bits")
        return unrank(int(x, 2) if x else 0, self.n, self.t)

    def decode(self, y: str) -> tuple[str, str, int]:
        w = y.count("1")
        if w <= self.n:
            prof = lattice_decode(v_map(y), self.t + 1, self.n - w, self.t)
            if prof is not None:
                e = v_inverse(prof)
                idx = rank(e, self.t)
                if idx is not None and idx < 1 << self.k:
                    return e, format(idx, f"0{self.k}b") if self.k else "", 1
        zero = "0" * self.k
        return self.encode(zero), zero, 0


class MarkedChain:
    """Blocks joined by ``0^t 1`` markers and parsed one at a time."""

    def __init__(self, parts: list, t: int):
        self.parts, self.t = parts, t
        self.k = sum(p.k for p in parts)
        self.n = sum(p.n for p in parts) + (len(parts) - 1) * (t + 1)

    def encode(self, x: str) -> str:
        check_bits(x)
        if len(x) != self.k:
            raise ValueError(f"expected {self.k} information bits")
        out, pos = [], 0
        for p in self.parts:
            out.append(p.encode(x[pos:pos + p.k]))
            pos += p.k
        return marker(self.t).join(out)

    def decode(self, y: str) -> tuple[str, str, int]:
        zero = "0" * self.k
        fail = (self.encode(zero), zero, 0)
        t, rest, infos = self.t, y, []
        remaining = self.n
        for p in self.parts[:-1]:
            delta = len(rest) - remaining
            if abs(delta) > t:
                return fail
            tau_plus = t - (t - delta) // 2
            z, rest = extract(rest, t, p.n + tau_plus + 1)
            _, info, cor = p.decode(z)
            if not cor:
                return fail
            infos.append(info)
            remaining -= p.n + t + 1
        _, info, cor = self.parts[-1].decode(rest)
        if not cor:
            return fail
        infos.append(info)
        x = "".join(infos)
        e = self.encode(x)
        if d0di(e, y) > t:
            return fail
        return e, x, 1


class LimitedMagnitudeCode:
    """Information split into ``chunk_bits`` blocks plus a remainder block."""

    kind = "M"

    def __init__(self, k: int, t: int, chunk_bits: int = CHUNK_BITS):
        self.k, self.t, self.chunk_bits = k, t, chunk_bits
        parts = [LimitedMagnitudeChunk(s, t) for s in chunk_sizes(k, chunk_bits)]
        self._inner = parts[0] if len(parts) == 1 else MarkedChain(parts, t)
        self.n = self._inner.n

    def encode(self, x: str) -> str:
        return self._inner.encode(x)

    def decode(self, y: str) -> tuple[str, str, int]:
        return self._inner.decode(y)

    def params(self) -> dict:
        return {"kind": self.kind, "k": self.k, "t": self.t, "n": self.n,
                "chunks": self.k // self.chunk_bits, "remainder": self.k % self.chunk_bits}
