"""Identity, repetition and distinct-weight codes."""

from __future__ import annotations

from .lattice import lattice_decode
from ..words import check_bits, v_inverse, v_map


class IdentityCode:
    """The uncoded word; only meaningful at t = 0."""

    kind = "I"

    def __init__(self, k: int, t: int = 0):
        if t != 0:
            raise ValueError("the identity code has strength 0")
        self.k, self.t, self.n = k, 0, k

    def encode(self, x: str) -> str:
        _check_length(x, self.k)
        return x

    def decode(self, y: str) -> tuple[str, str, int]:
        if len(y) == self.k:
            return y, y, 1
        zero = "0" * self.k
        return zero, zero, 0

    def params(self) -> dict:
        return {"kind": self.kind, "k": self.k, "t": 0, "n": self.n}


class RepetitionCode:
    """Every bit repeated t+1 times; zero runs are multiples of t+1."""

    kind = "R"

    def __init__(self, k: int, t: int):
        self.k, self.t, self.n = k, t, (t + 1) * k

    def encode(self, x: str) -> str:
        _check_length(x, self.k)
        return "".join(c * (self.t + 1) for c in x)

    def decode(self, y: str) -> tuple[str, str, int]:
        d = self.t + 1
        w = y.count("1")
        if w % d == 0:
            prof = lattice_decode(v_map(y), d, self.n - w, self.t)
            if prof is not None:
                e = v_inverse(prof)
                blocks = [e[i:i + d] for i in range(0, len(e), d)]
                if len(e) == self.n and all(b == b[0] * d for b in blocks):
                    return e, e[::d], 1
        zero = "0" * self.k
        return self.encode(zero), zero, 0

    def params(self) -> dict:
        return {"kind": self.kind, "k": self.k, "t": self.t, "n": self.n}


class DistinctWeightCode:
    """Length 2^k - 1 code whose codeword weight equals the information value.

    Only zeros are ever corrupted, so counting the received ones recovers the
    information word after any number of 0-errors.
    """

    kind = "W"

    def __init__(self, k: int, t: int = 0):
        if k < 1:
            raise ValueError("k must be positive")
        self.k, self.t, self.n = k, t, (1 << k) - 1

    def encode(self, x: str) -> str:
        _check_length(x, self.k)
        extra = int(x, 2) - x.count("1")
        return x + "0" * (self.n - self.k - extra) + "1" * extra

    def decode(self, y: str) -> tuple[str, str, int]:
        w = y.count("1")
        if w > self.n:
            zero = "0" * self.k
            return self.encode(zero), zero, 0
        x = format(w, f"0{self.k}b")
        return self.encode(x), x, 1

    def params(self) -> dict:
        return {"kind": self.kind, "k": self.k, "t": self.t, "n": self.n}


def _check_length(x: str, k: int) -> None:
    check_bits(x)
    if len(x) != k:
        raise ValueError(f"expected {k} information bits, got {len(x)}")

