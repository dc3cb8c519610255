"""Systematic recursive codes correcting t deletions/insertions of zeros.

A codeword is ``X 0^t 1 E_{t-1}(X_{t-1})``: the information word, a marker,
and a recursively protected copy of the σ-syndrome of the 0-run profile of X.
At the bottom of the recursion sits one of the base codes.  ``code_length``
evaluates the resulting lengths and picks the cheapest base at every level.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import Field, Group, default_support, sigma_poly, smallest_field
from .base_codes import (DistinctWeightCode, IdentityCode, LimitedMagnitudeCode, RepetitionCode, RsBalancedCode,
                         RsBalancedParams, balanced_length, limited_length)
from .markers import extract, marker
from .sigma_codes import ENUMERATION_LIMIT, CwSigmaCode
from .words import INF, check_bits, d0di, v_hat_map, v_inverse, v_map

__all__ = ["RecursiveCode", "build_code", "code_length", "extract", "gamma2", "gamma2_unpack",
           "level_alphabet", "check_length", "redundancy_table", "render_table", "BasePlan"]

BASE_ORDER = ("rec", "M", "S", "R", "W")
OUTER_ORDER = ("R", "W", "rec")
MAX_BYTE_BITS = 40
MAX_TAU = 12
MAX_BYTE_LENGTH = 20
W_LIMIT = 4096


# check packing ------------------------------------------------------------------

@lru_cache(maxsize=None)
def level_alphabet(k: int, t: int) -> Group | Field:
    return smallest_field(k, t)


def alphabet_size(alg: Group | Field) -> int:
    return alg.order


def check_length(k: int, t: int) -> int:
    """Bits of the packed syndrome, capped at k (then X itself is the check)."""
    q = alphabet_size(level_alphabet(k, t))
    levels = 1 if isinstance(level_alphabet(k, t), Group) else t
    return min(k, (q ** levels - 1).bit_length())


def syndrome_of(x: str, t: int, alg: Group | Field):
    head = v_hat_map(x)
    s = sigma_poly(alg, head, default_support(len(head)), t)
    return s if isinstance(s, int) else tuple(s)


def gamma2(sigma, k: int, t: int, alg: Group | Field, x: str) -> str:
    """Pack the syndrome into ``check_length(k, t)`` bits, or return x if that is no shorter."""
    kt = check_length(k, t)
    if kt == k:
        return x
    if isinstance(alg, Group):
        value = sigma
    else:
        value = 0
        for c in reversed(sigma[1:t + 1]):
            value = value * alg.order + c
    return format(value, f"0{kt}b")


def gamma2_unpack(bits: str, k: int, t: int, alg: Group | Field):
    """Inverse of :func:`gamma2`; None when the bits encode no valid syndrome."""
    if len(bits) == k and check_length(k, t) == k:
        return syndrome_of(bits, t, alg)
    value = int(bits, 2) if bits else 0
    if isinstance(alg, Group):
        return value if value < alg.order else None
    if value >= alg.order ** t:
        return None
    coeffs = [1]
    for _ in range(t):
        value, c = divmod(value, alg.order)
        coeffs.append(c)
    return tuple(coeffs)


# codes ----------------------------------------------------------------------------

class RecursiveCode:
    """One level ``X 0^t 1 E_{t-1}(X_{t-1})`` over an inner code for k_t bits."""

    kind = "rec"

    def __init__(self, k: int, t: int, inner):
        if t < 1:
            raise ValueError("a recursive level needs t >= 1")
        self.k, self.t, self.inner = k, t, inner
        self.alg = level_alphabet(k, t)
        self.kt = check_length(k, t)
        if inner.k != self.kt or inner.t != t - 1:
            raise ValueError("inner code does not match the check size")
        self.n = k + t + 1 + inner.n

    def checks(self, x: str) -> str:
        return gamma2(syndrome_of(x, self.t, self.alg), self.k, self.t, self.alg, x)

    def encode(self, x: str) -> str:
        check_bits(x)
        if len(x) != self.k:
            raise ValueError(f"expected {self.k} information bits")
        return x + marker(self.t) + self.inner.encode(self.checks(x))

    def decode(self, y: str) -> tuple[str, str, int]:
        k, t = self.k, self.t
        zero = "0" * k
        fail = (self.encode(zero), zero, 0)
        delta = len(y) - self.n
        if abs(delta) > t:
            return fail
        tau_plus = t - (t - delta) // 2
        z, rest = extract(y, t, k + tau_plus + 1)
        _, x_sub, cor_sub = self.inner.decode(rest)
        x = z
        if cor_sub:
            sigma = gamma2_unpack(x_sub, k, t, self.alg)
            if sigma is not None:
                x = self._correct(z, sigma)
        if len(x) != k:
            x = zero
        e = self.encode(x)
        if d0di(e, y) > t:
            return fail
        return e, x, 1

    def _correct(self, z: str, sigma) -> str:
        w = z.count("1")
        if w > self.k:
            return z
        code = CwSigmaCode(self.alg, tuple(default_support(self.k)), self.t, sigma, w + 1, self.k - w)
        est, cor = code.decode(v_map(z))
        return v_inverse(est) if cor else z

    def params(self) -> dict:
        return {"kind": self.kind, "k": self.k, "t": self.t, "n": self.n, "k_t": self.kt,
                "alphabet": self.alg.order, "inner": self.inner.params()}


# lengths and plans ----------------------------------------------------------------

@dataclass(frozen=True)
class BasePlan:
    t_b: int
    base: str
    k_tb: int
    n_tb: int
    b: int | None = None
    tau: int | None = None


def _rs_params(k: int, t: int, b: int, tau: int, guaranteed: bool) -> RsBalancedParams:
    return RsBalancedParams(k, t, b, tau, guaranteed)


@lru_cache(maxsize=None)
def rs_best(k: int, t: int, guaranteed: bool = True) -> tuple[int | float, int | None, int | None]:
    """Shortest RS-over-balanced-bytes code over the swept (b, τ) grid.

    τ stays at most t so the Reed-Solomon layer keeps at least one check, and
    every balanced byte must be short enough to enumerate.
    """
    best = (INF, None, None)
    for tau in range(1, min(t, MAX_TAU) + 1):
        for b in range(1, min(k, MAX_BYTE_BITS) + 1):
            p = _rs_params(k, t, b, tau, guaranteed)
            if balanced_length(max(1 << b, p.field_order), tau) > MAX_BYTE_LENGTH:
                break
            n = p.length()
            if n < best[0]:
                best = (n, b, tau)
    return best


def _base_lengths(s: int, k: int, guaranteed: bool) -> dict:
    out = {"M": (limited_length(k, s), None, None)}
    if s >= 1:
        out["S"] = rs_best(k, s, guaranteed)
    out["R"] = ((s + 1) * k, None, None)
    out["W"] = ((1 << k) - 1 if k <= W_LIMIT else INF, None, None)
    return out


@lru_cache(maxsize=None)
def _best(s: int, k: int, guaranteed: bool) -> tuple[int, str, int | None, int | None]:
    """Shortest code for k bits at strength s: (n, kind, b, tau)."""
    if s == 0:
        return k, "I", None, None
    cands = {"rec": (_rec(s, k, guaranteed), None, None)}
    cands.update(_base_lengths(s, k, guaranteed))
    kind = min(BASE_ORDER, key=lambda c: (cands[c][0], BASE_ORDER.index(c)))
    n, b, tau = cands[kind]
    return n, kind, b, tau


def _rec(t: int, k: int, guaranteed: bool) -> int:
    return k + t + 1 + _best(t - 1, check_length(k, t), guaranteed)[0]


def _follow(t: int, k: int, guaranteed: bool) -> BasePlan:
    while True:
        n, kind, b, tau = _best(t, k, guaranteed)
        if kind != "rec":
            return BasePlan(t, kind, k, n, b, tau)
        k, t = check_length(k, t), t - 1


def code_length(k: int, t: int, mode: str = "guaranteed") -> tuple[int, BasePlan]:
    """Best length among the recursive code and the plain R / W codes."""
    g = _guaranteed(mode)
    cands = {"R": (t + 1) * k, "W": (1 << k) - 1 if k <= W_LIMIT else INF}
    cands["rec"] = k if t == 0 else _rec(t, k, g)
    kind = min(OUTER_ORDER, key=lambda c: (cands[c], OUTER_ORDER.index(c)))
    if kind != "rec":
        return cands[kind], BasePlan(t, kind, k, cands[kind])
    if t == 0:
        return k, BasePlan(0, "I", k, k)
    return cands["rec"], _follow_inner(t, k, g)


def _follow_inner(t: int, k: int, guaranteed: bool) -> BasePlan:
    return _follow(t - 1, check_length(k, t), guaranteed)


def _guaranteed(mode: str) -> bool:
    if mode not in ("guaranteed", "conjecture"):
        raise ValueError("mode must be 'guaranteed' or 'conjecture'")
    return mode == "guaranteed"


def redundancy_table(k_set, t_set, mode: str = "guaranteed") -> list[dict]:
    rows = []
    for k in k_set:
        for t in t_set:
            n, plan = code_length(k, t, mode)
            b, tau = plan.b, plan.tau
            if plan.base == "M":
                b, tau = plan.k_tb // 32, plan.k_tb % 32
            rows.append({"k": k, "t": t, "r": n - k, "t_b": plan.t_b, "base": plan.base,
                         "k_tb": plan.k_tb, "n_tb": plan.n_tb, "b": b, "tau": tau})
    return rows


def format_cell(row: dict) -> str:
    sup = str(row["n_tb"])
    if row["b"] is not None:
        sup += f",{row['b']},{row['tau']}"
    return f"{row['r']}_{{{row['t_b']},{row['base']},{row['k_tb']}}}^{{{sup}}}"


def render_table(rows: list[dict]) -> str:
    ks = sorted({r["k"] for r in rows})
    ts = sorted({r["t"] for r in rows})
    cells = {(r["k"], r["t"]): format_cell(r) for r in rows}
    width = max(len(c) for c in cells.values()) + 2
    lines = ["k\\t".ljust(10) + "".join(str(t).ljust(width) for t in ts)]
    for k in ks:
        lines.append(str(k).ljust(10) + "".join(cells.get((k, t), "").ljust(width) for t in ts))
    return "\n".join(lines)


# construction ----------------------------------------------------------------------

def base_code(kind: str, k: int, t: int, guaranteed: bool = True, b: int | None = None, tau: int | None = None):
    if kind == "I":
        return IdentityCode(k, t)
    if kind == "R":
        return RepetitionCode(k, t)
    if kind == "W":
        return DistinctWeightCode(k, t)
    if kind == "M":
        return LimitedMagnitudeCode(k, t)
    if kind == "S":
        if b is None:
            _, b, tau = rs_best(k, t, guaranteed)
        return RsBalancedCode(_rs_params(k, t, b, tau, guaranteed))
    raise ValueError(f"unknown base kind {kind!r}")


def _chain(k: int, t: int, t_b: int, make_base):
    if t == t_b:
        return make_base(k, t)
    return RecursiveCode(k, t, _chain(check_length(k, t), t - 1, t_b, make_base))


def build_code(k: int, t: int, base: str = "auto", mode: str = "guaranteed"):
    """Encoder/decoder for k bits at strength t.

    ``auto`` follows :func:`code_length`; ``I`` recurses all the way down to
    the identity at t = 0; any other letter is that base code used directly.
    """
    g = _guaranteed(mode)
    if k < 1:
        raise ValueError("k must be positive")
    if base == "auto":
        _, plan = code_length(k, t, mode)
        if plan.t_b == t:
            return base_code(plan.base, k, t, g, plan.b, plan.tau)
        return _chain(k, t, plan.t_b, lambda kk, tt: base_code(plan.base, kk, tt, g, plan.b, plan.tau))
    if base == "I":
        return _chain(k, t, 0, lambda kk, tt: IdentityCode(kk))
    return base_code(base, k, t, g)
