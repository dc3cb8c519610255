"""Constant-weight σ-codes over profiles and their symmetric-error decoder.

A code is fixed by an alphabet (group or field), a support of distinct
nonzero elements, a strength t, and a target syndrome σ̃.  Its codewords are
the profiles ``X = X̂ x_n`` of L1 weight ``w`` whose head ``X̂`` has
σ-polynomial ``σ̃`` mod z^{t+1}; the last digit is parity, topping the word up
to weight ``w``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .algebra import (Field, Group, alphabet_order, default_support, key_equation_solve, poly_inverse_series, poly_mul,
                      root_unpack, sigma_poly, smallest_field)
from .words import NatWord, l1_sym, v_hat_map, v_inverse, v_map

ENUMERATION_LIMIT = 20


@dataclass(frozen=True)
class CwSigmaCode:
    alg: Group | Field | None
    support: tuple[int, ...]
    t: int
    sigma_tilde: tuple[int, ...] | int
    n: int  # profile length, head is n - 1 digits
    weight: int  # L1 weight of every codeword

    def syndrome(self, head: Sequence[int]) -> tuple[int, ...] | int:
        if self.t == 0:
            return ()
        s = sigma_poly(self.alg, head, self.support[:len(head)], self.t)
        return s if isinstance(s, int) else tuple(s)

    def __contains__(self, x: Sequence[int]) -> bool:
        return (len(x) == self.n and min(x, default=0) >= 0 and sum(x) == self.weight
                and self.syndrome(x[:-1]) == self.sigma_tilde)

    def decode_asymmetric(self, y_hat: Sequence[int], tau_minus: int, tau_plus: int) -> NatWord | None:
        """Undo at most tau_minus deletions and tau_plus insertions on a head."""
        if tau_minus + tau_plus > self.t:
            raise ValueError("tau_minus + tau_plus exceeds t")
        y_hat = tuple(y_hat)
        if self.t == 0:
            return y_hat
        support = self.support[:len(y_hat)]
        if isinstance(self.alg, Group):
            return _decode_checksum(self.alg.order, y_hat, support, self.sigma_tilde, tau_minus, tau_plus)
        F = self.alg
        s_y = sigma_poly(F, y_hat, support, self.t)
        ratio = poly_mul(F, s_y, poly_inverse_series(F, self.sigma_tilde, self.t + 1), self.t + 1)
        solved = key_equation_solve(F, ratio, self.t, tau_minus, tau_plus)
        if solved is None:
            return None
        neg, pos = solved
        added = root_unpack(F, pos, support)
        lost = root_unpack(F, neg, support)
        if added is None or lost is None:
            return None
        x = tuple(y - a + b for y, a, b in zip(y_hat, added, lost))
        if min(x, default=0) < 0:
            return None
        return x

    def decode(self, y: Sequence[int], t_dec: int | None = None) -> tuple[NatWord, int]:
        """Correct up to t_dec symmetric errors, flag up to t_dec + 1.

        Returns ``(estimate, cor)``; on ``cor == 0`` the estimate is the
        placeholder ``(0, ..., 0, weight)``.
        """
        t = self.t if t_dec is None else t_dec
        if t > self.t:
            raise ValueError("decoding radius exceeds code strength")
        placeholder = (0,) * (self.n - 1) + (self.weight,)
        if len(y) != self.n:
            return placeholder, 0
        delta = sum(y) - self.weight
        if abs(delta) >= t + 1:
            return placeholder, 0
        tau_minus = (t - delta) // 2
        head = self.decode_asymmetric(y[:-1], tau_minus, t - tau_minus)
        if head is None:
            return placeholder, 0
        parity = self.weight - sum(head)
        if parity < 0:
            return placeholder, 0
        x = head + (parity,)
        if self.syndrome(head) != self.sigma_tilde or l1_sym(x, y) > t:
            return placeholder, 0
        return x, 1


def _decode_checksum(order: int, y_hat, support, target, tau_minus: int, tau_plus: int) -> NatWord | None:
    s = (sum(a * d for a, d in zip(support, y_hat)) - target) % order
    if s == 0:
        return tuple(y_hat)
    x = list(y_hat)
    if tau_plus >= 1 and s in support:
        i = support.index(s)
        if x[i] >= 1:
            x[i] -= 1
            return tuple(x)
    if tau_minus >= 1 and (order - s) in support:
        x[support.index(order - s)] += 1
        return tuple(x)
    return None


@dataclass(frozen=True)
class BinaryCwCode:
    """A σ-code read back through the bucket map: length-n binary words of weight w."""

    code: CwSigmaCode
    length: int
    ones: int
    words: tuple[str, ...]

    def decode(self, y: str, t_dec: int | None = None) -> tuple[str, int]:
        if y.count("1") != self.ones:
            return "", 0
        x, cor = self.code.decode(v_map(y), t_dec)
        return (v_inverse(x), cor) if cor else ("", 0)


def cw_alphabet(w: int, t: int):
    return smallest_field(w, t) if t > 0 else None


def construct_cw_code(n: int, w: int, t: int, limit: int = ENUMERATION_LIMIT) -> BinaryCwCode:
    """Largest σ-class among the length-n, weight-w binary words.

    Ties go to the class with the smallest syndrome; the codeword list is in
    ascending numeric order (colex order of the one-positions).
    """
    if n > limit:
        raise ValueError(f"n={n} exceeds the enumeration bound {limit}")
    if not 0 <= w <= n:
        raise ValueError("weight out of range")
    alg = cw_alphabet(w, t)
    support = tuple(default_support(w))
    template = CwSigmaCode(alg, support, t, (), w + 1, n - w)
    buckets: dict = defaultdict(list)
    for word in binary_words(n, w):
        buckets[template.syndrome(v_hat_map(word))].append(word)
    size = max(len(v) for v in buckets.values())
    key = min((k for k, v in buckets.items() if len(v) == size), key=_sort_key)
    code = CwSigmaCode(alg, support, t, key, w + 1, n - w)
    return BinaryCwCode(code, n, w, tuple(buckets[key]))


def _sort_key(k):
    return (k,) if isinstance(k, int) else tuple(k)


def binary_words(n: int, w: int):
    """All length-n words of weight w, in ascending numeric order."""
    words = []
    for ones in combinations(range(n), w):
        bits = ["0"] * n
        for i in ones:
            bits[i] = "1"
        words.append("".join(bits))
    return sorted(words)


def pigeonhole_bound(n: int, w: int, t: int) -> int:
    """Guaranteed size of the largest σ-class of length-n weight-w words."""
    if t == 0:
        return comb(n, w)
    return -(-comb(n, w) // alphabet_order(w, t) ** t)


def balanced_bound(n: int, tau: int) -> int:
    """Guaranteed size of the balanced code with byte strength tau (weight ⌊n/2⌋)."""
    return pigeonhole_bound(n, n // 2, tau - 1)
