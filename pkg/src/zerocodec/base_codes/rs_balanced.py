"""Reed-Solomon codes whose symbols are sent as balanced binary bytes.

Information is cut into b-bit bytes (plus a shorter tail byte), protected by a
systematic Reed-Solomon code, and every symbol is written as a word of a
balanced σ-code followed by a literal 1.  The ones are never corrupted, so the
receiver finds byte boundaries by counting them; each byte is repaired or
erased on its own and the Reed-Solomon decoder finishes the job.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from ..algebra import (Field, extended_euclid, field_of_order, poly_divmod, poly_eval, poly_mul, poly_sub,
                       smallest_field_order, trim)
from ..sigma_codes import balanced_bound, construct_cw_code
from ..words import check_bits, d0di

ERASURE = None


# Reed-Solomon ----------------------------------------------------------------

class ReedSolomon:
    """Systematic evaluation code of dimension k and length n over F.

    Codewords are ``(f(x_1), ..., f(x_n))`` for polynomials of degree < k,
    evaluated at ``x_i = α^(i-1)``; a code as long as the field itself also
    uses the point 0.  The first k symbols carry the message.
    """

    def __init__(self, F: Field, k: int, n: int):
        if not 0 < k <= n <= F.order:
            raise ValueError("need 0 < k <= n <= |F|")
        self.F, self.k, self.n = F, k, n
        pts = [F.exp(i) for i in range(min(n, F.order - 1))]
        if n == F.order:
            pts.append(0)
        self.points = pts

    @property
    def distance(self) -> int:
        return self.n - self.k + 1

    @cached_property
    def _check_matrix(self) -> list[list[int]]:
        F, xs = self.F, self.points
        rows = []
        for x in xs[self.k:]:
            row = []
            for i in range(self.k):
                num, den = 1, 1
                for j in range(self.k):
                    if j != i:
                        num = F.mul(num, F.sub(x, xs[j]))
                        den = F.mul(den, F.sub(xs[i], xs[j]))
                row.append(F.div(num, den))
            rows.append(row)
        return rows

    def encode(self, msg: list[int]) -> list[int]:
        if len(msg) != self.k:
            raise ValueError("message length mismatch")
        F = self.F
        checks = []
        for row in self._check_matrix:
            acc = 0
            for c, m in zip(row, msg):
                acc = F.add(acc, F.mul(c, m))
            checks.append(acc)
        return list(msg) + checks

    def decode(self, r: list[int | None]) -> list[int] | None:
        """Errors-and-erasures decoding; ``None`` entries are erasures.

        Corrects up to ``(n - k - e) // 2`` errors next to e erasures and
        returns None when no codeword lies that close.
        """
        F = self.F
        known = [(x, v) for x, v in zip(self.points, r) if v is not ERASURE]
        m = len(known)
        if m < self.k:
            return None
        g0 = [1]
        for x, _ in known:
            g0 = poly_mul(F, g0, [F.neg(x), 1])
        g1 = interpolate(F, known)
        stop = (m + self.k + 1) // 2 - 1  # stop once deg r < (m + k) / 2
        rem = u = None
        for rem, _, u in extended_euclid(F, g0, g1, stop_degree=stop):
            pass
        if not u:
            return None
        f, left = poly_divmod(F, rem, u)
        if left or len(f) > self.k:
            return None
        return [poly_eval(F, f, x) for x in self.points]


def interpolate(F: Field, pts: list[tuple[int, int]]) -> list[int]:
    """Lagrange interpolation through distinct points."""
    out: list[int] = []
    for i, (xi, yi) in enumerate(pts):
        if yi == 0:
            continue
        num, den = [1], 1
        for j, (xj, _) in enumerate(pts):
            if j != i:
                num = poly_mul(F, num, [F.neg(xj), 1])
                den = F.mul(den, F.sub(xi, xj))
        coef = F.div(yi, den)
        out = poly_sub(F, out, [F.neg(F.mul(coef, c)) for c in num])
    return trim(out)


# balanced bytes ---------------------------------------------------------------

@lru_cache(maxsize=None)
def balanced_length(size: int, tau: int) -> int:
    """Smallest ñ whose balanced code of strength tau has at least ``size`` words."""
    n = 1
    while balanced_bound(n, tau) < size:
        n += 1
    return n


@lru_cache(maxsize=None)
def balanced_table(size: int, tau: int):
    """The first ``size`` words (colex order) of the chosen balanced class."""
    n = balanced_length(size, tau)
    code = construct_cw_code(n, n // 2, tau - 1)
    words = code.words[:size]
    return code, words, {w: i for i, w in enumerate(words)}


def balanced_beta(index: int, size: int, tau: int) -> str:
    _, words, _ = balanced_table(size, tau)
    if not 0 <= index < size:
        raise ValueError("index out of range")
    return words[index] + "1"


def balanced_beta_inverse(byte: str, size: int, tau: int) -> int:
    _, _, lookup = balanced_table(size, tau)
    return lookup[byte.removesuffix("1")]


# the base code ----------------------------------------------------------------

@dataclass(frozen=True)
class RsBalancedParams:
    k: int
    t: int
    b: int
    tau: int = 1
    guaranteed: bool = True

    @property
    def tail_bits(self) -> int:
        return self.k % self.b

    @property
    def k_rs(self) -> int:
        return -(-self.k // self.b)

    @property
    def checks(self) -> int:
        base = self.t // self.tau
        return 2 * base if self.guaranteed and self.tau > 1 else base

    @property
    def n_rs(self) -> int:
        return self.k_rs + self.checks

    @property
    def field_order(self) -> int:
        nu = max(1 << self.b, self.n_rs)
        return smallest_field_order(nu - 1)

    def length(self) -> int:
        n1 = balanced_length(1 << self.b, self.tau)
        n3 = balanced_length(self.field_order, self.tau)
        n = (self.k // self.b) * (n1 + 1) + self.checks * (n3 + 1)
        if self.tail_bits:
            n += balanced_length(1 << self.tail_bits, self.tau) + 1
        return n


class RsBalancedCode:
    kind = "S"

    def __init__(self, params: RsBalancedParams):
        if params.tau < 1 or params.b < 1 or params.k < 1:
            raise ValueError("k, b and tau must be positive")
        self.p = params
        self.k, self.t = params.k, params.t
        self.F = field_of_order(params.field_order)
        self.rs = ReedSolomon(self.F, params.k_rs, params.n_rs)
        self.n = params.length()
        full = params.k // params.b
        # alphabet size per RS position
        self.sizes = [1 << params.b] * full
        if params.tail_bits:
            self.sizes.append(1 << params.tail_bits)
        self.sizes += [self.F.order] * params.checks

    # symbol <-> table index ---------------------------------------------------
    def _index(self, pos: int, symbol: int) -> int:
        if pos < self.rs.k:
            return symbol
        return 0 if symbol == 0 else self.F.log(symbol) + 1

    def _symbol(self, pos: int, index: int) -> int:
        if pos < self.rs.k:
            return index
        return 0 if index == 0 else self.F.exp(index - 1)

    def _bytes(self, x: str) -> list[int]:
        b = self.p.b
        out = [int(x[i:i + b], 2) for i in range(0, (self.k // b) * b, b)]
        if self.p.tail_bits:
            out.append(int(x[-self.p.tail_bits:], 2))
        return out

    def _bits(self, msg: list[int]) -> str:
        b, tail = self.p.b, self.p.tail_bits
        full = self.k // b
        s = "".join(format(v, f"0{b}b") for v in msg[:full])
        if tail:
            s += format(msg[full], f"0{tail}b")
        return s

    def _write(self, cw: list[int]) -> str:
        tau = self.p.tau
        return "".join(balanced_beta(self._index(i, s), self.sizes[i], tau) for i, s in enumerate(cw))

    def encode(self, x: str) -> str:
        check_bits(x)
        if len(x) != self.k:
            raise ValueError(f"expected {self.k} information bits")
        return self._write(self.rs.encode(self._bytes(x)))

    def parse(self, y: str) -> list[str] | None:
        """Cut y into bytes by counting ones; None if the ones do not add up.

        Zeros after the final 1 belong to no byte; the distance check in
        :meth:`decode` still counts them.
        """
        pieces, pos = [], 0
        for size in self.sizes:
            n_tilde = balanced_length(size, self.p.tau)
            need = n_tilde // 2 + 1
            end = pos
            for _ in range(need):
                end = y.find("1", end) + 1
                if end == 0:
                    return None
            pieces.append(y[pos:end - 1])
            pos = end
        return pieces if "1" not in y[pos:] else None

    def decode(self, y: str) -> tuple[str, str, int]:
        zero = "0" * self.k
        fail = (self.encode(zero), zero, 0)
        if abs(len(y) - self.n) > self.t:
            return fail
        pieces = self.parse(y)
        if pieces is None:
            return fail
        tau = self.p.tau
        for xi in range(1, tau + 1):
            received: list[int | None] = []
            for i, piece in enumerate(pieces):
                code, words, lookup = balanced_table(self.sizes[i], tau)
                word, cor = code.decode(piece, tau - xi)
                idx = lookup.get(word) if cor else None
                received.append(ERASURE if idx is None else self._symbol(i, idx))
            if received.count(ERASURE) > self.rs.n - self.rs.k:
                continue
            cw = self.rs.decode(received)
            if cw is None:
                continue
            msg = cw[:self.rs.k]
            if any(v >= self.sizes[i] for i, v in enumerate(msg)):
                continue
            e = self._write(cw)
            if d0di(e, y) <= self.t:
                return e, self._bits(msg), 1
        return fail

    def params(self) -> dict:
        p = self.p
        return {"kind": self.kind, "k": p.k, "t": p.t, "n": self.n, "b": p.b, "tau": p.tau,
                "field": self.F.order, "n_rs": p.n_rs, "checks": p.checks, "guaranteed": p.guaranteed}
