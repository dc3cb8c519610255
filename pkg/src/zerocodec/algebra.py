"""Finite fields, the additive group used at t = 1, and polynomial arithmetic.

Field elements are ints in ``[0, q)``.  For a prime field this is the residue
itself; for ``GF(p^m)`` the base-p digits of the int are the coefficients of
the element in the polynomial basis (bit i = coefficient of z^i when p = 2).
Polynomials are lists of coefficients in ascending degree with no trailing
zeros; the zero polynomial is ``[]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from sympy import factorint, isprime

Poly = list

# Primitive polynomials over GF(2), bit i is the coefficient of z^i.
BINARY_PRIMITIVE = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}

_TABLE_LIMIT = 1 << 16


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``q == p**m`` or None."""
    if q < 2:
        return None
    f = factorint(q)
    if len(f) != 1:
        return None
    ((p, m),) = f.items()
    return p, m


@lru_cache(maxsize=None)
def smallest_field_order(w: int, prime_only: bool = False) -> int:
    """Order of the smallest field with more than w elements."""
    q = w + 1
    while True:
        if isprime(q) if prime_only else prime_power(q) is not None:
            return q
        q += 1


@dataclass(frozen=True)
class Group:
    """The cyclic group Z_n under addition; the t = 1 alphabet."""

    order: int

    kind = "group"

    def __repr__(self) -> str:
        return f"Z{self.order}"


@dataclass(eq=False)
class Field:
    """GF(p^m) with elements indexed by ints in ``[0, p^m)``."""

    p: int
    m: int = 1
    modulus: int | None = None  # packed base-p coefficients of the defining polynomial
    _exp: list = field(default=None, repr=False)
    _log: list = field(default=None, repr=False)

    kind = "field"

    def __post_init__(self):
        if not isprime(self.p):
            raise ValueError(f"{self.p} is not prime")
        self.order = self.p ** self.m
        if self.m > 1:
            if self.modulus is None:
                self.modulus = BINARY_PRIMITIVE.get(self.m) if self.p == 2 else None
            if self.modulus is None:
                self.modulus = _search_primitive(self.p, self.m)
            self._mod_digits = _digits(self.modulus, self.p, self.m + 1)
        if self.order <= _TABLE_LIMIT:
            self._build_tables()

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    # arithmetic -----------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self._digitwise(a, b, 1)

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self._digitwise(a, b, -1)

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._poly_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self._log is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self.power(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        if e < 0:
            return self.power(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    @property
    def primitive(self) -> int:
        """A generator of the multiplicative group."""
        if self._exp is not None:
            return self._exp[1] if self.order > 2 else 1
        if self.m > 1:
            return self.p  # z is primitive for the chosen modulus
        return _primitive_root(self.p)

    def exp(self, i: int) -> int:
        if self._exp is not None:
            return self._exp[i % (self.order - 1)]
        return self.power(self.primitive, i)

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        if self._log is not None:
            return self._log[a]
        g, x = self.primitive, 1
        for i in range(self.order - 1):
            if x == a:
                return i
            x = self.mul(x, g)
        raise ValueError("element not reached")

    # internals ------------------------------------------------------------
    def _digitwise(self, a: int, b: int, sign: int) -> int:
        p, out, scale = self.p, 0, 1
        while a or b:
            out += ((a % p + sign * (b % p)) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def _poly_mul(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if p == 2:
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a >> m & 1:
                    a ^= self.modulus
            return r
        da, db = _digits(a, p, m), _digits(b, p, m)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        md = self._mod_digits
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i]
            if c:
                for j in range(m + 1):
                    prod[i - m + j] = (prod[i - m + j] - c * md[j]) % p
        return sum(d * p ** i for i, d in enumerate(prod[:m]))

    def _build_tables(self) -> None:
        q = self.order
        if q == 2:
            self._exp, self._log = [1, 1], [None, 0]
            return
        g = self.p if self.m > 1 else _primitive_root(self.p)
        exp = [0] * (2 * (q - 1))
        log = [None] * q
        x = 1
        for i in range(q - 1):
            if log[x] is not None:
                raise ValueError(f"{self!r}: generator has order {i}")
            exp[i] = x
            log[x] = i
            x = (x * g % self.p) if self.m == 1 else self._poly_mul(x, g)
        if x != 1:
            raise ValueError(f"{self!r}: generator order mismatch")
        exp[q - 1:] = exp[:q - 1]
        self._exp, self._log = exp, log


def _digits(a: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        out.append(a % p)
        a //= p
    return out


def _primitive_root(p: int) -> int:
    if p == 2:
        return 1
    factors = list(factorint(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
    raise ValueError(p)


def _search_primitive(p: int, m: int) -> int:
    """Smallest monic polynomial of degree m over GF(p) for which z is primitive."""
    q = p ** m
    factors = list(factorint(q - 1))
    for low in range(1, q):
        if low % p == 0:  # zero constant term makes z a zero divisor
            continue
        modulus = p ** m + low
        f = Field.__new__(Field)
        f.p, f.m, f.modulus = p, m, modulus
        f._mod_digits = _digits(modulus, p, m + 1)
        f._exp = f._log = None
        f.order = q
        if all(f.power(p, (q - 1) // r) != 1 for r in factors) and f.power(p, q - 1) == 1:
            return modulus
    raise ValueError(f"no primitive polynomial for GF({p}^{m})")


@lru_cache(maxsize=None)
def field_of_order(q: int) -> Field:
    pm = prime_power(q)
    if pm is None:
        raise ValueError(f"no field of order {q}")
    return Field(*pm)


def smallest_field(w: int, t: int, prime_only: bool = False) -> Group | Field:
    """Alphabet for a σ-code whose punctured words have length w.

    At t = 1 this is the group Z_{w+1}; otherwise the smallest field with more
    than w elements (prime powers allowed unless ``prime_only``).
    """
    if t == 1:
        return Group(w + 1)
    return field_of_order(smallest_field_order(w, prime_only))


def alphabet_order(w: int, t: int) -> int:
    return w + 1 if t == 1 else smallest_field_order(w)


# polynomials ----------------------------------------------------------------

def trim(a: Sequence[int]) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a: Sequence[int]) -> int:
    """Degree, with -1 standing in for the zero polynomial."""
    return len(trim(a)) - 1


def poly_add(F: Field, a: Sequence[int], b: Sequence[int]) -> Poly:
    n = max(len(a), len(b))
    return trim(F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n))


def poly_sub(F: Field, a: Sequence[int], b: Sequence[int]) -> Poly:
    n = max(len(a), len(b))
    return trim(F.sub(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n))


def poly_scale(F: Field, a: Sequence[int], c: int) -> Poly:
    return trim(F.mul(x, c) for x in a)


def poly_mul(F: Field, a: Sequence[int], b: Sequence[int], limit: int | None = None) -> Poly:
    """Product, truncated mod z^limit when limit is given."""
    if not a or not b:
        return []
    n = len(a) + len(b) - 1
    if limit is not None:
        n = min(n, limit)
    out = [0] * n
    for i, x in enumerate(a):
        if x == 0 or i >= n:
            continue
        for j, y in enumerate(b):
            if i + j >= n:
                break
            if y:
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(out)


def poly_divmod(F: Field, a: Sequence[int], b: Sequence[int]) -> tuple[Poly, Poly]:
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    lead_inv = F.inv(b[-1])
    quot = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i]
        if c:
            c = F.mul(c, lead_inv)
            quot[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b[j]))
    return trim(quot), trim(rem[:db])


def poly_eval(F: Field, a: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_inverse_series(F: Field, a: Sequence[int], n: int) -> Poly:
    """Inverse of a power series with invertible constant term, mod z^n."""
    if not a or a[0] == 0:
        raise ZeroDivisionError("constant term not invertible")
    c0 = F.inv(a[0])
    out = [0] * n
    for i in range(n):
        s = 1 if i == 0 else 0
        for j in range(1, min(i, len(a) - 1) + 1):
            s = F.sub(s, F.mul(a[j], out[i - j]))
        out[i] = F.mul(s, c0)
    return trim(out)


def extended_euclid(F: Field, a: Sequence[int], b: Sequence[int], stop_degree: int = -1):
    """Run the Euclidean algorithm on (a, b) keeping Bezout coefficients.

    Yields successive triples ``(r, s, u)`` with ``r = s*a + u*b`` and stops
    after the first remainder whose degree is at most ``stop_degree``.
    """
    r0, r1 = trim(a), trim(b)
    s0, s1 = [1], []
    u0, u1 = [], [1]
    yield r0, s0, u0
    while True:
        yield r1, s1, u1
        if degree(r1) <= stop_degree or not r1:
            return
        q, r2 = poly_divmod(F, r0, r1)
        s2 = poly_sub(F, s0, poly_mul(F, q, s1))
        u2 = poly_sub(F, u0, poly_mul(F, q, u1))
        r0, r1, s0, s1, u0, u1 = r1, r2, s1, s2, u1, u2


# σ-polynomials --------------------------------------------------------------

def default_support(n: int) -> list[int]:
    return list(range(1, n + 1))


def sigma_poly(alg: Group | Field, x: Sequence[int], support: Sequence[int], t: int) -> Poly | int:
    """Π (1 - a z)^{x_a} mod z^{t+1}; in group mode the checksum Σ a·x_a."""
    if len(x) != len(support):
        raise ValueError("word and support lengths differ")
    if isinstance(alg, Group):
        return sum(a * d for a, d in zip(support, x)) % alg.order
    F = alg
    out = [1] + [0] * t
    for a, mult in zip(support, x):
        na = F.neg(a % F.order)
        for _ in range(mult):
            for i in range(t, 0, -1):
                if out[i - 1]:
                    out[i] = F.add(out[i], F.mul(na, out[i - 1]))
    return out


def sigma_full(F: Field, x: Sequence[int], support: Sequence[int]) -> Poly:
    """The untruncated σ-polynomial."""
    out = [1]
    for a, mult in zip(support, x):
        for _ in range(mult):
            out = poly_mul(F, out, [1, F.neg(a)])
    return out


def key_equation_solve(F: Field, ratio: Sequence[int], t: int, tau_minus: int, tau_plus: int) -> tuple[Poly, Poly] | None:
    """Find (σ_neg, σ_pos) with σ_pos ≡ ratio·σ_neg mod z^{t+1}.

    Degrees are bounded by ``tau_minus`` and ``tau_plus``; both results have
    constant term 1.  Returns None when no such pair exists.
    """
    if tau_minus + tau_plus > t:
        raise ValueError("tau_minus + tau_plus exceeds t")
    ratio = trim(list(ratio[: t + 1]))
    if not ratio or ratio[0] == 0:
        raise ZeroDivisionError("ratio constant term not invertible")
    modulus = [0] * (t + 1) + [1]
    r = u = None
    for r, _, u in extended_euclid(F, modulus, ratio, stop_degree=tau_plus):
        pass
    if degree(u) > tau_minus or not u or u[0] == 0:
        return None
    c = F.inv(u[0])
    neg, pos = poly_scale(F, u, c), poly_scale(F, r, c)
    if degree(pos) > tau_plus:
        return None
    if poly_mul(F, ratio, neg, t + 1) != trim(pos[: t + 1]):
        return None
    return neg, pos


def root_unpack(F: Field, p: Sequence[int], support: Sequence[int]) -> list[int] | None:
    """Multiplicities m_a with Π (1 - a z)^{m_a} = p, or None if p does not split."""
    p = trim(p)
    if not p or p[0] != 1:
        return None
    mults = [0] * len(support)
    for i, a in enumerate(support):
        ainv = F.inv(a % F.order)
        while len(p) > 1 and poly_eval(F, p, ainv) == 0:
            p, rem = poly_divmod(F, p, [1, F.neg(a)])
            if rem:
                return None
            mults[i] += 1
    return mults if p == [1] else None
