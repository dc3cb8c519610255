"""A channel that deletes and inserts zeros, and a harness checking decoders against it.

Error patterns live on the 0-run profile: one signed delta per bucket.  A
bucket is either shortened or lengthened, never both, so every pattern with
e deletions and f insertions produces a distinct word at distance e + f.
"""

from __future__ import annotations

import itertools
import json
import os
import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .words import v_inverse, v_map

DEFAULT_BUDGET = 200_000
BUDGET_ENV = "ZEROCODEC_BUDGET"


class BudgetExceeded(RuntimeError):
    pass


SAMPLED_WORDS = 64


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else default


def apply_pattern(x: str, pattern: Sequence[int]) -> str:
    v = v_map(x)
    if len(pattern) != len(v):
        raise ValueError("pattern needs one delta per bucket")
    out = [a + d for a, d in zip(v, pattern)]
    if min(out) < 0:
        raise ValueError("pattern deletes more zeros than a bucket holds")
    return v_inverse(out)


def _spread(total: int, caps: Sequence[int | None], start: int = 0) -> Iterator[tuple[int, ...]]:
    """All ways to put ``total`` units into slots with optional capacities."""
    n = len(caps)
    if start == n:
        if total == 0:
            yield ()
        return
    cap = caps[start]
    top = total if cap is None else min(total, cap)
    for u in range(top + 1):
        for rest in _spread(total - u, caps, start + 1):
            yield (u,) + rest


def enumerate_patterns(x: str, e: int, f: int, limit: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every pattern with exactly e deletions and f insertions on x.

    Raises :class:`BudgetExceeded` once more than ``limit`` patterns are produced.
    """
    v = v_map(x)
    produced = 0
    for dels in _spread(e, v):
        free = [None if d == 0 else 0 for d in dels]
        for ins in _spread(f, free):
            produced += 1
            if limit is not None and produced > limit:
                raise BudgetExceeded(f"more than {limit} patterns")
            yield tuple(i - d for d, i in zip(dels, ins))


def random_pattern(x: str, e: int, f: int, rng: random.Random) -> tuple[int, ...]:
    """A random pattern with e deletions and f insertions (e must fit in x's zeros)."""
    v = v_map(x)
    if e > sum(v):
        raise ValueError("not enough zeros to delete")
    delta = [0] * len(v)
    left = list(v)
    for _ in range(e):
        i = rng.choice([j for j, c in enumerate(left) if c > 0])
        left[i] -= 1
        delta[i] -= 1
    free = [j for j, d in enumerate(delta) if d == 0]
    if f and not free:
        raise ValueError("every bucket already lost a zero")
    for _ in range(f):
        delta[rng.choice(free)] += 1
    return tuple(delta)


@dataclass
class Report:
    code_id: str
    params: dict
    seed: int
    patterns_checked: int = 0
    exhaustive: bool = True
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"code_id": self.code_id, "params": self.params, "patterns_checked": self.patterns_checked,
                "violations": self.violations, "seed": self.seed, "exhaustive": self.exhaustive}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def count_patterns(x: str, e: int, f: int) -> int:
    """Number of patterns :func:`enumerate_patterns` yields, by dynamic programming."""
    ways = {(0, 0): 1}
    for cap in v_map(x):
        nxt: dict = {}
        for (de, df), c in ways.items():
            for d in range(1, min(cap, e - de) + 1):
                nxt[(de + d, df)] = nxt.get((de + d, df), 0) + c
            for i in range(f - df + 1):
                nxt[(de, df + i)] = nxt.get((de, df + i), 0) + c
        ways = nxt
    return ways.get((e, f), 0)


def _shapes(t: int, horizon: int) -> list[tuple[int, int]]:
    shapes = [(e, s - e) for s in range(t + 2) for e in range(s + 1)]
    shapes += [(e, 0) for e in range(t + 2, horizon + 1)]
    shapes += [(0, f) for f in range(t + 2, horizon + 1)]
    return shapes


def verify_code(code, t: int | None = None, budget: int | None = None, horizon: int | None = None,
                seed: int = 0, code_id: str | None = None, max_violations: int = 20) -> Report:
    """Check the four decoder conditions over codewords and 0-error patterns.

    C4: up to t errors must give ``cor = 1``.  C3: up to t + 1 errors with
    ``cor = 1`` must return the sent codeword.  C1/C2: deletions only or
    insertions only, up to ``horizon`` of them, with ``cor = 1`` must return
    the sent codeword.  Everything is enumerated when the total number of
    checks fits the budget; otherwise information words and patterns are
    drawn from a generator seeded with ``seed``.
    """
    t = code.t if t is None else t
    budget = budget_from_env() if budget is None else budget
    horizon = t + 2 if horizon is None else horizon
    rng = random.Random(seed)
    params = code.params() if hasattr(code, "params") else {"k": code.k, "t": t, "n": code.n}
    report = Report(code_id or type(code).__name__, params, seed)
    shapes = _shapes(t, horizon)
    k = code.k

    plan = None
    if k <= 16:
        words = ["".join(b) for b in itertools.product("01", repeat=k)]
        sent = [code.encode(x) for x in words]
        total = 0
        for c in sent:
            total += sum(count_patterns(c, e, f) for e, f in shapes)
            if total > budget:
                break
        if total <= budget:
            plan = sent
    if plan is None:
        report.exhaustive = False
        if k <= 16 and 1 << k <= SAMPLED_WORDS:
            infos = ["".join(b) for b in itertools.product("01", repeat=k)]
        elif k <= 16:
            infos = [format(i, f"0{k}b") for i in sorted(rng.sample(range(1 << k), SAMPLED_WORDS))]
        else:
            infos = [format(rng.getrandbits(k), f"0{k}b") for _ in range(SAMPLED_WORDS)]
        plan = [code.encode(x) for x in infos]
        cap = max(1, budget // (len(plan) * len(shapes)))
    else:
        cap = None

    for c in plan:
        for e, f in shapes:
            if cap is None or count_patterns(c, e, f) <= cap:
                patterns = enumerate_patterns(c, e, f)
            else:
                patterns = _sample(c, e, f, cap, rng)
            for p in patterns:
                report.patterns_checked += 1
                y = apply_pattern(c, p)
                got, _, cor = code.decode(y)
                cond = _violated(e, f, t, c, got, cor)
                if cond:
                    report.violations.append({"sent": c, "received": y, "expected": c, "got": got,
                                              "cor": cor, "condition": cond})
                    if len(report.violations) >= max_violations:
                        return report
    return report


def _sample(x: str, e: int, f: int, count: int, rng: random.Random) -> list[tuple[int, ...]]:
    out = []
    for _ in range(count):
        try:
            out.append(random_pattern(x, e, f, rng))
        except ValueError:
            break
    return out


def _violated(e: int, f: int, t: int, sent: str, got: str, cor: int) -> str | None:
    size = e + f
    if size <= t and not cor:
        return "C4"
    if not cor or got == sent:
        return None
    if size <= t + 1:
        return "C3"
    return "C1" if f == 0 else "C2"
