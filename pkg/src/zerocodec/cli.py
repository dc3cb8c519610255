"""Command-line front end: encode, decode, simulate, verify and table."""

from __future__ import annotations

import argparse
import json
import random
import sys

from .channel import apply_pattern, budget_from_env, random_pattern, verify_code
from .recursive import build_code, redundancy_table, render_table
from .words import check_bits

EXIT_BAD_INPUT = 2
EXIT_DETECTED = 3
EXIT_VIOLATION = 1


def to_hex(bits: str) -> str:
    """``length:hex`` with the bits left-aligned, MSB first."""
    pad = (-len(bits)) % 4
    body = format(int(bits + "0" * pad, 2), f"0{(len(bits) + pad) // 4}x") if bits else ""
    return f"{len(bits)}:{body}"


def from_hex(text: str) -> str:
    length, _, body = text.partition(":")
    n = int(length)
    if not body:
        if n:
            raise ValueError("missing hex payload")
        return ""
    bits = format(int(body, 16), f"0{len(body) * 4}b")
    if n > len(bits) or "1" in bits[n:]:
        raise ValueError("hex payload does not match the length header")
    return bits[:n]


def parse_range(text: str) -> list[int]:
    """``3``, ``1-4`` or ``1,2,8``."""
    out: list[int] = []
    for part in text.split(","):
        lo, sep, hi = part.partition("-")
        out.extend(range(int(lo), int(hi) + 1) if sep else [int(lo)])
    return out


def _read_word(args) -> str:
    raw = args.word if args.word is not None else sys.stdin.read()
    raw = raw.strip()
    word = from_hex(raw) if args.format == "hex" else raw
    return check_bits(word)


def _write_word(bits: str, fmt: str) -> str:
    return to_hex(bits) if fmt == "hex" else bits


def _code(args, k: int):
    return build_code(k, args.t, args.base, args.mode)


def cmd_encode(args) -> int:
    x = _read_word(args)
    k = args.k if args.k is not None else len(x)
    if len(x) != k:
        print(f"error: expected {k} information bits, got {len(x)}", file=sys.stderr)
        return EXIT_BAD_INPUT
    e = _code(args, k).encode(x)
    print(json.dumps({"codeword": _write_word(e, args.format)}) if args.json else _write_word(e, args.format))
    return 0


def cmd_decode(args) -> int:
    y = _read_word(args)
    code = _code(args, args.k)
    e, x, cor = code.decode(y)
    if args.json:
        print(json.dumps({"info": _write_word(x, args.format), "codeword": _write_word(e, args.format), "cor": cor}))
    else:
        print(f"{_write_word(x, args.format)} {cor}")
    return 0 if cor else EXIT_DETECTED


def cmd_simulate(args) -> int:
    rng = random.Random(args.seed)
    code = _code(args, args.k)
    counts = {"corrected": 0, "detected": 0, "miscorrected": 0}
    runs = []
    for _ in range(args.trials):
        x = format(rng.getrandbits(args.k), f"0{args.k}b")
        sent = code.encode(x)
        y = apply_pattern(sent, random_pattern(sent, args.deletions, args.insertions, rng))
        _, got, cor = code.decode(y)
        outcome = "detected" if not cor else ("corrected" if got == x else "miscorrected")
        counts[outcome] += 1
        runs.append({"info": x, "sent": sent, "received": y, "decoded": got, "cor": cor})
    summary = {"k": args.k, "t": args.t, "n": code.n, "deletions": args.deletions,
               "insertions": args.insertions, "seed": args.seed, **counts}
    if args.json:
        print(json.dumps({**summary, "runs": runs}, indent=2))
    else:
        print(" ".join(f"{k}={v}" for k, v in summary.items()))
    return 0


def cmd_verify(args) -> int:
    code = _code(args, args.k)
    budget = args.budget if args.budget is not None else budget_from_env()
    report = verify_code(code, budget=budget, horizon=args.horizon, seed=args.seed,
                         code_id=f"{args.base}:k={args.k}:t={args.t}")
    if args.json:
        print(report.to_json())
    else:
        state = "ok" if report.ok else f"{len(report.violations)} violation(s)"
        mode = "exhaustive" if report.exhaustive else "sampled"
        print(f"{report.code_id} n={code.n} patterns={report.patterns_checked} {mode} {state}")
        for v in report.violations:
            print(f"  {v['condition']}: sent={v['sent']} received={v['received']} got={v['got']} cor={v['cor']}")
    return 0 if report.ok else EXIT_VIOLATION


def cmd_table(args) -> int:
    rows = redundancy_table(parse_range(args.k), parse_range(args.t), args.mode)
    print(json.dumps(rows, indent=2) if args.json else render_table(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zerocodec", description="Codes correcting 0-deletions and 0-insertions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_k: bool):
        p.add_argument("--k", type=int, required=need_k, help="information bits")
        p.add_argument("--t", type=int, required=True, help="number of 0-errors to correct")
        p.add_argument("--base", default="auto", choices=["auto", "R", "W", "M", "S", "I"])
        p.add_argument("--mode", default="guaranteed", choices=["guaranteed", "conjecture"])
        p.add_argument("--format", default="bits", choices=["bits", "hex"])
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("encode", help="encode an information word")
    common(p, need_k=False)
    p.add_argument("word", nargs="?", help="information bits (default: stdin)")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a received word")
    common(p, need_k=True)
    p.add_argument("word", nargs="?", help="received bits (default: stdin)")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="send random words through a 0-error channel")
    common(p, need_k=True)
    p.add_argument("--deletions", type=int, default=0)
    p.add_argument("--insertions", type=int, default=1)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="check the decoder contract over error patterns")
    common(p, need_k=True)
    p.add_argument("--budget", type=int, default=None, help="maximum number of decodings")
    p.add_argument("--horizon", type=int, default=None, help="largest unidirectional pattern checked")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="redundancy of the best code per (k, t)")
    p.add_argument("--k", required=True, help="k values, e.g. 1-4 or 8,16")
    p.add_argument("--t", required=True, help="t values, e.g. 1-8")
    p.add_argument("--mode", default="guaranteed", choices=["guaranteed", "conjecture"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
