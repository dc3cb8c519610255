import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from zerocodec.algebra import Field
from zerocodec.base_codes import (DistinctWeightCode, IdentityCode, LimitedMagnitudeCode, ReedSolomon, RepetitionCode,
                                  RsBalancedCode, RsBalancedParams, balanced_beta, balanced_beta_inverse, balanced_table,
                                  balanced_length, distinct_weight_encode, limited_cardinality, limited_length,
                                  limited_magnitude_decode, limited_magnitude_encode, repetition_encode,
                                  rs_base_decode, rs_base_encode, rs_ee_decode)
from zerocodec.base_codes.limited import chunk_length, rank, unrank
from zerocodec.channel import verify_code
from zerocodec.words import d0di

ZERO_BLOCKS = "000111" * 7
CORRUPTED = "001011" + "0001011" + "0000111" + "000111" * 4
EXAMPLE = RsBalancedParams(k=9, t=4, b=3, tau=1)


def all_words(k):
    return ["".join(b) for b in itertools.product("01", repeat=k)]


# repetition and distinct weight -----------------------------------------------

def test_repetition_encode():
    assert repetition_encode("1", 1) == "11"
    assert repetition_encode("10", 2) == "111000"
    assert RepetitionCode(4, 1).n == 8


@pytest.mark.parametrize("x, tail", [("0100", "00000000111"), ("0000", "00000000000")])
def test_distinct_weight_rows(x, tail):
    assert distinct_weight_encode(x) == x + tail
    assert distinct_weight_encode("1111").count("1") == 15


def test_distinct_weights_are_distinct():
    ws = [distinct_weight_encode(x).count("1") for x in all_words(5)]
    assert sorted(ws) == list(range(32))


def test_distinct_weight_survives_any_zero_errors():
    c = DistinctWeightCode(4)
    for x in all_words(4):
        e = c.encode(x)
        y = "0" * 9 + e.replace("0", "") + "000"
        assert c.decode(y) == (e, x, 1)


def test_identity_code():
    c = IdentityCode(3)
    assert c.encode("101") == "101"
    assert c.decode("101") == ("101", "101", 1)
    assert c.decode("1010")[2] == 0
    with pytest.raises(ValueError):
        IdentityCode(3, 1)


def test_bad_lengths_rejected():
    with pytest.raises(ValueError):
        RepetitionCode(3, 1).encode("10")
    with pytest.raises(ValueError):
        LimitedMagnitudeCode(3, 1).encode("1")


# limited magnitude --------------------------------------------------------------

def test_cardinality_by_enumeration():
    for n in range(1, 11):
        for t in range(3):
            d = t + 1
            count = 0
            for w in all_words(n):
                runs = [len(r) for r in w.split("1")]
                if all(r % d == 0 for r in runs[:-1]):
                    count += 1
            assert count == limited_cardinality(n, t)


def test_trivial_cardinality():
    assert all(limited_cardinality(n, 0) == 2**n for n in range(12))


def test_chunk_lengths():
    assert chunk_length(5, 2) == 9
    assert chunk_length(8, 7) == 24
    assert limited_length(5, 2) == 9
    assert limited_length(64, 1) == 2 * chunk_length(32, 1) + 2


@given(st.integers(1, 14), st.integers(0, 3), st.data())
def test_rank_unrank(n, t, data):
    size = limited_cardinality(n, t)
    i = data.draw(st.integers(0, size - 1))
    w = unrank(i, n, t)
    assert len(w) == n
    assert rank(w, t) == i


def test_unrank_out_of_range():
    with pytest.raises(ValueError):
        unrank(limited_cardinality(5, 1), 5, 1)


@pytest.mark.parametrize("k, t", [(5, 2), (3, 1), (4, 3)])
def test_limited_round_trip(k, t):
    for x in all_words(k):
        e = limited_magnitude_encode(x, t)
        assert limited_magnitude_decode(e, k, t) == (e, x, 1)


def test_limited_chunks_with_markers():
    c = LimitedMagnitudeCode(70, 2)
    rng = random.Random(1)
    x = format(rng.getrandbits(70), "070b")
    e = c.encode(x)
    assert len(e) == c.n == limited_length(70, 2)
    y = e[:5] + "0" + e[5:40] + e[41:] if e[40] == "0" else "0" + e
    assert c.decode(y) == (e, x, 1)


@pytest.mark.parametrize("code", [RepetitionCode(2, 1), RepetitionCode(3, 2), DistinctWeightCode(3, 5),
                                  LimitedMagnitudeCode(5, 2), LimitedMagnitudeCode(4, 3)],
                         ids=lambda c: f"{c.kind}{c.k}t{c.t}")
def test_simple_codes_meet_contract(code):
    report = verify_code(code, budget=100_000, horizon=code.t + 4)
    assert report.exhaustive
    assert report.ok, report.violations[:3]


# balanced bytes ------------------------------------------------------------------

def test_example_byte_table():
    F = Field(2, 3)
    assert balanced_length(8, 1) == 5
    assert balanced_beta(0, 8, 1) == "000111"
    expected = {F.exp(0): "00101", F.exp(1): "00110", F.exp(2): "01001"}
    for elem, word in expected.items():
        assert balanced_beta(F.log(elem) + 1, 8, 1) == word + "1"


@pytest.mark.parametrize("size, tau", [(1, 1), (8, 1), (16, 2), (32, 3), (7, 2)])
def test_beta_round_trip(size, tau):
    words = {balanced_beta(i, size, tau) for i in range(size)}
    assert len(words) == size
    n = balanced_length(size, tau)
    for i in range(size):
        b = balanced_beta(i, size, tau)
        assert len(b) == n + 1 and b.count("1") == n // 2 + 1
        assert balanced_beta_inverse(b, size, tau) == i
    with pytest.raises(ValueError):
        balanced_beta(size, size, tau)


# Reed-Solomon ----------------------------------------------------------------------

def test_rs_all_error_erasure_combinations():
    F = Field(2, 3)
    rs = ReedSolomon(F, 3, 7)
    rng = random.Random(5)
    msgs = [[rng.randrange(8) for _ in range(3)] for _ in range(6)] + [[0, 0, 0]]
    for msg in msgs:
        cw = rs.encode(msg)
        assert rs_ee_decode(cw, rs) == cw
        for erased in range(0, 5):
            for errs in range(0, 3):
                if erased + 2 * errs > 4:
                    continue
                for pos in itertools.combinations(range(7), erased + errs):
                    r = list(cw)
                    for p in pos[:erased]:
                        r[p] = None
                    for p in pos[erased:]:
                        r[p] = F.add(r[p], 1 + (p % 7))
                    assert rs.decode(r) == cw


def test_rs_detects_beyond_capability():
    F = Field(2, 3)
    rs = ReedSolomon(F, 3, 7)
    cw = rs.encode([1, 2, 3])
    r = [None] * 5 + cw[5:]
    assert rs.decode(r) is None


def test_full_length_code_uses_zero_point():
    F = Field(5)
    rs = ReedSolomon(F, 2, 5)
    assert 0 in rs.points
    cw = rs.encode([3, 4])
    r = list(cw)
    r[4] = (r[4] + 1) % 5
    assert rs.decode(r) == cw


# RS over balanced bytes --------------------------------------------------------------

def test_worked_example_encoding():
    assert rs_base_encode("0" * 9, EXAMPLE) == ZERO_BLOCKS
    assert RsBalancedCode(EXAMPLE).n == 42


def test_worked_example_decoding():
    assert rs_base_decode(CORRUPTED, EXAMPLE) == (ZERO_BLOCKS, 1)
    assert d0di(ZERO_BLOCKS, CORRUPTED) == 4


def test_parameter_arithmetic():
    p = RsBalancedParams(k=9, t=4, b=3, tau=2)
    assert (p.k_rs, p.checks, p.n_rs) == (3, 4, 7)
    assert RsBalancedParams(k=9, t=4, b=3, tau=2, guaranteed=False).checks == 2
    assert p.field_order == 8
    assert RsBalancedParams(k=10, t=4, b=3).tail_bits == 1


def test_no_checks_is_plain_bytes():
    c = RsBalancedCode(RsBalancedParams(k=4, t=0, b=2))
    e = c.encode("1001")
    assert e == balanced_beta(2, 4, 1) + balanced_beta(1, 4, 1)


@pytest.mark.parametrize("p", [EXAMPLE, RsBalancedParams(5, 2, 2, 1), RsBalancedParams(7, 3, 3, 2)],
                         ids=lambda p: f"k{p.k}t{p.t}b{p.b}tau{p.tau}")
def test_rs_round_trip(p):
    c = RsBalancedCode(p)
    for x in all_words(p.k):
        e = c.encode(x)
        assert len(e) == c.n
        assert c.decode(e) == (e, x, 1)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_byte_damage_bound(data):
    # every RS symbol that changes costs at least 2τ units of distance
    c = RsBalancedCode(RsBalancedParams(6, 4, 2, 2))
    x = data.draw(st.text("01", min_size=6, max_size=6))
    e = c.encode(x)
    pieces = c.parse(e)
    y_pieces = list(pieces)
    for i in data.draw(st.sets(st.integers(0, len(pieces) - 1), max_size=3)):
        _, words, _ = balanced_table(c.sizes[i], c.p.tau)
        y_pieces[i] = data.draw(st.sampled_from(words))
    y = "".join(p + "1" for p in y_pieces)
    changed = sum(a != b for a, b in zip(y_pieces, pieces))
    assert changed * 2 * c.p.tau <= d0di(e, y)


def test_min_distance_of_small_instances():
    for p in [RsBalancedParams(4, 1, 2, 1), RsBalancedParams(3, 2, 1, 1), RsBalancedParams(4, 2, 2, 2)]:
        c = RsBalancedCode(p)
        cws = [c.encode(x) for x in all_words(p.k)]
        assert min(d0di(a, b) for a, b in itertools.combinations(cws, 2)) >= 2 * (p.t + 1)


@pytest.mark.parametrize("p", [RsBalancedParams(4, 2, 2, 1), RsBalancedParams(3, 1, 1, 1),
                               RsBalancedParams(4, 2, 2, 2, guaranteed=False)],
                         ids=lambda p: f"k{p.k}t{p.t}b{p.b}tau{p.tau}{'g' if p.guaranteed else 'c'}")
def test_rs_meets_contract(p):
    report = verify_code(RsBalancedCode(p), budget=80_000)
    assert report.ok, report.violations[:3]


def test_parse_counts_ones():
    c = RsBalancedCode(EXAMPLE)
    assert c.parse(CORRUPTED) == ["00101", "000101", "000011"] + ["00011"] * 4
    assert c.parse(ZERO_BLOCKS + "000") is not None
    assert c.parse(ZERO_BLOCKS[:-1]) is None
