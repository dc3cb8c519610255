import csv
import itertools
import random
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from zerocodec.algebra import Group
from zerocodec.channel import apply_pattern, enumerate_patterns, verify_code
from zerocodec.markers import extract, marker
from zerocodec.recursive import (RecursiveCode, build_code, check_length, code_length, format_cell, gamma2,
                                 gamma2_unpack, level_alphabet, redundancy_table, render_table, syndrome_of)
from zerocodec.words import d0di

REFERENCE = Path(__file__).parent / "data" / "reference_redundancy.csv"


def all_words(k):
    return ["".join(b) for b in itertools.product("01", repeat=k)]


def reference_rows():
    with REFERENCE.open() as fh:
        return list(csv.DictReader(fh))


# packing ---------------------------------------------------------------------

def test_zero_syndrome_packs_to_zeros():
    alg = level_alphabet(64, 2)
    sigma = (1, 0, 0)
    assert gamma2(sigma, 64, 2, alg, "0" * 64) == "0" * check_length(64, 2)


def test_group_packing_is_plain_binary():
    alg = level_alphabet(5, 1)
    assert alg == Group(6)
    assert check_length(5, 1) == 3
    for s in range(6):
        assert gamma2(s, 5, 1, alg, "00000") == format(s, "03b")
        assert gamma2_unpack(format(s, "03b"), 5, 1, alg) == s
    assert gamma2_unpack("111", 5, 1, alg) is None


def test_short_words_are_their_own_check():
    alg = level_alphabet(4, 3)
    assert check_length(4, 3) == 4
    assert gamma2(syndrome_of("0110", 3, alg), 4, 3, alg, "0110") == "0110"


@given(st.text("01", min_size=20, max_size=40), st.integers(2, 4))
def test_pack_unpack(x, t):
    k = len(x)
    alg = level_alphabet(k, t)
    sigma = syndrome_of(x, t, alg)
    bits = gamma2(sigma, k, t, alg, x)
    assert len(bits) == check_length(k, t)
    assert gamma2_unpack(bits, k, t, alg) == sigma


# markers -----------------------------------------------------------------------

def test_marker_shape():
    assert marker(3) == "0001"


def test_extract_error_free():
    x, rest = "0110", "1010"
    y = x + marker(2) + rest
    assert extract(y, 2, len(x) + 2 + 1) == (x, rest)


def test_extract_without_ones():
    assert extract("00000", 2, 3) == ("000", "")


def test_marker_immunity():
    # every split of at most t errors on the information part and the marker zeros
    suffix = "1101"
    for t in range(1, 4):
        for k in range(1, 7):
            for x in all_words(k):
                block = x + "0" * t
                for e in range(t + 1):
                    for f in range(t + 1 - e):
                        delta = f - e
                        tau_plus = t - (t - delta) // 2
                        for p in enumerate_patterns(block, e, f):
                            y = apply_pattern(block, p) + "1" + suffix
                            z, rest = extract(y, t, k + tau_plus + 1)
                            assert rest == suffix
                            assert z.count("1") == x.count("1")
                            assert d0di(z, x) <= e + f


# lengths and table ---------------------------------------------------------------

@pytest.mark.parametrize("k, t, r, base", [
    (1, 5, 0, "W"), (2, 7, 1, "W"), (4, 1, 4, "R"), (4, 2, 8, "R"), (4, 3, 11, "W"),
    (64, 1, 9, "I"), (64, 2, 22, "I"), (127, 2, 23, "I"),
])
def test_known_cells(k, t, r, base):
    n, plan = code_length(k, t, "conjecture")
    assert n - k == r
    assert plan.base == base


def test_limited_magnitude_cell():
    n, plan = code_length(5, 3, "conjecture")
    assert n - 5 == 13
    assert (plan.t_b, plan.base, plan.k_tb, plan.n_tb) == (2, "M", 5, 9)
    n, plan = code_length(8, 8, "conjecture")
    assert (n - 8, plan.base, plan.n_tb) == (33, "M", 24)


def test_zero_strength():
    assert code_length(9, 0)[0] == 9


def test_large_k_cell():
    n, plan = code_length(2**21, 3)
    assert n - 2**21 == 90


def test_redundancy_never_exceeds_plain_codes():
    for k in range(1, 40):
        for t in range(1, 9):
            n, _ = code_length(k, t)
            assert n - k <= min(t * k, 2**k - 1 - k)


def test_modes_agree_on_small_cells():
    for k in range(1, 17):
        for t in range(1, 9):
            assert code_length(k, t, "guaranteed") == code_length(k, t, "conjecture")


def test_table_records_and_text():
    rows = redundancy_table([4, 5], [3])
    assert rows[0] == {"k": 4, "t": 3, "r": 11, "t_b": 3, "base": "W", "k_tb": 4, "n_tb": 15, "b": None, "tau": None}
    assert format_cell(rows[1]) == "13_{2,M,5}^{9,0,5}"
    text = render_table(rows)
    assert "11_{3,W,4}^{15}" in text


def test_reference_rows_for_small_k():
    for row in reference_rows():
        k, t = int(row["k"]), int(row["t"])
        if k <= 4:
            assert code_length(k, t, "conjecture")[0] - k == int(row["r"]), (k, t)


def test_bad_mode():
    with pytest.raises(ValueError):
        code_length(4, 1, "optimistic")


# codec ---------------------------------------------------------------------------

@pytest.mark.parametrize("k", range(1, 9))
@pytest.mark.parametrize("t", [0, 1, 2])
def test_identity_base_round_trip(k, t):
    code = build_code(k, t, "I")
    for x in all_words(k):
        e = code.encode(x)
        assert e.startswith(x) and len(e) == code.n
        assert code.decode(e) == (e, x, 1)


def test_levels_chain_down_to_identity():
    code = build_code(8, 2, "I")
    assert isinstance(code, RecursiveCode)
    assert isinstance(code.inner, RecursiveCode)
    assert code.inner.inner.kind == "I"


def test_min_distance_of_short_codes():
    checked = 0
    for k in range(1, 15):
        for t in range(1, 4):
            code = build_code(k, t, "I")
            if code.n > 14:
                continue
            cws = [code.encode(x) for x in all_words(k)]
            assert min((d0di(a, b) for a, b in itertools.combinations(cws, 2)), default=99) > 2 * t
            checked += 1
    assert checked >= 8


@pytest.mark.parametrize("k, t", [(3, 1), (5, 1), (4, 2)])
def test_recursive_contract(k, t):
    report = verify_code(build_code(k, t, "I"), budget=150_000, horizon=t + 3)
    assert report.exhaustive
    assert report.ok, report.violations[:3]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 16), st.integers(1, 3), st.randoms(use_true_random=False))
def test_auto_codes_correct_random_errors(k, t, rnd):
    code = build_code(k, t, "auto")
    x = "".join(rnd.choice("01") for _ in range(k))
    e = code.encode(x)
    ones = e.count("1")
    delta = [0] * (ones + 1)
    for _ in range(t):
        i = rnd.randrange(ones + 1)
        sign = rnd.choice((-1, 1))
        if e and sign < 0 and delta[i] <= 0:
            base = [len(r) for r in e.split("1")][i]
            if base + delta[i] > 0:
                delta[i] -= 1
        elif delta[i] >= 0:
            delta[i] += 1
    y = apply_pattern(e, delta)
    assert code.decode(y) == (e, x, 1)


def test_forced_bases():
    assert build_code(5, 2, "R").kind == "R"
    assert build_code(5, 2, "W").n == 31
    assert build_code(5, 2, "M").n == 9
    assert build_code(9, 4, "S").kind == "S"
    with pytest.raises(ValueError):
        build_code(4, 1, "Q")


def test_detects_unidirectional_overflow():
    code = build_code(8, 2, "I")
    e = code.encode("10110010")
    assert code.decode("000" + e)[2] in (0, 1)
    assert code.decode("0000" + e + "0")[2] == 0
