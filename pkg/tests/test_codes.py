import itertools

import pytest
from hypothesis import given, strategies as st

from revmagic import ball
from revmagic.codes import (
    EXTENDED,
    STRICT,
    Code,
    classify_generated,
    decompose_repunit_code,
    enumerate_codes,
    fibonacci_sum_prediction,
    is_code,
    is_extended_code,
    is_truncated_code,
    numeral,
    repunit,
    repunit_code_bases,
    undulating,
    witness_input,
    witness_for_padded,
)
from revmagic.errors import RangeError, ShapeError, VerificationError


def all_bit_strings(width):
    return ["".join(p) for p in itertools.product("01", repeat=width)]


@pytest.fixture(scope="module")
def oracle_codes():
    """Codes produced by actual subtraction for every eligible input, widths 2..7."""
    return {w: {"".join(map(str, b)) for b in ball.exhaustive_codes(w)} for w in range(2, 8)}


@pytest.mark.parametrize("bits, expected", [
    ("110100", True),
    ("1010", True),
    ("1000", False),
    ("11110", True),
    ("10", True),
    ("0110", False),
    ("1001", False),
])
def test_is_code_examples(bits, expected):
    assert is_code(bits) is expected


def test_examples_match_oracle(oracle_codes):
    assert "1010" in oracle_codes[4]
    assert "1000" not in oracle_codes[4]


def test_short_inputs_rejected():
    with pytest.raises(ShapeError):
        is_code("1")
    with pytest.raises(ShapeError):
        is_extended_code("0")


@pytest.mark.parametrize("width", range(2, 8))
def test_predicate_equals_oracle(width, oracle_codes):
    accepted = {s for s in all_bit_strings(width) if is_code(s)}
    assert accepted == oracle_codes[width]


def test_pair_rule_needed_at_index_zero():
    # 1000 passes every rule with i >= 1 but is not produced by any input
    assert not is_code("1000")


@pytest.mark.parametrize("bits, expected", [
    ("1100", True),
    ("0110", True),
    ("0101", False),
    ("0011", False),
    ("01100", True),
    ("0100", True),
    ("001000", True),
    ("0000", False),
    ("1010", False),
])
def test_is_extended_code(bits, expected):
    assert is_extended_code(bits) is expected


@pytest.mark.parametrize("width", range(2, 10))
def test_symmetric_padding_of_any_code_is_extended(width):
    for c in enumerate_codes(width).codes:
        assert is_extended_code((0,) + c.bits + (0,))
        assert is_extended_code(c.bits + (0,))


def test_census_small_widths():
    assert enumerate_codes(4).numerals() == [1010, 1100, 1110]
    assert enumerate_codes(5).numerals() == [10010, 11100, 11110]
    assert [enumerate_codes(w).count for w in range(2, 8)] == [1, 1, 3, 3, 8, 8]


@pytest.mark.parametrize("width", range(2, 17))
def test_filter_and_backtrack_agree(width):
    assert enumerate_codes(width, "filter") == enumerate_codes(width, "backtrack")


@pytest.mark.parametrize("width", range(2, 13))
def test_vectorised_filter_matches_scalar_predicate(width):
    scalar = [tuple(map(int, s)) for s in all_bit_strings(width) if is_code(s)]
    assert [c.bits for c in enumerate_codes(width).codes] == scalar


def test_census_sorted_and_unique():
    census = enumerate_codes(12)
    nums = census.numerals()
    assert nums == sorted(set(nums))
    assert census.count == len(census.codes)


def test_census_even_odd_pairing():
    counts = [enumerate_codes(w, "backtrack").count for w in range(2, 21)]
    for k in range(1, 10):
        assert counts[2 * k - 2] == counts[2 * k - 1]


def test_census_bounds():
    with pytest.raises(RangeError):
        enumerate_codes(1)
    with pytest.raises(RangeError):
        enumerate_codes(25)


def test_census_at_bound_runs():
    census = enumerate_codes(24, "backtrack")
    assert census.count > 0
    assert all(c.bits[0] == 1 and c.bits[-1] == 0 for c in census.codes)


@pytest.mark.parametrize("width", range(3, 20, 2))
def test_odd_width_middle_pair(width):
    mid = width // 2
    for c in enumerate_codes(width, "backtrack").codes:
        assert c.bits[mid] == c.bits[mid - 1]


def test_fibonacci_formula_recorded_not_matching():
    # standard indexing overshoots the enumerated counts
    assert fibonacci_sum_prediction(5) == 4
    assert enumerate_codes(5).count == 3
    assert fibonacci_sum_prediction(4) is None


def test_repunit_and_undulating():
    assert repunit(1) == 1
    assert repunit(4) == 1111
    assert repunit(9) == 111111111
    assert 1001001 * 111 == repunit(9)
    assert undulating(2) == 10
    assert undulating(5) == 10101
    assert undulating(11) == 10101010101
    with pytest.raises(RangeError):
        repunit(0)
    with pytest.raises(RangeError):
        undulating(0)


def test_decompose_four_ones():
    a, c = decompose_repunit_code(4)
    assert (a.numeral, c.numeral) == (10010, 1100)
    assert str(c) == "1100"
    a, c = decompose_repunit_code(4, "split")
    assert (a.numeral, c.numeral) == (11100, 10)


def test_decompose_small_cases():
    a, c = decompose_repunit_code(2)
    assert (a.numeral, c.numeral) == (10, 100)
    a, c = decompose_repunit_code(3)
    assert (a.numeral, c.numeral) == (1010, 100)
    with pytest.raises(RangeError):
        decompose_repunit_code(1)


@pytest.mark.parametrize("n", range(2, 21))
def test_decompose_exact(n):
    a, c = decompose_repunit_code(n)
    assert is_code(a.bits)
    assert is_extended_code(c.bits)
    assert a.numeral + c.numeral == numeral("1" * n + "0")


@pytest.mark.parametrize("n", range(4, 12))
def test_complement_procedure_for_every_admissible_a(n):
    target = numeral("1" * n + "0")
    for bits in repunit_code_bases(n):
        a, c = decompose_repunit_code(n, a=bits)
        assert a.numeral + c.numeral == target
        assert is_code(c.bits[:-1])


@pytest.mark.parametrize("kind, param, text, claim", [
    ("all-ones-zero", 4, "11110", STRICT),
    ("eleven-times-uz", 2, "110", STRICT),
    ("eleven-times-uz", 3, "1111", "truncated"),
    ("one-zeros-one-zero", 2, "10010", STRICT),
    ("uz", 4, "1010", STRICT),
    ("uz", 5, "10101", "truncated"),
])
def test_classify_generated(kind, param, text, claim):
    rep = classify_generated(kind, param)
    assert rep.ok
    assert "".join(map(str, rep.data["bits"])) == text
    assert claim in rep.data["labels"]


@pytest.mark.parametrize("param", range(0, 30))
def test_generated_families_sweep(param):
    assert classify_generated("one-zeros-one-zero", param).ok
    if param >= 1:
        assert classify_generated("all-ones-zero", param).ok
        assert classify_generated("eleven-times-uz", param).ok
        assert classify_generated("uz", param).ok


def test_eleven_times_uz_values():
    assert [11 * undulating(n) for n in range(1, 6)] == [11, 110, 1111, 11110, 111111]


def test_code_type_validation():
    assert Code("110100").truncated_value == 11010
    assert Code("110100").truncated().numeral == 11010
    assert Code("0100", EXTENDED).truncated_value == 10
    with pytest.raises(VerificationError):
        Code("1000")
    assert Code.of("0100").kind == EXTENDED
    assert is_truncated_code("11010")


@pytest.mark.parametrize("width", range(2, 13))
def test_witness_reproduces_code(width):
    for c in enumerate_codes(width).codes:
        res = ball.ball_number(witness_input(c.bits))
        assert res.code.bits == c.bits
        assert res.ball_value == 99 * c.truncated_value


@pytest.mark.parametrize("width", range(1, 7))
def test_truncated_codes_attained_by_search(width):
    """Every 99 x truncated code of width w is a result of some (w+1)-digit input."""
    values = ball.exhaustive_ball_values(width + 1)
    for c in enumerate_codes(width + 1).codes:
        assert 99 * c.truncated_value in values


@given(st.sampled_from(enumerate_codes(9).codes), st.integers(0, 3), st.integers(0, 3))
def test_padded_witness(code, lead, trail):
    bits = (0,) * lead + code.bits + (0,) * trail
    x = witness_for_padded(bits)
    assert ball.ball_number(x).ball_value == 99 * numeral(bits) // 10
