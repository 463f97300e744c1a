"""The 1089 procedure at fixed width.

For a non-palindromic ``x`` of width ``w``:

1. reverse it, ``x'``;
2. take the positive difference ``y = |x - x'|``, still ``w`` digits wide;
3. reverse that, ``y'``;
4. ``B = y + y'``.

The borrows of step 2 form the code of ``x``, and ``B`` always equals
``99`` times the code read as a numeral with its last bit dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .codes import (
    EXTENDED,
    STRICT,
    Code,
    as_bits,
    is_code,
    is_extended_code,
    numeral,
    split_padding,
    witness_input,
    wrap,
)
from .digits import DigitString, reverse, subtract_with_borrows, to_digit_string, value
from .errors import PalindromeError, RangeError
from .report import Report

InputLike = Union[DigitString, str]


def as_input(x: InputLike) -> DigitString:
    if isinstance(x, DigitString):
        return x
    if isinstance(x, str):
        return DigitString.parse(x)
    raise TypeError(f"expected DigitString or decimal string, got {type(x).__name__}")


@dataclass(frozen=True)
class BallResult:
    x: DigitString
    x_reverse: DigitString
    difference: DigitString
    difference_reverse: DigitString
    ball_value: int
    code: Code
    truncated_code_value: int
    # True when x < x', i.e. the subtraction ran on (x', x)
    swapped: bool

    @property
    def width(self) -> int:
        return self.x.width


def _require_non_palindrome(x: DigitString) -> None:
    if x.is_palindrome():
        raise PalindromeError(f"{x} is a palindrome: the difference and the result would be 0")


def ball_number(x: InputLike) -> BallResult:
    x = as_input(x)
    _require_non_palindrome(x)
    xr = reverse(x)
    swapped = value(x) < value(xr)
    hi, lo = (xr, x) if swapped else (x, xr)
    y, borrows = subtract_with_borrows(hi, lo)
    yr = reverse(y)
    b = value(y) + value(yr)
    kind = STRICT if hi.leading > hi.trailing else EXTENDED
    code = Code(borrows.bits, kind)
    return BallResult(x, xr, y, yr, b, code, code.truncated_value, swapped)


def code_of(x: InputLike) -> Code:
    """Borrow code of ``x``.

    Strict when the outer digits differ.  When they are equal the operands
    are ordered by size and the result is an extended code: the code of
    the first differing inner pair, flanked by zeros.
    """
    return ball_number(x).code


def verify_ball_identity(x: InputLike) -> Report:
    x = as_input(x)
    res = ball_number(x)
    # recompute from plain integers, not through DigitString
    text = str(x)
    a, b = int(text), int(text[::-1])
    y = abs(a - b)
    y_text = str(y).zfill(len(text))
    expected_b = y + int(y_text[::-1])
    truncated = numeral(res.code.bits[:-1])
    report = Report(f"1089 identity for {text}", data={"result": res})
    report.check("B matches direct recomputation", res.ball_value == expected_b,
                 f"{res.ball_value} vs {expected_b}")
    report.check("B = 99 x truncated code", expected_b == 99 * truncated,
                 f"{expected_b} = 99 x {truncated}")
    report.check("truncated code divides B", truncated > 0 and expected_b % truncated == 0)
    return report


def lift_ball(x: InputLike, a: int) -> tuple[DigitString, Report]:
    """Wrap ``x`` in the digit ``a`` and check that ``B`` scales by ten."""
    x = as_input(x)
    if not 1 <= a <= 9:
        raise RangeError(f"padding digit must be 1..9, got {a}")
    inner = ball_number(x)
    lifted = wrap(x, a)
    outer = ball_number(lifted)
    report = Report(f"wrap {x} in {a} -> {lifted}", data={"inner": inner, "outer": outer})
    report.check("B(outer) = 10 B(inner)", outer.ball_value == 10 * inner.ball_value,
                 f"{outer.ball_value} vs 10 x {inner.ball_value}")
    report.check("outer code = 0 + inner code + 0",
                 outer.code.bits == (0,) + inner.code.bits + (0,),
                 f"{outer.code} vs 0{inner.code}0")
    report.check("inner code + trailing 0 is an extended code",
                 is_extended_code(inner.code.bits + (0,)))
    return lifted, report


# --- witnesses and recognition ------------------------------------------


def ball_witness(b: int) -> DigitString | None:
    """Construct an input producing ``b``, or None if ``b / 99`` is not a
    truncated or padded code numeral."""
    if b <= 0 or b % 99:
        return None
    t = b // 99
    if set(str(t)) - {"0", "1"}:
        return None
    bits = as_bits(str(t)) + (0,)
    if is_code(bits):
        return witness_input(bits)
    parts = split_padding(bits)
    if parts is None:
        return None
    _, core, trailing = parts
    x = witness_input(core)
    for _ in range(trailing):
        x = wrap(x, 1)
    return x


def is_ball_number(b: int) -> bool:
    """True when a constructed witness reproduces ``b`` through the procedure."""
    x = ball_witness(b)
    return x is not None and ball_number(x).ball_value == b


# --- exhaustive sweeps ----------------------------------------------------


def _digit_matrix(lo: int, hi: int, width: int) -> np.ndarray:
    """Rows of units-first digits for every integer in ``[lo, hi)``."""
    n = np.arange(lo, hi, dtype=np.int64)
    out = np.empty((n.size, width), dtype=np.int8)
    for i in range(width):
        n, out[:, i] = np.divmod(n, 10)
    return out


def _prefix_blocks(width: int) -> list[tuple[int, int]]:
    """Partition the width-``w`` numbers by leading digit (two for w > 6)."""
    if width <= 6:
        step = 10 ** (width - 1)
        return [(d * step, (d + 1) * step) for d in range(1, 10)]
    step = 10 ** (width - 2)
    return [(p * step, (p + 1) * step) for p in range(10, 100)]


def _sweep_block(lo: int, hi: int, width: int, strict_only: bool):
    d = _digit_matrix(lo, hi, width)
    if strict_only:
        d = d[d[:, width - 1] > d[:, 0]]
    else:
        d = d[np.any(d != d[:, ::-1], axis=1)]
    r = d[:, ::-1]
    # order each row so the minuend is the larger of x and x'
    first_diff = np.argmax(d[:, ::-1] != r[:, ::-1], axis=1)
    rows = np.arange(d.shape[0])
    x_bigger = d[rows, width - 1 - first_diff] > r[rows, width - 1 - first_diff]
    hi_m = np.where(x_bigger[:, None], d, r).astype(np.int16)
    lo_m = np.where(x_bigger[:, None], r, d).astype(np.int16)
    borrow = np.zeros(d.shape[0], dtype=np.int16)
    key = np.zeros(d.shape[0], dtype=np.int64)
    y = np.zeros(d.shape[0], dtype=np.int64)
    y_rev = np.zeros(d.shape[0], dtype=np.int64)
    for i in range(width):
        t = hi_m[:, i] - lo_m[:, i] - borrow
        borrow = (t < 0).astype(np.int16)
        digit = (t + 10 * borrow).astype(np.int64)
        key |= borrow.astype(np.int64) << i
        y += digit * 10**i
        y_rev += digit * 10 ** (width - 1 - i)
    return key, y + y_rev


def _key_to_bits(key: int, width: int) -> tuple[int, ...]:
    return tuple((key >> i) & 1 for i in range(width))


def exhaustive_codes(width: int) -> set[tuple[int, ...]]:
    """Codes of every width-``w`` input whose leading digit exceeds its last.

    Applies the borrow recursion to each eligible input (vectorised in
    blocks by leading digits).
    """
    if not 2 <= width <= 9:
        raise RangeError(f"exhaustive sweep supports widths 2..9, got {width}")
    keys: set[int] = set()
    for lo, hi in _prefix_blocks(width):
        key, _ = _sweep_block(lo, hi, width, strict_only=True)
        keys.update(np.unique(key).tolist())
    return {_key_to_bits(k, width) for k in keys}


def exhaustive_ball_values(width: int, strict_only: bool = True) -> dict[int, tuple[int, ...]]:
    """Map each distinct result value over all width-``w`` inputs to its code.

    ``strict_only`` keeps inputs with leading digit > last digit; otherwise
    every non-palindrome is used, which also brings in extended codes.
    """
    if not 2 <= width <= 9:
        raise RangeError(f"exhaustive sweep supports widths 2..9, got {width}")
    seen: dict[int, int] = {}
    for lo, hi in _prefix_blocks(width):
        key, b = _sweep_block(lo, hi, width, strict_only)
        values, idx = np.unique(b, return_index=True)
        for v, i in zip(values.tolist(), idx.tolist()):
            seen.setdefault(v, int(key[i]))
    return {v: _key_to_bits(k, width) for v, k in sorted(seen.items())}


def random_inputs(rng, count: int, min_width: int = 2, max_width: int = 12) -> list[DigitString]:
    """Random non-palindromic inputs with a nonzero leading digit."""
    out = []
    while len(out) < count:
        w = int(rng.integers(min_width, max_width + 1))
        n = int(rng.integers(10 ** (w - 1), 10**w))
        x = to_digit_string(n, w)
        if not x.is_palindrome():
            out.append(x)
    return out
