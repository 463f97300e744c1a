"""Fixed-width base-10 digit strings.

Digits are stored units-first: ``digits[0]`` is the least significant
column.  ``str()`` renders the most significant digit first, so
``DigitString((1, 7))`` prints as ``"71"``.  Borrow records follow the
same storage order, but the code notation used elsewhere in the package
writes bit 0 first (see :mod:`revmagic.codes`).

Width is always explicit.  Leading zeros are kept, because the reverse
of ``"0090"`` must be ``"0900"`` and not ``"9"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import OrderError, RangeError, ShapeError

BASE = 10


@dataclass(frozen=True)
class DigitString:
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        digits = tuple(self.digits)
        object.__setattr__(self, "digits", digits)
        if not digits:
            raise ShapeError("a digit string needs at least one digit")
        for d in digits:
            if not (isinstance(d, int) and 0 <= d < BASE):
                raise RangeError(f"not a base-10 digit: {d!r}")

    @classmethod
    def parse(cls, text: str) -> DigitString:
        """Build from a most-significant-first decimal string, keeping zeros."""
        text = text.strip()
        if not text or not text.isdigit() or not text.isascii():
            raise ValueError(f"not a decimal digit string: {text!r}")
        return cls(tuple(int(c) for c in reversed(text)))

    @property
    def width(self) -> int:
        return len(self.digits)

    @property
    def leading(self) -> int:
        return self.digits[-1]

    @property
    def trailing(self) -> int:
        return self.digits[0]

    def is_palindrome(self) -> bool:
        return self.digits == self.digits[::-1]

    def __len__(self) -> int:
        return len(self.digits)

    def __getitem__(self, i: int) -> int:
        return self.digits[i]

    def __int__(self) -> int:
        return value(self)

    def __str__(self) -> str:
        return "".join(str(d) for d in reversed(self.digits))

    def __repr__(self) -> str:
        return f"DigitString({str(self)!r})"


@dataclass(frozen=True)
class BorrowRecord:
    """Borrow bits of a column subtraction, units column first.

    ``bits[i] == 1`` means ten was regrouped from column ``i + 1`` into
    column ``i``.
    """

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(self.bits)
        object.__setattr__(self, "bits", bits)
        if any(b not in (0, 1) for b in bits):
            raise RangeError(f"borrow bits must be 0 or 1: {bits}")

    @property
    def width(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        # bit 0 first, matching the z_0 z_1 ... notation for codes
        return "".join(map(str, self.bits))


def to_digit_string(n: int, width: int) -> DigitString:
    if width < 1:
        raise RangeError(f"width must be at least 1, got {width}")
    if n < 0:
        raise RangeError(f"negative numbers are not supported: {n}")
    if n >= BASE**width:
        raise RangeError(f"{n} does not fit in {width} digits")
    digits = []
    for _ in range(width):
        n, d = divmod(n, BASE)
        digits.append(d)
    return DigitString(tuple(digits))


def from_digits(msd_first: Sequence[int]) -> DigitString:
    """Build from digits listed most significant first."""
    return DigitString(tuple(reversed(tuple(msd_first))))


def reverse(x: DigitString) -> DigitString:
    return DigitString(x.digits[::-1])


def value(x: DigitString) -> int:
    total = 0
    for d in reversed(x.digits):
        total = total * BASE + d
    return total


def subtract_with_borrows(x: DigitString, y: DigitString) -> tuple[DigitString, BorrowRecord]:
    """Column subtraction ``x - y`` at fixed width, recording every borrow.

    Column ``i`` computes ``x[i] - y[i] - z_{i-1}``; when that is negative
    the column borrows (``z_i = 1``) and ten is added back.
    """
    if x.width != y.width:
        raise ShapeError(f"width mismatch: {x.width} vs {y.width}")
    if value(x) < value(y):
        raise OrderError(f"{x} < {y}; orient the operands before subtracting")
    out = []
    bits = []
    borrow = 0
    for a, b in zip(x.digits, y.digits):
        t = a - b - borrow
        borrow = 1 if t < 0 else 0
        out.append(t + BASE * borrow)
        bits.append(borrow)
    assert borrow == 0  # guaranteed by value(x) >= value(y)
    return DigitString(tuple(out)), BorrowRecord(tuple(bits))
