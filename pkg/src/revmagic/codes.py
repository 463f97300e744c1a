"""Borrow codes as combinatorial objects.

A code is a 0/1 list ``z_0 z_1 ... z_n`` written with ``z_0`` first.
Read as a decimal numeral (``z_0`` leading), a code of width ``n + 1``
whose last bit is dropped gives the *truncated code*, and the 1089-style
result for any input with that code is ``99 * truncated``.

Validity (a *strict* code):

* ``z_0 = 1`` and ``z_n = 0``;
* for every adjacent pair ``(z_i, z_{i+1})``:
  ``z_i = 0, z_{i+1} = 1`` forces ``z_{n-i-1} = 0`` and
  ``z_i = 1, z_{i+1} = 0`` forces ``z_{n-i-1} = 1``.

The pair rules are applied at every ``i`` from 0 to ``n - 1``, including
``i = 0``; without that index the predicate admits strings such as
``1000`` that no input produces.

An *extended* code is a strict code with zeros added on either side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from .digits import DigitString, from_digits
from .errors import RangeError, ShapeError, VerificationError
from .report import Report

BitsLike = Union[str, Sequence[int]]

STRICT = "strict"
EXTENDED = "extended"
TRUNCATED = "truncated"

DEFAULT_CENSUS_BOUND = 24


def as_bits(bits: BitsLike) -> tuple[int, ...]:
    if isinstance(bits, str):
        if not bits or set(bits) - {"0", "1"}:
            raise ValueError(f"not a 0/1 string: {bits!r}")
        return tuple(int(c) for c in bits)
    out = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in out):
        raise ValueError(f"not a 0/1 sequence: {bits!r}")
    return out


def numeral(bits: BitsLike) -> int:
    """Read a bit list as a base-10 numeral, first bit leading."""
    n = 0
    for b in as_bits(bits):
        n = n * 10 + b
    return n


def bits_of(n: int) -> tuple[int, ...]:
    """Decimal digits of ``n`` as a bit tuple; fails if a digit exceeds 1."""
    return as_bits(str(n))


def _pair_rules_hold(z: Sequence[int]) -> bool:
    n = len(z) - 1
    for i in range(n):
        lo, hi, mirror = z[i], z[i + 1], z[n - i - 1]
        if hi == 1 and lo == 0 and mirror != 0:
            return False
        if hi == 0 and lo == 1 and mirror != 1:
            return False
    return True


def is_code(bits: BitsLike) -> bool:
    z = as_bits(bits)
    if len(z) < 2:
        raise ShapeError("a code needs at least two bits")
    if z[0] != 1 or z[-1] != 0:
        return False
    if not _pair_rules_hold(z):
        return False
    if len(z) % 2 == 1:
        mid = len(z) // 2
        # odd-length codes have equal middle pair; follows from the pair rules
        assert z[mid] == z[mid - 1], z
    return True


def is_truncated_code(bits: BitsLike) -> bool:
    z = as_bits(bits)
    return len(z) >= 1 and is_code(z + (0,))


def paddings(bits: BitsLike) -> Iterator[tuple[int, tuple[int, ...], int]]:
    """Every way to write ``bits`` as ``0^a + core + 0^b`` with a strict core.

    Yields ``(a, core, b)`` with the longest core first.
    """
    z = as_bits(bits)
    if 1 not in z:
        return
    lead = z.index(1)
    last_one = len(z) - 1 - z[::-1].index(1)
    for end in range(len(z), last_one + 1, -1):
        core = z[lead:end]
        if len(core) >= 2 and is_code(core):
            yield lead, core, len(z) - end


def split_padding(bits: BitsLike) -> tuple[int, tuple[int, ...], int] | None:
    """The decomposition from :func:`paddings` with the longest core, or None."""
    return next(paddings(bits), None)


def is_extended_code(bits: BitsLike) -> bool:
    """True when some strict code plus at least one padding zero gives ``bits``.

    A string can be both strict and extended: ``1100`` is a code in its
    own right and also ``110`` followed by a zero.
    """
    z = as_bits(bits)
    if len(z) < 2:
        raise ShapeError("a code needs at least two bits")
    return any(a + b >= 1 for a, _, b in paddings(z))


def classify(bits: BitsLike) -> str | None:
    z = as_bits(bits)
    if is_code(z):
        return STRICT
    if is_extended_code(z):
        return EXTENDED
    return None


@dataclass(frozen=True)
class Code:
    """A validated 0/1 code, ``bits[0]`` being ``z_0``."""

    bits: tuple[int, ...]
    kind: str = STRICT

    def __post_init__(self) -> None:
        bits = as_bits(self.bits)
        object.__setattr__(self, "bits", bits)
        if self.kind == STRICT:
            ok = is_code(bits)
        elif self.kind == EXTENDED:
            ok = is_extended_code(bits)
        elif self.kind == TRUNCATED:
            ok = is_truncated_code(bits)
        else:
            raise ValueError(f"unknown code kind {self.kind!r}")
        if not ok:
            raise VerificationError(f"{''.join(map(str, bits))} is not a valid {self.kind} code")

    @classmethod
    def of(cls, bits: BitsLike) -> Code:
        """Classify ``bits`` as strict or extended, whichever applies."""
        kind = classify(bits)
        if kind is None:
            raise VerificationError(f"{bits} is neither a code nor an extended code")
        return cls(as_bits(bits), kind)

    @property
    def width(self) -> int:
        return len(self.bits)

    @property
    def numeral(self) -> int:
        return numeral(self.bits)

    @property
    def truncated_value(self) -> int:
        if self.kind == TRUNCATED:
            return self.numeral
        return numeral(self.bits[:-1])

    def truncated(self) -> Code:
        if self.kind != STRICT:
            raise ValueError("only strict codes have a truncated form")
        return Code(self.bits[:-1], TRUNCATED)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


@dataclass(frozen=True)
class CodeCensus:
    width: int
    codes: tuple[Code, ...]

    @property
    def count(self) -> int:
        return len(self.codes)

    def numerals(self) -> list[int]:
        return [c.numeral for c in self.codes]


# --- enumeration ---------------------------------------------------------


def _filter_chunk(width: int, start: int, stop: int) -> list[tuple[int, ...]]:
    """Vectorised predicate over the middle bits ``start..stop-1``.

    Candidate ``m`` places its bits at positions ``1..width-2`` with the
    most significant bit of ``m`` at position 1, so increasing ``m`` is
    increasing numeral order.
    """
    n = width - 1
    inner = width - 2
    m = np.arange(start, stop, dtype=np.int64)
    z = np.zeros((m.size, width), dtype=np.int8)
    z[:, 0] = 1
    for k in range(inner):
        z[:, 1 + k] = (m >> (inner - 1 - k)) & 1
    ok = np.ones(m.size, dtype=bool)
    for i in range(n):
        lo, hi, mirror = z[:, i], z[:, i + 1], z[:, n - i - 1]
        ok &= ~((hi == 1) & (lo == 0) & (mirror != 0))
        ok &= ~((hi == 0) & (lo == 1) & (mirror != 1))
    return [tuple(int(b) for b in row) for row in z[ok]]


def _filter_codes(width: int, chunk: int = 1 << 16) -> list[tuple[int, ...]]:
    if width == 2:
        return [(1, 0)]
    total = 1 << (width - 2)
    found: list[tuple[int, ...]] = []
    for start in range(0, total, chunk):
        found.extend(_filter_chunk(width, start, min(total, start + chunk)))
    return found


def _backtrack_codes(width: int) -> list[tuple[int, ...]]:
    """Assign bits outside-in, rejecting as soon as a pair rule is decided."""
    n = width - 1
    order: list[int] = []
    lo, hi = 0, n
    while lo <= hi:
        order.append(lo)
        if hi != lo:
            order.append(hi)
        lo, hi = lo + 1, hi - 1
    step_of = {pos: s for s, pos in enumerate(order)}
    # rules (i, i+1, mirror) attached to the step where they become decidable
    rules_at: list[list[tuple[int, int, int]]] = [[] for _ in order]
    for i in range(n):
        trio = (i, i + 1, n - i - 1)
        rules_at[max(step_of[p] for p in trio)].append(trio)

    z = [0] * width
    out: list[tuple[int, ...]] = []

    def rules_ok(step: int) -> bool:
        for a, b, m in rules_at[step]:
            if z[b] == 1 and z[a] == 0 and z[m] != 0:
                return False
            if z[b] == 0 and z[a] == 1 and z[m] != 1:
                return False
        return True

    def place(step: int) -> None:
        if step == len(order):
            out.append(tuple(z))
            return
        pos = order[step]
        choices = (1,) if pos == 0 else (0,) if pos == n else (0, 1)
        for bit in choices:
            z[pos] = bit
            if rules_ok(step):
                place(step + 1)

    place(0)
    return sorted(out)


def enumerate_codes(width: int, strategy: str = "filter", bound: int = DEFAULT_CENSUS_BOUND) -> CodeCensus:
    """All strict codes of a given width, sorted by numeral value.

    ``strategy`` is ``"filter"`` (test every 0/1 string), ``"backtrack"``
    (constructive search) or ``"both"``, which runs the two and fails
    unless they agree.
    """
    if not 2 <= width <= bound:
        raise RangeError(f"width must be in 2..{bound}, got {width}")
    if strategy == "filter":
        found = _filter_codes(width)
    elif strategy == "backtrack":
        found = _backtrack_codes(width)
    elif strategy == "both":
        found = _filter_codes(width)
        other = _backtrack_codes(width)
        if found != other:
            raise VerificationError(f"filter and backtrack disagree at width {width}")
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return CodeCensus(width, tuple(Code(b, STRICT) for b in found))


def fibonacci(j: int) -> int:
    a, b = 0, 1
    for _ in range(j):
        a, b = b, a + b
    return a


def fibonacci_sum_prediction(width: int) -> int | None:
    """``F_2 + F_4 + ... + F_{2k}`` for odd ``width = 2k + 1`` (F_1 = F_2 = 1).

    Recorded next to the census for comparison only: under this indexing
    it does not match the enumerated counts (4 vs 3 at width 5).
    """
    if width < 3 or width % 2 == 0:
        return None
    k = (width - 1) // 2
    return sum(fibonacci(2 * i) for i in range(1, k + 1))


# --- special families ----------------------------------------------------


def repunit(n: int) -> int:
    if n < 1:
        raise RangeError(f"repunit length must be >= 1, got {n}")
    return (10**n - 1) // 9


def undulating(n: int) -> int:
    """The n-digit numeral 1010... starting with 1."""
    if n < 1:
        raise RangeError(f"undulating length must be >= 1, got {n}")
    return numeral([1 - (i % 2) for i in range(n)])


def _complement_trim(a: tuple[int, ...]) -> tuple[int, ...]:
    n = len(a) - 1
    b = tuple(1 - bit for bit in a)
    inner = b[1:n]
    if not is_code(inner):
        raise VerificationError(f"inner part {inner} of the complement is not a code")
    return inner + (0,)


def repunit_code_bases(n: int) -> Iterator[tuple[int, ...]]:
    """Every strict code of width ``n + 1`` shaped ``1 0 ... 1 0``."""
    for bits in _backtrack_codes(n + 1):
        if bits[1] == 0 and bits[n - 1] == 1:
            yield bits


def decompose_repunit_code(n: int, variant: str = "complement",
                           a: BitsLike | None = None) -> tuple[Code, Code]:
    """Split the code ``1^n 0`` into a strict code plus an extended code.

    ``variant="complement"`` picks a strict ``A = 1 0 ... 1 0`` (default
    ``1 0^(n-2) 1 0``, or the caller's ``a``), complements it, drops the
    two end bits and appends a zero to get ``C``.  ``variant="split"``
    returns ``1^(n-1) 0 0`` and ``0^(n-1) 1 0``.

    Width 2 has no code of the ``1 0 ... 1 0`` shape; there the result
    is ``10 + 100``.
    """
    if n < 2:
        raise RangeError(f"need n >= 2, got {n}")
    target = numeral((1,) * n + (0,))
    if variant == "complement":
        if n == 2:
            A, C = Code((1, 0), STRICT), Code((1, 0, 0), EXTENDED)
        else:
            bits = as_bits(a) if a is not None else (1, 0) + (0,) * (n - 3) + (1, 0)
            if len(bits) != n + 1 or bits[1] != 0 or bits[n - 1] != 1:
                raise ValueError(f"A must have width {n + 1} and the shape 1 0 ... 1 0")
            A = Code(bits, STRICT)
            C = Code(_complement_trim(A.bits), EXTENDED)
    elif variant == "split":
        if n < 3:
            raise RangeError("the split variant needs n >= 3")
        A = Code((1,) * (n - 1) + (0, 0), STRICT)
        C = Code((0,) * (n - 1) + (1, 0), EXTENDED)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    if A.numeral + C.numeral != target:
        raise VerificationError(f"{A} + {C} != {target}")
    return A, C


GENERATED_KINDS = ("one-zeros-one-zero", "all-ones-zero", "eleven-times-uz", "uz")


def generated_bits(kind: str, parameter: int) -> tuple[int, ...]:
    if kind == "one-zeros-one-zero":
        if parameter < 0:
            raise RangeError("m must be >= 0")
        return (1,) + (0,) * parameter + (1, 0)
    if kind == "all-ones-zero":
        if parameter < 1:
            raise RangeError("n must be >= 1")
        return (1,) * parameter + (0,)
    if kind == "eleven-times-uz":
        if parameter < 1:
            raise RangeError("n must be >= 1")
        return bits_of(11 * undulating(parameter))
    if kind == "uz":
        if parameter < 1:
            raise RangeError("n must be >= 1")
        return bits_of(undulating(parameter))
    raise ValueError(f"unknown kind {kind!r}; expected one of {GENERATED_KINDS}")


def classify_generated(kind: str, parameter: int) -> Report:
    """Classify a generated 0/1 numeral and check the family's known property.

    * ``1 0^m 1 0`` and ``1^n 0`` are strict codes;
    * ``11 * uz(n)`` and ``uz(n)`` are codes for even ``n`` and truncated
      codes for odd ``n``.
    """
    bits = generated_bits(kind, parameter)
    text = "".join(map(str, bits))
    labels = []
    if len(bits) >= 2 and is_code(bits):
        labels.append(STRICT)
    if is_truncated_code(bits):
        labels.append(TRUNCATED)
    if len(bits) >= 2 and is_extended_code(bits):
        labels.append(EXTENDED)
    report = Report(f"{kind}({parameter}) = {text}", data={"bits": bits, "labels": labels})
    if kind in ("one-zeros-one-zero", "all-ones-zero"):
        report.check(f"{text} is a strict code", STRICT in labels)
    elif parameter % 2 == 0:
        report.check(f"{text} is a code (n even)", STRICT in labels)
    else:
        report.check(f"{text} is a truncated code (n odd)", TRUNCATED in labels)
    return report


# --- witnesses -----------------------------------------------------------


def witness_input(bits: BitsLike) -> DigitString:
    """An input whose borrow code is exactly ``bits`` (strict codes).

    The code digits themselves, read as a number with ``z_0`` leading,
    reproduce the code under the 1089 procedure.
    """
    z = as_bits(bits)
    if not is_code(z):
        raise VerificationError(f"{numeral(z)} is not a strict code")
    return from_digits(z)


def wrap(x: DigitString, digit: int) -> DigitString:
    """Put ``digit`` at both ends of ``x``."""
    return DigitString((digit,) + x.digits + (digit,))


def witness_for_padded(bits: BitsLike) -> DigitString:
    """An input whose result equals ``99 * numeral(bits) // 10``.

    ``bits`` is a strict or extended code ``0^a S 0^b``; wrapping the
    witness of ``S`` ``b`` times multiplies the result by ``10^b``.
    """
    parts = split_padding(bits)
    if parts is None:
        raise VerificationError(f"{bits} is neither a code nor an extended code")
    _, core, trailing = parts
    x = witness_input(core)
    for _ in range(trailing):
        x = wrap(x, 1)
    return x


def iter_bit_strings(width: int) -> Iterable[tuple[int, ...]]:
    """All 0/1 tuples of a width, in numeral order."""
    for m in range(1 << width):
        yield tuple((m >> (width - 1 - k)) & 1 for k in range(width))
