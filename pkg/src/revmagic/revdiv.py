"""Reverse divisors (palintuples): numbers whose reverse is k times the number.

Two closed-form families appear for every length n >= 4::

    NINE  11 * (10^(n-2) - 1) = 10 9...9 89,  reverse = 9x = 98 9...9 01
    FOUR  22 * (10^(n-2) - 1) = 21 9...9 78,  reverse = 4x = 87 9...9 12

The exhaustive search below does not assume these are the only ones.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .ball import is_ball_number
from .codes import classify_generated, decompose_repunit_code, is_code, repunit, undulating
from .errors import DomainError, RangeError, VerificationError
from .report import Report

WORKERS_ENV = "REVMAGIC_WORKERS"
DEFAULT_MAX_DIGITS = 9
LARGE_MAX_DIGITS = 12
QUOTIENTS = range(2, 10)


class Family(str, enum.Enum):
    NINE = "NINE"
    FOUR = "FOUR"
    OTHER = "other"


def reverse_int(n: int) -> int:
    return int(str(n)[::-1])


def nine_value(n: int) -> int:
    return 11 * (10 ** (n - 2) - 1)


def family_of(value: int) -> Family:
    n = len(str(value))
    if n >= 4 and value == nine_value(n):
        return Family.NINE
    if n >= 4 and value == 2 * nine_value(n):
        return Family.FOUR
    return Family.OTHER


@dataclass(frozen=True)
class RevDivRecord:
    value: int
    reverse_value: int
    k: int
    digit_count: int
    family: Family

    def __post_init__(self) -> None:
        if self.reverse_value != self.k * self.value:
            raise VerificationError(f"{self.reverse_value} != {self.k} x {self.value}")
        if self.reverse_value == self.value:
            raise VerificationError(f"{self.value} is a palindrome")
        if len(str(self.value)) != self.digit_count:
            raise VerificationError(f"{self.value} does not have {self.digit_count} digits")

    @classmethod
    def build(cls, value: int, k: int) -> RevDivRecord:
        return cls(value, reverse_int(value), k, len(str(value)), family_of(value))


def reverse_quotient(n: int) -> int | None:
    """The k in 2..9 with reverse(n) = k*n, or None."""
    text = str(n)
    if n < 10:
        raise DomainError(f"{n} has a single digit")
    if text == text[::-1]:
        raise DomainError(f"{n} is a palindrome")
    k, rem = divmod(reverse_int(n), n)
    if rem == 0 and k in QUOTIENTS:
        return k
    return None


def is_permultiple(a: int, b: int) -> int | None:
    """k >= 2 when ``b = k*a`` and both use the same multiset of digits."""
    if a < 10 or b < 10:
        raise DomainError("permultiples need at least two digits")
    k, rem = divmod(b, a)
    if rem or k < 2:
        return None
    return k if sorted(str(a)) == sorted(str(b)) else None


# --- search ----------------------------------------------------------------


def resolve_workers(workers: int | None = None) -> int:
    if workers is not None:
        return max(1, int(workers))
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def scan_partitions(n: int) -> list[tuple[int, int, int, int]]:
    """``(k, lo, hi, last_digit)`` blocks covering every candidate.

    For quotient k the leading digit ``a`` of x is at most 9 // k.  The last
    digit ``d`` of x becomes the leading digit of ``k*x``, so it lies in
    ``[k*a, k*a + k - 1]``, and ``k*d`` must end in ``a`` because ``a`` is
    the last digit of ``k*x``.  Blocks are split by second digit.
    """
    top = 10**n - 1
    step = 10 ** (n - 2)
    parts = []
    for k in QUOTIENTS:
        x_max = top // k
        for a in range(1, 9 // k + 1):
            for d in range(10):
                if (k * d) % 10 != a or not k * a <= d <= k * a + k - 1:
                    continue
                for second in range(10):
                    lo = a * 10 ** (n - 1) + second * step
                    hi = min(lo + step, x_max + 1)
                    if lo < hi:
                        parts.append((k, lo, hi, d))
    return parts


def _reverse_array(x: np.ndarray, n: int) -> np.ndarray:
    r = np.zeros_like(x)
    m = x.copy()
    for _ in range(n):
        m, d = np.divmod(m, 10)
        r = r * 10 + d
    return r


def _scan_block(part: tuple[int, int, int, int], n: int) -> list[tuple[int, int]]:
    k, lo, hi, d = part
    start = lo + (d - lo) % 10
    found = []
    for s in range(start, hi, 10 * 500_000):
        x = np.arange(s, min(hi, s + 10 * 500_000), 10, dtype=np.int64)
        hit = x[_reverse_array(x, n) == k * x]
        found.extend((int(v), k) for v in hit)
    return found


def _scan_task(args: tuple[tuple[int, int, int, int], int]) -> list[tuple[int, int]]:
    return _scan_block(*args)


def scan_search(n: int, workers: int | None = None) -> list[tuple[int, int]]:
    """Pruned exhaustive scan, partitions run in a process pool."""
    if n > 17:
        raise RangeError("the vectorised scan is limited to 17 digits")
    parts = scan_partitions(n)
    workers = resolve_workers(workers)
    if workers == 1 or n <= 6:
        chunks = [_scan_block(p, n) for p in parts]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_scan_task, [(p, n) for p in parts]))
    return sorted(hit for chunk in chunks for hit in chunk)


def unpruned_search(n: int) -> list[tuple[int, int]]:
    """Every n-digit number, every k in 2..9; the reference for the pruning."""
    if not 2 <= n <= 7:
        raise RangeError("the unpruned scan is limited to 2..7 digits")
    found = []
    for x in range(10 ** (n - 1), 10**n):
        r = reverse_int(x)
        if r != x and r % x == 0 and r // x in QUOTIENTS:
            found.append((x, r // x))
    return found


def carry_search(n: int) -> list[tuple[int, int]]:
    """Digit-pair search from both ends with column carries.

    With ``k*x = x'`` and x written ``a_0`` (units) .. ``a_{n-1}``, column i
    reads ``k*a_i + c_i = a_{n-1-i} + 10*c_{i+1}`` with ``c_0 = c_n = 0``.
    Choosing the outer pair fixes one carry from each side, so the search
    walks inwards and matches the carries in the middle.
    """
    if n < 2:
        raise RangeError("need at least two digits")
    found = []
    for k in QUOTIENTS:
        # stack items: (t, carry into column t, carry out of column n-1-t, low digits, high digits)
        stack = [(0, 0, 0, (), ())]
        while stack:
            t, c_lo, c_hi, low, high = stack.pop()
            j = n - 1 - t
            if t >= j:
                # meet in the middle
                digits = None
                if t > j and c_lo == c_hi:
                    digits = low + high[::-1]
                elif t == j:
                    num = 10 * c_hi - c_lo
                    if num % (k - 1) == 0 and 0 <= num // (k - 1) <= 9:
                        digits = low + (num // (k - 1),) + high[::-1]
                if digits is not None:
                    x = int("".join(map(str, reversed(digits))))
                    if reverse_int(x) == k * x:
                        found.append((x, k))
                continue
            for p in range(1 if t == 0 else 0, 10):
                q = (k * p + c_lo) % 10
                if t == 0 and q == 0:
                    continue
                c_next = (k * p + c_lo - q) // 10
                c_j = p + 10 * c_hi - k * q
                if 0 <= c_next < k and 0 <= c_j < k:
                    stack.append((t + 1, c_next, c_j, low + (p,), high + (q,)))
    return sorted(found)


def search_reverse_divisors(digit_count: int, *, allow_large: bool = False,
                            workers: int | None = None, method: str = "auto") -> list[RevDivRecord]:
    """All reverse divisors with exactly ``digit_count`` digits, ascending.

    Up to 9 digits by default; 10..12 need ``allow_large``.  ``method`` is
    ``"scan"`` (pruned exhaustive scan), ``"carry"`` (digit-pair search) or
    ``"auto"``, which scans up to 9 digits and uses the carry search above.
    """
    limit = LARGE_MAX_DIGITS if allow_large else DEFAULT_MAX_DIGITS
    if not 2 <= digit_count <= limit:
        hint = "" if allow_large else " (pass allow_large for up to 12)"
        raise RangeError(f"digit count must be in 2..{limit}{hint}, got {digit_count}")
    if method == "auto":
        method = "scan" if digit_count <= DEFAULT_MAX_DIGITS else "carry"
    if method == "scan":
        hits = scan_search(digit_count, workers)
    elif method == "carry":
        hits = carry_search(digit_count)
    else:
        raise ValueError(f"unknown method {method!r}")
    return [RevDivRecord.build(x, k) for x, k in hits]


# --- closed forms ----------------------------------------------------------


def family_patterns(family: Family, n: int) -> tuple[str, str]:
    nines = "9" * (n - 4)
    if family is Family.NINE:
        return "10" + nines + "89", "98" + nines + "01"
    if family is Family.FOUR:
        return "21" + nines + "78", "87" + nines + "12"
    raise ValueError(f"no closed form for {family}")


def closed_form(family: Family | str, n: int) -> RevDivRecord:
    """The n-digit member of a closed-form family, with its digit patterns checked."""
    family = Family(family)
    if n < 4:
        raise RangeError(f"closed forms start at 4 digits, got {n}")
    if family is Family.NINE:
        value, k = nine_value(n), 9
    elif family is Family.FOUR:
        value, k = 2 * nine_value(n), 4
    else:
        raise ValueError("closed forms exist for NINE and FOUR only")
    want_value, want_reverse = family_patterns(family, n)
    if str(value) != want_value:
        raise VerificationError(f"{value} does not render as {want_value}")
    if str(k * value) != want_reverse or str(value)[::-1] != want_reverse:
        raise VerificationError(f"reverse of {value} does not render as {want_reverse}")
    return RevDivRecord(value, k * value, k, n, family)


# --- connections with the 1089 numbers --------------------------------------


def magic_reverse_divisor(n: int) -> tuple[int, Report]:
    """``D = 11 (10^n - 1) = 99 R_n`` with its four checked properties."""
    if n < 2:
        raise RangeError(f"need n >= 2, got {n}")
    d = 11 * (10**n - 1)
    rep = Report(f"D = 11 x (10^{n} - 1) = {d}", data={"D": d})
    rep.check("D = 99 x R_n", d == 99 * repunit(n))
    rep.check("1^n 0 is a strict code", is_code((1,) * n + (0,)))
    rep.check("D is produced by the 1089 procedure", is_ball_number(d))
    rep.check("D + reverse(D) = 10 D", d + reverse_int(d) == 10 * d)
    rep.check("reverse quotient of D is 9", reverse_quotient(d) == 9)
    rep.check("2D = 22 x (10^n - 1) has reverse quotient 4",
              2 * d == 22 * (10**n - 1) and reverse_quotient(2 * d) == 4)
    return d, rep


def sum_decomposition(n: int, variant: str = "complement") -> tuple[int, int]:
    """Two 1089-procedure results adding up to ``D = 99 R_n``.

    Built from the split ``1^n 0 = A + C`` into a strict and an extended
    code: ``B1 = 99 A / 10`` and ``B2 = 99 C / 10``.
    """
    if n < 2:
        raise RangeError(f"need n >= 2, got {n}")
    a, c = decompose_repunit_code(n, variant)
    d = 99 * repunit(n)
    b1, b2 = 99 * a.numeral // 10, 99 * c.numeral // 10
    if b1 + b2 != d:
        raise VerificationError(f"{b1} + {b2} != {d}")
    for b in (b1, b2):
        if not is_ball_number(b):
            raise VerificationError(f"{b} is not produced by the 1089 procedure")
    return b1, b2


def power2_magic_divisors(n: int) -> list[int]:
    """Divisors ``99 (10^(2^m) + 1)`` for m < n of ``D = 11 (10^(2^n) - 1)``, then D.

    D factors as ``99 (10 + 1)(10^2 + 1)(10^4 + 1)...(10^(2^(n-1)) + 1)``.
    """
    if n < 2:
        raise RangeError(f"need n >= 2, got {n}")
    d = 11 * (10 ** (2**n) - 1)
    product = 99
    for m in range(n):
        product *= 10 ** (2**m) + 1
    if product != d:
        raise VerificationError(f"product of factors {product} != {d}")
    divisors = [99 * (10 ** (2**m) + 1) for m in range(n)] + [d]
    for b in divisors:
        if d % b:
            raise VerificationError(f"{b} does not divide {d}")
        if not is_ball_number(b):
            raise VerificationError(f"{b} is not produced by the 1089 procedure")
    return divisors


def uz_family(n: int, seed: int = 1089) -> tuple[int, Report]:
    """``seed * uz(n)`` for seed 1089 or 2178.

    ``1089 uz(n) = 99 (11 uz(n))`` is always a 1089-procedure result, and a
    reverse divisor (k = 9) for odd n.  ``2178 uz(n)`` is twice that and a
    reverse divisor with k = 4 for odd n.
    """
    if n < 2:
        raise RangeError(f"need n >= 2, got {n}")
    if seed not in (1089, 2178):
        raise ValueError("seed must be 1089 or 2178")
    value = seed * undulating(n)
    magic = 1089 * undulating(n)
    rep = Report(f"{seed} x uz({n}) = {value}", data={"value": value})
    rep.extend(classify_generated("eleven-times-uz", n))
    rep.check("1089 x uz(n) is produced by the 1089 procedure", is_ball_number(magic))
    if seed == 2178:
        rep.check("value is twice a 1089-procedure result", value == 2 * magic)
    if n % 2:
        k = 9 if seed == 1089 else 4
        rep.check(f"reverse quotient is {k} (n odd)", reverse_quotient(value) == k)
    else:
        rep.check("no reverse quotient (n even)", _quotient_or_none(value) is None)
    return value, rep


def _quotient_or_none(value: int) -> int | None:
    try:
        return reverse_quotient(value)
    except DomainError:
        return None

