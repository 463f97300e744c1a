"""Exact square certification for repunits, 10^n - 1 and reverse divisors."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .codes import repunit
from .errors import DomainError, RangeError, VerificationError
from .report import Report
from .revdiv import reverse_int, reverse_quotient


@dataclass(frozen=True)
class SquareReport:
    value: int
    root: int

    @property
    def is_square(self) -> bool:
        return self.root * self.root == self.value

    @property
    def lower(self) -> int:
        return self.root * self.root

    @property
    def upper(self) -> int:
        return (self.root + 1) ** 2

    def bracket_holds(self) -> bool:
        return self.lower <= self.value < self.upper


def _isqrt(n: int) -> int:
    if n < 2:
        return n
    # start above the root; Newton steps then decrease monotonically to it
    x = 1 << ((n.bit_length() + 1) // 2)
    while True:
        y = (x + n // x) // 2
        if y >= x:
            return x
        x = y


def integer_sqrt(n: int) -> SquareReport:
    if n < 0:
        raise DomainError(f"no square root for {n}")
    rep = SquareReport(n, _isqrt(n))
    if not rep.bracket_holds():
        raise VerificationError(f"bad root {rep.root} for {n}")
    return rep


def is_square(n: int) -> bool:
    return integer_sqrt(n).is_square


def check_nonsquare_families(n_max: int) -> Report:
    """For 2 <= n <= n_max: 10^n - 1 is 3 mod 4, and neither it nor R_n is a square."""
    if n_max < 2:
        raise RangeError(f"need n_max >= 2, got {n_max}")
    rep = Report(f"10^n - 1 and R_n for 2 <= n <= {n_max}")
    residue_bad = [n for n in range(2, n_max + 1) if (10**n - 1) % 4 != 3]
    nines_square = [n for n in range(2, n_max + 1) if is_square(10**n - 1)]
    ones_square = [n for n in range(2, n_max + 1) if is_square(repunit(n))]
    rep.check("10^n - 1 = 3 (mod 4)", not residue_bad, f"exceptions: {residue_bad}" if residue_bad else "")
    rep.check("10^n - 1 is not a square", not nines_square, str(nines_square) if nines_square else "")
    rep.check("R_n is not a square", not ones_square, str(ones_square) if ones_square else "")
    return rep


def repunit_gcd(m: int, n: int) -> int:
    """gcd(R_m, R_n) by Euclid on the numbers themselves; checked against R_gcd(m, n)."""
    if m < 1 or n < 1:
        raise RangeError("repunit indices start at 1")
    a, b = repunit(m), repunit(n)
    g = gcd(a, b)
    if g != repunit(gcd(m, n)):
        raise VerificationError(f"gcd(R_{m}, R_{n}) = {g} != R_{gcd(m, n)}")
    # Euclid on the indices: with m = q n + r, R_m = 10^r R_{qn} + R_r and R_n | R_{qn}
    hi, lo = max(m, n), min(m, n)
    while lo:
        r = hi % lo
        r_part = repunit(r) if r else 0
        block = repunit(hi - r)
        if block % repunit(lo) or repunit(hi) != 10**r * block + r_part:
            raise VerificationError(f"index identity fails for ({hi}, {lo})")
        if gcd(repunit(hi), repunit(lo)) != gcd(repunit(lo), r_part):
            raise VerificationError(f"Euclid step fails for ({hi}, {lo})")
        hi, lo = lo, r
    return g


PRODUCT_KINDS = ("repunit-pair", "power-pair", "revdiv-pair", "revdiv-self")


def product_square_report(kind: str, *params: int) -> Report:
    """Certify the square status of a product.

    repunit-pair(m, n): R_m R_n, m > n > 1, not a square
    power-pair(m, n): (10^m - 1)(10^n - 1), m > n > 1, not a square
    revdiv-pair(d1, d2): distinct reverse divisors, product not a square
    revdiv-self(d): d times its reverse is a square
    """
    if kind in ("repunit-pair", "power-pair"):
        m, n = params
        if not m > n > 1:
            raise RangeError(f"need m > n > 1, got ({m}, {n})")
        if kind == "repunit-pair":
            product, label = repunit(m) * repunit(n), f"R_{m} x R_{n}"
        else:
            product, label = (10**m - 1) * (10**n - 1), f"(10^{m} - 1)(10^{n} - 1)"
        sq = integer_sqrt(product)
        rep = Report(label, data={"product": product, "sqrt": sq})
        rep.check(f"{label} is not a square", not sq.is_square, f"{sq.lower} < {product} < {sq.upper}")
        return rep
    if kind == "revdiv-pair":
        d1, d2 = params
        if d1 == d2:
            raise DomainError("revdiv-pair needs two distinct reverse divisors")
        for d in (d1, d2):
            if reverse_quotient(d) is None:
                raise DomainError(f"{d} is not a reverse divisor")
        product = d1 * d2
        sq = integer_sqrt(product)
        rep = Report(f"{d1} x {d2}", data={"product": product, "sqrt": sq})
        rep.check("product is not a square", not sq.is_square, f"{sq.lower} < {product} < {sq.upper}")
        return rep
    if kind == "revdiv-self":
        (d,) = params
        if reverse_quotient(d) is None:
            raise DomainError(f"{d} is not a reverse divisor")
        product = d * reverse_int(d)
        sq = integer_sqrt(product)
        rep = Report(f"{d} x {reverse_int(d)}", data={"product": product, "sqrt": sq, "root": sq.root})
        rep.check("product is a square", sq.is_square, f"{product} = {sq.root}^2")
        return rep
    raise ValueError(f"unknown kind {kind!r}; expected one of {PRODUCT_KINDS}")


def repdigit_sweep(max_digits: int = 60) -> Report:
    """No number of 2..max_digits copies of one nonzero digit is a square."""
    hits = [(d, n) for n in range(2, max_digits + 1) for d in range(1, 10) if is_square(d * repunit(n))]
    rep = Report(f"repdigits with 2..{max_digits} digits")
    rep.check("no repdigit is a square", not hits, str(hits) if hits else "")
    return rep
