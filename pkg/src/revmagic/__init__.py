"""Exact arithmetic for 1089-style numbers, their borrow codes and reverse divisors."""

from .ball import BallResult, ball_number, code_of, is_ball_number, lift_ball, verify_ball_identity
from .codes import (
    Code,
    CodeCensus,
    classify_generated,
    decompose_repunit_code,
    enumerate_codes,
    is_code,
    is_extended_code,
    repunit,
    undulating,
)
from .digits import BorrowRecord, DigitString, reverse, subtract_with_borrows, to_digit_string, value
from .errors import (
    DomainError,
    OrderError,
    PalindromeError,
    RangeError,
    RevMagicError,
    ShapeError,
    VerificationError,
)
from .revdiv import (
    Family,
    RevDivRecord,
    closed_form,
    is_permultiple,
    magic_reverse_divisor,
    power2_magic_divisors,
    reverse_quotient,
    search_reverse_divisors,
    sum_decomposition,
    uz_family,
)
from .squares import (
    SquareReport,
    check_nonsquare_families,
    integer_sqrt,
    product_square_report,
    repunit_gcd,
)

__version__ = "0.1.0"
