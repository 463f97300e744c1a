"""Named verification suites run by ``revmagic verify``.

Each suite returns a :class:`~revmagic.report.Report` with one check per
claim; bounds default to desk scale.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import ball, codes, revdiv, squares
from .report import Report

SUITES = ("ball99", "census", "revdiv-complete", "squares", "decompose")
EXPECTED_CENSUS = {2: 1, 3: 1, 4: 3, 5: 3, 6: 8, 7: 8}
BALL_SEED = 1089


def suite_ball99(samples: int = 100_000, seed: int = BALL_SEED, max_width: int = 12) -> Report:
    rep = Report(f"ball99: {samples} random inputs of width 2..{max_width}")
    rng = np.random.default_rng(seed)
    bad_mod = bad_ect = 0
    for x in ball.random_inputs(rng, samples, 2, max_width):
        check = ball.verify_ball_identity(x)
        b = check.data["result"].ball_value
        bad_mod += b % 99 != 0
        bad_ect += not check.ok
    rep.check("B mod 99 = 0", bad_mod == 0, f"{samples - bad_mod}/{samples}")
    rep.check("B = 99 x truncated code", bad_ect == 0, f"{samples - bad_ect}/{samples}")
    return rep


def suite_census(max_width: int = 7) -> Report:
    rep = Report(f"census: codes of width 2..{max_width}")
    counts = {}
    for w in range(2, max_width + 1):
        census = codes.enumerate_codes(w, strategy="both")
        counts[w] = census.count
        oracle = ball.exhaustive_codes(w)
        rep.check(f"width {w}: predicate codes = exhaustive borrow codes",
                  {c.bits for c in census.codes} == oracle, f"{census.count} codes")
        odd_ok = all(c.bits[w // 2] == c.bits[w // 2 - 1] for c in census.codes) if w % 2 else True
        rep.check(f"width {w}: middle pair equal when width is odd", odd_ok)
        if w <= 7:
            values = ball.exhaustive_ball_values(w)
            rep.check(f"width {w}: distinct results over inputs with a_n > a_0",
                      len(values) == census.count, f"{len(values)} values")
    seq = [counts[w] for w in sorted(counts)]
    expected = [EXPECTED_CENSUS[w] for w in sorted(counts) if w in EXPECTED_CENSUS]
    rep.check("counts begin 1, 1, 3, 3, 8, 8", seq[: len(expected)] == expected, ", ".join(map(str, seq)))
    rep.data["counts"] = counts
    rep.data["fibonacci"] = {w: codes.fibonacci_sum_prediction(w) for w in counts if w % 2}
    return rep


def suite_revdiv(max_digits: int = 9, workers: int | None = None) -> Report:
    """Searches every length; the last check is the two-family completeness claim."""
    rep = Report(f"revdiv-complete: 2..{max_digits} digits")
    extras = {}
    for n in range(2, max_digits + 1):
        found = revdiv.search_reverse_divisors(n, workers=workers)
        pairs = [(r.value, r.k) for r in found]
        if n <= 6:
            rep.check(f"{n} digits: pruned scan = unpruned scan", pairs == revdiv.unpruned_search(n))
        rep.check(f"{n} digits: scan = carry search", pairs == revdiv.carry_search(n))
        rep.check(f"{n} digits: every quotient is 4 or 9", all(r.k in (4, 9) for r in found))
        if n < 4:
            rep.check(f"{n} digits: none", not found)
            continue
        closed = {(revdiv.closed_form("NINE", n).value, 9), (revdiv.closed_form("FOUR", n).value, 4)}
        rep.check(f"{n} digits: both closed forms found", closed <= set(pairs))
        extra = sorted(set(pairs) - closed)
        extras[n] = extra
        rep.check(f"{n} digits: only the two closed forms", not extra,
                  "also " + ", ".join(f"{x} (k={k})" for x, k in extra) if extra else "")
    rep.data["extras"] = extras
    return rep


def all_reverse_divisors(max_digits: int = 9, workers: int | None = None) -> list[int]:
    out = []
    for n in range(2, max_digits + 1):
        out.extend(r.value for r in revdiv.search_reverse_divisors(n, workers=workers))
    return out


def suite_squares(max_index: int = 60, max_digits: int = 9, workers: int | None = None) -> Report:
    rep = Report("squares")
    gcd_bad = [(m, n) for m in range(1, max_index + 1) for n in range(1, m + 1)
               if _gcd_fails(m, n)]
    rep.check(f"gcd(R_m, R_n) = R_gcd(m,n) for 1 <= n <= m <= {max_index}", not gcd_bad, str(gcd_bad[:5]))
    rep.extend(squares.check_nonsquare_families(200))
    pair_bad = [(m, n) for m in range(3, max_index + 1) for n in range(2, m)
                if not squares.product_square_report("repunit-pair", m, n).ok
                or not squares.product_square_report("power-pair", m, n).ok]
    rep.check(f"R_m R_n and (10^m-1)(10^n-1) not squares, m > n > 1, m <= {max_index}", not pair_bad)
    divisors = all_reverse_divisors(max_digits, workers)
    rep.data["reverse_divisors"] = divisors
    pairs_square = [(a, b) for a, b in itertools.combinations(divisors, 2)
                    if not squares.product_square_report("revdiv-pair", a, b).ok]
    rep.check(f"products of distinct reverse divisors (<= {max_digits} digits) are not squares",
              not pairs_square, f"{len(divisors)} divisors")
    self_bad = [d for d in divisors if not squares.product_square_report("revdiv-self", d).ok]
    rep.check(f"D x reverse(D) is a square (<= {max_digits} digits)", not self_bad)
    rep.extend(squares.repdigit_sweep(60))
    return rep


def _gcd_fails(m: int, n: int) -> bool:
    try:
        squares.repunit_gcd(m, n)
    except AssertionError:
        return True
    return False


def suite_decompose(max_n: int = 20) -> Report:
    rep = Report(f"decompose: D = 99 R_n for 2 <= n <= {max_n}")
    for n in range(2, max_n + 1):
        d, magic = revdiv.magic_reverse_divisor(n)
        rep.check(f"n={n}: properties of D", magic.ok, "; ".join(str(c) for c in magic.failures))
        a, c = codes.decompose_repunit_code(n)
        b1, b2 = revdiv.sum_decomposition(n)
        rep.check(f"n={n}: {a} + {c} = 1^n 0 and {b1} + {b2} = {d}",
                  a.kind == codes.STRICT and codes.is_extended_code(c.bits) and b1 + b2 == d)
    for n in (2, 3, 4):
        divs = revdiv.power2_magic_divisors(n)
        rep.check(f"11 x (10^{2**n} - 1) has {len(divs)} magic divisors", len(divs) >= n + 1)
    return rep


def run_suite(name: str, workers: int | None = None) -> list[Report]:
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, workers)]
    if name == "ball99":
        return [suite_ball99()]
    if name == "census":
        return [suite_census()]
    if name == "revdiv-complete":
        return [suite_revdiv(workers=workers)]
    if name == "squares":
        return [suite_squares(workers=workers)]
    if name == "decompose":
        return [suite_decompose()]
    raise KeyError(name)
