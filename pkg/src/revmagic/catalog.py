"""Catalog rows for the 1089 results of each width, in CSV, JSON lines or TeX."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from typing import Iterable

from .codes import enumerate_codes, is_code, is_extended_code
from .errors import VerificationError

FIELDS = ("digits", "ball", "factor99", "code", "source")
SOURCES = ("enumerated", "closed-form", "searched")
FORMATS = ("csv", "json", "tex")


@dataclass(frozen=True)
class CatalogEntry:
    digit_count: int
    ball_value: int
    factor_99: int
    code: str
    source: str = "enumerated"

    def __post_init__(self) -> None:
        if self.ball_value != 99 * self.factor_99:
            raise VerificationError(f"{self.ball_value} != 99 x {self.factor_99}")
        if not (is_code(self.code) or is_extended_code(self.code)):
            raise VerificationError(f"{self.code} is not a code")
        if self.source not in SOURCES:
            raise ValueError(f"unknown source {self.source!r}")

    def row(self) -> dict:
        return dict(zip(FIELDS, (self.digit_count, self.ball_value, self.factor_99, self.code, self.source)))


def catalog_for_width(width: int) -> list[CatalogEntry]:
    """One row per strict code of the given input width, ordered by result."""
    entries = [
        CatalogEntry(width, 99 * c.truncated_value, c.truncated_value, str(c))
        for c in enumerate_codes(width).codes
    ]
    return sorted(entries, key=lambda e: e.ball_value)


def catalog(max_width: int, min_width: int = 2) -> list[CatalogEntry]:
    out: list[CatalogEntry] = []
    for w in range(min_width, max_width + 1):
        out.extend(catalog_for_width(w))
    return out


def to_csv(entries: Iterable[CatalogEntry]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    for e in entries:
        writer.writerow(e.row())
    return buf.getvalue()


def to_json_lines(entries: Iterable[CatalogEntry]) -> str:
    return "".join(json.dumps(e.row()) + "\n" for e in entries)


def to_tex(entries: Iterable[CatalogEntry]) -> str:
    lines = [
        r"\begin{tabular}{|l|l|l|l|l|}",
        r"\hline",
        r"n & $B$ & factorization & divisor of $B$ (truncated code) & code \\",
        r"\hline",
    ]
    prev = None
    for e in entries:
        if prev is not None and e.digit_count != prev:
            lines.append(r"\hline")
        lines.append(rf"{e.digit_count} & {e.ball_value} & $99\times {e.factor_99}$ & {e.factor_99} & {e.code} \\")
        lines.append(r"\hline")
        prev = e.digit_count
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def render(entries: Iterable[CatalogEntry], fmt: str) -> str:
    entries = list(entries)
    if fmt == "csv":
        return to_csv(entries)
    if fmt == "json":
        return to_json_lines(entries)
    if fmt == "tex":
        return to_tex(entries)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def parse_csv(text: str) -> list[CatalogEntry]:
    rows = csv.DictReader(io.StringIO(text))
    return [
        CatalogEntry(int(r["digits"]), int(r["ball"]), int(r["factor99"]), r["code"], r["source"])
        for r in rows
    ]


def parse_json_lines(text: str) -> list[CatalogEntry]:
    out = []
    for line in text.splitlines():
        if line.strip():
            r = json.loads(line)
            out.append(CatalogEntry(r["digits"], r["ball"], r["factor99"], r["code"], r["source"]))
    return out


def entry_dict(e: CatalogEntry) -> dict:
    return asdict(e)
