"""Cell addresses in A1 and R1C1 notation."""

from __future__ import annotations

import re
from dataclasses import dataclass

A1 = "A1"
R1C1 = "R1C1"

_A1_RE = re.compile(r"^(\$?)([A-Za-z]{1,3})(\$?)([0-9]+)$")
_R1C1_RE = re.compile(r"^[Rr]([0-9]+)[Cc]([0-9]+)$")
# sheet names that may appear unquoted before "!"
_PLAIN_SHEET_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_.]*$")


class AddressError(ValueError):
    """Raised when an address string cannot be parsed."""


def column_to_letters(column: int) -> str:
    if column < 1:
        raise ValueError(f"column must be >= 1, got {column}")
    letters = ""
    n = column
    while n > 0:
        n, rem = divmod(n - 1, 26)
        letters = chr(ord("A") + rem) + letters
    return letters


def letters_to_column(letters: str) -> int:
    n = 0
    for ch in letters:
        if not ch.isalpha():
            raise ValueError(f"bad column letters {letters!r}")
        n = n * 26 + (ord(ch.upper()) - ord("A") + 1)
    return n


def quote_sheet_name(name: str) -> str:
    if _PLAIN_SHEET_RE.match(name):
        return name
    return "'" + name.replace("'", "''") + "'"


@dataclass(frozen=True, order=True)
class CellAddress:
    row: int
    column: int
    sheet: str | None = None
    col_absolute: bool = False
    row_absolute: bool = False
    style: str = A1

    def __post_init__(self) -> None:
        if self.column < 1 or self.row < 1:
            raise AddressError(
                f"row and column must be >= 1, got row={self.row} column={self.column}"
            )
        if self.style not in (A1, R1C1):
            raise AddressError(f"unknown reference style {self.style!r}")

    def render(self) -> str:
        if self.style == R1C1:
            body = f"R{self.row}C{self.column}"
        else:
            body = "{}{}{}{}".format(
                "$" if self.col_absolute else "",
                column_to_letters(self.column),
                "$" if self.row_absolute else "",
                self.row,
            )
        if self.sheet is None:
            return body
        return f"{quote_sheet_name(self.sheet)}!{body}"

    def absolute(self) -> "CellAddress":
        if self.style == R1C1:
            return self
        if self.col_absolute and self.row_absolute:
            return self
        return CellAddress(
            row=self.row,
            column=self.column,
            sheet=self.sheet,
            col_absolute=True,
            row_absolute=True,
            style=self.style,
        )

    def coords(self) -> tuple[int, int]:
        return (self.row, self.column)


def parse_address(text: str, sheet: str | None = None) -> CellAddress:
    """Parse a bare A1 or absolute R1C1 address (no sheet prefix)."""
    m = _R1C1_RE.match(text)
    if m:
        return CellAddress(
            row=int(m.group(1)), column=int(m.group(2)), sheet=sheet, style=R1C1
        )
    m = _A1_RE.match(text)
    if m:
        return CellAddress(
            row=int(m.group(4)),
            column=letters_to_column(m.group(2)),
            sheet=sheet,
            col_absolute=m.group(1) == "$",
            row_absolute=m.group(3) == "$",
        )
    raise AddressError(f"cannot parse cell address {text!r}")
