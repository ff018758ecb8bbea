"""Seeded random formula generator for property and acceptance suites."""

from __future__ import annotations

import random
from dataclasses import dataclass

from sheetaudit.addresses import column_to_letters

SHEET_NAMES = ["Data", "Prod 2007", "cp", "Sheet One", "I"]
NAMED_RANGES = ["TaxRate", "UnitCost", "Min.Stock", "opening_balance"]
FUNCTIONS = ["IF", "SUM", "ROUND", "MIN", "MAX", "AVERAGE", "LOG10", "ABS", "AND", "OR"]
OPERATORS = ["+", "-", "*", "/", "^", "&", "<", ">", "<=", ">=", "<>"]
ARITH_OPERATORS = ["+", "-", "*", "/", "^", "<", ">"]
STRING_POOL = ["Q4 2007", "x12", "total", "7.5% VAT", 'say ""hi""', "2008"]


@dataclass
class GenProfile:
    ref_style: str = "A1"
    strings: bool = True
    sheets: bool = True
    names: bool = True
    functions: bool = True
    arrays: bool = True
    scientific: bool = True
    percent: bool = True
    booleans: bool = True
    numbers: bool = True
    refs: bool = True


FULL_A1 = GenProfile()
FULL_R1C1 = GenProfile(ref_style="R1C1")
# refs/operators/numbers only, no scientific/percent: the shared
# vocabulary of the lexer and the digit-run oracle
ORACLE_A1 = GenProfile(
    strings=False,
    sheets=False,
    names=False,
    functions=False,
    arrays=False,
    scientific=False,
    percent=False,
    booleans=False,
)
ORACLE_R1C1 = GenProfile(
    ref_style="R1C1",
    strings=False,
    sheets=False,
    names=False,
    functions=False,
    arrays=False,
    scientific=False,
    percent=False,
    booleans=False,
)
REFS_ONLY_A1 = GenProfile(
    strings=False,
    sheets=False,
    names=False,
    functions=False,
    arrays=False,
    scientific=False,
    percent=False,
    booleans=False,
    numbers=False,
)
REFS_ONLY_R1C1 = GenProfile(
    ref_style="R1C1",
    strings=False,
    sheets=False,
    names=False,
    functions=False,
    arrays=False,
    scientific=False,
    percent=False,
    booleans=False,
    numbers=False,
)
# digits live only inside string literals and quoted sheet names
STRING_ONLY_A1 = GenProfile(
    arrays=False,
    scientific=False,
    percent=False,
    numbers=False,
    refs=False,
)


class FormulaGen:
    def __init__(self, seed: int, profile: GenProfile = FULL_A1):
        self.rng = random.Random(seed)
        self.profile = profile

    def formula(self) -> str:
        return "=" + self.expr(depth=0)

    def corpus(self, count: int) -> list[str]:
        return [self.formula() for _ in range(count)]

    # --- grammar pieces ------------------------------------------------

    def expr(self, depth: int) -> str:
        rng = self.rng
        if depth >= 3:
            return self.atom(depth)
        roll = rng.random()
        if roll < 0.40:
            return self.atom(depth)
        if roll < 0.75:
            op = rng.choice(OPERATORS if self.profile.strings else ARITH_OPERATORS)
            pad = rng.choice(["", " "])
            return f"{self.expr(depth + 1)}{pad}{op}{pad}{self.expr(depth + 1)}"
        if roll < 0.85:
            return f"({self.expr(depth + 1)})"
        if roll < 0.92:
            return "-" + self.atom(depth)
        if self.profile.functions:
            return self.call(depth)
        return f"({self.expr(depth + 1)})"

    def call(self, depth: int) -> str:
        rng = self.rng
        name = rng.choice(FUNCTIONS)
        args = [self.expr(depth + 1) for _ in range(rng.randint(1, 3))]
        sep = rng.choice([", ", ","])
        return f"{name}({sep.join(args)})"

    def atom(self, depth: int) -> str:
        rng = self.rng
        choices = []
        p = self.profile
        if p.numbers:
            choices += [self.number, self.number]
        if p.refs:
            choices += [self.ref, self.ref, self.range_ref]
        if p.strings:
            choices.append(self.string)
        if p.sheets:
            choices.append(self.sheet_ref)
        if p.names:
            choices.append(self.named_range)
        if p.booleans:
            choices.append(self.boolean)
        if p.arrays:
            choices.append(self.array)
        if not choices:
            choices = [self.string]
        return rng.choice(choices)()

    def number(self) -> str:
        rng = self.rng
        roll = rng.random()
        if roll < 0.5:
            text = str(rng.choice([0, 1, 2, 12, 100, 200, 236, 1000, 9732311]))
        elif roll < 0.8:
            text = f"{rng.randint(0, 99)}.{rng.randint(0, 999)}"
        elif self.profile.scientific and roll < 0.9:
            text = f"{rng.randint(1, 9)}{rng.choice(['E', 'e'])}{rng.choice(['+', '-', ''])}{rng.randint(1, 8)}"
        else:
            text = f"0.{rng.randint(1, 99):02d}"
        if self.profile.percent and rng.random() < 0.08:
            text += "%"
        return text

    def ref(self) -> str:
        rng = self.rng
        if self.profile.ref_style == "R1C1":
            return f"R{rng.randint(1, 200)}C{rng.randint(1, 30)}"
        col = column_to_letters(rng.randint(1, 30))
        dollar_c = rng.choice(["", "$"])
        dollar_r = rng.choice(["", "$"])
        return f"{dollar_c}{col}{dollar_r}{rng.randint(1, 500)}"

    def range_ref(self) -> str:
        return f"{self.ref()}:{self.ref()}"

    def string(self) -> str:
        return '"' + self.rng.choice(STRING_POOL) + '"'

    def sheet_ref(self) -> str:
        name = self.rng.choice(SHEET_NAMES)
        if not name.replace("_", "a").isalnum() or name[0].isdigit() or " " in name:
            prefix = f"'{name}'!"
        else:
            prefix = f"{name}!"
        target = self.ref() if self.profile.refs else self.rng.choice(NAMED_RANGES)
        return prefix + target

    def named_range(self) -> str:
        return self.rng.choice(NAMED_RANGES)

    def boolean(self) -> str:
        return self.rng.choice(["TRUE", "FALSE"])

    def array(self) -> str:
        rng = self.rng
        rows = []
        for _ in range(rng.randint(1, 2)):
            rows.append(",".join(self.number() for _ in range(rng.randint(1, 3))))
        return "{" + ";".join(rows) + "}"
