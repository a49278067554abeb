"""Parser for table specification files (grammar in docs/spec-format.md)."""

import os
from dataclasses import dataclass

from .bounds import RowDegreeDistribution
from .enumerators import ConstituentSpec, WeightEnumerator
from .errors import DomainError
from .gf import is_prime_power

#: column name -> constant-weight bound used for the inversion (None: GV)
COLUMNS = {
    "gv": None,
    "ldpc_upper_zero": "zero",
    "ldpc_upper_cw_gv": "cw-gv",
    "ldpc_upper_composite": "composite",
    "ldpc_upper_zero_floor": "zero-floor",
}
FORMATS = ("csv", "markdown")


class SpecParseError(DomainError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Cell:
    label: str
    q: int
    code: str
    rate: float


@dataclass(frozen=True)
class TableSpec:
    title: str
    columns: tuple
    format: str
    cells: tuple
    base_dir: str = "."


def parse_code(text, q, base_dir="."):
    """Turn ``spc:<n0>``, ``rho:<i:frac,...>`` or ``file:<path>`` into a code description."""
    kind, _, arg = text.partition(":")
    if kind == "spc":
        try:
            n0 = int(arg)
        except ValueError:
            raise DomainError(f"bad constituent length in {text!r}") from None
        return ConstituentSpec.spc(q, n0)
    if kind == "rho":
        return RowDegreeDistribution.parse(arg)
    if kind == "file":
        path = arg if os.path.isabs(arg) else os.path.join(base_dir, arg)
        try:
            with open(path) as fh:
                enum, file_q, _ = WeightEnumerator.loads(fh.read())
        except OSError as exc:
            raise DomainError(f"cannot read enumerator file {path!r}: {exc.strerror}") from None
        if file_q != q:
            raise DomainError(f"enumerator file is over GF({file_q}), not GF({q})")
        return ConstituentSpec(q, enum, label=text)
    raise DomainError(f"unknown code description {text!r}; expected spc:<n0>, rho:<i:frac,...> or file:<path>")


def parse_table_spec(text, base_dir="."):
    title, columns, fmt = "", ("gv", "ldpc_upper_zero", "ldpc_upper_composite"), "csv"
    cells = []
    in_cells = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "[cells]":
            if in_cells:
                raise SpecParseError(lineno, "duplicate [cells] section")
            in_cells = True
            continue
        if not in_cells:
            key, sep, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if not sep:
                raise SpecParseError(lineno, f"expected key = value, got {line!r}")
            if key == "title":
                title = value
            elif key == "columns":
                columns = tuple(c.strip() for c in value.split(",") if c.strip())
                bad = [c for c in columns if c not in COLUMNS]
                if bad or not columns:
                    raise SpecParseError(lineno, f"unknown column(s) {bad}; choose from {list(COLUMNS)}")
            elif key == "format":
                if value not in FORMATS:
                    raise SpecParseError(lineno, f"format must be one of {FORMATS}")
                fmt = value
            else:
                raise SpecParseError(lineno, f"unknown key {key!r}")
            continue
        parts = line.split()
        if len(parts) != 4:
            raise SpecParseError(lineno, "cell needs four fields: <label> <q> <code> <rate>")
        label, q, code, rate = parts
        try:
            q, rate = int(q), float(rate)
        except ValueError:
            raise SpecParseError(lineno, "q must be an integer and rate a number") from None
        if not is_prime_power(q):
            raise SpecParseError(lineno, f"q={q} is not a prime power")
        if not 0 < rate < 1:
            raise SpecParseError(lineno, f"rate {rate} outside (0, 1)")
        try:
            parse_code(code, q, base_dir)
        except DomainError as exc:
            raise SpecParseError(lineno, str(exc)) from None
        cells.append(Cell(label, q, code, rate))
    return TableSpec(title, columns, fmt, tuple(cells), base_dir)


def load_table_spec(path):
    with open(path) as fh:
        return parse_table_spec(fh.read(), os.path.dirname(os.path.abspath(path)))
