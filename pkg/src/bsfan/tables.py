"""Exact sparse Betti tables over the rationals.

A table is a finite map (i, j) -> Fraction where i is the homological index
and j the absolute internal degree.  Only nonzero entries are stored.  All
arithmetic is exact; there is no floating point anywhere in this package.

Rendering uses the classical display convention: the cell in column i and
display row r shows the entry of degree j = i + r, zeros print as "-", and
the origin cell may be decorated with a degree-zero marker "°".
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import ParseError, ValidationError

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def parse_rational(text, where="value"):
    """Parse "p" or "p/q" (q positive) into a Fraction; reject anything else."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise ParseError(f"{where}: not a rational of the form p or p/q: {text!r}")
    return Fraction(text.strip())


class BettiTable:
    """Immutable sparse table; an absent key means a zero entry.

    Intermediate arithmetic (monad splitting subtracts tables) may produce
    signed "raw" tables, so negative entries are allowed by default; pass
    require_nonnegative=True for validated input tables.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries=None, *, require_nonnegative=False):
        cleaned = {}
        for (i, j), value in (entries or {}).items():
            q = value if isinstance(value, Fraction) else Fraction(value)
            if q == 0:
                continue
            if require_nonnegative and q < 0:
                raise ValidationError(f"negative entry {q} at ({i}, {j})")
            cleaned[(int(i), int(j))] = q
        self._entries = cleaned

    def __getitem__(self, key):
        return self._entries.get(key, Fraction(0))

    def __iter__(self):
        return iter(sorted(self._entries))

    def __len__(self):
        return len(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self._entries == other._entries

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __repr__(self):
        body = ", ".join(f"({i},{j}): {v}" for (i, j), v in self.items())
        return f"BettiTable({{{body}}})"

    def items(self):
        """Entries as ((i, j), value) pairs in (i, j) order."""
        return [(key, self._entries[key]) for key in sorted(self._entries)]

    def support(self):
        """Sorted list of (i, j) keys with nonzero entries."""
        return sorted(self._entries)

    def columns(self):
        """Sorted homological indices that carry at least one entry."""
        return sorted({i for i, _ in self._entries})

    def column_degrees(self, i):
        """Sorted degrees with a nonzero entry in column i."""
        return sorted(j for (ii, j) in self._entries if ii == i)

    def restrict_columns(self, lo=None, hi=None):
        """Table with only the columns in [lo, hi] kept."""
        keep = {
            (i, j): v for (i, j), v in self._entries.items()
            if (lo is None or i >= lo) and (hi is None or i <= hi)
        }
        return BettiTable(keep)

    def is_nonnegative(self):
        return all(v > 0 for v in self._entries.values())

    def negative_entries(self):
        return sorted(key for key, v in self._entries.items() if v < 0)


def linear_combine(terms):
    """Entrywise sum of coeff * table over (coeff, table) pairs; zeros pruned.

    The result may be signed; callers that need a valid table revalidate.
    """
    acc = {}
    for coeff, table in terms:
        c = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
        if c == 0:
            continue
        for key, value in table.items():
            acc[key] = acc.get(key, Fraction(0)) + c * value
    return BettiTable(acc)


def dual(table):
    """Move the entry at (i, j) to (-i, -j)."""
    return BettiTable({(-i, -j): v for (i, j), v in table.items()})


def shift(table, k):
    """Move the entry at (i, j) to (i + k, j); degrees are unchanged."""
    return BettiTable({(i + k, j): v for (i, j), v in table.items()})


def table_from_obj(obj):
    """Build a validated table from the decoded JSON object."""
    if not isinstance(obj, dict) or "entries" not in obj:
        raise ParseError('table JSON must be an object with an "entries" list')
    entries = obj["entries"]
    if not isinstance(entries, list):
        raise ParseError('"entries" must be a list')
    data = {}
    for raw in entries:
        if not isinstance(raw, dict) or not {"i", "j", "value"} <= set(raw):
            raise ParseError(f"entry must have i, j and value fields: {raw!r}")
        i, j = raw["i"], raw["j"]
        if not isinstance(i, int) or not isinstance(j, int):
            raise ParseError(f"entry ({i!r}, {j!r}): indices must be integers")
        if (i, j) in data:
            raise ParseError(f"duplicate entry for ({i}, {j})")
        data[(i, j)] = parse_rational(raw["value"], where=f"entry ({i}, {j})")
    return BettiTable(data, require_nonnegative=True)


def table_to_obj(table):
    """Canonical JSON object: entries ordered lexicographically by (i, j)."""
    return {
        "entries": [
            {"i": i, "j": j, "value": str(v)} for (i, j), v in table.items()
        ]
    }


def parse_table(text):
    """Parse the serialized JSON table format (see table_from_obj)."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    return table_from_obj(obj)


def serialize_table(table):
    """Serialize canonically; parse_table round-trips this byte for byte."""
    return json.dumps(table_to_obj(table), separators=(",", ":"))


def pretty_render(table, mark_origin=False):
    """Text grid in the display convention.

    Columns are homological indices ascending, display row r holds the
    degree i + r entries, zeros render as "-".  With mark_origin the
    column-0 cell of display row 0 gets a "°" suffix (or of the top row
    when row 0 is outside the grid, which matches how one-row tables of
    complexes centered elsewhere are usually decorated).
    """
    if not table:
        return "(empty table)"
    cols = sorted({i for i, _ in table.support()})
    col_range = list(range(cols[0], cols[-1] + 1))
    rows = sorted({j - i for i, j in table.support()})
    row_range = list(range(rows[0], rows[-1] + 1))

    mark = None
    if mark_origin and 0 in col_range:
        mark = (0 if 0 in row_range else row_range[0], 0)

    def cell(r, c):
        value = table[(c, c + r)]
        text = str(value) if value else "-"
        if mark == (r, c):
            text += "°"
        return text

    grid = {(r, c): cell(r, c) for r in row_range for c in col_range}
    widths = {
        c: max(len(str(c)), max(len(grid[(r, c)]) for r in row_range))
        for c in col_range
    }
    label_width = max(len(f"{r}:") for r in row_range)
    lines = [
        " " * label_width
        + "  "
        + "  ".join(str(c).rjust(widths[c]) for c in col_range)
    ]
    for r in row_range:
        lines.append(
            f"{r}:".rjust(label_width)
            + "  "
            + "  ".join(grid[(r, c)].rjust(widths[c]) for c in col_range)
        )
    return "\n".join(lines)
