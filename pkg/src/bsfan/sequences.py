"""Degree sequences, codimension sequences, and their compatibility.

A degree sequence is a strictly increasing run of integers sitting at
consecutive homological positions, implicitly padded with -inf on the left
and +inf on the right.  A codimension sequence is a nondecreasing doubly
infinite sequence over {empty} | {0..n+1} | {inf} (ordered empty < 0 < ...
< n+1 < inf) with a finite explicit window; it constrains how large the
homology of a complex must be in each homological position.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import ParseError, ValidationError

NEG_INF = -math.inf
POS_INF = math.inf

EMPTY = "empty"
INF = "inf"

_EMPTY_RANK = -1.0


def value_rank(value):
    """Numeric key realizing the order empty < 0 < 1 < ... < inf."""
    if value == EMPTY:
        return _EMPTY_RANK
    if value == INF:
        return POS_INF
    return float(value)


class Comparison(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class DegreeSequence:
    """Finite strictly increasing run d_start < ... < d_{start+codim}."""

    start: int
    degrees: tuple

    def __post_init__(self):
        degrees = tuple(int(d) for d in self.degrees)
        if not degrees:
            raise ValidationError("degree sequence needs at least one finite entry")
        for a, b in zip(degrees, degrees[1:]):
            if a >= b:
                raise ValidationError(f"degrees must strictly increase: {a} !< {b}")
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "start", int(self.start))

    @property
    def codim(self):
        return len(self.degrees) - 1

    @property
    def end(self):
        return self.start + self.codim

    def at(self, i):
        """Degree at position i, with -inf / +inf padding outside the run."""
        if i < self.start:
            return NEG_INF
        if i > self.end:
            return POS_INF
        return self.degrees[i - self.start]

    def positions(self):
        return range(self.start, self.end + 1)

    def trimmed(self, k):
        """Subrun starting at position k (k within the run)."""
        if not self.start <= k <= self.end:
            raise ValidationError(f"trim position {k} outside run {self}")
        return DegreeSequence(k, self.degrees[k - self.start:])

    def dual(self):
        """Positions and degrees negated; matches dualizing the pure diagram."""
        return DegreeSequence(-self.end, tuple(-d for d in reversed(self.degrees)))

    def __str__(self):
        return f"({','.join(map(str, self.degrees))})@{self.start}"

    def to_obj(self):
        return {"start": self.start, "degrees": list(self.degrees)}

    @classmethod
    def from_obj(cls, obj):
        try:
            return cls(int(obj["start"]), tuple(obj["degrees"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad degree sequence JSON: {obj!r}") from exc


def compare_degree_sequences(d1, d2):
    """Termwise comparison over all positions, with infinite padding."""
    lo = min(d1.start, d2.start)
    hi = max(d1.end, d2.end)
    le = all(d1.at(i) <= d2.at(i) for i in range(lo, hi + 1))
    ge = all(d1.at(i) >= d2.at(i) for i in range(lo, hi + 1))
    if le and ge:
        return Comparison.EQUAL
    if le:
        return Comparison.LESS
    if ge:
        return Comparison.GREATER
    return Comparison.INCOMPARABLE


def _check_value(value, n, where):
    if value in (EMPTY, INF):
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{where}: bad codimension value {value!r}")
    if not 0 <= value <= n + 1:
        raise ValidationError(
            f"{where}: value {value} outside 0..{n + 1} and not inf"
        )
    return value


@dataclass(frozen=True)
class CodimensionSequence:
    """Nondecreasing doubly infinite sequence with a finite window.

    Positions below window_start take the left fill, positions past the
    window take the right fill.
    """

    n: int
    left: object
    window_start: int
    window: tuple
    right: object

    def __post_init__(self):
        n = int(self.n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "window_start", int(self.window_start))
        left = _check_value(self.left, n, "left fill")
        right = _check_value(self.right, n, "right fill")
        window = tuple(
            _check_value(v, n, f"position {self.window_start + idx}")
            for idx, v in enumerate(self.window)
        )
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "window", window)
        run = [(f"position {self.window_start + idx}", v)
               for idx, v in enumerate(window)]
        run = [("left fill", left)] + run + [("right fill", right)]
        for (wa, a), (wb, b) in zip(run, run[1:]):
            if value_rank(a) > value_rank(b):
                raise ValidationError(
                    f"codimension sequence decreases from {wa} ({a}) to {wb} ({b})"
                )

    def value(self, i):
        if i < self.window_start:
            return self.left
        if i >= self.window_start + len(self.window):
            return self.right
        return self.window[i - self.window_start]

    def rank(self, i):
        return value_rank(self.value(i))

    def occurs(self, value):
        """Whether some position of the full infinite sequence has this value."""
        return value == self.left or value == self.right or value in self.window

    @classmethod
    def constant(cls, k, n):
        return cls(n, k, 0, (), k)

    def __str__(self):
        body = ",".join(str(v) for v in self.window)
        return f"({self.left},...[{self.window_start}: {body}]...,{self.right}; n={self.n})"

    def to_obj(self):
        return {
            "n": self.n,
            "left": self.left,
            "window_start": self.window_start,
            "window": list(self.window),
            "right": self.right,
        }

    @classmethod
    def from_obj(cls, obj):
        try:
            return cls(
                obj["n"],
                obj["left"],
                obj.get("window_start", 0),
                tuple(obj.get("window", ())),
                obj["right"],
            )
        except KeyError as exc:
            raise ParseError(f"codimension sequence JSON missing {exc}") from exc


def validate_codim_sequence(raw):
    """Normalize a raw description (decoded JSON or instance) into a sequence."""
    if isinstance(raw, CodimensionSequence):
        return raw
    if not isinstance(raw, dict):
        raise ParseError(f"bad codimension sequence description: {raw!r}")
    return CodimensionSequence.from_obj(raw)


def is_compatible(d, c):
    """Whether the degree sequence can index a piece under the constraint c.

    Requires c_k <= codim <= c_{k+1} at the left end of the run, a codimension
    that a pure resolution can realize (codim <= n+1), and no empty-column
    constraint inside the run's support.
    """
    ell = d.codim
    if ell > c.n + 1:
        return False
    if not c.rank(d.start) <= ell <= c.rank(d.start + 1):
        return False
    return all(c.value(i) != EMPTY for i in d.positions())
