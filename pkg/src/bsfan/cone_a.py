"""The one-variable side: partial Euler characteristics and decomposition.

Over the one-variable graded ring every table in the cone of generically
exact complexes splits into two-term torsion blocks {(p, a): 1, (p+1, b): 1}
and, where the constraint allows rank, single free blocks {(p, a): 1}.  The
functionals chi_{i,j} cut the cone out: chi weights column i up to degree j,
column i+1 up to degree j+1 with opposite sign, and every further column by
its full alternating column sum.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotInCone, ValidationError
from .sequences import EMPTY, DegreeSequence
from .tables import BettiTable, linear_combine


def chi(table, i, j):
    """Partial Euler characteristic anchored at column i, degree j."""
    total = Fraction(0)
    for (col, deg), value in table.items():
        if col == i:
            if deg <= j:
                total += value
        elif col == i + 1:
            if deg <= j + 1:
                total -= value
        elif col >= i + 2:
            total += value if (col - i) % 2 == 0 else -value
    return total


def euler(table):
    """Alternating sum of all entries."""
    return sum(((-1) ** i * v for (i, _), v in table.items()), Fraction(0))


def _margins():
    # The checked window: columns above the support only ever see empty
    # partial sums, columns more than two below only the alternating full
    # column sums (two parities), and the degree cutoffs saturate one step
    # outside the degree support, so values outside repeat values inside.
    # BSFAN_DEBUG_WIDEN=1 doubles the margins for stabilization self-checks.
    if os.environ.get("BSFAN_DEBUG_WIDEN") == "1":
        return 6, 2, 4, 2
    return 3, 0, 2, 1


def chi_window(table):
    """Ranges (columns, degrees) that capture every distinct chi value."""
    if not table:
        return range(0), range(0)
    left_i, right_i, left_j, right_j = _margins()
    cols = [i for i, _ in table.support()]
    degs = [j for _, j in table.support()]
    return (
        range(min(cols) - left_i, max(cols) + right_i + 1),
        range(min(degs) - left_j, max(degs) + right_j + 1),
    )


@dataclass(frozen=True)
class APiece:
    """Free block at (position, degree a) or torsion block generated in
    degree a with socle relation in degree b > a."""

    kind: str
    position: int
    gen_degree: int
    socle_degree: int = None

    def __post_init__(self):
        if self.kind not in ("free", "torsion"):
            raise ValidationError(f"unknown piece kind {self.kind!r}")
        if self.kind == "torsion" and self.socle_degree <= self.gen_degree:
            raise ValidationError(
                f"torsion piece needs socle degree > {self.gen_degree}, "
                f"got {self.socle_degree}"
            )

    def table(self):
        if self.kind == "free":
            return BettiTable({(self.position, self.gen_degree): 1})
        return BettiTable({
            (self.position, self.gen_degree): 1,
            (self.position + 1, self.socle_degree): 1,
        })

    def degree_sequence(self):
        if self.kind == "free":
            return DegreeSequence(self.position, (self.gen_degree,))
        return DegreeSequence(self.position, (self.gen_degree, self.socle_degree))

    def to_obj(self):
        obj = {"kind": self.kind, "position": self.position,
               "gen_degree": self.gen_degree}
        if self.kind == "torsion":
            obj["socle_degree"] = self.socle_degree
        return obj


@dataclass
class Violation:
    kind: str
    i: int = None
    j: int = None
    value: Fraction = None

    def to_obj(self):
        obj = {"kind": self.kind}
        if self.i is not None:
            obj["i"] = self.i
        if self.j is not None:
            obj["j"] = self.j
        if self.value is not None:
            obj["value"] = str(self.value)
        return obj


@dataclass
class AVerdict:
    ok: bool
    violations: list = field(default_factory=list)

    def to_obj(self):
        if self.ok:
            return {"status": "pass"}
        return {"status": "fail",
                "violations": [v.to_obj() for v in self.violations]}


def _check_shape(c):
    if c.n != 0:
        raise ValidationError(
            f"membership over the one-variable ring needs n = 0, got n = {c.n}"
        )


def membership_a(table, c):
    """Half-space test for the cone constrained by c.

    Collects every violated condition: entries in forbidden columns,
    negative entries, a negative chi over the stabilized window where the
    constraint is at least 1, and a nonzero total Euler characteristic when
    no column admits free homology.
    """
    _check_shape(c)
    violations = []
    for (i, j), value in table.items():
        if c.value(i) == EMPTY:
            violations.append(Violation("support_empty", i, j, value))
    for (i, j) in table.negative_entries():
        violations.append(Violation("negative_entry", i, j, table[(i, j)]))
    cols, degs = chi_window(table)
    for i in cols:
        if c.rank(i) < 1:
            continue
        for j in degs:
            value = chi(table, i, j)
            if value < 0:
                violations.append(Violation("chi_negative", i, j, value))
    if not c.occurs(0):
        total = euler(table)
        if total != 0:
            violations.append(Violation("euler_nonzero", value=total))
    return AVerdict(not violations, violations)


def decompose_a(table, c):
    """Greedy split into free and torsion blocks with positive coefficients.

    Repeatedly takes the lowest-degree entry of the rightmost column; where
    the constraint forces torsion it is matched with the lowest-degree entry
    one column to the left, and the maximal multiple of the block is
    subtracted (one whole entry is cleared per step, so the number of steps
    is at most the number of nonzero entries).
    """
    _check_shape(c)
    pieces = []
    current = table
    budget = len(table)
    for _ in range(budget + 1):
        if not current:
            return pieces
        if not current.is_nonnegative():
            entry = current.negative_entries()[0]
            raise NotInCone(f"negative entry at {entry}", pieces,
                            blocking_entry=entry)
        s = current.columns()[-1]
        t = current.column_degrees(s)[0]
        if c.value(s) == EMPTY:
            raise NotInCone(f"entry at ({s}, {t}) in a forbidden column",
                            pieces, blocking_entry=(s, t))
        if c.value(s) == 0:
            piece = APiece("free", s, t)
            coeff = current[(s, t)]
        else:
            left = current.column_degrees(s - 1)
            if not left or left[0] >= t:
                raise NotInCone(
                    f"no generator below degree {t} to pair with ({s}, {t})",
                    pieces, blocking_entry=(s, t))
            r = left[0]
            piece = APiece("torsion", s - 1, r, t)
            coeff = min(current[(s - 1, r)], current[(s, t)])
        pieces.append((coeff, piece))
        current = linear_combine([(1, current), (-coeff, piece.table())])
    raise AssertionError("decomposition exceeded its step budget")
