"""Extremal-ray data: pure diagrams and exact cohomology evaluators.

Pure diagrams are the Betti tables with one degree per column; their entries
are pinned, up to scale, by the vanishing of alternating power sums, which
forces entry i proportional to prod_{k != i} 1/|d_k - d_i|.  Supernatural
evaluators give the cohomology tables on the dual side: at most one
cohomology index is nonzero per twist, located by the root sequence, with
magnitude given by the Hilbert polynomial |prod (j - f_k)| * r / s!.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import EvaluatorRangeError, ParseError, ValidationError
from .sequences import NEG_INF, POS_INF
from .tables import BettiTable, parse_rational


def pure_diagram(d):
    """Smallest positive integer table supported at (position, degree) of d."""
    degs = d.degrees
    values = []
    for i, di in enumerate(degs):
        prod = 1
        for k, dk in enumerate(degs):
            if k != i:
                prod *= abs(dk - di)
        values.append(Fraction(1, prod))
    scale = math.lcm(*(v.denominator for v in values))
    ints = [int(v * scale) for v in values]
    g = math.gcd(*ints)
    return BettiTable({
        (pos, deg): Fraction(value, g)
        for pos, deg, value in zip(d.positions(), degs, ints)
    })


def root_at(roots, m):
    """Root f_m with the conventions f_0 = +inf and f_{s+1} = -inf."""
    if m <= 0:
        return POS_INF
    if m > len(roots):
        return NEG_INF
    return roots[m - 1]


@dataclass(frozen=True)
class SupernaturalSheaf:
    """Sheaf class with strictly decreasing integer roots f_1 > ... > f_s.

    The number of roots is the dimension s; rank_scale rescales the whole
    cohomology table.  Sheaves with s < n are extensions by zero from a
    linear subspace, so no extra geometric data is needed.
    """

    roots: tuple
    rank_scale: Fraction
    n: int

    def __post_init__(self):
        roots = tuple(int(f) for f in self.roots)
        for a, b in zip(roots, roots[1:]):
            if a <= b:
                raise ValidationError(f"roots must strictly decrease: {a} !> {b}")
        if len(roots) > self.n:
            raise ValidationError(
                f"{len(roots)} roots need ambient dimension >= {len(roots)}, got {self.n}"
            )
        scale = Fraction(self.rank_scale)
        if scale <= 0:
            raise ValidationError(f"rank scale must be positive, got {scale}")
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "rank_scale", scale)
        object.__setattr__(self, "n", int(self.n))

    @property
    def dimension(self):
        return len(self.roots)


def supernatural_gamma(sheaf, q, j):
    """Exact value of the (q, j) cohomology entry of a supernatural sheaf.

    Zero when j is a root; otherwise the unique nonvanishing index q0 is
    located by f_{q0} > j > f_{q0+1} and the value there is
    rank_scale / s! * |prod (j - f_k)|.
    """
    roots = sheaf.roots
    if j in roots:
        return Fraction(0)
    q0 = sum(1 for f in roots if f > j)
    if q != q0:
        return Fraction(0)
    prod = 1
    for f in roots:
        prod *= j - f
    return sheaf.rank_scale * abs(prod) / math.factorial(len(roots))


class CohomologyEvaluator:
    """Exact evaluator gamma(q, j) with a declared dimension."""

    dimension = 0

    def gamma(self, q, j):
        raise NotImplementedError

    def q_upper(self):
        """Largest q worth querying; everything above evaluates to zero."""
        raise NotImplementedError

    def missing_degrees(self, js):
        """Subset of the twists js the evaluator cannot answer."""
        return []


class SupernaturalEvaluator(CohomologyEvaluator):
    def __init__(self, sheaf):
        self.sheaf = sheaf
        self.dimension = sheaf.dimension

    def gamma(self, q, j):
        return supernatural_gamma(self.sheaf, q, j)

    def q_upper(self):
        return self.sheaf.n


class WindowEvaluator(CohomologyEvaluator):
    """Finite explicit cohomology window over a declared twist range.

    Queries outside [jmin, jmax] raise instead of silently returning zero;
    inside the range an absent (q, j) is an honest zero.
    """

    def __init__(self, dimension, jmin, jmax, values):
        if jmin > jmax:
            raise ValidationError(f"empty declared range [{jmin}, {jmax}]")
        self.dimension = int(dimension)
        self.jmin = int(jmin)
        self.jmax = int(jmax)
        self.values = {}
        for (q, j), value in values.items():
            v = Fraction(value)
            if v < 0:
                raise ValidationError(f"negative cohomology value at ({q}, {j})")
            if not jmin <= j <= jmax:
                raise ValidationError(
                    f"entry at twist {j} outside declared range [{jmin}, {jmax}]"
                )
            if v:
                self.values[(int(q), int(j))] = v

    def gamma(self, q, j):
        if not self.jmin <= j <= self.jmax:
            raise EvaluatorRangeError([(q, j)])
        return self.values.get((q, j), Fraction(0))

    def q_upper(self):
        return self.dimension

    def missing_degrees(self, js):
        return sorted(j for j in set(js) if not self.jmin <= j <= self.jmax)


class FormalEvaluator(CohomologyEvaluator):
    """Finite signed combination of evaluators; values may be negative."""

    def __init__(self, terms):
        self.terms = [(Fraction(c), ev) for c, ev in terms]
        self.dimension = max((ev.dimension for _, ev in self.terms), default=0)

    def gamma(self, q, j):
        return sum((c * ev.gamma(q, j) for c, ev in self.terms), Fraction(0))

    def q_upper(self):
        return max((ev.q_upper() for _, ev in self.terms), default=0)

    def missing_degrees(self, js):
        missing = set()
        for _, ev in self.terms:
            missing.update(ev.missing_degrees(js))
        return sorted(missing)


def twist_evaluator(n, a):
    """Evaluator of the twisted structure sheaf O(a) on projective n-space.

    Encoded as the supernatural class with roots -a-1, ..., -a-n and unit
    scale: sections C(n+j+a, n) at the bottom, C(-j-a-1, n) at the top.
    """
    if n < 1:
        raise ValidationError(f"ambient dimension must be >= 1, got {n}")
    roots = tuple(-a - 1 - k for k in range(n))
    return SupernaturalEvaluator(SupernaturalSheaf(roots, Fraction(1), n))


def evaluator_from_obj(obj):
    """Build an evaluator from its decoded JSON description."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError(f'evaluator JSON needs a "kind" field: {obj!r}')
    kind = obj["kind"]
    try:
        if kind == "supernatural":
            sheaf = SupernaturalSheaf(
                tuple(obj["roots"]),
                parse_rational(str(obj["rank_scale"]), "rank_scale")
                if isinstance(obj["rank_scale"], str)
                else Fraction(obj["rank_scale"]),
                int(obj["n"]),
            )
            return SupernaturalEvaluator(sheaf)
        if kind == "twist":
            return twist_evaluator(int(obj["n"]), int(obj["a"]))
        if kind == "window":
            values = {}
            for raw in obj["entries"]:
                key = (int(raw["q"]), int(raw["j"]))
                if key in values:
                    raise ParseError(f"duplicate window entry for {key}")
                values[key] = parse_rational(raw["value"], where=f"entry {key}")
            return WindowEvaluator(int(obj["dim"]), int(obj["jmin"]),
                                   int(obj["jmax"]), values)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad evaluator JSON for kind {kind!r}: {exc}") from exc
    raise ParseError(f"unknown evaluator kind {kind!r}")
