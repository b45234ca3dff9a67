"""Multigraded tables, total orders, chi functionals, and the pairing on
products of projective spaces.

Gradings live in Z^m in coordinates where the effective cone is the
standard orthant.  A GradedOrder (positive weights, lexicographic
tiebreak) totally orders the grading group while refining orthant
dominance; the multigraded chi functionals anchor at a column and a grade
exactly like the single-graded ones, with strict comparison in the anchored
column and non-strict one column up.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction

from .diagrams import twist_evaluator
from .errors import ParseError, ValidationError
from .sequences import Comparison
from .tables import parse_rational


@dataclass(frozen=True)
class GradedOrder:
    """Total order on Z^m: weighted sum first, lexicographic on ties."""

    weights: tuple

    def __post_init__(self):
        weights = tuple(int(w) for w in self.weights)
        if not weights:
            raise ValidationError("order needs at least one weight")
        bad = [w for w in weights if w <= 0]
        if bad:
            raise ValidationError(
                f"weights must be positive to refine the effective-cone "
                f"order; got {bad[0]}")
        object.__setattr__(self, "weights", weights)

    def key(self, alpha):
        if len(alpha) != len(self.weights):
            raise ValidationError(
                f"grade {tuple(alpha)} has rank {len(alpha)}, "
                f"order expects {len(self.weights)}")
        return (sum(w * a for w, a in zip(self.weights, alpha)), tuple(alpha))

    def lt(self, alpha, beta):
        return self.key(alpha) < self.key(beta)

    def le(self, alpha, beta):
        return self.key(alpha) <= self.key(beta)

    def to_obj(self):
        return {"weights": list(self.weights)}

    @classmethod
    def from_obj(cls, obj):
        try:
            return cls(tuple(obj["weights"]))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad order JSON: {obj!r}") from exc


def order_compare(order, alpha, beta):
    ka, kb = order.key(alpha), order.key(beta)
    if ka == kb:
        return Comparison.EQUAL
    return Comparison.LESS if ka < kb else Comparison.GREATER


class MultiBettiTable:
    """Finite map (column i, grade alpha in Z^m) -> Fraction."""

    __slots__ = ("m", "_entries")

    def __init__(self, m, entries=None, *, require_nonnegative=False):
        self.m = int(m)
        cleaned = {}
        for (i, alpha), value in (entries or {}).items():
            q = value if isinstance(value, Fraction) else Fraction(value)
            if q == 0:
                continue
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != self.m:
                raise ValidationError(
                    f"grade {alpha} has rank {len(alpha)}, expected {self.m}")
            if require_nonnegative and q < 0:
                raise ValidationError(f"negative entry {q} at ({i}, {alpha})")
            cleaned[(int(i), alpha)] = q
        self._entries = cleaned

    def __getitem__(self, key):
        return self._entries.get(key, Fraction(0))

    def __len__(self):
        return len(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def __eq__(self, other):
        return (isinstance(other, MultiBettiTable) and self.m == other.m
                and self._entries == other._entries)

    def __repr__(self):
        body = ", ".join(f"({i},{a}): {v}" for (i, a), v in self.items())
        return f"MultiBettiTable(m={self.m}, {{{body}}})"

    def items(self):
        return [(key, self._entries[key]) for key in sorted(self._entries)]

    def support(self):
        return sorted(self._entries)

    def columns(self):
        return sorted({i for i, _ in self._entries})

    def to_obj(self):
        return {
            "m": self.m,
            "entries": [
                {"i": i, "alpha": list(alpha), "value": str(v)}
                for (i, alpha), v in self.items()
            ],
        }

    @classmethod
    def from_obj(cls, obj):
        if not isinstance(obj, dict) or "m" not in obj or "entries" not in obj:
            raise ParseError('multigraded table JSON needs "m" and "entries"')
        data = {}
        for raw in obj["entries"]:
            try:
                key = (int(raw["i"]), tuple(int(a) for a in raw["alpha"]))
            except (KeyError, TypeError, ValueError) as exc:
                raise ParseError(f"bad multigraded entry {raw!r}") from exc
            if key in data:
                raise ParseError(f"duplicate entry for {key}")
            data[key] = parse_rational(raw["value"], where=f"entry {key}")
        return cls(int(obj["m"]), data, require_nonnegative=True)


def multi_chi(table, i, alpha, order):
    """Partial Euler characteristic at column i anchored at grade alpha.

    Column i counts grades strictly below alpha, column i+1 grades at most
    alpha with opposite sign, and columns past i+1 contribute their full
    alternating column sums (sign +1 at column i+2, matching the
    single-graded normalization so that the functional is invariant under
    homological shift of both arguments).
    """
    alpha = tuple(alpha)
    total = Fraction(0)
    for (col, gamma), value in table.items():
        if col == i:
            if order.lt(gamma, alpha):
                total += value
        elif col == i + 1:
            if order.le(gamma, alpha):
                total -= value
        elif col >= i + 2:
            total += value if (col - i) % 2 == 0 else -value
    return total


def multi_pair(table, evaluator, qmax):
    """Convolution with a multigraded cohomology evaluator:
    result[i, alpha] = sum over p - q = i, 0 <= q <= qmax of
    table[p, alpha] * gamma(q, -alpha)."""
    acc = {}
    for (p, alpha), value in table.items():
        neg = tuple(-a for a in alpha)
        for q in range(qmax + 1):
            gamma = evaluator.gamma(q, neg)
            if gamma:
                key = (p - q, alpha)
                acc[key] = acc.get(key, Fraction(0)) + value * gamma
    return MultiBettiTable(table.m, acc)


@dataclass(frozen=True)
class ProductSpace:
    """Sum of line bundles on a product of projective spaces.

    factor_dims lists the factor dimensions (n_1, ..., n_r); each summand is
    a twist vector with a positive multiplicity.
    """

    factor_dims: tuple
    summands: tuple

    def __post_init__(self):
        dims = tuple(int(n) for n in self.factor_dims)
        if not dims or any(n < 1 for n in dims):
            raise ValidationError(f"factor dimensions must be >= 1: {dims}")
        summands = []
        for twist, mult in self.summands:
            twist = tuple(int(c) for c in twist)
            if len(twist) != len(dims):
                raise ValidationError(
                    f"twist {twist} has rank {len(twist)}, expected {len(dims)}")
            if int(mult) < 1:
                raise ValidationError(f"multiplicity must be >= 1: {mult}")
            summands.append((twist, int(mult)))
        object.__setattr__(self, "factor_dims", dims)
        object.__setattr__(self, "summands", tuple(summands))

    @property
    def rank(self):
        return len(self.factor_dims)

    @property
    def total_dim(self):
        return sum(self.factor_dims)

    def gamma(self, q, alpha):
        return kunneth_gamma(self, q, alpha)

    @classmethod
    def from_obj(cls, obj):
        if not isinstance(obj, dict) or obj.get("kind") != "product":
            raise ParseError(f'expected {{"kind": "product", ...}}: {obj!r}')
        try:
            summands = tuple(
                (tuple(s["twist"]), int(s.get("mult", 1)))
                for s in obj["summands"]
            )
            return cls(tuple(obj["dims"]), summands)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad product evaluator JSON: {exc}") from exc


def kunneth_gamma(space, q, alpha):
    """Cohomology of a sum of line bundles on a product of projective
    spaces: product of factorwise values over all splittings of q."""
    alpha = tuple(alpha)
    if len(alpha) != space.rank:
        raise ValidationError(
            f"grade {alpha} has rank {len(alpha)}, expected {space.rank}")
    factors = [twist_evaluator(n, 0) for n in space.factor_dims]
    total = Fraction(0)
    for twist, mult in space.summands:
        for split in itertools.product(
                *(range(n + 1) for n in space.factor_dims)):
            if sum(split) != q:
                continue
            prod = Fraction(mult)
            for qt, nt, at, ct, ev in zip(
                    split, space.factor_dims, alpha, twist, factors):
                del nt
                prod *= ev.gamma(qt, at + ct)
                if not prod:
                    break
            total += prod
    return total


def _margins():
    if os.environ.get("BSFAN_DEBUG_WIDEN") == "1":
        return 6, 2
    return 3, 1


def multi_chi_window(table):
    """Column range and grade box capturing every distinct chi value.

    Grades are scanned over the support box padded by one generator step per
    coordinate; columns from three below the support (both parities of the
    tail sums) up to the top.
    """
    if not table:
        return range(0), []
    left_i, pad = _margins()
    cols = table.columns()
    coords = list(zip(*(alpha for _, alpha in table.support())))
    box = [range(min(c) - pad, max(c) + pad + 1) for c in coords]
    return (
        range(cols[0] - left_i, cols[-1] + 1),
        [tuple(alpha) for alpha in itertools.product(*box)],
    )
