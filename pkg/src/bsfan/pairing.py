"""The table-level pairing and the functionals built on top of it.

The pairing convolves a Betti table with a cohomology table:

    result[i, j] = sum over p - q = i, 0 <= q <= n of  B[p, j] * gamma(q, -j)

Everything downstream (support predicates, separating functionals, cone
checks through the one-variable side) is a composition of this formula with
the chi functionals.
"""

from __future__ import annotations

from fractions import Fraction

from . import cone_a
from .diagrams import SupernaturalEvaluator, SupernaturalSheaf, root_at
from .errors import EvaluatorRangeError
from .sequences import CodimensionSequence
from .tables import BettiTable


def pair(table, evaluator):
    """Betti table of the paired complex.

    The cohomology index is clamped to [0, q_upper]: nothing lives above the
    ambient dimension.  Window evaluators are pre-checked so a single range
    error lists every missing (q, j) query instead of failing one at a time.
    """
    needed = sorted({-j for _, j in table.support()})
    missing = evaluator.missing_degrees(needed)
    if missing:
        qs = range(evaluator.q_upper() + 1)
        raise EvaluatorRangeError([(q, j) for j in missing for q in qs])
    acc = {}
    for (p, j), value in table.items():
        for q in range(evaluator.q_upper() + 1):
            gamma = evaluator.gamma(q, -j)
            if gamma:
                key = (p - q, j)
                acc[key] = acc.get(key, Fraction(0)) + value * gamma
    return BettiTable(acc)


def pure_pair_support(d, roots, i, j):
    """Whether the pure diagram of d pairs with the supernatural class of
    the given roots to a nonzero entry at (i, j).

    True exactly when some run position l0 has degree j and the twist -j
    lands strictly between roots number l0 - i and l0 - i + 1 (with the
    usual infinite conventions at both ends).
    """
    for pos in d.positions():
        if d.at(pos) == j:
            m = pos - i
            return root_at(roots, m) > -j > root_at(roots, m + 1)
    return False


def es_functional(table, roots, rank_scale, n, tau, kappa):
    """Separating functional: chi_{0, nu} of the pairing against the
    supernatural class of the given roots.

    The anchor degree is nu = min(max(kappa, -f_tau - 1), -f_{tau+1} - 1);
    for tau = s the second bound is +inf and drops out.
    """
    s = len(roots)
    if not 1 <= tau <= s:
        raise ValueError(f"tau must be in 1..{s}, got {tau}")
    nu = max(kappa, -roots[tau - 1] - 1)
    if tau < s:
        nu = min(nu, -roots[tau] - 1)
    sheaf = SupernaturalSheaf(tuple(roots), Fraction(rank_scale), n)
    return cone_a.chi(pair(table, SupernaturalEvaluator(sheaf)), 0, nu)


def pair_check(table, evaluators, n):
    """Pair against each evaluator and test membership in the generically
    exact cone on the one-variable side (constant constraint 1).

    Verdicts come back in input order; a failure carries the violated
    functional and its negative value.
    """
    for ev in evaluators:
        if isinstance(ev, SupernaturalEvaluator) and ev.sheaf.n != n:
            raise ValueError(
                f"evaluator ambient {ev.sheaf.n} does not match n = {n}")
    all_one = CodimensionSequence.constant(1, 0)
    return [cone_a.membership_a(pair(table, ev), all_one) for ev in evaluators]
