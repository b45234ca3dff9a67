"""Shared test data and independent oracles.

The golden tables here are small worked examples: a length-3 complex over
two variables, a tensor product of two monomial resolutions, a monomial
quotient resolution, a two-strand table whose homology cannot have finite
length, a four-term monad for an ideal sheaf, and the truncation of an
infinite resolution over a union of two planes.
"""

import random
from fractions import Fraction
from math import comb

from bsfan import BettiTable, DegreeSequence, linear_combine, pure_diagram


def T(entries):
    return BettiTable(entries)


def F(*args):
    return Fraction(*args)


INTRO_TABLE = T({(0, 0): 1, (1, 1): 2, (2, 3): 2, (3, 4): 1})

TENSOR_TABLE = T({(0, 0): 1, (1, 2): 5, (2, 3): 4, (3, 4): 1,
                  (2, 4): 4, (3, 5): 4, (4, 6): 1})

MONOMIAL_RES_TABLE = T({(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1})

TWO_STRAND_TABLE = T({(0, 0): 1, (1, 3): 4, (1, 4): 4,
                      (2, 4): 4, (2, 5): 4, (3, 8): 1})

MONAD_TABLE = T({(-2, 1): 2, (-1, 2): 11, (0, 3): 20, (1, 4): 10})

TRUNCATION_TABLE = T({(0, 0): 1, (1, 2): 6, (2, 3): 16, (3, 4): 38, (4, 5): 92})


def rng(seed):
    return random.Random(seed)


def koszul_table(n):
    """Betti table of the full exterior-power complex on n + 1 variables."""
    return BettiTable({(i, i): comb(n + 1, i) for i in range(n + 2)})


def random_fraction(r, lo=-9, hi=9, max_den=9, nonneg=False):
    return Fraction(r.randint(0 if nonneg else lo, hi), r.randint(1, max_den))


def random_table(r, max_entries=8, nonneg=True, cols=(-3, 4), degs=(-6, 7)):
    entries = {}
    for _ in range(r.randint(0, max_entries)):
        value = random_fraction(r, nonneg=nonneg)
        if value:
            entries[(r.randint(*cols), r.randint(*degs))] = value
    return BettiTable(entries)


def random_degree_sequence(r, codim=None, max_codim=3, starts=(-3, 3),
                           deg_lo=-6, deg_hi=8):
    ell = codim if codim is not None else r.randint(0, max_codim)
    degrees = sorted(r.sample(range(deg_lo, deg_hi + 1), ell + 1))
    return DegreeSequence(r.randint(*starts), tuple(degrees))


def random_roots(r, s, lo=-8, hi=8):
    return tuple(sorted(r.sample(range(lo, hi + 1), s), reverse=True))


def random_chain(r, k, length, starts=(-2, 2), deg_lo=-5, deg_hi=6):
    """Strictly increasing chain of codimension-k degree sequences.

    Two upward moves preserve codimension: raising a single entry by one
    (where strict increase allows), and shifting the window left (drop the
    top entry, prepend a strictly smaller bottom one).
    """
    chain = [random_degree_sequence(r, codim=k, starts=starts,
                                    deg_lo=deg_lo, deg_hi=deg_hi)]
    while len(chain) < length:
        d = chain[-1]
        degrees = list(d.degrees)
        moves = [("raise", idx) for idx in range(len(degrees))
                 if idx + 1 == len(degrees) or degrees[idx] + 1 < degrees[idx + 1]]
        moves.append(("shift", None))
        kind, idx = r.choice(moves)
        if kind == "raise":
            degrees[idx] += 1
            chain.append(DegreeSequence(d.start, tuple(degrees)))
        else:
            low = degrees[0] - r.randint(1, 3)
            chain.append(DegreeSequence(d.start - 1, (low,) + tuple(degrees[:-1])))
    return chain


def chain_combination(chain, coeffs):
    return linear_combine(
        [(c, pure_diagram(d)) for c, d in zip(coeffs, chain)])


def solve_chain_coefficients(table, chain):
    """Exact linear-algebra oracle for the decomposition coefficients.

    Solves sum_i x_i * pure_diagram(chain[i]) == table by Gaussian
    elimination over the rationals, working right to left through the
    piece columns; raises if the system is underdetermined or inconsistent.
    Deliberately shares nothing with the greedy subtraction path.
    """
    diagrams = [pure_diagram(d) for d in chain]
    keys = set(table.support())
    for diagram in diagrams:
        keys.update(diagram.support())
    keys = sorted(keys)
    m = len(chain)
    rows = [[diagram[k] for diagram in diagrams] + [table[k]] for k in keys]
    pivots = []
    row_idx = 0
    for col in reversed(range(m)):
        pivot = next((r for r in range(row_idx, len(rows)) if rows[r][col]), None)
        if pivot is None:
            raise ValueError(f"no pivot for piece {col}: underdetermined")
        rows[row_idx], rows[pivot] = rows[pivot], rows[row_idx]
        inv = 1 / rows[row_idx][col]
        rows[row_idx] = [v * inv for v in rows[row_idx]]
        for r in range(len(rows)):
            if r != row_idx and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b
                           for a, b in zip(rows[r], rows[row_idx])]
        pivots.append((row_idx, col))
        row_idx += 1
    for r in range(row_idx, len(rows)):
        if rows[r][m] != 0:
            raise ValueError("inconsistent system")
    solution = [None] * m
    for row, col in pivots:
        solution[col] = rows[row][m]
    return solution
