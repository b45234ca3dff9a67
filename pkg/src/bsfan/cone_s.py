"""Greedy chain decomposition of Betti tables and its applications.

The decomposition walks the table from the upper right corner to the lower
left.  Each step reads off the top strand (the minimal degree of the
rightmost column, extended leftward while the next column still has a
strictly smaller degree), trims the strand from the left down to the
minimal subrun the codimension constraint allows, and subtracts the largest
multiple of the corresponding pure diagram that keeps every entry
nonnegative.  Every step clears at least one entry, so the loop terminates
in at most as many steps as there are nonzero entries; when a strand admits
no compatible trim, or nothing can be subtracted, the input is outside the
cone and the stuck strand is the certificate.

Monad splitting runs the decomposition once on the table (free constraint
in nonpositive positions, full codimension above) and once on its dual, and
reassembles the central column; prefixes of infinite resolutions come from
decomposing a dualized truncation and keeping the stable leading pieces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .diagrams import pure_diagram
from .errors import MonadViolation, NotInCone, ValidationError
from .sequences import CodimensionSequence, DegreeSequence, is_compatible
from .tables import BettiTable, dual, linear_combine


@dataclass
class Decomposition:
    """Ordered pieces (coeff, degree sequence) plus what is left over.

    The pieces always satisfy: sum of coeff * pure_diagram(d) + remainder
    equals the decomposed table exactly.  decompose_s leaves an empty
    remainder and a chain increasing along the list; infinite_prefix keeps
    only a stable prefix, so its remainder holds the unresolved tail and its
    chain decreases (the infinite chain has a maximal element, no minimal
    one).
    """

    pieces: list
    remainder: BettiTable = field(default_factory=BettiTable)

    def piece_tables(self):
        return [linear_combine([(c, pure_diagram(d))]) for c, d in self.pieces]

    def total(self):
        terms = [(c, pure_diagram(d)) for c, d in self.pieces]
        terms.append((Fraction(1), self.remainder))
        return linear_combine(terms)

    def to_obj(self):
        from .tables import table_to_obj

        return {
            "pieces": [
                {"coeff": str(c), "degree_sequence": d.to_obj()}
                for c, d in self.pieces
            ],
            "remainder": table_to_obj(self.remainder),
        }


@dataclass
class SVerdict:
    ok: bool
    decomposition: Decomposition = None
    witness: NotInCone = None

    def to_obj(self):
        if self.ok:
            return {"status": "pass", "decomposition": self.decomposition.to_obj()}
        w = self.witness
        obj = {"status": "fail", "message": str(w)}
        obj["partial_pieces"] = [
            {"coeff": str(c), "degree_sequence": d.to_obj()}
            for c, d in w.partial_pieces
        ]
        if w.blocking_strand is not None:
            obj["blocking_strand"] = w.blocking_strand.to_obj()
        if w.blocking_entry is not None:
            obj["blocking_entry"] = list(w.blocking_entry)
        return obj


def _top_strand(table):
    """Degree sequence of the top strand ending at the rightmost column."""
    cols = table.columns()
    m = cols[-1]
    degrees = [table.column_degrees(m)[0]]
    i = m - 1
    while True:
        here = table.column_degrees(i)
        if not here or here[0] >= degrees[0]:
            break
        degrees.insert(0, here[0])
        i -= 1
    return DegreeSequence(i + 1, tuple(degrees))


def _trim_compatible(strand, c):
    """Minimal compatible subrun: trim from the left as far as possible.

    More -inf entries make a smaller degree sequence, and the feasible trim
    amounts form an interval, so the largest compatible start position is
    the minimal compatible piece.  None when no trim is compatible.
    """
    for k in range(strand.end, strand.start - 1, -1):
        candidate = strand.trimmed(k)
        if is_compatible(candidate, c):
            return candidate
    return None


def decompose_s(table, c, n):
    """Greedy chain decomposition of a nonnegative table under constraint c.

    Returns a Decomposition with empty remainder whose degree sequences
    strictly increase along the list; raises NotInCone (with the partial
    chain and the stuck strand) when the table is outside the cone.
    """
    if c.n != n:
        raise ValidationError(
            f"codimension sequence is declared for n = {c.n}, not n = {n}")
    if not table.is_nonnegative():
        raise ValidationError(
            f"decomposition needs a nonnegative table; negative at "
            f"{table.negative_entries()[0]}")
    pieces = []
    current = table
    budget = len(table)
    for _ in range(budget + 1):
        if not current:
            return Decomposition(pieces, BettiTable())
        strand = _top_strand(current)
        d = _trim_compatible(strand, c)
        if d is None:
            raise NotInCone(
                f"strand {strand} admits no compatible trim", pieces,
                blocking_strand=strand)
        diagram = pure_diagram(d)
        coeff = min(current[key] / diagram[key] for key in diagram.support())
        if coeff <= 0:
            raise NotInCone(
                f"nothing subtractable along {d}", pieces, blocking_strand=d)
        pieces.append((coeff, d))
        current = linear_combine([(1, current), (-coeff, diagram)])
        if not current.is_nonnegative():
            entry = current.negative_entries()[0]
            raise NotInCone(
                f"subtraction along {d} drove ({entry[0]}, {entry[1]}) "
                "negative", pieces, blocking_strand=d, blocking_entry=entry)
    raise AssertionError("decomposition exceeded its step budget")


def membership_s(table, c, n):
    """Membership with certificate: the decomposition, or the stuck strand."""
    try:
        return SVerdict(True, decomposition=decompose_s(table, c, n))
    except NotInCone as exc:
        return SVerdict(False, witness=exc)


@dataclass
class MonadSplit:
    """Split of a free monad table into a resolution part, the dual of a
    corank-zero resolution part, and the central free column.

    lambda1 * table_f1 + dual(lambda2 * table_f2) reconstructs the input;
    e_column is supported in column 0 with entry sum equal to the
    alternating sum of the input (the rank of the monad's homology sheaf).
    front_pieces and back_pieces are the positive-codimension pieces the two
    decomposition runs produced (the back ones in the dualized orientation).
    """

    lambda1: Fraction
    table_f1: BettiTable
    lambda2: Fraction
    table_f2: BettiTable
    e_column: BettiTable
    front_pieces: list
    back_pieces: list

    def to_obj(self):
        from .tables import table_to_obj

        def piece_list(pieces):
            return [{"coeff": str(c), "degree_sequence": d.to_obj()}
                    for c, d in pieces]

        return {
            "lambda1": str(self.lambda1),
            "table_f1": table_to_obj(self.table_f1),
            "lambda2": str(self.lambda2),
            "table_f2": table_to_obj(self.table_f2),
            "e_column": table_to_obj(self.e_column),
            "front_pieces": piece_list(self.front_pieces),
            "back_pieces": piece_list(self.back_pieces),
        }


def _monad_constraint(n):
    # Free homology allowed in nonpositive positions, full codimension above.
    return CodimensionSequence(n, 0, 1, (), n + 1)


def _positive_codim_prefix(pieces):
    out = []
    for coeff, d in pieces:
        if d.codim == 0:
            break
        out.append((coeff, d))
    return out


def monad_split(table, n):
    """Split a free monad table as resolution + dual resolution + free part.

    Decomposes the table and its dual against the monad constraint, sums the
    positive-codimension prefix of each run (D' and D''), and forms
    E = table - D' - dual(D'').  E must be a nonnegative column-0 table;
    anything else means the input is outside the monad cone.
    """
    if not table.is_nonnegative():
        raise ValidationError("monad splitting needs a nonnegative table")
    constraint = _monad_constraint(n)
    front = _positive_codim_prefix(decompose_s(table, constraint, n).pieces)
    back = _positive_codim_prefix(
        decompose_s(dual(table), constraint, n).pieces)
    d_front = linear_combine([(c, pure_diagram(d)) for c, d in front])
    d_back = linear_combine([(c, pure_diagram(d)) for c, d in back])
    e_column = linear_combine(
        [(1, table), (-1, d_front), (-1, dual(d_back))])
    bad = e_column.negative_entries()
    if bad:
        raise MonadViolation(
            f"central column would be negative at {bad[0]}", e_column)
    off = [key for key in e_column.support() if key[0] != 0]
    if off:
        raise MonadViolation(
            f"central part has support outside column 0 at {off[0]}", e_column)
    table_f1 = linear_combine([(1, d_front), (1, e_column)])
    return MonadSplit(
        lambda1=Fraction(1 if table_f1 else 0),
        table_f1=table_f1,
        lambda2=Fraction(1 if d_back else 0),
        table_f2=d_back,
        e_column=e_column,
        front_pieces=front,
        back_pieces=back,
    )


def _full_codim_prefix(pieces, n):
    out = []
    for coeff, d in pieces:
        if d.codim != n + 1:
            break
        out.append((coeff, d))
    return out


def _prefix_run(table, e, n):
    """Dualize a truncation and decompose it against the one-sided constraint
    (free at positions <= -e, full codimension above); keep the leading run
    of full-codimension pieces.

    The trailing lower-codimension pieces only exist because the truncation
    cut the table off: a complete decomposition of the untruncated dual
    consists of full-codimension pieces throughout, and the cut's deficit is
    absorbed by the final, deficient pieces touching the boundary column.
    """
    constraint = CodimensionSequence(n, 0, -e + 1, (), n + 1)
    return _full_codim_prefix(decompose_s(dual(table), constraint, n).pieces, n)


def infinite_prefix(table, e, n):
    """Stable prefix of the chain decomposition of an infinite resolution.

    The input is the truncation of the resolution to columns 0..e.  The run
    at e is confirmed against the run at e - 1: pieces are returned (in
    original orientation, maximal piece first) as long as the shorter run
    agrees piecewise; if the two runs disagree somewhere, only the agreeing
    prefix is returned.  The remainder carries whatever the prefix does not
    reconstruct.
    """
    if e <= n + 1:
        raise ValidationError(f"truncation column e = {e} must exceed n + 1 = {n + 1}")
    if not table.is_nonnegative():
        raise ValidationError("prefix decomposition needs a nonnegative table")
    high = [i for i in table.columns() if i > e]
    if high:
        raise ValidationError(
            f"table has support in column {high[0]} past the truncation at {e}")
    kept = _prefix_run(table, e, n)
    shorter = _prefix_run(table.restrict_columns(hi=e - 1), e - 1, n)
    agree = 0
    for (c1, d1), (c2, d2) in zip(kept, shorter):
        if c1 != c2 or d1 != d2:
            break
        agree += 1
    if agree < len(shorter):
        kept = kept[:agree]
    stable = [(coeff, d.dual()) for coeff, d in kept]
    remainder = linear_combine(
        [(1, table)] + [(-c, pure_diagram(d)) for c, d in stable])
    return Decomposition(stable, remainder)
