"""Exact rational computations with Betti tables and cohomology tables:
pure diagrams, the table-level pairing, separating functionals, cone
membership with certificates, greedy chain decompositions, monad splitting,
infinite-resolution prefixes, and multigraded analogues."""

from .cone_a import (APiece, AVerdict, Violation, chi, chi_window,
                     decompose_a, euler, membership_a)
from .cone_s import (Decomposition, MonadSplit, SVerdict, decompose_s,
                     infinite_prefix, membership_s, monad_split)
from .diagrams import (CohomologyEvaluator, FormalEvaluator,
                       SupernaturalEvaluator, SupernaturalSheaf,
                       WindowEvaluator, evaluator_from_obj, pure_diagram,
                       supernatural_gamma, twist_evaluator)
from .errors import (BsfanError, EvaluatorRangeError, MonadViolation,
                     NotInCone, ParseError, ValidationError)
from .multigraded import (GradedOrder, MultiBettiTable, ProductSpace,
                          kunneth_gamma, multi_chi, multi_chi_window,
                          multi_pair, order_compare)
from .pairing import es_functional, pair, pair_check, pure_pair_support
from .sequences import (EMPTY, INF, CodimensionSequence, Comparison,
                        DegreeSequence, compare_degree_sequences,
                        is_compatible, validate_codim_sequence)
from .tables import (BettiTable, dual, linear_combine, parse_table,
                     pretty_render, serialize_table, shift, table_from_obj,
                     table_to_obj)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
