"""Growth of projection algebras attached to edge two-colored star graphs.

The package builds the defining relations of the algebra associated with a
star whose leaves may be pairwise linked by dashed (commutation) edges,
completes them into an exact noncommutative Groebner basis over the
rational-function field Q(t), counts normal words with a factor-avoidance
automaton, classifies the growth (finite / polynomial / exponential), and
cross-validates the result against a purely graph-theoretic classification
of the same trichotomy.
"""

from .automaton import AvoidanceAutomaton, build_automaton, hilbert_prefix, is_normal_word
from .classifier import (
    MINIMAL_EXPONENTIAL_GRAPHS,
    TheoremVerdict,
    check_nu_conditions,
    classify_by_theorem,
)
from .graphs import (
    CanonicalForm,
    Embedding,
    TwoColoredStar,
    canonical_form,
    canonical_representative,
    contains_subgraph,
    dashed_components,
    delete_dashed_edge,
    enumerate_graphs,
    is_isomorphic,
    parse_graph,
    prune_isolated_leaves,
)
from .groebner import (
    GroebnerResult,
    Rewriter,
    buchberger,
    is_antichain,
    minimal_antichain,
    obstructions,
    reduce,
)
from .growth import (
    FreePairCertificate,
    GrowthClass,
    classify_growth,
    find_free_pair_violation,
    search_free_pair,
    verify_free_pair,
)
from .ncpoly import NcPolynomial, Word, compare_words, format_word, parse_word, word_key
from .presentation import Presentation, build_presentation
from .report import AnalysisReport, SweepResult, analyze, cross_validate
from .scalars import Polynomial, RationalFunction

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "AvoidanceAutomaton",
    "CanonicalForm",
    "Embedding",
    "FreePairCertificate",
    "GroebnerResult",
    "GrowthClass",
    "MINIMAL_EXPONENTIAL_GRAPHS",
    "NcPolynomial",
    "Polynomial",
    "Presentation",
    "RationalFunction",
    "Rewriter",
    "SweepResult",
    "TheoremVerdict",
    "TwoColoredStar",
    "Word",
    "analyze",
    "build_automaton",
    "build_presentation",
    "buchberger",
    "canonical_form",
    "canonical_representative",
    "check_nu_conditions",
    "classify_by_theorem",
    "classify_growth",
    "compare_words",
    "contains_subgraph",
    "cross_validate",
    "dashed_components",
    "delete_dashed_edge",
    "enumerate_graphs",
    "find_free_pair_violation",
    "format_word",
    "hilbert_prefix",
    "is_antichain",
    "is_isomorphic",
    "is_normal_word",
    "minimal_antichain",
    "obstructions",
    "parse_graph",
    "parse_word",
    "prune_isolated_leaves",
    "reduce",
    "search_free_pair",
    "verify_free_pair",
    "word_key",
]
