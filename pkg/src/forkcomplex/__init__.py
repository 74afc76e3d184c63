"""Generalized Heegaard splittings as exact fork complexes."""

from .canonical import canonical_form, same_complex
from .catalog import CatalogKey, build_catalog
from .complex import (Fork, ForkComplex, GeneralizedSplitting, Node, NodeKind, Side,
                      boundary_partition, complex_euler, exactness_digraph, induced_body,
                      make_splitting, splitting_at_grip, validate_complex)
from .core import (CompressionBody, JoinTube, NonSeparating, SelfTube, Separating,
                   body_euler, classify_body, minimal_meridian_count, surger_genus,
                   tube_genera, validate_body)
from .errors import ForkError
from .exactness import Infeasible, LevelAssignment, check_exact, is_exact, require_exact
from .moves import (Amalgamate, Case, Destabilize, EliminateSphereTine, EliminateTrivialFork,
                    MoveReport, Shape, Stabilize, TrivialVariant, WeakReduce,
                    WeakReductionData, amalgamate, apply_move, destabilize,
                    eliminate_sphere_tine, eliminate_trivial_fork, stabilize, weak_reduce)
from .search import SearchBudget, SearchResult, brute_force_min_width, enumerate_moves, \
    thin_search
from .width import Ordering, WidthMultiset, compare_width, width

__all__ = ["canonical_form", "same_complex", "CatalogKey", "build_catalog", "Fork",
           "ForkComplex", "GeneralizedSplitting", "Node", "NodeKind", "Side",
           "boundary_partition", "complex_euler", "exactness_digraph", "induced_body",
           "make_splitting", "splitting_at_grip", "validate_complex", "CompressionBody",
           "JoinTube", "NonSeparating", "SelfTube", "Separating", "body_euler",
           "classify_body", "minimal_meridian_count", "surger_genus", "tube_genera",
           "validate_body", "ForkError", "Infeasible", "LevelAssignment", "check_exact",
           "is_exact", "require_exact", "Amalgamate", "Case", "Destabilize",
           "EliminateSphereTine", "EliminateTrivialFork", "MoveReport", "Shape",
           "Stabilize", "TrivialVariant", "WeakReduce", "WeakReductionData", "amalgamate",
           "apply_move", "destabilize", "eliminate_sphere_tine", "eliminate_trivial_fork",
           "stabilize", "weak_reduce", "SearchBudget", "SearchResult",
           "brute_force_min_width", "enumerate_moves", "thin_search", "Ordering",
           "WidthMultiset", "compare_width", "width"]

__version__ = "0.1.0"
