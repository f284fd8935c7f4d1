"""Ordinal shortest paths on DAGs.

Computes the full set of ordinally non-dominated source-sink path
vectors (plus one representative path per vector) for graphs whose arcs
carry qualitative levels instead of numeric costs.
"""

from .errors import (BadShapeError, CapExceededError, CycleError,
                     DetachedError, InvalidGraphError, NoPathError,
                     OrdPathsError, ParseError, TimeoutExceededError)
from .generate import (gen_antisymmetry_fixture, gen_bellman_fixture,
                       gen_detour_fixture, gen_exponential_instance,
                       gen_grid, gen_random_dag)
from .graph import (Arc, Dag, ValidationReport, make_dag, prune_unreachable,
                    read_instance, topological_order, validate,
                    write_instance)
from .labeling import (Label, SolveResult, SolveStats, Variant, extend,
                       initial_label, reconstruct_path, solve)
from .lexmax import (DigitWeights, certify_nondominated, digit_weights,
                     lexmax_dp, lexmax_longest_path)
from .oracle import (PathRecord, count_efficient_paths, enumerate_paths,
                     one_sided_front, oracle_front)
from .ordinal import (cum_from_freq, dominates, dominates_cum, freq_vector,
                      label_bound, leq_componentwise, lex_ge,
                      nondominated_filter, sort_backw, sort_forw,
                      sort_vector, sorted_from_freq, strictly_dominates)

__version__ = "0.1.0"
