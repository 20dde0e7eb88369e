"""Temporal resolving sets: distances, verification, exact and specialised solvers,
periodic constructions and reduction gadgets."""
from .graph import (INF, ShapeClass, TemporalGraph, TimeLabelSet, classify_shape, distance_matrix,
                    earliest_arrival, exclusive_reach, next_usable_label, normalize, reach_set)
from .verify import ResolutionCertificate, check_resolving, distance_vectors, is_resolving
from .exact import (GuardExceeded, PoolExhausted, min_adjacency_resolving_bruteforce,
                    min_resolving_bruteforce, min_resolving_periodic_tree)
from .paths import PathView, solve_path
from .stars import SubdividedStarView, solve_star, solve_subdivided_star_12
from .io import parse_instance, serialize_instance

__version__ = "0.1.0"
