"""Mod-k edge colourings: construction, verification, and bounds."""
from ._numba_utils import NUMBA_ENABLED
from .colouring import EdgeColouring, ExactStatus, Violation, exact_chi, is_ell_k_graph, verify
from .degenerate import colour_degenerate, palette_size, step_invariant_check
from .divisible import (DivisibleOutcome, SplitMap, density_bound, find_divisible,
                        find_divisible_via_regular, find_regular_subgraph, next_prime,
                        split_to_regular)
from .errors import InvariantError, ParseError
from .graph import Graph, degeneracy_order, generate, parse_graph, serialize
from .onemod import Maximality, OnemodSubgraph, check_maximality_properties, grow_onemod
from .pipeline import BoundCertificate, colour_graph, theorem_bound
from .starcover import (Star, StarCoverInstance, StarKind, cover_with_stars, hall_matching,
                        make_tightness_instance, refute_covering)

__version__ = "0.1.0"
