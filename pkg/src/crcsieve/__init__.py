"""Exact minimum-distance profiles and scores for shortened CRC codes.

The distance of the code generated by g(x) at block length n is computed
without codeword enumeration: residue weights go through a Walsh-Hadamard
transform to get the dual weight distribution, and the primal distribution
follows from the MacWilliams identity in exact integer arithmetic.  On top
of that sit run-length distance profiles, cumulative scores, and an
exhaustive per-degree search with checkpointing.
"""

from .distance import (
    BRUTE_FORCE_MAX_DIM,
    DistanceEngine,
    brute_force_min_distance,
    dual_weight_distribution,
    krawtchouk,
    min_distance,
)
from .gf2poly import Gf2Poly, canonical, crc_remainder, mulx_mod, order, parse_hex, reciprocal
from .profile import DistanceProfile, ScoreResult, build_profile, score, score_targets
from .search import Leaderboard, ScoredPoly, SearchConfig, enumerate_candidates, run_search

__version__ = "0.1.0"

__all__ = [
    "BRUTE_FORCE_MAX_DIM",
    "DistanceEngine",
    "DistanceProfile",
    "Gf2Poly",
    "Leaderboard",
    "ScoreResult",
    "ScoredPoly",
    "SearchConfig",
    "brute_force_min_distance",
    "build_profile",
    "canonical",
    "crc_remainder",
    "dual_weight_distribution",
    "enumerate_candidates",
    "krawtchouk",
    "min_distance",
    "mulx_mod",
    "order",
    "parse_hex",
    "reciprocal",
    "run_search",
    "score",
    "score_targets",
    "__version__",
]
