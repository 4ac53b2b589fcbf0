"""Certificate-producing extractors.  Every report carries a replayable trace."""

from ._work import ExtractionRefused, ExtractionReport, Workspace
from .bounded import (
    anti_matching_clique_star,
    anti_matching_star_star,
    chain_clique_star,
    chain_star_star,
    complete_from_connected,
    edgeless_from_large,
)
from .brooms import induced_p4_between, matched_cliques_from_components
from .cycles import center_path_to_cycle, fan_to_cycle, shrink_cycle
from .ladder import ladder_bound, ladder_to_cycle
from .patch import build_patched_path, classify_patch, cycle_target, path_to_cycle, patched_path_to_ladder, shorten_path

__all__ = [
    "ExtractionRefused",
    "ExtractionReport",
    "Workspace",
    "anti_matching_clique_star",
    "anti_matching_star_star",
    "build_patched_path",
    "center_path_to_cycle",
    "chain_clique_star",
    "chain_star_star",
    "classify_patch",
    "complete_from_connected",
    "cycle_target",
    "edgeless_from_large",
    "fan_to_cycle",
    "induced_p4_between",
    "ladder_bound",
    "ladder_to_cycle",
    "matched_cliques_from_components",
    "path_to_cycle",
    "patched_path_to_ladder",
    "shorten_path",
    "shrink_cycle",
]
