"""Extractors for unavoidable cc-minors, each returning a replayable ExtractionResult."""

from .bonds import extract_bond, extract_parallel_cycles
from .bounds import BoundFns, HeavyPath, HighDegreeVertex, LongPath, f_wt, is_witness, weighted_tree_witness
from .large import extract_fan_from_cycle_island, extract_large_3connected
from .result import (BOND, FAILURE, FAN_TYPE, K4_EXT, PAR_CYCLES, TEMPLATE, ExtractionResult, failure)
from .template import extract_template
from .theta import ThetaGraph, find_theta, find_type_a_theta
from .three_connected import FourPathConnector, extract_from_3connected

__all__ = [
    "BOND", "FAILURE", "FAN_TYPE", "K4_EXT", "PAR_CYCLES", "TEMPLATE",
    "BoundFns", "ExtractionResult", "FourPathConnector", "HeavyPath", "HighDegreeVertex", "LongPath",
    "ThetaGraph", "extract_bond", "extract_fan_from_cycle_island", "extract_from_3connected",
    "extract_large_3connected", "extract_parallel_cycles", "extract_template", "f_wt", "failure",
    "find_theta", "find_type_a_theta", "is_witness", "weighted_tree_witness",
]
