"""Cycle-contraction minors of multigraphs.

A cc-minor of G is what remains after repeatedly contracting a cycle to a
single vertex and deleting its edges.  The package offers the contraction
calculus with replayable traces, an exhaustive cc-minor oracle, Tutte tree
decompositions, extractors for unavoidable cc-minors, the edge-connectivity
classes F_k and a planar duality check.
"""

from .ccops import ContractionTrace, Contractor, contract_cycle, contract_subgraph, replay
from .classes import ClassVerdict, Obstruction, classify, in_class
from .decompose import DecompositionTree, TemplateSpec, compose, is_template, tutte_decomposition
from .duality import Embedding, check_duality_lemma, dual, planar_embed
from .errors import CapExceeded, GraphError, TheoremViolation, TraceError
from .extract import (ExtractionResult, extract_bond, extract_from_3connected, extract_large_3connected,
                      extract_parallel_cycles, extract_template)
from .io import dumps, loads
from .isomorph import canonical_form, cc_minor_classes, enumerate_cc_minors, is_cc_minor
from .multigraph import Multigraph

__version__ = "0.1.0"
