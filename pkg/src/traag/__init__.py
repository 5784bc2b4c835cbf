"""Twisted right-angled Artin groups in knot groups: decisions and explicit embeddings."""

from .amalgam import (
    CableGroup,
    GroupWord,
    TorusKnotGroup,
    equal,
    is_identity,
    normal_form,
    parse_group,
    parse_word,
)
from .decision import Rule, Verdict, decide
from .embedding import build_assignment, verify_injectivity_bounded, verify_relators
from .knot_jsj import KnotCase, KnotJsj, knot_case, parse_jsj
from .mixed_graph import MixedGraph, classify_component, graph_shape, parse_graph
from .presentation import abelianization, traag_presentation

__version__ = "0.1.0"
