"""Compositional finite limits and colimits.

Diagrams of finite sets with discrete feet form a well-supported compact
closed category; taking colimits (or limits) sends them to cospans (or
spans) of finite sets while preserving that structure.  So any colimit can
be computed by compiling the diagram into an expression over the structural
constants and evaluating it.
"""
from .cospan import Cospan, Kind, Span, compose, constant, iso_eq, lift, tensor
from .dcospan import DiagramCospan, colim_functor, dcompose, dconstant, dtensor, lim_functor
from .diagram import LabeledDiagram, colimit_classical, limit_classical
from .expr import compile_diagram, evaluate
from .finset import FinFn, FinSetObj, coequalizer, equalizer, pullback, pushout
from .kleene import LabelledGraph, kleene_pipeline
from .regex import format_regex, parse_regex
from .syntax import format_program, parse_program

__all__ = [
    "Cospan", "Kind", "Span", "compose", "constant", "iso_eq", "lift", "tensor",
    "DiagramCospan", "colim_functor", "dcompose", "dconstant", "dtensor", "lim_functor",
    "LabeledDiagram", "colimit_classical", "limit_classical",
    "compile_diagram", "evaluate",
    "FinFn", "FinSetObj", "coequalizer", "equalizer", "pullback", "pushout",
    "LabelledGraph", "kleene_pipeline", "format_regex", "parse_regex",
    "format_program", "parse_program",
]
