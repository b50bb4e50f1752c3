"""Derived rules as parametric templates that elaborate into kernel proofs."""

from .registry import (
    PARAMS, HypothesisConflict, IncompleteBinding, RuleError, RuleTemplate, ShapeMismatch,
    UnknownRule, corpus_name, elaborate, get_rule, list_rules,
)

__all__ = [
    "PARAMS", "RuleTemplate", "RuleError", "UnknownRule", "IncompleteBinding", "ShapeMismatch",
    "HypothesisConflict", "list_rules", "get_rule", "elaborate", "corpus_name",
]
