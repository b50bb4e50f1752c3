"""A proof checker, deduction compiler and derived-rule library for the
semi-intuitionistic logic with strong negation (IS~).

The trusted part is :mod:`snsproof.kernel`: proofs are checked line by line
against the 23 axiom schemata and N-Modus Ponens.  Everything else (the
deduction transformation, derived-rule templates, the corpus) produces plain
proofs that the kernel re-checks.
"""

from .axioms import SCHEMATA, get_schema, instantiate, match_any, match_schema, schema_table
from .deduction import DeductionError, deduce, frag_refl, frag_weaken, undeduce
from .formula import (
    TOP, And, Formula, Imp, Neg, Or, ParseError, Top, Var, expand, iffn, impn, parse,
    parse_formula, strimp, substitute, to_text,
)
from .kernel import MP, Axiom, CheckReport, Hyp, Proof, ProofLine, check_proof, substitute_proof
from .rules import elaborate, get_rule, list_rules
from .script import ScriptError, load_script, read_script, save_script, write_script

__version__ = "0.1.0"

__all__ = [
    "Formula", "Var", "Top", "TOP", "Neg", "And", "Or", "Imp",
    "ParseError", "parse", "expand", "parse_formula", "to_text", "substitute",
    "impn", "strimp", "iffn",
    "SCHEMATA", "schema_table", "get_schema", "match_schema", "match_any", "instantiate",
    "Hyp", "Axiom", "MP", "ProofLine", "Proof", "CheckReport", "check_proof", "substitute_proof",
    "ScriptError", "read_script", "write_script", "load_script", "save_script",
    "DeductionError", "deduce", "undeduce", "frag_refl", "frag_weaken",
    "list_rules", "get_rule", "elaborate",
]
