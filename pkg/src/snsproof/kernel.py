"""Hilbert-style proof objects and the line-by-line checker.

A proof is a context of named hypotheses plus an ordered list of lines, each
justified as a hypothesis, an axiom instance, or N-Modus Ponens (from ``phi``
and ``phi -> (phi & gamma)`` infer ``gamma``).  The conclusion is the last line.
Line indices are 0-based here; the script format numbers lines from 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from .axioms import MissingMetavariable, UnknownSchema, instantiate, match_any, match_schema
from .formula import And, Formula, Imp, substitute

__all__ = [
    "Hyp", "Axiom", "MP", "Justification", "ProofLine", "Proof",
    "Failure", "CheckReport", "ProofStructureError",
    "check_mp", "check_line", "check_proof", "substitute_proof",
]


@dataclass(frozen=True)
class Hyp:
    name: str


@dataclass(frozen=True)
class Axiom:
    """Axiom instance.  ``id=None`` is ``axiom *``; ``binding=None`` asks the checker to infer it."""

    id: str | None = None
    binding: Mapping[str, Formula] | None = None


@dataclass(frozen=True)
class MP:
    minor: int
    major: int


Justification = Union[Hyp, Axiom, MP]


@dataclass(frozen=True)
class ProofLine:
    formula: Formula
    just: Justification


class ProofStructureError(ValueError):
    """A proof value that is malformed independently of any logical check."""


@dataclass(frozen=True)
class Proof:
    hyps: Mapping[str, Formula]
    lines: tuple[ProofLine, ...]
    name: str = ""

    def __post_init__(self):
        if not self.lines:
            raise ProofStructureError("a proof needs at least one line")
        object.__setattr__(self, "hyps", dict(self.hyps))
        object.__setattr__(self, "lines", tuple(self.lines))

    @property
    def conclusion(self) -> Formula:
        return self.lines[-1].formula

    def __len__(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class Failure:
    line: int
    kind: str
    message: str

    def __str__(self) -> str:
        return f"line {self.line + 1}: {self.kind}: {self.message}"


@dataclass(frozen=True)
class CheckReport:
    accepted: bool
    failure: Failure | None = None
    lines: int = 0

    @property
    def status(self) -> str:
        return "accepted" if self.accepted else "rejected"

    def __bool__(self) -> bool:
        return self.accepted


def check_mp(minor: Formula, major: Formula) -> Formula | None:
    """``gamma`` if ``major`` is ``minor -> (minor & gamma)``, else ``None``."""
    if type(major) is not Imp:
        return None
    body = major.right
    if type(body) is not And:
        return None
    if major.left != minor or body.left != minor:
        return None
    return body.right


def check_line(proof: Proof, i: int) -> Failure | None:
    """``None`` when line ``i`` is justified, otherwise the reason it is not."""
    line = proof.lines[i]
    f, j = line.formula, line.just
    if isinstance(j, Hyp):
        if j.name not in proof.hyps:
            return Failure(i, "unknown hypothesis", j.name)
        if proof.hyps[j.name] != f:
            return Failure(i, "hypothesis mismatch", f"{j.name} does not state this formula")
        return None
    if isinstance(j, Axiom):
        if j.id is None:
            if match_any(f):
                return None
            return Failure(i, "not an axiom", "formula matches no schema")
        try:
            if j.binding is None:
                ok = match_schema(f, j.id) is not None
            else:
                ok = instantiate(j.id, j.binding) == f
        except UnknownSchema:
            return Failure(i, "unknown schema", str(j.id))
        except MissingMetavariable as e:
            return Failure(i, "missing metavariable", e.args[0])
        if not ok:
            return Failure(i, "axiom mismatch", f"not an instance of {j.id} with the given binding"
                           if j.binding is not None else f"not an instance of {j.id}")
        return None
    if isinstance(j, MP):
        for k in (j.minor, j.major):
            if not 0 <= k < i:
                return Failure(i, "forward reference", f"line {k + 1} is not an earlier line")
        got = check_mp(proof.lines[j.minor].formula, proof.lines[j.major].formula)
        if got is None:
            return Failure(i, "mp mismatch",
                           f"line {j.major + 1} is not a weak implication from line {j.minor + 1}")
        if got != f:
            return Failure(i, "mp mismatch", "modus ponens yields a different formula")
        return None
    return Failure(i, "bad justification", repr(j))


def check_proof(proof: Proof) -> CheckReport:
    for i in range(len(proof.lines)):
        failure = check_line(proof, i)
        if failure is not None:
            return CheckReport(False, failure, len(proof.lines))
    return CheckReport(True, None, len(proof.lines))


def substitute_proof(proof: Proof, s: Mapping[str, Formula]) -> Proof:
    """Apply one uniform substitution to every formula, bindings and hypotheses included."""

    def just(j):
        if isinstance(j, Axiom) and j.binding is not None:
            return Axiom(j.id, {k: substitute(v, s) for k, v in j.binding.items()})
        return j

    return Proof(
        {n: substitute(f, s) for n, f in proof.hyps.items()},
        tuple(ProofLine(substitute(l.formula, s), just(l.just)) for l in proof.lines),
        proof.name,
    )
