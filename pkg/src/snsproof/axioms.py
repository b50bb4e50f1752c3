"""The 23 axiom schemata, stored core-expanded, with one-way matching."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .formula import (
    And, Formula, Imp, Metavar, Neg, Or, Top, Var, expand, parse, substitute, to_text,
)

__all__ = [
    "Schema", "SCHEMATA", "METAVARS", "schema_table", "get_schema",
    "match_schema", "match_any", "instantiate", "UnknownSchema", "MissingMetavariable",
]

METAVARS = ("A", "B", "C")

# Sugared sources; uppercase A, B, C are the metavariables.
_SOURCES = (
    ("A1", "(A => B) => ((B => C) => (A => C))"),
    ("A2", "(A => B) => ((A => C) => (A => (B & C)))"),
    ("A3", "(A & B) => A"),
    ("A4", "(A & B) => B"),
    ("A5", "A => (A | B)"),
    ("A6", "B => (A | B)"),
    ("A7", "~(A | B) => ~A"),
    ("A8", "~(A | B) => ~B"),
    ("A9", "(A => C) => ((B => C) => ((A | B) => C))"),
    ("A10", "(~A => ~B) => ((~A => ~C) => (~A => ~(B | C)))"),
    ("A11", "A ==> ~~A"),
    ("A12", "~~A ==> A"),
    ("A13", "(A => B) => ((B => A) => ((A -> C) => (B -> C)))"),
    ("A14", "(A => B) => ((B => A) => ((C -> A) => (C -> B)))"),
    ("A15", "((A & B) => C) ==> (A => (B => C))"),
    ("A16", "~(A & B) ==> (~A | ~B)"),
    ("A17", "(~A | ~B) ==> ~(A & B)"),
    ("A18", "(A & (~A | B)) ==> (A & (A => B))"),
    ("A19", "(A => (B => C)) ==> ((A & B) => C)"),
    ("A20", "~(A -> B) => (A & ~B)"),
    ("A21", "(A & ~B) => ~(A -> B)"),
    ("A22", "~(A & ((C & A) | (B & A))) => ~(A & (B | C))"),
    ("A23", "T"),
)


class UnknownSchema(KeyError):
    pass


class MissingMetavariable(KeyError):
    pass


@dataclass(frozen=True)
class Schema:
    id: str
    template: Formula
    metavars: tuple[str, ...]

    @property
    def arity(self) -> int:
        return len(self.metavars)

    def __str__(self) -> str:
        return f"{self.id}: {to_text(self.template)}"


def _metavarize(f: Formula) -> Formula:
    t = type(f)
    if t is Var:
        return Metavar(f.name)
    if t is Top:
        return f
    if t is Neg:
        return Neg(_metavarize(f.operand))
    return t(_metavarize(f.left), _metavarize(f.right))


def _build(sid: str, text: str) -> Schema:
    template = _metavarize(expand(parse(text)))
    used = {g.name for g in _walk(template) if type(g) is Metavar}
    return Schema(sid, template, tuple(m for m in METAVARS if m in used))


def _walk(f):
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        t = type(g)
        if t is Neg:
            stack.append(g.operand)
        elif t in (And, Or, Imp):
            stack.append(g.right)
            stack.append(g.left)


SCHEMATA: tuple[Schema, ...] = tuple(_build(sid, text) for sid, text in _SOURCES)
_BY_ID = {s.id: s for s in SCHEMATA}


def schema_table() -> list[Schema]:
    return list(SCHEMATA)


def get_schema(sid: str) -> Schema:
    try:
        return _BY_ID[sid]
    except KeyError:
        raise UnknownSchema(sid) from None


def _match(t: Formula, f: Formula, b: dict) -> bool:
    tt = type(t)
    if tt is Metavar:
        seen = b.get(t.name)
        if seen is None:
            b[t.name] = f
            return True
        return seen is f or seen == f
    if tt is not type(f):
        return False
    if tt is Top:
        return True
    if tt is Neg:
        return _match(t.operand, f.operand, b)
    return _match(t.left, f.left, b) and _match(t.right, f.right, b)


def match_schema(f: Formula, sid: str) -> dict[str, Formula] | None:
    """Binding of the schema's metavariables that makes the template equal ``f``."""
    b: dict[str, Formula] = {}
    if _match(get_schema(sid).template, f, b):
        return b
    return None


def match_any(f: Formula) -> list[tuple[str, dict[str, Formula]]]:
    out = []
    for s in SCHEMATA:
        b: dict[str, Formula] = {}
        if _match(s.template, f, b):
            out.append((s.id, b))
    return out


def instantiate(sid: str, binding: Mapping[str, Formula]) -> Formula:
    s = get_schema(sid)
    for m in s.metavars:
        if m not in binding:
            raise MissingMetavariable(f"{sid} needs metavariable {m.lower()}")
    return substitute(s.template, {m: binding[m] for m in s.metavars})
