"""Formula language over {T, ~, &, |, ->}, concrete syntax, sugar and substitution.

Core formulas are the only thing the kernel ever sees.  The three defined
connectives (weak implication ``=>``, strong implication ``==>`` and weak
biconditional ``<=>``) exist as AST nodes only between the parser and
:func:`expand`, and are rebuilt by the printer when resugaring.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping

__all__ = [
    "Formula", "Var", "Top", "TOP", "Neg", "And", "Or", "Imp",
    "Metavar", "ImpN", "StrImp", "IffN",
    "ParseError", "parse", "expand", "parse_formula", "to_text", "fold_sugar",
    "substitute", "impn", "strimp", "iffn", "split_impn",
    "size", "subformulas", "variables",
]


class Formula:
    """Base class of all formula nodes (core, sugared and schema metavariables)."""

    __slots__ = ()

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True)
class Var(Formula):
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Top(Formula):
    def __str__(self) -> str:
        return "T"


TOP = Top()


@dataclass(frozen=True, slots=True)
class Neg(Formula):
    operand: Formula


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Imp(Formula):
    """Primitive implication ``->``."""

    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Metavar(Formula):
    """Schema placeholder; only ever appears inside axiom templates."""

    name: str


@dataclass(frozen=True, slots=True)
class ImpN(Formula):
    """Weak implication ``a => b``, i.e. ``a -> (a & b)``."""

    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class StrImp(Formula):
    """Strong implication ``a ==> b``, i.e. ``(a => b) & (~b => ~a)``."""

    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class IffN(Formula):
    """Weak biconditional ``a <=> b``, i.e. ``(a => b) & (b => a)``."""

    left: Formula
    right: Formula


_BINARY = (And, Or, Imp, ImpN, StrImp, IffN)
_SUGAR = (ImpN, StrImp, IffN)


# -- core constructors for the defined connectives --------------------------

def impn(a: Formula, b: Formula) -> Formula:
    return Imp(a, And(a, b))


def strimp(a: Formula, b: Formula) -> Formula:
    return And(impn(a, b), impn(Neg(b), Neg(a)))


def iffn(a: Formula, b: Formula) -> Formula:
    return And(impn(a, b), impn(b, a))


def split_impn(f: Formula) -> tuple[Formula, Formula] | None:
    """Return ``(a, b)`` when ``f`` is literally ``a -> (a & b)``."""
    if type(f) is Imp and type(f.right) is And and f.right.left == f.left:
        return f.left, f.right.right
    return None


def expand(f: Formula, table: dict | None = None) -> Formula:
    """Eliminate sugar bottom-up; the result uses core constructors only.

    With a ``table``, structurally equal results are shared (hash-consed)
    across calls using the same table, which makes later equality tests cheap.
    """
    if table is None:
        return _expand(f)
    return _expand_shared(f, table)


def _expand(f: Formula) -> Formula:
    t = type(f)
    if t is Var or t is Top or t is Metavar:
        return f
    if t is Neg:
        return Neg(_expand(f.operand))
    a, b = _expand(f.left), _expand(f.right)
    if t is ImpN:
        return impn(a, b)
    if t is StrImp:
        return strimp(a, b)
    if t is IffN:
        return iffn(a, b)
    return t(a, b)


def _node(table: dict, t, *args):
    # children are already shared, so their identities make a sound key
    key = (t, *(a if type(a) is str else id(a) for a in args))
    hit = table.get(key)
    if hit is None:
        hit = table[key] = t(*args)
    return hit


def _expand_shared(f: Formula, table: dict) -> Formula:
    t = type(f)
    if t is Var or t is Metavar:
        return _node(table, t, f.name)
    if t is Top:
        return TOP
    if t is Neg:
        return _node(table, Neg, _expand_shared(f.operand, table))
    a, b = _expand_shared(f.left, table), _expand_shared(f.right, table)
    if t is ImpN:
        return _node(table, Imp, a, _node(table, And, a, b))
    if t is StrImp:
        fwd = _node(table, Imp, a, _node(table, And, a, b))
        na, nb = _node(table, Neg, a), _node(table, Neg, b)
        back = _node(table, Imp, nb, _node(table, And, nb, na))
        return _node(table, And, fwd, back)
    if t is IffN:
        fwd = _node(table, Imp, a, _node(table, And, a, b))
        back = _node(table, Imp, b, _node(table, And, b, a))
        return _node(table, And, fwd, back)
    return _node(table, t, a, b)


def substitute(f: Formula, s: Mapping[str, Formula]) -> Formula:
    """Simultaneously replace variables named in ``s``.

    Metavariables are looked up under their own name as well, which is how
    axiom templates are instantiated.
    """
    if not s:
        return f
    return _subst(f, s, {})


def _subst(f, s, memo):
    key = id(f)
    hit = memo.get(key)
    if hit is not None:
        return hit[1]
    t = type(f)
    if t is Var or t is Metavar:
        out = s.get(f.name, f)
    elif t is Top:
        out = f
    elif t is Neg:
        out = Neg(_subst(f.operand, s, memo))
    else:
        out = t(_subst(f.left, s, memo), _subst(f.right, s, memo))
    # keep f alive so id() stays unique for the duration of the walk
    memo[key] = (f, out)
    return out


def size(f: Formula) -> int:
    t = type(f)
    if t is Neg:
        return 1 + size(f.operand)
    if t in _BINARY:
        return 1 + size(f.left) + size(f.right)
    return 1


def subformulas(f: Formula) -> Iterator[Formula]:
    """Pre-order walk, duplicates included."""
    yield f
    t = type(f)
    if t is Neg:
        yield from subformulas(f.operand)
    elif t in _BINARY:
        yield from subformulas(f.left)
        yield from subformulas(f.right)


def variables(f: Formula) -> set[str]:
    return {g.name for g in subformulas(f) if type(g) is Var}


# -- parsing ------------------------------------------------------------------

class ParseError(ValueError):
    def __init__(self, message: str, offset: int, expected: frozenset[str] = frozenset()):
        self.offset = offset
        self.expected = expected
        detail = f" (expected one of: {', '.join(sorted(expected))})" if expected else ""
        super().__init__(f"{message} at byte {offset}{detail}")


_TOKEN = re.compile(r"(==>|<=>|->|=>|[~&|()])|([A-Za-z_][A-Za-z0-9_]*)|(\S)")
_IMPOPS = {"->": Imp, "=>": ImpN, "==>": StrImp, "<=>": IffN}
_ATOM_START = frozenset({"T", "IDENT", "(", "~"})


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.data = text.encode("utf-8")
        self.ascii = text.isascii()
        self.tokens: list[tuple[str, str, int]] = []
        for m in _TOKEN.finditer(text):
            op, word, bad = m.group(1, 2, 3)
            if op:
                self.tokens.append((op, op, self._offset(m.start(1))))
            elif word:
                self.tokens.append(("T" if word == "T" else "IDENT", word,
                                    self._offset(m.start(2))))
            else:
                raise ParseError(f"unexpected character {bad!r}", self._offset(m.start(3)),
                                 _ATOM_START | frozenset(_IMPOPS) | {"&", "|", ")"})
        self.tokens.append(("EOF", "", len(self.data)))
        self.i = 0

    def _offset(self, char_index: int) -> int:
        if self.ascii:
            return char_index
        return len(self.text[:char_index].encode("utf-8"))

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected) -> ParseError:
        kind, value, off = self.tokens[self.i]
        what = "end of input" if kind == "EOF" else f"token {value!r}"
        return ParseError(f"unexpected {what}", off, frozenset(expected))

    def formula(self) -> Formula:
        # right-associative implication tier; one operator kind per chain
        operands = [self.disj()]
        ops: list[str] = []
        while self.peek() in _IMPOPS:
            kind, _, off = self.take()
            if ops and kind != ops[0]:
                raise ParseError(f"cannot mix {ops[0]!r} and {kind!r} without parentheses",
                                 off, frozenset({ops[0]}))
            ops.append(kind)
            operands.append(self.disj())
        f = operands[-1]
        for kind, left in zip(reversed(ops), reversed(operands[:-1])):
            f = _IMPOPS[kind](left, f)
        return f

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek() == "|":
            self.take()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.neg()
        while self.peek() == "&":
            self.take()
            f = And(f, self.neg())
        return f

    def neg(self) -> Formula:
        if self.peek() == "~":
            self.take()
            return Neg(self.neg())
        return self.atom()

    def atom(self) -> Formula:
        kind, value, _ = self.tokens[self.i]
        if kind == "T":
            self.take()
            return TOP
        if kind == "IDENT":
            self.take()
            return Var(value)
        if kind == "(":
            self.take()
            f = self.formula()
            if self.peek() != ")":
                raise self.fail({")"} | set(_IMPOPS) | {"&", "|"})
            self.take()
            return f
        raise self.fail(_ATOM_START)


def parse(text: str) -> Formula:
    """Parse concrete syntax into a (possibly sugared) formula."""
    f = _parse_fast(text)
    if f is not None:
        return f
    # the careful parser produces the error report (byte offset, expected set)
    return _parse_careful(text)


def _parse_careful(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    if p.peek() != "EOF":
        raise p.fail({"EOF", "&", "|"} | set(_IMPOPS))
    return f


_FAST_TOKEN = re.compile(r"==>|<=>|->|=>|[~&|()]|[A-Za-z_][A-Za-z0-9_]*|\S")
_PREC = {"~": 4, "&": 3, "|": 2, "->": 1, "=>": 1, "==>": 1, "<=>": 1}
_BINOPS = {"&": And, "|": Or, **_IMPOPS}
_IDENT_START = frozenset("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz_")


def _parse_fast(text: str) -> Formula | None:
    """Operator-precedence parse of well-formed input; ``None`` on any error."""
    out: list[Formula] = []
    ops: list[str] = []
    chain: list[str | None] = [None]  # implication operator used at each paren depth
    operand = True
    for tok in _FAST_TOKEN.findall(text):
        if operand:
            if tok == "~":
                ops.append(tok)
            elif tok == "(":
                ops.append(tok)
                chain.append(None)
            elif tok[0] in _IDENT_START:
                out.append(TOP if tok == "T" else Var(tok))
                operand = False
            else:
                return None
        elif tok in _BINOPS:
            prec = _PREC[tok]
            # & and | associate left, the implication tier right
            while ops and ops[-1] != "(" and (
                    _PREC[ops[-1]] > prec or (prec > 1 and _PREC[ops[-1]] == prec)):
                _reduce(ops.pop(), out)
            if prec == 1:
                if chain[-1] is None:
                    chain[-1] = tok
                elif chain[-1] != tok:
                    return None
            ops.append(tok)
            operand = True
        elif tok == ")":
            while ops and ops[-1] != "(":
                _reduce(ops.pop(), out)
            if not ops:
                return None
            ops.pop()
            chain.pop()
        else:
            return None
    if operand:
        return None
    while ops:
        op = ops.pop()
        if op == "(":
            return None
        _reduce(op, out)
    return out[0]


def _reduce(op: str, out: list) -> None:
    if op == "~":
        out[-1] = Neg(out[-1])
    else:
        right = out.pop()
        out[-1] = _BINOPS[op](out[-1], right)


def parse_formula(text: str, table: dict | None = None) -> Formula:
    """``expand(parse(text))``; ``table`` as for :func:`expand`."""
    return expand(parse(text), table)


# -- printing -----------------------------------------------------------------

_OPS = {And: "&", Or: "|", Imp: "->", ImpN: "=>", StrImp: "==>", IffN: "<=>"}
_IMPTIER = (Imp, ImpN, StrImp, IffN)


def fold_sugar(f: Formula) -> Formula:
    """Fold core shapes back into ``==>``, ``<=>`` and ``=>`` wherever they occur."""
    t = type(f)
    if t is Var or t is Top or t is Metavar:
        return f
    if t is Neg:
        return Neg(fold_sugar(f.operand))
    if t is And:
        l, r = split_impn(f.left), split_impn(f.right)
        if l and r:
            a, b = l
            if r[0] == Neg(b) and r[1] == Neg(a):
                return StrImp(fold_sugar(a), fold_sugar(b))
            if r[0] == b and r[1] == a:
                return IffN(fold_sugar(a), fold_sugar(b))
    if t is Imp:
        parts = split_impn(f)
        if parts:
            return ImpN(fold_sugar(parts[0]), fold_sugar(parts[1]))
    return t(fold_sugar(f.left), fold_sugar(f.right))


def to_text(f: Formula, resugar: bool = True) -> str:
    """Render ``f``; the output reparses and expands to ``expand(f)``."""
    g = fold_sugar(f) if resugar else f
    return _render(g)


def _render(f: Formula) -> str:
    t = type(f)
    if t is Var:
        return f.name
    if t is Metavar:
        return f.name.lower()
    if t is Top:
        return "T"
    if t is Neg:
        inner = f.operand
        s = _render(inner)
        return "~" + (s if type(inner) in (Var, Top, Metavar, Neg) else f"({s})")
    left, right = _render(f.left), _render(f.right)
    if t is And:
        left = _wrap(f.left, left, (Or,) + _IMPTIER)
        right = _wrap(f.right, right, (And, Or) + _IMPTIER)
    elif t is Or:
        left = _wrap(f.left, left, _IMPTIER)
        right = _wrap(f.right, right, (Or,) + _IMPTIER)
    else:
        left = _wrap(f.left, left, _IMPTIER)
        right = _wrap(f.right, right, _IMPTIER)
    return f"{left} {_OPS[t]} {right}"


def _wrap(node: Formula, text: str, kinds) -> str:
    return f"({text})" if isinstance(node, kinds) else text
