"""Reading and writing ``.snspf`` proof scripts.

    theorem lemma31b
    hyp h: p
    1. T ; axiom A23
    2. p ; hyp h
    3. ... ; mp 1 2
    qed

``#`` starts a comment.  Axiom lines may carry a binding ``[a:=f, b:=f]`` and
may use ``axiom *`` to let the checker find the schema.
"""

from __future__ import annotations

import re
from pathlib import Path

from .axioms import METAVARS
from .formula import ParseError, parse_formula, to_text
from .kernel import MP, Axiom, Hyp, Proof, ProofLine

__all__ = ["ScriptError", "read_script", "load_script", "write_script", "save_script"]


class ScriptError(ValueError):
    """Malformed script.  ``lineno`` is the 1-based line of the file."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


_IDENT = r"[A-Za-z_][A-Za-z0-9_]*"
_THEOREM = re.compile(rf"theorem\s+({_IDENT})$")
_HYP = re.compile(rf"hyp\s+({_IDENT})\s*:(.*)$")
_STEP = re.compile(r"(\d+)\.\s*(.*)$")
_J_HYP = re.compile(rf"hyp\s+({_IDENT})$")
_J_MP = re.compile(r"mp\s+(\d+)\s+(\d+)$")
_J_AXIOM = re.compile(r"axiom\s+(\*|A\d+)\s*(?:\[(.*)\])?$")
_BIND = re.compile(r"\s*([abc])\s*:=\s*(.*)$")


class _Memo:
    """Per-script parse cache: long proofs repeat formulas and share subterms."""

    def __init__(self):
        self.texts: dict[str, object] = {}
        self.nodes: dict = {}


def _formula(text: str, lineno: int, memo: _Memo | None = None):
    key = text.strip()
    if memo is not None and key in memo.texts:
        return memo.texts[key]
    try:
        f = parse_formula(key, memo.nodes if memo is not None else None)
    except ParseError as e:
        raise ScriptError(f"bad formula: {e}", lineno) from None
    if memo is not None:
        memo.texts[key] = f
    return f


def _justification(text: str, lineno: int, memo: _Memo | None = None):
    text = text.strip()
    if m := _J_HYP.match(text):
        return Hyp(m.group(1))
    if m := _J_MP.match(text):
        return MP(int(m.group(1)) - 1, int(m.group(2)) - 1)
    if m := _J_AXIOM.match(text):
        sid = None if m.group(1) == "*" else m.group(1)
        if m.group(2) is None:
            return Axiom(sid, None)
        if sid is None:
            raise ScriptError("'axiom *' takes no binding", lineno)
        binding = {}
        if not m.group(2).strip():
            return Axiom(sid, binding)
        for part in m.group(2).split(","):
            bm = _BIND.match(part)
            if bm is None:
                raise ScriptError(f"bad binding entry {part.strip()!r}", lineno)
            key = bm.group(1).upper()
            if key in binding:
                raise ScriptError(f"metavariable {bm.group(1)} bound twice", lineno)
            binding[key] = _formula(bm.group(2), lineno, memo)
        return Axiom(sid, binding)
    raise ScriptError(f"bad justification {text!r}", lineno)


def read_script(text: str) -> Proof:
    name = None
    hyps: dict = {}
    lines: list[ProofLine] = []
    done = False
    memo = _Memo()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if done:
            raise ScriptError("content after 'qed'", lineno)
        if name is None:
            m = _THEOREM.match(line)
            if m is None:
                raise ScriptError("expected 'theorem <name>'", lineno)
            name = m.group(1)
            continue
        if line == "qed":
            done = True
            continue
        if m := _HYP.match(line):
            if lines:
                raise ScriptError("hypotheses must precede the numbered lines", lineno)
            if m.group(1) in hyps:
                raise ScriptError(f"duplicate hypothesis {m.group(1)!r}", lineno)
            hyps[m.group(1)] = _formula(m.group(2), lineno, memo)
            continue
        if m := _STEP.match(line):
            n = int(m.group(1))
            if n != len(lines) + 1:
                raise ScriptError(f"expected line number {len(lines) + 1}, got {n}", lineno)
            body = m.group(2)
            if ";" not in body:
                raise ScriptError("missing ';' before the justification", lineno)
            ftext, jtext = body.rsplit(";", 1)
            lines.append(ProofLine(_formula(ftext, lineno, memo),
                                   _justification(jtext, lineno, memo)))
            continue
        raise ScriptError(f"unrecognised line {line!r}", lineno)
    if name is None:
        raise ScriptError("empty script")
    if not done:
        raise ScriptError("missing 'qed'")
    if not lines:
        raise ScriptError("a proof needs at least one line")
    return Proof(hyps, tuple(lines), name)


def load_script(path) -> Proof:
    return read_script(Path(path).read_text(encoding="utf-8"))


def _just_text(j, resugar: bool) -> str:
    if isinstance(j, Hyp):
        return f"hyp {j.name}"
    if isinstance(j, MP):
        return f"mp {j.minor + 1} {j.major + 1}"
    if j.id is None:
        return "axiom *"
    if j.binding is None:
        return f"axiom {j.id}"
    parts = [f"{m.lower()}:={to_text(j.binding[m], resugar)}" for m in METAVARS if m in j.binding]
    return f"axiom {j.id} [{', '.join(parts)}]"


def write_script(proof: Proof, name: str | None = None, resugar: bool = True,
                 comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(f"theorem {name or proof.name or 'untitled'}")
    for h, f in proof.hyps.items():
        out.append(f"hyp {h}: {to_text(f, resugar)}")
    for i, line in enumerate(proof.lines, 1):
        out.append(f"{i}. {to_text(line.formula, resugar)} ; {_just_text(line.just, resugar)}")
    out.append("qed")
    return "\n".join(out) + "\n"


def save_script(proof: Proof, path, **kw) -> None:
    Path(path).write_text(write_script(proof, **kw), encoding="utf-8")
