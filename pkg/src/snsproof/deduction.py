"""The deduction theorem as a proof transformation.

``deduce`` turns a checked proof of ``beta`` from ``Gamma, alpha`` into a
checked proof of ``alpha => beta`` from ``Gamma`` by rewriting it line by
line; ``undeduce`` goes the other way with one hypothesis line and one MP.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from .axioms import instantiate
from .formula import TOP, And, Formula, impn, to_text
from .kernel import MP, Axiom, Hyp, Proof, ProofLine, check_mp

__all__ = [
    "Slot", "Local", "Fragment", "frag_weaken", "frag_refl",
    "deduce", "undeduce", "DeductionError",
]


class DeductionError(ValueError):
    pass


@dataclass(frozen=True)
class Slot:
    """Reference to a premise line supplied when the fragment is spliced."""

    name: str


@dataclass(frozen=True)
class Local:
    """Reference to an earlier line of the same fragment."""

    index: int


Ref = Union[Slot, Local]


@dataclass(frozen=True)
class FragLine:
    formula: Formula
    just: object  # Axiom, or a (minor, major) pair of Refs


@dataclass(frozen=True)
class Fragment:
    lines: tuple[FragLine, ...]
    slots: Mapping[str, Formula]

    @property
    def exit(self) -> Formula:
        return self.lines[-1].formula

    def __len__(self) -> int:
        return len(self.lines)

    def splice(self, out: list[ProofLine], bound: Mapping[str, int]) -> int:
        """Append to ``out`` with slots bound to indices of ``out``; returns the exit index."""
        for name, expected in self.slots.items():
            if out[bound[name]].formula != expected:
                raise DeductionError(f"slot {name} bound to a line not proving "
                                     f"{to_text(expected)}")
        base = len(out)

        def resolve(r: Ref) -> int:
            return bound[r.name] if isinstance(r, Slot) else base + r.index

        for fl in self.lines:
            if isinstance(fl.just, Axiom):
                out.append(ProofLine(fl.formula, fl.just))
            else:
                minor, major = fl.just
                out.append(ProofLine(fl.formula, MP(resolve(minor), resolve(major))))
        return len(out) - 1


class _FragBuilder:
    def __init__(self):
        self.lines: list[FragLine] = []

    def formula(self, r: Ref, slots) -> Formula:
        return slots[r.name] if isinstance(r, Slot) else self.lines[r.index].formula

    def axiom(self, sid: str, **b: Formula) -> Local:
        binding = {k.upper(): v for k, v in b.items()}
        self.lines.append(FragLine(instantiate(sid, binding), Axiom(sid, binding)))
        return Local(len(self.lines) - 1)

    def mp(self, minor: Ref, major: Ref, slots) -> Local:
        got = check_mp(self.formula(minor, slots), self.formula(major, slots))
        assert got is not None, "fragment construction produced an invalid MP"
        self.lines.append(FragLine(got, (minor, major)))
        return Local(len(self.lines) - 1)


def _a15_split(fb: _FragBuilder, a: Formula, b: Formula, c: Formula, slots) -> Local:
    """``((a & b) => c) => (a => (b => c))`` from A15 via its first conjunct (A3)."""
    s1 = fb.axiom("A15", a=a, b=b, c=c)
    whole = fb.lines[s1.index].formula
    s2 = fb.axiom("A3", a=whole.left, b=whole.right)
    return fb.mp(s1, s2, slots)


def frag_weaken(delta: Formula, beta: Formula) -> Fragment:
    """From a line proving ``delta``, derive ``beta => delta`` (6 new lines)."""
    slots = {"delta": delta}
    fb = _FragBuilder()
    s3 = _a15_split(fb, delta, beta, delta, slots)
    s4 = fb.axiom("A3", a=delta, b=beta)
    s5 = fb.mp(s4, s3, slots)
    fb.mp(Slot("delta"), s5, slots)
    return Fragment(tuple(fb.lines), slots)


def frag_refl(alpha: Formula) -> Fragment:
    """Closed 7-line proof of ``alpha => alpha`` through the axiom ``T``."""
    fb = _FragBuilder()
    s1 = fb.axiom("A23")
    s4 = _a15_split(fb, TOP, alpha, alpha, {})
    s5 = fb.axiom("A4", a=TOP, b=alpha)
    s6 = fb.mp(s5, s4, {})
    fb.mp(s1, s6, {})
    return Fragment(tuple(fb.lines), {})


def _frag_mp_case(alpha: Formula, gamma: Formula, delta: Formula) -> Fragment:
    """From ``alpha => (gamma => delta)``, ``alpha => gamma`` and ``alpha => alpha``
    derive ``alpha => delta`` (10 new lines)."""
    slots = {
        "major": impn(alpha, impn(gamma, delta)),
        "minor": impn(alpha, gamma),
        "refl": impn(alpha, alpha),
    }
    fb = _FragBuilder()
    s3 = fb.axiom("A19", a=alpha, b=gamma, c=delta)
    whole = fb.lines[s3.index].formula
    s4 = fb.axiom("A3", a=whole.left, b=whole.right)
    s5 = fb.mp(s3, s4, slots)
    s6 = fb.mp(Slot("major"), s5, slots)
    s8 = fb.axiom("A2", a=alpha, b=alpha, c=gamma)
    s9 = fb.mp(Slot("refl"), s8, slots)
    s10 = fb.mp(Slot("minor"), s9, slots)
    s11 = fb.axiom("A1", a=alpha, b=And(alpha, gamma), c=delta)
    s12 = fb.mp(s10, s11, slots)
    fb.mp(s6, s12, slots)
    return Fragment(tuple(fb.lines), slots)


def deduce(proof: Proof, hyp: str) -> Proof:
    """Discharge hypothesis ``hyp``.  ``proof`` must already be checker-accepted.

    Lines are classified by justification: the discharged hypothesis becomes
    the shared ``alpha => alpha`` block, other hypotheses and axiom instances
    are weakened, and MP lines go through the A19/A2/A1 schema.
    """
    if hyp not in proof.hyps:
        raise DeductionError(f"unknown hypothesis {hyp!r}")
    alpha = proof.hyps[hyp]
    out: list[ProofLine] = []
    # where the transformed "alpha => line_i" lives in out
    moved: list[int] = []

    needs_refl = any(isinstance(l.just, MP) or (isinstance(l.just, Hyp) and l.just.name == hyp)
                     for l in proof.lines)
    refl = frag_refl(alpha).splice(out, {}) if needs_refl else None

    for i, line in enumerate(proof.lines):
        j = line.just
        if isinstance(j, Hyp) and j.name == hyp:
            moved.append(refl)
        elif isinstance(j, (Hyp, Axiom)):
            out.append(ProofLine(line.formula, j))
            moved.append(frag_weaken(line.formula, alpha).splice(out, {"delta": len(out) - 1}))
        elif isinstance(j, MP):
            if not (0 <= j.minor < i and 0 <= j.major < i):
                raise DeductionError(f"line {i + 1} refers forward; check the proof first")
            gamma = proof.lines[j.minor].formula
            frag = _frag_mp_case(alpha, gamma, line.formula)
            moved.append(frag.splice(out, {"major": moved[j.major], "minor": moved[j.minor],
                                           "refl": refl}))
        else:
            raise DeductionError(f"line {i + 1}: unsupported justification {j!r}")

    hyps = {n: f for n, f in proof.hyps.items() if n != hyp}
    if moved[-1] != len(out) - 1:
        # the conclusion was the discharged hypothesis: repeat the shared
        # alpha => alpha line; its MP references stay valid
        out.append(out[moved[-1]])
    return Proof(hyps, tuple(out), proof.name)


def undeduce(proof: Proof, alpha: Formula, name: str) -> Proof:
    """From a proof of ``alpha => beta`` build a proof of ``beta`` with ``name: alpha`` added."""
    concl = proof.conclusion
    beta = check_mp(alpha, concl)
    if beta is None:
        raise DeductionError(f"conclusion is not of the form {to_text(alpha)} => ...")
    if name in proof.hyps:
        raise DeductionError(f"hypothesis name {name!r} already in use")
    hyps = dict(proof.hyps)
    hyps[name] = alpha
    n = len(proof.lines)
    lines = proof.lines + (ProofLine(alpha, Hyp(name)), ProofLine(beta, MP(n, n - 1)))
    return Proof(hyps, lines, proof.name)
