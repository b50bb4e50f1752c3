"""Forward derivation builder used by the derived-rule templates.

Steps form a DAG: every :class:`Step` is validated by the kernel rules when it
is created, and :meth:`Deriver.linearize` turns the cone of one step into a
flat :class:`~snsproof.kernel.Proof`.  Hypotheses are identified by name, so
the context of a derivation is whatever hypothesis steps its cone contains.
"""

from __future__ import annotations

from typing import Mapping

from .axioms import instantiate
from .deduction import deduce
from .formula import Formula, split_impn, to_text
from .kernel import MP, Axiom, Hyp, Proof, ProofLine, check_mp, check_proof

__all__ = ["Step", "Deriver", "DerivationError"]


class DerivationError(ValueError):
    pass


class Step:
    """A validated formula together with how it was obtained.

    ``just`` is a kernel :class:`Hyp` or :class:`Axiom`, or a ``(minor, major)``
    pair of steps for modus ponens.
    """

    __slots__ = ("formula", "just")

    def __init__(self, formula: Formula, just):
        self.formula = formula
        self.just = just

    def __repr__(self) -> str:
        return f"Step({to_text(self.formula)})"


def _parents(step: Step):
    return step.just if isinstance(step.just, tuple) else ()


def cone(step: Step) -> list[Step]:
    """Steps ``step`` depends on, in an order where premises come first."""
    order: list[Step] = []
    seen: set[int] = set()
    stack = [(step, False)]
    while stack:
        s, expanded = stack.pop()
        if expanded:
            order.append(s)
            continue
        if id(s) in seen:
            continue
        seen.add(id(s))
        stack.append((s, True))
        for p in reversed(_parents(s)):
            if id(p) not in seen:
                stack.append((p, False))
    return order


class Deriver:
    """Builds steps and hands out fresh hypothesis names."""

    def __init__(self, reserved=()):
        self._reserved = set(reserved)
        self._counter = 0

    def fresh_name(self, stem: str = "h") -> str:
        while True:
            self._counter += 1
            name = f"{stem}{self._counter}"
            if name not in self._reserved:
                self._reserved.add(name)
                return name

    # -- kernel steps -------------------------------------------------------

    def assume(self, formula: Formula, name: str | None = None) -> Step:
        if name is None:
            name = self.fresh_name()
        else:
            self._reserved.add(name)
        return Step(formula, Hyp(name))

    def axiom(self, sid: str, **binding: Formula) -> Step:
        b = {k.upper(): v for k, v in binding.items()}
        return Step(instantiate(sid, b), Axiom(sid, b))

    def mp(self, minor: Step, major: Step) -> Step:
        got = check_mp(minor.formula, major.formula)
        if got is None:
            raise DerivationError(
                f"modus ponens does not apply: {to_text(minor.formula)} with "
                f"{to_text(major.formula)}")
        return Step(got, (minor, major))

    # -- bookkeeping ----------------------------------------------------------

    def context(self, step: Step) -> dict[str, Formula]:
        ctx: dict[str, Formula] = {}
        for s in cone(step):
            if isinstance(s.just, Hyp):
                prev = ctx.setdefault(s.just.name, s.formula)
                if prev != s.formula:
                    raise DerivationError(f"hypothesis {s.just.name} used with two formulas")
        return ctx

    def linearize(self, step: Step, hyps: Mapping[str, Formula] | None = None,
                  name: str = "") -> Proof:
        """Flatten the cone of ``step``; ``hyps`` defaults to the hypotheses it uses."""
        ctx = self.context(step)
        if hyps is None:
            hyps = ctx
        else:
            for n, f in ctx.items():
                if hyps.get(n) != f:
                    raise DerivationError(f"hypothesis {n} is not in the supplied context")
        index: dict[int, int] = {}
        lines: list[ProofLine] = []
        for s in cone(step):
            if isinstance(s.just, tuple):
                minor, major = s.just
                just = MP(index[id(minor)], index[id(major)])
            else:
                just = s.just
            index[id(s)] = len(lines)
            lines.append(ProofLine(s.formula, just))
        return Proof(dict(hyps), tuple(lines), name)

    def lift(self, proof: Proof, stand_ins: Mapping[str, Step] | None = None) -> Step:
        """Turn the lines of a checked proof into steps; returns the conclusion.

        Hypothesis lines named in ``stand_ins`` are replaced by the given steps.
        """
        stand_ins = stand_ins or {}
        steps: list[Step] = []
        for line in proof.lines:
            j = line.just
            if isinstance(j, MP):
                steps.append(Step(line.formula, (steps[j.minor], steps[j.major])))
            elif isinstance(j, Hyp) and j.name in stand_ins:
                steps.append(stand_ins[j.name])
            else:
                steps.append(Step(line.formula, j))
        return steps[-1]

    def discharge(self, step: Step, hyp: Step) -> Step:
        """Deduction theorem, backwards: ``hyp`` stays assumed in ``step``; the
        result proves ``hyp => step`` without it.

        Steps that do not depend on ``hyp`` are results already established
        from the remaining context, so the transformation only sees them as
        hypothesis lines (weakened, not re-derived); the original steps are
        put back afterwards.
        """
        if not isinstance(hyp.just, Hyp):
            raise DerivationError("can only discharge a hypothesis step")
        name = hyp.just.name
        order = cone(step)
        dependent: set[int] = set()
        for s in order:
            if isinstance(s.just, Hyp):
                if s.just.name == name:
                    if s.formula != hyp.formula:
                        raise DerivationError(f"hypothesis {name} used with two formulas")
                    dependent.add(id(s))
            elif any(id(p) in dependent for p in _parents(s)):
                dependent.add(id(s))

        frontier: dict[int, Step] = {}
        for s in order:
            if id(s) in dependent:
                for p in _parents(s):
                    if id(p) not in dependent:
                        frontier[id(p)] = p
        if id(step) not in dependent:
            frontier[id(step)] = step

        hyps = {name: hyp.formula}
        stand_ins: dict[str, Step] = {}
        index: dict[int, int] = {}
        lines: list[ProofLine] = []
        for s in order:
            if id(s) in frontier:
                tmp = self.fresh_name("lemma")
                hyps[tmp] = s.formula
                stand_ins[tmp] = s
                just = Hyp(tmp)
            elif id(s) in dependent:
                if isinstance(s.just, tuple):
                    just = MP(index[id(s.just[0])], index[id(s.just[1])])
                else:
                    just = s.just
            else:
                continue
            index[id(s)] = len(lines)
            lines.append(ProofLine(s.formula, just))

        proof = Proof(hyps, tuple(lines))
        report = check_proof(proof)
        if not report.accepted:
            raise DerivationError(f"sub-derivation rejected: {report.failure}")
        return self.lift(deduce(proof, name), stand_ins)

    # -- recurring compound steps ------------------------------------------

    def trans(self, x: Step, y: Step) -> Step:
        """``a => b`` and ``b => c`` give ``a => c`` (A1, two MPs)."""
        a, b = self._impn(x)
        _, c = self._impn(y)
        return self.mp(y, self.mp(x, self.axiom("A1", a=a, b=b, c=c)))

    def meet(self, x: Step, y: Step) -> Step:
        """``a => b`` and ``a => c`` give ``a => (b & c)`` (A2, two MPs)."""
        a, b = self._impn(x)
        _, c = self._impn(y)
        return self.mp(y, self.mp(x, self.axiom("A2", a=a, b=b, c=c)))

    def join(self, x: Step, y: Step) -> Step:
        """``a => c`` and ``b => c`` give ``(a | b) => c`` (A9, two MPs)."""
        a, c = self._impn(x)
        b, _ = self._impn(y)
        return self.mp(y, self.mp(x, self.axiom("A9", a=a, b=b, c=c)))

    def rule(self, rid: str, *premises: Step, variant: int = 1, **params: Formula) -> Step:
        """Inline a derived rule; ``variant`` picks the exit of two-conclusion rules."""
        from .rules.registry import apply_rule
        return apply_rule(self, rid, premises, params, variant)

    @staticmethod
    def _impn(s: Step) -> tuple[Formula, Formula]:
        parts = split_impn(s.formula)
        if parts is None:
            raise DerivationError(f"not a weak implication: {to_text(s.formula)}")
        return parts
