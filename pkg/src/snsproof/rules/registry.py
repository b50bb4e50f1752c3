"""Rule templates, the registry, and elaboration into kernel proofs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from ..derive import DerivationError, Deriver, Step
from ..formula import Formula, parse_formula, substitute, to_text, variables
from ..kernel import Proof, check_proof

__all__ = [
    "RuleTemplate", "RuleError", "UnknownRule", "IncompleteBinding", "ShapeMismatch",
    "HypothesisConflict", "list_rules", "get_rule", "elaborate", "apply_rule",
    "normalize_binding", "PARAMS",
]

# Rule parameters are written a, b, c, t in templates.
PARAMS = ("a", "b", "c", "t")
_ALIASES = {"α": "a", "β": "b", "γ": "c", "alpha": "a", "beta": "b", "gamma": "c"}


class RuleError(ValueError):
    pass


class UnknownRule(RuleError):
    pass


class IncompleteBinding(RuleError):
    pass


class ShapeMismatch(RuleError):
    def __init__(self, message: str, expected: Formula | None = None,
                 actual: Formula | None = None):
        self.expected = expected
        self.actual = actual
        super().__init__(message)


class HypothesisConflict(RuleError):
    pass


@dataclass(frozen=True)
class RuleTemplate:
    id: str
    params: tuple[str, ...]
    premises: tuple[Formula, ...]
    extra_hyps: tuple[Formula, ...]
    conclusions: tuple[Formula, ...]
    body: Callable = None

    @property
    def conclusion(self) -> Formula:
        return self.conclusions[0]

    @property
    def variants(self) -> int:
        return len(self.conclusions)

    def instance(self, binding: Mapping[str, Formula]):
        """Premises, extra hypotheses and conclusions under ``binding``."""
        sub = lambda fs: tuple(substitute(f, binding) for f in fs)
        return sub(self.premises), sub(self.extra_hyps), sub(self.conclusions)

    def describe(self) -> str:
        parts = []
        if self.premises:
            parts.append("from " + ", ".join(to_text(f) for f in self.premises))
        if self.extra_hyps:
            parts.append("assuming " + ", ".join(to_text(f) for f in self.extra_hyps))
        concl = " and ".join(to_text(f) for f in self.conclusions)
        return f"{self.id}: " + "; ".join(parts + [concl])


_REGISTRY: dict[str, RuleTemplate] = {}


def rule(rid: str, conclusion: str | tuple[str, ...], premises=(), extra=()):
    """Register the decorated body under ``rid``; shapes are written with a, b, c, t."""
    concls = (conclusion,) if isinstance(conclusion, str) else conclusion
    shapes = [parse_formula(s) for s in (*premises, *extra, *concls)]
    used = set().union(*(variables(f) for f in shapes))
    params = tuple(p for p in PARAMS if p in used)

    def register(body):
        if rid in _REGISTRY:
            raise RuntimeError(f"rule {rid} registered twice")
        _REGISTRY[rid] = RuleTemplate(
            rid, params,
            tuple(parse_formula(s) for s in premises),
            tuple(parse_formula(s) for s in extra),
            tuple(parse_formula(s) for s in concls),
            body,
        )
        return body

    return register


def _load():
    from . import lemma31, lemma33  # noqa: F401  (registration side effect)


def list_rules() -> list[RuleTemplate]:
    _load()
    return list(_REGISTRY.values())


def get_rule(rid: str) -> RuleTemplate:
    _load()
    try:
        return _REGISTRY[rid]
    except KeyError:
        raise UnknownRule(f"unknown rule {rid!r}") from None


def normalize_binding(tmpl: RuleTemplate, binding: Mapping[str, Formula]) -> dict[str, Formula]:
    out = {}
    for k, v in binding.items():
        key = _ALIASES.get(k, k)
        if key not in PARAMS:
            raise IncompleteBinding(f"unknown parameter {k!r}")
        if key not in tmpl.params:
            raise IncompleteBinding(f"{tmpl.id} has no parameter {k!r}")
        out[key] = v
    missing = [p for p in tmpl.params if p not in out]
    if missing:
        raise IncompleteBinding(f"{tmpl.id} needs a binding for {', '.join(missing)}")
    return out


def apply_rule(d: Deriver, rid: str, steps: Sequence[Step], params: Mapping[str, Formula],
               variant: int = 1) -> Step:
    """Run a rule body inside an ongoing derivation."""
    tmpl = get_rule(rid)
    binding = normalize_binding(tmpl, params)
    prems, extras, concls = tmpl.instance(binding)
    wanted = prems + extras
    if len(steps) != len(wanted):
        raise ShapeMismatch(f"{rid} takes {len(wanted)} premise(s), got {len(steps)}")
    for i, (s, f) in enumerate(zip(steps, wanted), 1):
        if s.formula != f:
            raise ShapeMismatch(f"{rid} premise {i}: expected {to_text(f)}, got "
                                f"{to_text(s.formula)}", f, s.formula)
    if not 1 <= variant <= len(concls):
        raise RuleError(f"{rid} has {len(concls)} variant(s), not {variant}")
    exits = tmpl.body(d, *steps, **binding)
    if not isinstance(exits, tuple):
        exits = (exits,)
    got = exits[variant - 1]
    if got.formula != concls[variant - 1]:
        raise DerivationError(f"{rid} derived {to_text(got.formula)} instead of "
                              f"{to_text(concls[variant - 1])}")
    return got


def _merge_contexts(premises: Sequence[Proof]) -> dict[str, Formula]:
    merged: dict[str, Formula] = {}
    for p in premises:
        for n, f in p.hyps.items():
            if n in merged and merged[n] != f:
                raise HypothesisConflict(
                    f"hypothesis {n} is {to_text(merged[n])} in one premise and {to_text(f)} "
                    "in another")
            merged[n] = f
    return merged


def elaborate(rid: str, binding: Mapping[str, Formula], premises: Sequence[Proof] = (),
              variant: int = 1, name: str | None = None) -> Proof:
    """Checker-accepted proof of the rule's conclusion under ``binding``.

    The hypotheses are those of the premise proofs plus one fresh hypothesis per
    extra assumption of the rule, named ``h1``, ``h2``, ... avoiding clashes.
    """
    tmpl = get_rule(rid)
    b = normalize_binding(tmpl, binding)
    prems, extras, _ = tmpl.instance(b)
    if len(premises) != len(prems):
        raise ShapeMismatch(
            f"{rid} needs {len(prems)} premise proof(s) "
            f"({', '.join(to_text(f) for f in prems) or 'none'}), got {len(premises)}")
    for i, (p, f) in enumerate(zip(premises, prems), 1):
        if p.conclusion != f:
            raise ShapeMismatch(f"premise {i}: expected {to_text(f)}, got {to_text(p.conclusion)}",
                                f, p.conclusion)
    ctx = _merge_contexts(premises)
    d = Deriver(reserved=ctx)
    steps = [d.lift(p) for p in premises]
    for f in extras:
        h = d.fresh_name()
        ctx[h] = f
        steps.append(d.assume(f, h))
    exit_step = apply_rule(d, rid, steps, b, variant)
    proof = d.linearize(exit_step, ctx, name or corpus_name(rid, variant))
    report = check_proof(proof)
    if not report.accepted:
        raise DerivationError(f"{rid} elaborated to a rejected proof: {report.failure}")
    return proof


def corpus_name(rid: str, variant: int = 1) -> str:
    """``L31b`` -> ``lemma31b``; second variants get a ``_2`` suffix."""
    stem = "lemma" + rid[1:]
    return stem if variant == 1 else f"{stem}_{variant}"
