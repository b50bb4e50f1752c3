"""Independent reference implementations used to cross-check the library.

Nothing here calls the code under test for the property being checked: the
matcher oracle instantiates templates by brute force, the printer writes every
connective fully parenthesised, and the proof generator builds proofs from its
own bookkeeping.
"""

from __future__ import annotations

import itertools
import random

from snsproof.axioms import SCHEMATA
from snsproof.formula import TOP, And, Imp, Metavar, Neg, Or, Top, Var

ATOMS_2 = (Var("p"), Var("q"), TOP)


# -- formulas -------------------------------------------------------------------

def fully_parenthesized(f) -> str:
    """Core formula as text with every binary node wrapped in parentheses."""
    t = type(f)
    if t is Var:
        return f.name
    if t is Top:
        return "T"
    if t is Neg:
        return f"~{fully_parenthesized(f.operand)}"
    op = {And: "&", Or: "|", Imp: "->"}[t]
    return f"({fully_parenthesized(f.left)} {op} {fully_parenthesized(f.right)})"


def subterms(f) -> list:
    """Distinct subformulas of ``f``, ``f`` included."""
    out, stack = [], [f]
    while stack:
        g = stack.pop()
        if g not in out:
            out.append(g)
        if type(g) is Neg:
            stack.append(g.operand)
        elif type(g) in (And, Or, Imp):
            stack.extend((g.left, g.right))
    return out


def plug(template, assignment):
    """Replace metavariables of ``template`` by the assigned formulas."""
    t = type(template)
    if t is Metavar:
        return assignment[template.name]
    if t is Top:
        return template
    if t is Neg:
        return Neg(plug(template.operand, assignment))
    return t(plug(template.left, assignment), plug(template.right, assignment))


def metavars_of(template) -> list[str]:
    seen: list[str] = []
    stack = [template]
    while stack:
        g = stack.pop()
        if type(g) is Metavar and g.name not in seen:
            seen.append(g.name)
        elif type(g) is Neg:
            stack.append(g.operand)
        elif type(g) in (And, Or, Imp):
            stack.extend((g.left, g.right))
    return sorted(seen)


def node_count(f) -> int:
    t = type(f)
    if t is Neg:
        return 1 + node_count(f.operand)
    if t in (And, Or, Imp):
        return 1 + node_count(f.left) + node_count(f.right)
    return 1


def occurrences(template) -> dict[str, int]:
    counts: dict[str, int] = {}
    stack = [template]
    while stack:
        g = stack.pop()
        if type(g) is Metavar:
            counts[g.name] = counts.get(g.name, 0) + 1
        elif type(g) is Neg:
            stack.append(g.operand)
        elif type(g) in (And, Or, Imp):
            stack.extend((g.left, g.right))
    return counts


def brute_force_match(template, f):
    """Every binding that instantiates ``template`` to ``f``.

    A metavariable can only ever stand for a subformula of ``f``, so trying all
    assignments from that finite set is complete.  Assignments whose instance
    would have the wrong number of nodes are skipped without building it.
    """
    names = metavars_of(template)
    if not names:
        return [{}] if template == f else []
    occ = occurrences(template)
    fixed = node_count(template) - sum(occ.values())
    target = node_count(f)
    if fixed + sum(occ.values()) > target:
        return []
    cands = [(g, node_count(g)) for g in subterms(f)]
    found = []
    for combo in itertools.product(cands, repeat=len(names)):
        if fixed + sum(occ[m] * n for m, (_, n) in zip(names, combo)) != target:
            continue
        b = {m: g for m, (g, _) in zip(names, combo)}
        if plug(template, b) == f:
            found.append(b)
    return found


def formulas_of_size(n: int, atoms=ATOMS_2, _memo=None):
    """All core formulas with exactly ``n`` nodes (leaves count one each)."""
    memo = {} if _memo is None else _memo
    if n in memo:
        return memo[n]
    if n == 1:
        out = list(atoms)
    else:
        out = [Neg(g) for g in formulas_of_size(n - 1, atoms, memo)]
        for k in range(1, n - 1):
            lefts = formulas_of_size(k, atoms, memo)
            rights = formulas_of_size(n - 1 - k, atoms, memo)
            for cls in (And, Or, Imp):
                out.extend(cls(x, y) for x in lefts for y in rights)
    memo[n] = out
    return out


def iter_formulas_of_size(n: int, atoms=ATOMS_2):
    """Streaming variant of :func:`formulas_of_size` that does not keep level ``n``."""
    if n == 1:
        yield from atoms
        return
    yield from (Neg(g) for g in iter_formulas_of_size(n - 1, atoms))
    for k in range(1, n - 1):
        for cls in (And, Or, Imp):
            for x in iter_formulas_of_size(k, atoms):
                for y in iter_formulas_of_size(n - 1 - k, atoms):
                    yield cls(x, y)


def count_formulas(max_size: int, n_atoms: int = 3) -> int:
    counts = {1: n_atoms}
    for n in range(2, max_size + 1):
        counts[n] = counts[n - 1] + 3 * sum(counts[k] * counts[n - 1 - k] for k in range(1, n - 1))
    return sum(counts.values())


def random_formula(rng: random.Random, depth: int = 4, atoms=("p", "q", "r")):
    if depth == 0 or rng.random() < 0.25:
        return TOP if rng.random() < 0.1 else Var(rng.choice(atoms))
    kind = rng.randrange(4)
    if kind == 0:
        return Neg(random_formula(rng, depth - 1, atoms))
    cls = (And, Or, Imp)[kind - 1]
    return cls(random_formula(rng, depth - 1, atoms), random_formula(rng, depth - 1, atoms))


# -- proofs ---------------------------------------------------------------------

def weak(a, b):
    """``a -> (a & b)``, written out independently of the library helper."""
    return Imp(a, And(a, b))


def _antecedent(f):
    if type(f) is Imp and type(f.right) is And and f.right.left == f.left:
        return f.left, f.right.right
    return None


def random_proof(rng: random.Random, max_lines: int = 30, alpha_name: str = "a0"):
    """A proof (hyps, lines) of some beta from a context containing ``alpha_name``.

    Lines are ``(formula, kind, data)`` with kind in hyp/axiom/mp; the builder
    only emits MP steps whose major premise it constructed as a weak
    implication, so every proof is correct by construction.
    """
    alpha = random_formula(rng, 2)
    hyps = {alpha_name: alpha}
    for i in range(rng.randrange(3)):
        hyps[f"g{i}"] = random_formula(rng, 2)
    # hypotheses of weak-implication shape make MP chains through alpha likely
    hyps["link"] = weak(alpha, random_formula(rng, 2))
    lines: list[tuple] = []

    def add(f, kind, data):
        lines.append((f, kind, data))
        return len(lines) - 1

    def axiom_line():
        s = rng.choice(SCHEMATA)
        b = {m: random_formula(rng, 2) for m in s.metavars}
        return add(plug(s.template, b), "axiom", (s.id, b))

    def mp_via_axiom(i):
        # find a schema whose antecedent can be made equal to line i
        f = lines[i][0]
        order = list(SCHEMATA)
        rng.shuffle(order)
        for s in order:
            parts = _antecedent(s.template)
            if parts is None:
                continue
            for b in brute_force_match(parts[0], f)[:1]:
                full = {m: b.get(m) or random_formula(rng, 2) for m in s.metavars}
                j = add(plug(s.template, full), "axiom", (s.id, full))
                return add(_antecedent(lines[j][0])[1], "mp", (i, j))
        return None

    target = rng.randrange(1, max_lines + 1)
    while len(lines) < target:
        r = rng.random()
        pairs = [(i, j) for j, (g, _, _) in enumerate(lines)
                 if (ant := _antecedent(g)) is not None
                 for i, (h, _, _) in enumerate(lines) if h == ant[0]]
        if r < 0.25 or not lines:
            name = rng.choice(sorted(hyps))
            add(hyps[name], "hyp", name)
        elif r < 0.45 and pairs:
            i, j = rng.choice(pairs)
            add(_antecedent(lines[j][0])[1], "mp", (i, j))
        elif r < 0.8 and len(lines) + 2 <= max_lines:
            if mp_via_axiom(rng.randrange(len(lines))) is None:
                axiom_line()
        else:
            axiom_line()
    return hyps, lines[:max_lines]


def to_proof(hyps, lines, name="fuzz"):
    from snsproof.kernel import MP, Axiom, Hyp, Proof, ProofLine

    out = []
    for f, kind, data in lines:
        if kind == "hyp":
            just = Hyp(data)
        elif kind == "axiom":
            just = Axiom(data[0], dict(data[1]))
        else:
            just = MP(*data)
        out.append(ProofLine(f, just))
    return Proof(dict(hyps), tuple(out), name)


def naive_check(proof) -> int | None:
    """Index of the first unjustified line, or ``None``; written independently
    of the kernel (templates are instantiated with :func:`plug`, axiom
    membership without a binding is decided by :func:`brute_force_match`)."""
    from snsproof.kernel import MP, Axiom, Hyp

    by_id = {s.id: s for s in SCHEMATA}
    for i, line in enumerate(proof.lines):
        f, j = line.formula, line.just
        if isinstance(j, Hyp):
            ok = proof.hyps.get(j.name) == f
        elif isinstance(j, Axiom):
            if j.id is None:
                ok = any(brute_force_match(s.template, f) for s in SCHEMATA)
            elif j.id not in by_id:
                ok = False
            elif j.binding is None:
                ok = bool(brute_force_match(by_id[j.id].template, f))
            else:
                names = metavars_of(by_id[j.id].template)
                ok = all(m in j.binding for m in names) and \
                    plug(by_id[j.id].template, j.binding) == f
        elif isinstance(j, MP):
            ok = (0 <= j.minor < i and 0 <= j.major < i
                  and proof.lines[j.major].formula == weak(proof.lines[j.minor].formula, f))
        else:
            ok = False
        if not ok:
            return i
    return None
