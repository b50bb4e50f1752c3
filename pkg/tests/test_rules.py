import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from snsproof.formula import TOP, And, Neg, Or, Var, parse_formula, substitute
from snsproof.kernel import MP, Axiom, Hyp, Proof, ProofLine, check_proof, substitute_proof
from snsproof.rules import (
    HypothesisConflict, IncompleteBinding, RuleError, ShapeMismatch, UnknownRule, corpus_name,
    elaborate, get_rule, list_rules,
)
from test_formula import core_formulas

p, q, r, s = Var("p"), Var("q"), Var("r"), Var("s")
BASE = {"a": p, "b": q, "c": r, "t": s}

RULES = list_rules()
VARIANTS = [(t.id, v) for t in RULES for v in range(1, t.variants + 1)]
CONDITIONAL = [t.id for t in RULES if t.premises]


def assumed(formulas, start=1):
    return [Proof({f"h{i}": f}, (ProofLine(f, Hyp(f"h{i}")),)) for i, f in enumerate(formulas, start)]


def run(rid, binding, variant=1):
    tmpl = get_rule(rid)
    b = {k: binding[k] for k in tmpl.params}
    prems, _, _ = tmpl.instance(b)
    return elaborate(rid, b, assumed(prems), variant=variant)


def skeleton(proof):
    out = []
    for line in proof.lines:
        j = line.just
        if isinstance(j, Axiom):
            out.append(("axiom", j.id))
        else:
            out.append(j)
    return out


# -- the registry ----------------------------------------------------------------

def test_registry_contents():
    ids = [t.id for t in RULES]
    assert len(ids) == 42
    assert ids == [f"L31{c}" for c in "abcdefghijklmnopqrstuv"] + \
                  [f"L33{c}" for c in "abcdefghijklmnopqrst"]
    assert [t.id for t in list_rules()] == ids


def test_registry_examples():
    g = get_rule("L31g")
    a, b = Var("a"), Var("b")
    assert g.premises == (parse_formula("a ==> b"), a)
    assert g.conclusion == b
    o = get_rule("L33o")
    assert o.premises == () and o.conclusion == parse_formula("(a & ~a) => b")
    assert get_rule("L33s").extra_hyps == tuple(
        parse_formula(x) for x in ("a ==> b", "b ==> a", "c ==> t", "t ==> c"))


def test_two_conclusion_rules():
    two = sorted(t.id for t in RULES if t.variants == 2)
    assert two == ["L31c", "L31i", "L31j", "L31n", "L31o", "L33h", "L33i", "L33j"]


def test_corpus_names():
    assert corpus_name("L31b") == "lemma31b"
    assert corpus_name("L33h", 2) == "lemma33h_2"


# -- elaboration -----------------------------------------------------------------

def test_elaborate_examples():
    refl = elaborate("L31b", {"a": p})
    assert len(refl) == 7 and refl.conclusion == parse_formula("p => p")
    assert check_proof(refl).accepted

    both = elaborate("L31h", {"a": p, "b": q}, assumed([p, q]))
    assert both.conclusion == And(p, q)
    assert both.hyps == {"h1": p, "h2": q}
    assert check_proof(both).accepted

    explosion = elaborate("L33o", {"a": p, "b": q})
    assert explosion.hyps == {}
    assert explosion.conclusion == parse_formula("(p & ~p) => q")
    assert check_proof(explosion).accepted


@pytest.mark.parametrize("rid, variant", VARIANTS)
def test_every_rule_elaborates_to_an_accepted_proof(rid, variant):
    tmpl = get_rule(rid)
    proof = run(rid, BASE, variant)
    b = {k: BASE[k] for k in tmpl.params}
    prems, extras, concls = tmpl.instance(b)
    assert proof.conclusion == concls[variant - 1]
    assert sorted(proof.hyps.values(), key=str) == sorted([*prems, *extras], key=str)
    assert check_proof(proof).accepted


@pytest.mark.parametrize("rid, variant", VARIANTS)
def test_only_declared_hypotheses_axioms_and_mp(rid, variant):
    tmpl = get_rule(rid)
    proof = run(rid, BASE, variant)
    allowed = set(proof.hyps)
    assert len(allowed) == len(tmpl.premises) + len(tmpl.extra_hyps)
    for line in proof.lines:
        j = line.just
        assert isinstance(j, (Hyp, Axiom, MP))
        if isinstance(j, Hyp):
            assert j.name in allowed
        if isinstance(j, Axiom):
            assert j.id is not None and j.binding is not None


COMPLEX = {"a": parse_formula("p & ~q"), "b": parse_formula("q -> r"),
           "c": parse_formula("~~p | T"), "t": Neg(Or(r, p))}


@pytest.mark.parametrize("rid, variant", VARIANTS)
def test_parametricity(rid, variant):
    one = run(rid, BASE, variant)
    two = run(rid, COMPLEX, variant)
    assert len(one) == len(two)
    assert skeleton(one) == skeleton(two)


@pytest.mark.parametrize("rid, variant", VARIANTS)
def test_substitution_naturality(rid, variant):
    subst = {"p": parse_formula("r | ~s"), "q": TOP, "r": parse_formula("p => q"), "s": p}
    tmpl = get_rule(rid)
    b = {k: BASE[k] for k in tmpl.params}
    prems, _, _ = tmpl.instance(b)
    premises = assumed(prems)
    plain = elaborate(rid, b, premises, variant=variant)
    moved = elaborate(rid, {k: substitute(f, subst) for k, f in b.items()},
                      [substitute_proof(x, subst) for x in premises], variant=variant)
    assert moved.lines == substitute_proof(plain, subst).lines
    assert moved.hyps == substitute_proof(plain, subst).hyps


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.sampled_from(VARIANTS),
       st.fixed_dictionaries({k: core_formulas(4) for k in "abct"}))
def test_random_bindings_elaborate(rv, binding):
    rid, variant = rv
    proof = run(rid, binding, variant)
    assert check_proof(proof).accepted
    assert skeleton(proof) == skeleton(run(rid, BASE, variant))


def test_premises_may_be_real_proofs():
    # L31g from an elaborated strong implication and a hypothesis
    strong = elaborate("L31k", {"a": p})  # p ==> p
    proof = elaborate("L31g", {"a": p, "b": p}, [strong, assumed([p])[0]])
    assert proof.conclusion == p and proof.hyps == {"h1": p}
    assert check_proof(proof).accepted


def test_extra_hypotheses_avoid_premise_names():
    prem = Proof({"h1": q}, (ProofLine(q, Hyp("h1")),))
    proof = elaborate("L33t", {"a": q, "b": p}, [])
    assert set(proof.hyps) == {"h1"}
    lifted = elaborate("L31a", {"a": q, "b": p}, [prem])
    assert lifted.hyps == {"h1": q}


# -- errors ----------------------------------------------------------------------

@pytest.mark.parametrize("rid", CONDITIONAL)
def test_missing_premise_is_a_shape_mismatch(rid):
    tmpl = get_rule(rid)
    b = {k: BASE[k] for k in tmpl.params}
    prems, _, _ = tmpl.instance(b)
    with pytest.raises(ShapeMismatch):
        elaborate(rid, b, assumed(prems)[:-1])


@pytest.mark.parametrize("rid", CONDITIONAL)
def test_wrong_premise_reports_expected_and_actual(rid):
    tmpl = get_rule(rid)
    b = {k: BASE[k] for k in tmpl.params}
    prems, _, _ = tmpl.instance(b)
    wrong = list(prems)
    wrong[0] = And(wrong[0], TOP)
    with pytest.raises(ShapeMismatch) as e:
        elaborate(rid, b, assumed(wrong))
    assert e.value.expected == prems[0]
    assert e.value.actual == wrong[0]


def test_binding_errors():
    with pytest.raises(UnknownRule):
        elaborate("L34a", {})
    with pytest.raises(IncompleteBinding, match="b"):
        elaborate("L31d", {"a": p})
    with pytest.raises(IncompleteBinding):
        elaborate("L31b", {"a": p, "b": q})
    with pytest.raises(IncompleteBinding):
        elaborate("L31b", {"z": p})
    with pytest.raises(RuleError):
        elaborate("L31b", {"a": p}, variant=2)


def test_binding_aliases():
    assert elaborate("L31d", {"α": p, "beta": q}) == elaborate("L31d", {"a": p, "b": q})


def test_hypothesis_conflict():
    one = Proof({"h": p}, (ProofLine(p, Hyp("h")),))
    other = Proof({"h": q}, (ProofLine(q, Hyp("h")),))
    with pytest.raises(HypothesisConflict):
        elaborate("L31h", {"a": p, "b": q}, [one, other])
    shared = elaborate("L31h", {"a": p, "b": p}, [one, one])
    assert shared.hyps == {"h": p} and check_proof(shared).accepted
