import random

import pytest

from oracles import naive_check, random_proof, to_proof, weak
from snsproof.deduction import DeductionError, deduce, frag_refl, frag_weaken, undeduce
from snsproof.formula import TOP, Var, parse_formula
from snsproof.kernel import MP, Axiom, Hyp, Proof, ProofLine, check_proof

p, q, r = Var("p"), Var("q"), Var("r")


def _single(name, f, **more):
    return Proof({name: f, **more}, (ProofLine(f, Hyp(name)),))


def _as_proof(frag, premises=()):
    """Splice a fragment after the given hypothesis lines and return the proof."""
    out = [ProofLine(f, Hyp(f"s{i}")) for i, f in enumerate(premises)]
    bound = {name: i for i, name in enumerate(frag.slots)}
    frag.splice(out, bound)
    return Proof({f"s{i}": f for i, f in enumerate(premises)}, tuple(out))


def test_weaken_fragment():
    frag = frag_weaken(p, q)
    assert len(frag) == 6
    assert frag.exit == parse_formula("q => p")
    assert check_proof(_as_proof(frag, [p])).accepted
    assert frag_weaken(TOP, TOP).exit == parse_formula("T => T")


def test_refl_fragment():
    frag = frag_refl(p)
    assert len(frag) == 7 and not frag.slots
    assert frag.exit == parse_formula("p => p")
    assert frag.lines[0].formula == TOP and frag.lines[0].just == Axiom("A23", {})
    assert check_proof(_as_proof(frag)).accepted
    assert frag_refl(TOP).exit == parse_formula("T => T")
    strong = parse_formula("p ==> q")
    assert check_proof(_as_proof(frag_refl(strong))).accepted


def test_splice_rejects_wrong_slot():
    with pytest.raises(DeductionError):
        frag_weaken(p, q).splice([ProofLine(q, Hyp("x"))], {"delta": 0})


def test_deduce_discharged_hypothesis_alone():
    out = deduce(_single("h", p), "h")
    assert len(out) == 7
    assert out.hyps == {}
    assert out.conclusion == parse_formula("p => p")
    assert check_proof(out).accepted


def test_deduce_other_hypothesis_is_weakened():
    out = deduce(Proof({"h": p, "g": q}, (ProofLine(q, Hyp("g")),)), "h")
    assert out.hyps == {"g": q}
    assert out.conclusion == parse_formula("p => q")
    assert len(out) == 7 and check_proof(out).accepted


def test_deduce_mp_case():
    proof = Proof({"h": p, "g": weak(p, q)}, (
        ProofLine(p, Hyp("h")), ProofLine(weak(p, q), Hyp("g")), ProofLine(q, MP(0, 1))))
    out = deduce(proof, "h")
    assert out.conclusion == parse_formula("p => q")
    assert out.hyps == {"g": weak(p, q)}
    assert check_proof(out).accepted
    # the alpha => alpha block is built once and reused
    refl = parse_formula("p => p")
    assert sum(l.formula == refl for l in out.lines) == 1


def test_deduce_errors():
    with pytest.raises(DeductionError, match="unknown hypothesis"):
        deduce(_single("h", p), "nope")
    bad = Proof({"h": p}, (ProofLine(q, MP(0, 1)), ProofLine(p, Hyp("h"))))
    with pytest.raises(DeductionError):
        deduce(bad, "h")


def test_undeduce_examples():
    back = undeduce(deduce(_single("h", p), "h"), p, "h")
    assert back.conclusion == p and back.hyps == {"h": p}
    assert check_proof(back).accepted

    # p => (q => p) by discharging twice, then restoring the first hypothesis
    twice = deduce(deduce(Proof({"x": p, "y": q}, (ProofLine(p, Hyp("x")),)), "y"), "x")
    assert twice.conclusion == parse_formula("p => (q => p)")
    once = undeduce(twice, p, "h")
    assert once.conclusion == parse_formula("q => p")
    assert once.hyps == {"h": p}
    assert check_proof(once).accepted


def test_undeduce_errors():
    refl = deduce(_single("h", p), "h")
    with pytest.raises(DeductionError, match="not of the form"):
        undeduce(refl, q, "h")
    with pytest.raises(DeductionError, match="already in use"):
        undeduce(Proof({"h": r}, refl.lines), p, "h")


def test_deduce_conclusion_is_the_hypothesis_after_other_lines():
    proof = Proof({"h": p, "g": q}, (ProofLine(q, Hyp("g")), ProofLine(p, Hyp("h"))))
    out = deduce(proof, "h")
    assert out.conclusion == parse_formula("p => p")
    assert check_proof(out).accepted


@pytest.mark.parametrize("seed", range(300))
def test_fuzzed_deduction_is_sound_and_bounded(seed):
    proof = to_proof(*random_proof(random.Random(seed)))
    assert check_proof(proof).accepted
    alpha = proof.hyps["a0"]
    out = deduce(proof, "a0")
    assert "a0" not in out.hyps
    assert out.conclusion == weak(alpha, proof.conclusion)
    assert check_proof(out).accepted
    assert naive_check(out) is None
    assert len(out) <= 20 * len(proof) + 10
    back = undeduce(out, alpha, "a0")
    assert back.conclusion == proof.conclusion
    assert check_proof(back).accepted
