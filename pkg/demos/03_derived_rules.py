"""
Derived rules and the corpus
============================

Each derived rule is a template: give it formulas for its parameters and
proofs of its premises and it writes out a plain kernel proof.
"""

from snsproof import Hyp, Proof, ProofLine, check_proof, elaborate, get_rule, list_rules
from snsproof import parse_formula, to_text
from snsproof.corpus import corpus_verify

print(len(list_rules()), "rules")
print(get_rule("L31h").describe())
print(get_rule("L33o").describe())


def assume(name, text):
    f = parse_formula(text)
    return Proof({name: f}, (ProofLine(f, Hyp(name)),))


# conjunction introduction from two hypotheses
both = elaborate("L31h", {"a": parse_formula("p"), "b": parse_formula("q | r")},
                 [assume("h1", "p"), assume("h2", "q | r")])
print(to_text(both.conclusion), len(both), check_proof(both).status)

# ex falso for strong negation: (a & ~a) => b, with no premises at all
explosion = elaborate("L33o", {"a": parse_formula("p"), "b": parse_formula("q")})
print(to_text(explosion.conclusion), len(explosion), "lines")

# rules that state two conclusions take a variant number
print(to_text(elaborate("L31i", {"a": parse_formula("p"), "b": parse_formula("q")},
                        variant=2).conclusion))

# premises are checked against the rule before anything is built
try:
    elaborate("L31g", {"a": parse_formula("p"), "b": parse_formula("q")},
              [assume("h1", "p"), assume("h2", "p")])
except ValueError as e:
    print("refused:", e)

# every rule, elaborated and saved, re-checked from the files on disk
report = corpus_verify()
print("\n".join(report.table().splitlines()[-4:]))
