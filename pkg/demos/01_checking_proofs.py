"""
Writing and checking proofs by hand
===================================

Formulas are typed with ASCII connectives; the defined implications are
expanded on the way in, so the checker only ever sees T, ~, &, | and ->.
"""

from snsproof import Axiom, Hyp, MP, Proof, ProofLine, check_proof, match_any, parse_formula
from snsproof import read_script, to_text, write_script

# weak implication a => b is shorthand for a -> (a & b)
f = parse_formula("p => q")
print(to_text(f, resugar=False))   # p -> p & q
print(to_text(f))                  # p => q

# which axiom schemata is a formula an instance of?
print(match_any(parse_formula("(p & q) => p")))

# a three-line proof: from p and p => q, modus ponens gives q
p, pq = parse_formula("p"), parse_formula("p => q")
proof = Proof({"h": p, "g": pq}, (
    ProofLine(p, Hyp("h")),
    ProofLine(pq, Hyp("g")),
    ProofLine(parse_formula("q"), MP(0, 1)),
))
print(check_proof(proof).status)

# the same proof as a script; line numbers in files start at 1
text = write_script(proof, name="mp_demo")
print(text)
assert read_script(text).lines == proof.lines

# axiom lines may carry a binding, leave it out, or use "axiom *"
script = """
theorem and_elim
1. (p & q) => p ; axiom A3 [a:=p, b:=q]
2. (p & q) => p ; axiom A3
3. (p & q) => p ; axiom *
qed
"""
print(check_proof(read_script(script)).status)

# a wrong line is reported with its number and the reason
broken = Proof({"h": p}, (ProofLine(parse_formula("q"), Hyp("h")),))
print(check_proof(broken).failure)        # line 1: hypothesis mismatch: ...

# axiom instances must match their schema exactly
bad_axiom = Proof({}, (ProofLine(parse_formula("(p & q) => q"), Axiom("A3", None)),))
print(check_proof(bad_axiom).failure)
