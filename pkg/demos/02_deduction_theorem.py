"""
The deduction theorem as a program
==================================

deduce turns a proof of b that uses the hypothesis a into a proof of a => b
that does not; undeduce goes back with one hypothesis line and one N-MP.
"""

from snsproof import Hyp, MP, Proof, ProofLine, check_proof, deduce, parse_formula, to_text
from snsproof import undeduce, write_script

p, q, r = (parse_formula(x) for x in "pqr")
pq, qr = parse_formula("p => q"), parse_formula("q => r")

# from p, p => q and q => r we get r in five lines
chain = Proof({"a": p, "f": pq, "g": qr}, (
    ProofLine(p, Hyp("a")),
    ProofLine(pq, Hyp("f")),
    ProofLine(q, MP(0, 1)),
    ProofLine(qr, Hyp("g")),
    ProofLine(r, MP(2, 3)),
))
assert check_proof(chain).accepted

# discharge a: every line becomes "p => line", one block per line
discharged = deduce(chain, "a")
print(to_text(discharged.conclusion))            # p => r
print(sorted(discharged.hyps))                   # ['f', 'g']
print(len(chain), "lines became", len(discharged))
assert check_proof(discharged).accepted

# the discharged hypothesis itself costs one shared block of 7 lines
print(write_script(deduce(Proof({"a": p}, (ProofLine(p, Hyp("a")),)), "a"), name="refl"))

# and back again
restored = undeduce(discharged, p, "a")
print(to_text(restored.conclusion), check_proof(restored).status)

# discharging twice gives the curried form
twice = deduce(discharged, "f")
print(to_text(twice.conclusion))                 # (p => q) => (p => r)
assert check_proof(twice).accepted
