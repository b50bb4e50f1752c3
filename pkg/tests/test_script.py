import random
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import random_proof, to_proof
from snsproof.corpus import default_corpus_dir
from snsproof.formula import Var, parse_formula
from snsproof.kernel import MP, Axiom, Hyp, check_proof
from snsproof.script import ScriptError, load_script, read_script, write_script

p, q = Var("p"), Var("q")

SIMPLE = """\
# a comment line
theorem demo
hyp h: p
hyp g: p => q   # trailing comment
1. p ; hyp h
2. p => q ; hyp g
3. q ; mp 1 2
4. (p & q) => p ; axiom A3 [a:=p, b:=q]
5. (p & q) => p ; axiom A3
6. (p & q) => p ; axiom *
7. T ; axiom A23 []
qed
"""


def test_read_simple_script():
    proof = read_script(SIMPLE)
    assert proof.name == "demo"
    assert proof.hyps == {"h": p, "g": parse_formula("p => q")}
    assert [l.just for l in proof.lines] == [
        Hyp("h"), Hyp("g"), MP(0, 1), Axiom("A3", {"A": p, "B": q}), Axiom("A3", None),
        Axiom(None, None), Axiom("A23", {}),
    ]
    assert check_proof(proof).accepted


def test_write_read_round_trip_is_exact():
    proof = read_script(SIMPLE)
    again = read_script(write_script(proof))
    assert again == proof
    assert read_script(write_script(proof, resugar=False)) == proof


@pytest.mark.parametrize("text, lineno, fragment", [
    ("", None, "empty script"),
    ("hyp h: p\n", 1, "expected 'theorem"),
    ("theorem t\n1. p ; hyp h\n", None, "missing 'qed'"),
    ("theorem t\nqed\n", None, "at least one line"),
    ("theorem t\n1. p ; hyp h\nqed\n1. p ; hyp h\n", 4, "after 'qed'"),
    ("theorem t\n2. p ; hyp h\nqed\n", 2, "expected line number 1"),
    ("theorem t\n1. p hyp h\nqed\n", 2, "missing ';'"),
    ("theorem t\n1. p & ; hyp h\nqed\n", 2, "bad formula"),
    ("theorem t\n1. p ; lemma 3\nqed\n", 2, "bad justification"),
    ("theorem t\nhyp h: p\nhyp h: q\n1. p ; hyp h\nqed\n", 3, "duplicate hypothesis"),
    ("theorem t\n1. p ; hyp h\nhyp h: p\nqed\n", 3, "must precede"),
    ("theorem t\n1. p ; axiom A3 [a:=p, a:=q]\nqed\n", 2, "bound twice"),
    ("theorem t\n1. p ; axiom A3 [d:=p]\nqed\n", 2, "bad binding"),
    ("theorem t\n1. p ; axiom * [a:=p]\nqed\n", 2, "takes no binding"),
    ("theorem t\nfoo\nqed\n", 2, "unrecognised"),
])
def test_malformed_scripts(text, lineno, fragment):
    with pytest.raises(ScriptError) as e:
        read_script(text)
    assert e.value.lineno == lineno
    assert fragment in str(e.value)


def test_script_errors_are_not_check_failures():
    # structurally fine but logically wrong: loads, then the checker rejects
    proof = read_script("theorem t\nhyp h: p\n1. q ; hyp h\nqed\n")
    assert not check_proof(proof).accepted


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_fuzzed_proofs_round_trip(seed):
    proof = to_proof(*random_proof(random.Random(seed), 20))
    again = read_script(write_script(proof))
    assert again.hyps == proof.hyps
    assert again.lines == proof.lines


def test_corpus_scripts_round_trip():
    for path in sorted(Path(default_corpus_dir()).glob("*.snspf")):
        proof = load_script(path)
        assert read_script(write_script(proof)) == proof, path.name
