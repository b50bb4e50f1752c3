"""Command-line front end.

Exit codes: 0 success, 1 logical failure (a rejected proof, a shape
mismatch, no matching schema), 2 input error (unparsable formula or script,
missing file, bad arguments).  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .axioms import METAVARS, match_any, schema_table
from .corpus import CorpusError, build_corpus, corpus_verify, default_corpus_dir
from .deduction import DeductionError, deduce
from .derive import DerivationError
from .formula import ParseError, parse_formula, to_text
from .kernel import check_proof
from .rules import (
    HypothesisConflict, IncompleteBinding, RuleError, ShapeMismatch, UnknownRule, elaborate,
)
from .script import ScriptError, load_script, write_script

OK, FAILED, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    """Raised for anything that should exit with code 2."""


class _Out:
    def __init__(self, quiet: bool, resugar: bool):
        self.quiet = quiet
        self.resugar = resugar

    def result(self, text: str) -> None:
        if not self.quiet:
            sys.stdout.write(text if text.endswith("\n") else text + "\n")

    @staticmethod
    def error(text: str) -> None:
        sys.stderr.write(f"snsproof: {text}\n")

    def formula(self, f) -> str:
        return to_text(f, self.resugar)


def _resolve(path: str) -> Path:
    """A bare file name that does not exist locally is looked up in the corpus."""
    p = Path(path)
    if not p.exists() and p.parent == Path("."):
        candidate = default_corpus_dir() / p.name
        if candidate.exists():
            return candidate
    return p


def _load(path: str):
    p = _resolve(path)
    try:
        return load_script(p)
    except FileNotFoundError:
        raise InputError(f"{path}: no such file") from None
    except (OSError, UnicodeDecodeError) as e:
        raise InputError(f"{path}: {e}") from None
    except ScriptError as e:
        raise InputError(f"{path}: {e}") from None


def _parse(text: str):
    try:
        return parse_formula(text)
    except ParseError as e:
        raise InputError(f"bad formula {text!r}: {e}") from None


def _emit(out: _Out, proof, dest: str | None) -> None:
    text = write_script(proof, resugar=out.resugar)
    if dest is None:
        out.result(text)
        return
    try:
        Path(dest).write_text(text, encoding="utf-8")
    except OSError as e:
        raise InputError(f"{dest}: {e}") from None
    out.result(f"wrote {dest} ({len(proof)} lines)")


# -- subcommands ----------------------------------------------------------------

def cmd_check(args, out: _Out) -> int:
    proof = _load(args.file)
    report = check_proof(proof)
    out.result(f"{report.status} ({len(proof)} lines)")
    if not report.accepted:
        out.error(f"{args.file}: {report.failure}")
        return FAILED
    return OK


def cmd_axioms(args, out: _Out) -> int:
    for s in schema_table():
        out.result(f"{s.id}: {out.formula(s.template)}")
    return OK


def cmd_match(args, out: _Out) -> int:
    f = _parse(args.formula)
    hits = match_any(f)
    for sid, binding in hits:
        parts = [f"{m.lower()}:={out.formula(binding[m])}" for m in METAVARS if m in binding]
        out.result(f"{sid} [{', '.join(parts)}]" if parts else sid)
    return OK if hits else FAILED


def cmd_deduce(args, out: _Out) -> int:
    proof = _load(args.file)
    if args.hyp not in proof.hyps:
        raise InputError(f"{args.file}: no hypothesis named {args.hyp!r}")
    report = check_proof(proof)
    if not report.accepted:
        out.error(f"{args.file}: input rejected: {report.failure}")
        return FAILED
    try:
        result = deduce(proof, args.hyp)
    except DeductionError as e:
        out.error(str(e))
        return FAILED
    recheck = check_proof(result)
    if not recheck.accepted:
        out.error(f"deduced proof rejected: {recheck.failure}")
        return FAILED
    _emit(out, result, args.output)
    return OK


def _bindings(text: str | None) -> dict:
    binding = {}
    if not text:
        return binding
    for part in text.split(","):
        key, sep, value = part.partition("=")
        if not sep or not key.strip() or not value.strip():
            raise InputError(f"bad binding {part!r}; expected name=formula")
        binding[key.strip()] = _parse(value)
    return binding


def cmd_elaborate(args, out: _Out) -> int:
    binding = _bindings(args.bind)
    premises = []
    for path in args.premise:
        proof = _load(path)
        report = check_proof(proof)
        if not report.accepted:
            out.error(f"{path}: premise rejected: {report.failure}")
            return FAILED
        premises.append(proof)
    try:
        proof = elaborate(args.rule, binding, premises, variant=args.variant)
    except (UnknownRule, IncompleteBinding) as e:
        raise InputError(str(e)) from None
    except (ShapeMismatch, HypothesisConflict, RuleError, DerivationError) as e:
        out.error(str(e))
        return FAILED
    _emit(out, proof, args.output)
    return OK


def cmd_corpus(args, out: _Out) -> int:
    if args.action == "build":
        written = build_corpus(args.dir)
        out.result(f"wrote {len(written)} scripts to {Path(args.dir or default_corpus_dir())}")
        return OK
    try:
        report = corpus_verify(args.dir)
    except CorpusError as e:
        raise InputError(str(e)) from None
    out.result(report.table())
    for r in report.results:
        if not r.passed:
            out.error(f"{r.entry.id}: {r.message}")
    return OK if report.ok else FAILED


# -- argument parsing -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="snsproof",
        description="Proof checker and derived-rule elaborator for IS~ (semi-intuitionistic "
                    "logic with strong negation).")
    p.add_argument("--no-resugar", action="store_true",
                   help="print core formulas instead of folding => ==> <=> back in")
    p.add_argument("--quiet", action="store_true", help="suppress results on stdout")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("check", help="check a .snspf proof script")
    s.add_argument("file")
    s.set_defaults(run=cmd_check)

    s = sub.add_parser("axioms", help="list the axiom schemata")
    s.add_argument("action", choices=["list"])
    s.set_defaults(run=cmd_axioms)

    s = sub.add_parser("match", help="list the schemata a formula is an instance of")
    s.add_argument("formula")
    s.set_defaults(run=cmd_match)

    s = sub.add_parser("deduce", help="discharge a hypothesis (deduction theorem)")
    s.add_argument("file")
    s.add_argument("--hyp", required=True, help="name of the hypothesis to discharge")
    s.add_argument("-o", "--output", help="write the script here instead of stdout")
    s.set_defaults(run=cmd_deduce)

    s = sub.add_parser("elaborate", help="expand a derived rule into a kernel proof")
    s.add_argument("rule", help="rule id, e.g. L31h")
    s.add_argument("--bind", help="parameter binding, e.g. a=p,b=q|r")
    s.add_argument("--premise", action="append", default=[], metavar="FILE",
                   help="proof script of a premise, in order (repeatable)")
    s.add_argument("--variant", type=int, default=1,
                   help="which conclusion of a two-conclusion rule (1 or 2)")
    s.add_argument("-o", "--output", help="write the script here instead of stdout")
    s.set_defaults(run=cmd_elaborate)

    s = sub.add_parser("corpus", help="verify or regenerate the bundled corpus")
    s.add_argument("action", choices=["verify", "build"])
    s.add_argument("--dir", help="corpus directory (default: bundled, or $SNS_CORPUS_DIR)")
    s.set_defaults(run=cmd_corpus)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = _Out(args.quiet, not args.no_resugar)
    try:
        return args.run(args, out)
    except InputError as e:
        out.error(str(e))
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
