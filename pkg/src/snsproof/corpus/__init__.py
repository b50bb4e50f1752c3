"""The bundled corpus: one elaborated script per derived rule (and per variant),
plus two deduction-theorem demonstrations, with a verifier that re-checks them.

Scripts live next to this module.  ``SNS_CORPUS_DIR`` points elsewhere.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from ..deduction import deduce, undeduce
from ..formula import Formula, Neg, Var, impn, split_impn, strimp, to_text
from ..kernel import Hyp, Proof, ProofLine, check_proof
from ..rules.registry import corpus_name, elaborate, get_rule, list_rules
from ..script import ScriptError, load_script, save_script

__all__ = [
    "CorpusEntry", "EntryResult", "CorpusReport", "CorpusError",
    "corpus_entries", "default_corpus_dir", "build_corpus", "corpus_verify",
]

# Representative binding used for every rule.
BINDING_TEXT = {"a": "p", "b": "q", "c": "r", "t": "s"}


class CorpusError(Exception):
    pass


@dataclass(frozen=True)
class CorpusEntry:
    """One corpus item.  Two-conclusion rules keep one script per variant."""

    id: str
    binding: dict[str, Formula]
    files: tuple[str, ...]

    @property
    def params_text(self) -> str:
        return ",".join(f"{k}:={to_text(v)}" for k, v in self.binding.items()) or "-"


def default_corpus_dir() -> Path:
    env = os.environ.get("SNS_CORPUS_DIR")
    return Path(env) if env else Path(__file__).resolve().parent


def _binding(params) -> dict[str, Formula]:
    return {p: Var(BINDING_TEXT[p]) for p in params}


def corpus_entries() -> list[CorpusEntry]:
    out = []
    for tmpl in list_rules():
        files = tuple(f"{corpus_name(tmpl.id, v)}.snspf" for v in range(1, tmpl.variants + 1))
        out.append(CorpusEntry(tmpl.id, _binding(tmpl.params), files))
    out.append(CorpusEntry("DTfwd", _binding("abc"), ("dt_fwd.snspf",)))
    out.append(CorpusEntry("DTbwd", _binding("ab"), ("dt_bwd.snspf",)))
    return out


def _assumed(formulas) -> list[Proof]:
    return [Proof({f"h{i}": f}, (ProofLine(f, Hyp(f"h{i}")),)) for i, f in enumerate(formulas, 1)]


def _rule_proof(rid: str, binding, variant: int) -> Proof:
    prems, _, _ = get_rule(rid).instance(binding)
    return elaborate(rid, binding, _assumed(prems), variant=variant)


def _expected(entry: CorpusEntry, variant: int) -> tuple[dict[str, Formula], Formula]:
    """Hypotheses and conclusion each corpus script must have."""
    b = entry.binding
    if entry.id == "DTfwd":
        _, beta = split_impn(get_rule("L33g").instance(b)[2][0])
        return {"h1": _dt_fwd_alpha(b)}, beta
    if entry.id == "DTbwd":
        return {"h1": b["a"]}, impn(strimp(b["a"], b["b"]), b["b"])
    prems, extras, concls = get_rule(entry.id).instance(b)
    hyps = {f"h{i}": f for i, f in enumerate((*prems, *extras), 1)}
    return hyps, concls[variant - 1]


def _dt_fwd_alpha(b) -> Formula:
    return impn(Neg(b["b"]), Neg(b["a"]))


def _entry_proofs(entry: CorpusEntry) -> list[Proof]:
    b = entry.binding
    if entry.id == "DTfwd":
        # a closed theorem alpha => beta; assuming alpha yields beta
        closed = _rule_proof("L33g", b, 1)
        out = undeduce(closed, _dt_fwd_alpha(b), "h1")
        return [Proof(out.hyps, out.lines, "dt_fwd")]
    if entry.id == "DTbwd":
        sequent = _rule_proof("L31f", b, 1)  # h1: a, h2: a ==> b  |-  b
        out = deduce(sequent, "h2")
        return [Proof(out.hyps, out.lines, "dt_bwd")]
    tmpl = get_rule(entry.id)
    return [_rule_proof(entry.id, b, v) for v in range(1, tmpl.variants + 1)]


def build_corpus(directory: Path | str | None = None) -> list[Path]:
    """(Re)generate every corpus script; returns the written paths."""
    d = Path(directory) if directory is not None else default_corpus_dir()
    d.mkdir(parents=True, exist_ok=True)
    written = []
    for entry in corpus_entries():
        for fname, proof in zip(entry.files, _entry_proofs(entry)):
            path = d / fname
            comment = _comment(entry)
            save_script(proof, path, name=Path(fname).stem, comment=comment)
            written.append(path)
    return written


def _comment(entry: CorpusEntry) -> str:
    if entry.id == "DTfwd":
        return "DTfwd: a closed theorem a => b turned into b under the hypothesis a"
    if entry.id == "DTbwd":
        return "DTbwd: the hypothesis a ==> b of a sequent proof discharged into a weak implication"
    return get_rule(entry.id).describe()


@dataclass(frozen=True)
class EntryResult:
    entry: CorpusEntry
    passed: bool
    lines: tuple[int, ...]
    message: str = ""

    def row(self) -> str:
        lines = "/".join(str(n) for n in self.lines) or "-"
        return f"{self.entry.id} {self.entry.params_text} {lines} {'PASS' if self.passed else 'FAIL'}"


@dataclass
class CorpusReport:
    results: list[EntryResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def table(self) -> str:
        rows = [r.row() for r in self.results]
        rows.append(f"{self.passed}/{self.total} accepted")
        return "\n".join(rows)


def _verify_entry(entry: CorpusEntry, d: Path) -> EntryResult:
    counts = []
    for variant, fname in enumerate(entry.files, 1):
        path = d / fname
        if not path.is_file():
            return EntryResult(entry, False, tuple(counts), f"missing file {fname}")
        try:
            proof = load_script(path)
        except (ScriptError, OSError, UnicodeDecodeError) as e:
            return EntryResult(entry, False, tuple(counts), f"{fname}: {e}")
        counts.append(len(proof))
        report = check_proof(proof)
        if not report.accepted:
            return EntryResult(entry, False, tuple(counts), f"{fname}: {report.failure}")
        hyps, concl = _expected(entry, variant)
        if proof.conclusion != concl:
            return EntryResult(entry, False, tuple(counts),
                               f"{fname}: concludes {to_text(proof.conclusion)}, "
                               f"expected {to_text(concl)}")
        if dict(proof.hyps) != hyps:
            return EntryResult(entry, False, tuple(counts), f"{fname}: unexpected hypotheses")
    return EntryResult(entry, True, tuple(counts))


def corpus_verify(directory: Path | str | None = None) -> CorpusReport:
    """Check every corpus script; a failing entry never stops the sweep."""
    d = Path(directory) if directory is not None else default_corpus_dir()
    if not d.is_dir() or not any(d.glob("*.snspf")):
        raise CorpusError(f"missing files: no corpus scripts in {d}")
    report = CorpusReport()
    for entry in corpus_entries():
        report.results.append(_verify_entry(entry, d))
    return report
