"""The builtin case corpus and the runner that sweeps every applicable row over it."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import InadmissibleError, ResourceLimitError
from ..graded.duality import canonical_module, dagger, matlis_dual
from ..graded.module import Module
from ..graded.ring import GradedRing
from .build import power_quotient
from .windows import DEFAULT_BOUND, ROWS, Case, TheoremVerdict, check, scan_contrapositive
from .witness import Witness, witness

DEFAULT_JMAX = 6

RINGS: Dict[str, Tuple[Sequence[str], Sequence[str]]] = {
    "k": ((), ()),
    "k[x]": (("x",), ()),
    "k[x,y]": (("x", "y"), ()),
    "k[x,y,z]": (("x", "y", "z"), ()),
    "k[x]/(x^2)": (("x",), ("x^2",)),
    "k[x]/(x^3)": (("x",), ("x^3",)),
    "k[x,y]/(x^2)": (("x", "y"), ("x^2",)),
    "k[x,y]/(xy)": (("x", "y"), ("x*y",)),
    "k[x,y]/(x^2,y^2)": (("x", "y"), ("x^2", "y^2")),
    "k[x,y]/(x^2,xy,y^2)": (("x", "y"), ("x^2", "x*y", "y^2")),
    "k[x,y]/(x^2,xy)": (("x", "y"), ("x^2", "x*y")),
}


def make_ring(name: str) -> GradedRing:
    names, ideal = RINGS[name]
    return GradedRing.from_strings(list(names), list(ideal))


def _dual(M: Module) -> Module:
    """Matlis dual for finite length, the canonical dual otherwise."""
    D = matlis_dual(M) if M.length is not None else dagger(M)
    D.name = (M.name or "M") + "^v"
    return D


MODULES: Dict[str, Callable[[GradedRing], Module]] = {
    "R": lambda R: R.as_module(),
    "k": lambda R: R.residue_field(),
    "R/m^2": lambda R: power_quotient(R, 2, "R/m^2"),
    "(R/m^2)^v": lambda R: _dual(power_quotient(R, 2, "R/m^2")),
    "omega": lambda R: canonical_module(R),
}


@dataclass(frozen=True)
class CorpusCase:
    """A ring with the modules playing M and N; rows restrict the sweep when given."""

    ring: str
    M: str
    N: Optional[str] = None
    rows: Optional[Tuple[str, ...]] = None
    note: str = ""

    @property
    def case_id(self) -> str:
        return "%s|M=%s|N=%s" % (self.ring, self.M, self.N or "-")


_PAIRS = [
    # Example 3.9: equality cases that must never fire.
    ("k[x]/(x^2)", "R", "R", "strict inequality boundary"),
    ("k[x]/(x^2)", "R", "k", "strict inequality boundary"),
    ("k[x]/(x^2)", "k", "k", "pd and id of k infinite"),
    ("k[x]/(x^2)", "k", "R", ""),
    ("k[x]/(x^3)", "R", "k", "not min mult"),
    ("k[x]/(x^3)", "k", "k", ""),
    ("k[x]", "R", "k", ""),
    ("k[x]", "k", "R", ""),
    ("k[x,y]", "R", "k", ""),
    ("k[x,y]", "k", "R", ""),
    ("k[x,y]", "R/m^2", "k", "min mult, e > 2mu"),
    ("k[x,y]", "(R/m^2)^v", "k", "min mult, e > 2type"),
    ("k[x,y]", "R", "R/m^2", ""),
    ("k[x,y]", "k", "R/m^2", ""),
    ("k[x,y]", "k", "(R/m^2)^v", ""),
    ("k[x,y]/(x^2)", "k", "R", ""),
    ("k[x,y]/(x^2)", "R", "k", "hypersurface of multiplicity 2, nonreduced"),
    ("k[x,y]/(x^2)", "k", "k", "pd k infinite"),
    ("k[x,y]/(xy)", "R", "k", "hypersurface of multiplicity 2, two lines"),
    ("k[x,y]/(xy)", "k", "R", ""),
    ("k[x,y]/(x^2,y^2)", "R", "k", ""),
    ("k[x,y]/(x^2,y^2)", "k", "k", ""),
    ("k[x,y]/(x^2,xy,y^2)", "R", "R", "m^2 = 0, not Gorenstein: the Gorenstein hypothesis is needed"),
    ("k[x,y]/(x^2,xy,y^2)", "k", "k", "exponential Betti growth"),
    ("k[x,y]/(x^2,xy,y^2)", "k", "omega", "semidualizing C = omega"),
    ("k[x,y]/(x^2,xy,y^2)", "omega", "k", ""),
    ("k[x,y]/(x^2,xy)", "R", "k", "not CM"),
    ("k", "k", "k", "field"),
]

BUILTIN: List[CorpusCase] = [CorpusCase(r, m, n, note=note) for r, m, n, note in _PAIRS]

# Witness constructions paired with the rings that satisfy each structural side.
WITNESS_RINGS: List[Tuple[str, str]] = [
    ("C41", "k[x,y]/(x^2)"), ("C41", "k[x,y]/(xy)"), ("C41", "k[x]/(x^2)"), ("C41", "k[x,y]"),
    ("C42", "k[x,y]"), ("C42", "k[x]"),
    ("C43", "k[x,y]"), ("C43", "k[x,y,z]"),
    ("C44", "k[x]"), ("C44", "k[x,y]"), ("C44", "k[x,y]/(x^2)"),
    ("C46", "k[x,y]"), ("C46", "k[x]"),
]


@dataclass
class CorpusReport:
    verdicts: List[TheoremVerdict] = field(default_factory=list)
    limits: List[str] = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def inconsistent(self) -> List[TheoremVerdict]:
        return [v for v in self.verdicts if not v.consistent]

    @property
    def fired(self) -> List[TheoremVerdict]:
        return [v for v in self.verdicts if v.fired]

    def summary(self) -> str:
        if not self.verdicts:
            return "empty report"
        bad = self.inconsistent
        head = "%d verdicts, %d fired, %d inconsistent" % (len(self.verdicts), len(self.fired), len(bad))
        return head + ("; all consistent" if not bad else "")


def _sweep(row_id: str, c: Case, name: str, jmax: int) -> List[TheoremVerdict]:
    row = ROWS[row_id]
    if row.roles[1] != "-" and c.N is None:
        return []
    js: Iterable[Optional[int]] = range(jmax + 1) if row.uses_j else [None]
    out = []
    for j in js:
        try:
            out.append(check(row_id, c, j, name))
        except InadmissibleError:
            continue
    return out


def run_case(case: CorpusCase, jmax: int = DEFAULT_JMAX, bound: int = DEFAULT_BOUND,
             seed: Optional[int] = None) -> List[TheoremVerdict]:
    R = make_ring(case.ring)
    M = MODULES[case.M](R)
    N = MODULES[case.N](R) if case.N else None
    pair = Case(R, M, N, bound=bound, seed=seed)
    single = Case(R, M, None, bound=bound, seed=seed)
    single_name = "%s|M=%s|N=-" % (case.ring, case.M)
    out = []
    for row_id in case.rows or ROWS:
        if ROWS[row_id].roles[1] == "-":
            out.extend(_sweep(row_id, single, single_name, jmax))
        elif N is not None:
            out.extend(_sweep(row_id, pair, case.case_id, jmax))
    return out


def witness_verdict(theorem: str, w: Witness, R: GradedRing, ring_name: str, seed: Optional[int],
                    elapsed_ms: int) -> TheoremVerdict:
    """A witness as a certificate-mode record: consistent iff every stated property was verified."""
    failed = [k for k, v in w.checks.items() if not v]
    return TheoremVerdict(
        check_id="witness:%s(%s):%s:n=%d" % (theorem, w.item, ring_name, w.n),
        theorem="%s(%s)" % (theorem, w.item), ring=R.describe(), modules={"N": w.module.name or "N"},
        j=None, window_lo=None, window_hi=None, hypotheses={"ring in class": True}, vanished=None,
        mode="certificate", predicted="witness of dim %d with %s" % (w.n, ", ".join(w.checks)),
        verified=w.ok, consistent=w.ok, seed=seed, char=R.p, elapsed_ms=elapsed_ms,
        status="witness " + ("verified" if w.ok else "FAILED: " + ", ".join(failed)),
    )


def witness_verdicts(theorem: str, ring_name: str, seed: int, jmax: int,
                     bound: int = DEFAULT_BOUND) -> List[TheoremVerdict]:
    """One record per witness, then the witness fed as N (or M) into the theorem's own rows."""
    R = make_ring(ring_name)
    out = []
    start = time.perf_counter()
    for w in witness(theorem, R, seed):
        out.append(witness_verdict(theorem, w, R, ring_name, seed, int(1000 * (time.perf_counter() - start))))
        rows = [r for r in ROWS if r.startswith(theorem + ".")]
        name = "%s|witness %s(%s) n=%d" % (ring_name, theorem, w.item, w.n)
        for row_id in rows:
            if ROWS[row_id].roles[1] == "-":
                cases = [Case(R, w.module, None, bound=bound, seed=seed)]
            else:
                cases = [Case(R, R.residue_field(), w.module, bound=bound, seed=seed),
                         Case(R, R.as_module(), w.module, bound=bound, seed=seed)]
            for c in cases:
                out.extend(_sweep(row_id, c, name + "|M=" + c.M.name, jmax))
        start = time.perf_counter()
    return out


def run_corpus(cases: Optional[Sequence[CorpusCase]] = None, jmax: int = DEFAULT_JMAX,
               bound: int = DEFAULT_BOUND, seed: int = 0, witnesses: bool = True,
               progress: Optional[Callable[[str], None]] = None) -> CorpusReport:
    """Sweep every applicable (row, case, j); deterministic given the seed."""
    t0 = time.perf_counter()
    report = CorpusReport()
    cases = BUILTIN if cases is None else list(cases)
    for case in cases:
        if progress:
            progress(case.case_id)
        try:
            report.verdicts.extend(run_case(case, jmax, bound, seed))
        except ResourceLimitError as exc:
            report.limits.append("%s: %s" % (case.case_id, exc))
    if witnesses and cases:
        for theorem, ring_name in WITNESS_RINGS:
            if progress:
                progress("witness %s on %s" % (theorem, ring_name))
            try:
                report.verdicts.extend(witness_verdicts(theorem, ring_name, seed, jmax, bound))
            except ResourceLimitError as exc:
                report.limits.append("witness %s on %s: %s" % (theorem, ring_name, exc))
    # Single-module rows recur across cases sharing M; keep one record per check id.
    unique = {v.check_id: v for v in report.verdicts}
    report.verdicts = [unique[key] for key in sorted(unique)]
    report.elapsed_s = time.perf_counter() - t0
    return report


def contrapositive_scan(cases: Optional[Sequence[CorpusCase]] = None, jmax: int = DEFAULT_JMAX,
                        bound: int = DEFAULT_BOUND) -> List[TheoremVerdict]:
    """Every certificate row whose conclusion is directly false on a case, scanned over j <= jmax.

    A consistent result means no admissible window fully vanished under satisfied hypotheses.
    """
    out = []
    for case in BUILTIN if cases is None else cases:
        R = make_ring(case.ring)
        M = MODULES[case.M](R)
        N = MODULES[case.N](R) if case.N else None
        for row_id, row in ROWS.items():
            if row.mode != "certificate" or (row.roles[1] != "-" and N is None):
                continue
            c = Case(R, M, N if row.roles[1] != "-" else None, bound=bound)
            name = "contra:" + (case.case_id if row.roles[1] != "-" else "%s|M=%s|N=-" % (case.ring, case.M))
            out.extend(scan_contrapositive(row_id, c, jmax, name))
    unique = {v.check_id: v for v in out}
    return [unique[key] for key in sorted(unique)]
