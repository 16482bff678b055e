"""Windowed vanishing criteria as a table of rows, and the verdicts they produce.

A row fires when all its hypotheses hold and every Ext/Tor in its window
vanishes; the predicted conclusion is then verified independently (pd/id
certificates, freeness, ring classification). A verdict is consistent unless
a row fires and the direct verification fails.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Dict, List, Optional, Tuple

from ..errors import InadmissibleError
from ..graded.homdim import injective_dimension, projective_dimension
from ..graded.homology import bass_number, depth, ext, module_type, tor
from ..graded.module import Module
from ..graded.resolution import resolution
from ..graded.ring import GradedRing
from ..invariants import classify_ring, invariant_report
from .build import is_free, killed_by_m_squared
from .gdim import bounded_gdim, bounded_semidualizing

DEFAULT_BOUND = 12
DEFAULT_EVIDENCE_SPAN = 6


@dataclass
class Case:
    """A ring, the modules playing the roles M and N, and bound settings."""

    ring: GradedRing
    M: Module
    N: Optional[Module] = None
    bound: int = DEFAULT_BOUND
    evidence_span: int = DEFAULT_EVIDENCE_SPAN
    seed: Optional[int] = None

    @property
    def R(self) -> Module:
        return self.ring.as_module()

    @property
    def d(self) -> int:
        return self.ring.dim

    def module(self, role: str) -> Module:
        return {"M": self.M, "N": self.N, "R": self.R}[role]


# -- numerical symbols used in bounds --------------------------------------------------------
def beta(X: Module, n: int) -> int:
    return resolution(X).betti(n) if n >= 0 else 0


def mu(X: Module, n: int) -> int:
    return bass_number(X, n)


def bass_sum(X: Module, j: int, s: int) -> int:
    """sum_{i=0}^{s} C(s, i) mu^{j+i}(X)."""
    return sum(comb(s, i) * mu(X, j + i) for i in range(s + 1))


def _inv(X: Module):
    return invariant_report(X)


# -- hypotheses ------------------------------------------------------------------------------
Hyp = Tuple[str, Callable[[Case], bool]]


def nonzero(role: str) -> Hyp:
    return ("%s nonzero" % role, lambda c: c.module(role) is not None and not c.module(role).is_zero())


def cm(role: str) -> Hyp:
    return ("%s CM" % role, lambda c: _inv(c.module(role)).is_cm)


def min_mult(role: str) -> Hyp:
    return ("%s min mult" % role, lambda c: _inv(c.module(role)).min_mult)


def finite_length(role: str) -> Hyp:
    return ("%s finite length" % role, lambda c: c.module(role).length is not None)


_OPS = {
    "<": lambda a, b: a < b, "<=": lambda a, b: a <= b, ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b, "!=": lambda a, b: a != b, "=": lambda a, b: a == b,
}


def compare(role: str, left: str, op: str, right: str) -> Hyp:
    """left in {e, lambda}, right in {mu, type}: e.g. ``e(M) < 2 mu(M)``."""
    def check(c: Case) -> bool:
        rep = _inv(c.module(role))
        a = rep.e if left == "e" else rep.length
        if a is None:
            return False
        b = rep.mu if right == "mu" else rep.type
        return _OPS[op](a, 2 * b)
    return ("%s(%s) %s 2%s(%s)" % (left, role, op, right, role), check)


def ring_cm() -> Hyp:
    return ("R CM", lambda c: classify_ring(c.ring).is_cm)


def ring_gorenstein() -> Hyp:
    return ("R Gorenstein", lambda c: classify_ring(c.ring).is_gorenstein)


def m2_kills(role: str) -> Hyp:
    return ("m^2 %s = 0" % role, lambda c: killed_by_m_squared(c.module(role)))


def pd_finite_hyp(role: str) -> Hyp:
    return ("pd %s finite" % role, lambda c: projective_dimension(c.module(role)) is not None)


def gdim_evidence(role: str) -> Hyp:
    return ("G-dim %s finite (bounded)" % role, lambda c: bounded_gdim(c.module(role), c.evidence_span).passed)


def semidualizing_evidence(role: str) -> Hyp:
    return ("%s semidualizing (bounded)" % role, lambda c: bounded_semidualizing(c.module(role), c.evidence_span).passed)


# -- conclusions -----------------------------------------------------------------------------
Conclusion = Tuple[str, Callable[[Case], bool]]


def pd_finite(role: str) -> Conclusion:
    return ("pd %s < inf" % role, lambda c: projective_dimension(c.module(role)) is not None)


def id_finite(role: str) -> Conclusion:
    return ("id %s < inf" % role, lambda c: injective_dimension(c.module(role)) is not None)


def _hyp_e2(c: Case) -> bool:
    rc = classify_ring(c.ring)
    return rc.is_hypersurface and rc.is_cm and rc.e <= 2


CONCLUSIONS: Dict[str, Conclusion] = {
    "pd N": pd_finite("N"),
    "id N": id_finite("N"),
    "R CM, pd M": ("R CM and pd M < inf",
                   lambda c: classify_ring(c.ring).is_cm and projective_dimension(c.M) is not None),
    "M free": ("M free and R CM of min mult",
               lambda c: is_free(c.M) and classify_ring(c.ring).min_mult),
    "hyp e<=2": ("R hypersurface with e(R) <= 2 and pd N < inf",
                 lambda c: _hyp_e2(c) and projective_dimension(c.N) is not None),
    "regular": ("R regular", lambda c: classify_ring(c.ring).is_regular),
    "regular dim>=2": ("R regular of dim >= 2",
                       lambda c: classify_ring(c.ring).is_regular and c.ring.dim >= 2),
    "hyp e<=2 not field": ("R hypersurface with e(R) <= 2, not a field, and pd N < inf",
                           lambda c: _hyp_e2(c) and not classify_ring(c.ring).is_field
                           and projective_dimension(c.N) is not None),
    "Gorenstein": ("R Gorenstein", lambda c: classify_ring(c.ring).is_gorenstein),
    "canonical": ("R CM and N a canonical module",
                  lambda c: classify_ring(c.ring).is_cm and depth(c.N) == c.ring.dim
                  and module_type(c.N) == 1 and injective_dimension(c.N) is not None),
}


# -- windows ------------------------------------------------------------------------------------
@dataclass(frozen=True)
class Window:
    kind: str   # "Tor(A,B)" or "Ext(A,B)" with A, B role names
    lo: int
    hi: int


def _tor_window(c: Case, j: int) -> List[Window]:
    return [Window("Tor(M,N)", j - c.M.dim + 1, j + beta(c.N, j))]


def _ext_s_window(c: Case, j: int) -> List[Window]:
    s = c.N.dim
    return [Window("Ext(M,N)", j - c.M.dim + 1, j + s + bass_sum(c.N, j, s))]


def _ext_d_window(c: Case, j: int) -> List[Window]:
    d = c.d
    return [Window("Ext(M,N)", j - c.M.dim + 1, j + d + bass_sum(c.N, j, d))]


def _ext_nm_window(c: Case, j: int) -> List[Window]:
    return [Window("Ext(N,M)", j + 1, j + beta(c.N, j) + c.M.dim)]


def _ext_mn_mu_window(c: Case, j: int) -> List[Window]:
    return [Window("Ext(M,N)", j - c.M.dim + 1, j + mu(c.N, j))]


def _evidence(kind: str, start: Callable[[Case], int]):
    def windows(c: Case, j: int) -> List[Window]:
        lo = start(c)
        return [Window(kind, lo, lo + c.evidence_span - 1)]
    return windows


@dataclass(frozen=True)
class Row:
    id: str
    statement: str
    roles: Tuple[str, str]
    hypotheses: Tuple[Hyp, ...]
    windows: Callable[[Case, int], List[Window]]
    conclusion: str
    mode: str = "certificate"
    uses_j: bool = True
    admissible: Callable[[Case, int], bool] = lambda c, j: j >= 0


ROWS: Dict[str, Row] = {}


def _row(*args, **kwargs) -> None:
    r = Row(*args, **kwargs)
    ROWS[r.id] = r


_MN = ("M", "N")
_MX = ("M", "X")

# CM modules with e < 2 mu / e < 2 type.
_row("T37.1", "CM M with e(M) < 2mu(M) is Tor-pd-test", _MN,
     (nonzero("M"), nonzero("N"), cm("M"), compare("M", "e", "<", "mu")), _tor_window, "pd N")
_row("T37.2", "CM M with e(M) < 2mu(M) is Ext-id-test against CM N", _MN,
     (nonzero("M"), nonzero("N"), cm("M"), compare("M", "e", "<", "mu"), cm("N")), _ext_s_window, "id N")
_row("T37.3", "CM M with e(M) < 2mu(M) is Ext-id-test over a CM ring", _MN,
     (nonzero("M"), nonzero("N"), cm("M"), compare("M", "e", "<", "mu"), ring_cm()), _ext_d_window, "id N",
     admissible=lambda c, j: j >= c.M.dim + c.d)
_row("T38", "CM M with e(M) < 2type(M) is Ext-pd-test", _MN,
     (nonzero("M"), nonzero("N"), cm("M"), compare("M", "e", "<", "type")), _ext_nm_window, "pd N")

# Minimal multiplicity.
_MM = (nonzero("M"), nonzero("N"), min_mult("M"))
_row("T310.1", "min-mult M with e(M) > 2mu(M) is Ext-pd-test", _MN,
     _MM + (compare("M", "e", ">", "mu"),), _ext_nm_window, "pd N")
_row("T310.2", "min-mult M with e(M) < 2mu(M) is Ext-id-test", _MN,
     _MM + (compare("M", "e", "<", "mu"),), _ext_mn_mu_window, "id N",
     admissible=lambda c, j: j >= depth(c.N))
_row("T310.3", "min-mult M with e(M) > 2type(M) is Tor-pd-test", _MN,
     _MM + (compare("M", "e", ">", "type"),), _tor_window, "pd N")
_row("T310.4", "min-mult M with e(M) > 2type(M) is Ext-id-test against CM N", _MN,
     _MM + (compare("M", "e", ">", "type"), cm("N")), _ext_s_window, "id N")
_row("T310.5", "min-mult M with e(M) > 2type(M) is Ext-id-test over a CM ring", _MN,
     _MM + (compare("M", "e", ">", "type"), ring_cm()), _ext_d_window, "id N",
     admissible=lambda c, j: j >= c.M.dim + c.d)

# Finite-length test modules.
_row("P32.1", "lambda(M) < 2mu(M) gives a Tor-pd-test module", _MX,
     (nonzero("M"), nonzero("N"), compare("M", "lambda", "<", "mu")),
     lambda c, j: [Window("Tor(M,N)", j + 1, j + beta(c.N, j))], "pd N")
_row("P32.2", "lambda(M) < 2mu(M) gives an Ext-id-test module for finite-length X", _MX,
     (nonzero("M"), nonzero("N"), compare("M", "lambda", "<", "mu"), finite_length("N")),
     lambda c, j: [Window("Ext(M,N)", j + 1, j + mu(c.N, j))], "id N")
_row("P33", "lambda(M) < 2type(M) gives an Ext-pd-test module", _MX,
     (nonzero("M"), nonzero("N"), compare("M", "lambda", "<", "type")),
     lambda c, j: [Window("Ext(N,M)", j + 1, j + beta(c.N, j))], "pd N")
_M2 = (nonzero("M"), nonzero("N"), m2_kills("M"))
_row("P34.1", "m^2 M = 0 and lambda(M) > 2mu(M): Ext-pd-test", _MX,
     _M2 + (compare("M", "lambda", ">", "mu"),),
     lambda c, j: [Window("Ext(N,M)", j + 1, j + beta(c.N, j))], "pd N")
_row("P34.2", "m^2 M = 0 and lambda(M) < 2mu(M): Ext-id-test", _MX,
     _M2 + (compare("M", "lambda", "<", "mu"),),
     lambda c, j: [Window("Ext(M,N)", j + 1, j + mu(c.N, j))], "id N",
     admissible=lambda c, j: j >= depth(c.N))
_row("P34.3", "m^2 M = 0 and lambda(M) > 2type(M): Tor-pd-test", _MX,
     _M2 + (compare("M", "lambda", ">", "type"),),
     lambda c, j: [Window("Tor(N,M)", j + 1, j + beta(c.N, j))], "pd N")
_row("P34.4", "m^2 M = 0 and lambda(M) > 2type(M): Ext-id-test for finite-length X", _MX,
     _M2 + (compare("M", "lambda", ">", "type"), finite_length("N")),
     lambda c, j: [Window("Ext(M,N)", j + 1, j + mu(c.N, j))], "id N")

# Self-Ext criteria for finite projective dimension and freeness.
_row("T61.1", "CM M with e < 2mu and two Ext windows has pd M finite over a CM ring", ("M", "-"),
     (nonzero("M"), cm("M"), compare("M", "e", "<", "mu")),
     lambda c, j: [Window("Ext(M,R)", j - c.M.dim + 1, j + c.d + bass_sum(c.R, j, c.d)),
                   Window("Ext(M,M)", j - c.M.dim + 1, j + c.M.dim + bass_sum(c.M, j, c.M.dim))],
     "R CM, pd M")
_row("T61.2", "min-mult M with e = 2mu and eventually vanishing self-Ext", ("M", "-"),
     (nonzero("M"), min_mult("M"), compare("M", "e", "=", "mu")),
     _evidence("Ext(M,M)", lambda c: c.d + 1), "R CM, pd M", mode="evidence", uses_j=False)
_row("T61.3", "min-mult M with e > 2mu and a self-Ext window has pd M finite", ("M", "-"),
     (nonzero("M"), min_mult("M"), compare("M", "e", ">", "mu")),
     lambda c, j: [Window("Ext(M,M)", j + 1, j + beta(c.M, j) + c.M.dim)], "R CM, pd M")


def _free1(c: Case, j: int) -> List[Window]:
    rc = classify_ring(c.ring)
    r = c.M.dim
    top_r = max(depth(c.R) + rc.type, r + mu(c.R, r))
    return [Window("Ext(M,R)", 1, top_r), Window("Ext(M,M)", 1, r + _inv(c.M).type)]


_row("T62.1", "min-mult M with e < 2mu and bounded Ext vanishing is free", ("M", "-"),
     (nonzero("M"), min_mult("M"), compare("M", "e", "<", "mu")), _free1, "M free", uses_j=False)
_row("T62.2", "min-mult M with e = 2mu and vanishing self-Ext is free", ("M", "-"),
     (nonzero("M"), min_mult("M"), compare("M", "e", "=", "mu")),
     _evidence("Ext(M,M)", lambda c: 1), "M free", mode="evidence", uses_j=False)
_row("T62.3", "min-mult M with e > 2mu and bounded self-Ext vanishing is free", ("M", "-"),
     (nonzero("M"), min_mult("M"), compare("M", "e", ">", "mu")),
     lambda c, j: [Window("Ext(M,M)", 1, max(_inv(c.M).mu + c.M.dim, depth(c.R)))], "M free", uses_j=False)

# Ring characterizations through a pair of CM modules.
_CMN = (nonzero("M"), nonzero("N"), cm("M"), cm("N"))
_row("C41.6", "hypersurface e <= 2 via Tor", _MN,
     _CMN + (compare("M", "e", "<", "mu"), compare("N", "e", "<=", "mu")), _tor_window, "hyp e<=2")
_row("C41.7", "hypersurface e <= 2 via Ext(M,N)", _MN,
     _CMN + (compare("M", "e", "<", "mu"), compare("N", "e", "<=", "type")), _ext_s_window, "hyp e<=2")
_row("C41.8", "hypersurface e <= 2 via Ext(N,M)", _MN,
     _CMN + (compare("M", "e", "<", "type"), compare("N", "e", "<=", "mu")), _ext_nm_window, "hyp e<=2")
_row("C42.6", "regular via Tor", _MN,
     _CMN + (compare("M", "e", "<", "mu"), compare("N", "e", "<", "mu")), _tor_window, "regular")
_row("C42.7", "regular via Ext(M,N)", _MN,
     _CMN + (compare("M", "e", "<", "mu"), compare("N", "e", "<", "type")), _ext_s_window, "regular")
_row("C42.8", "regular via Ext(N,M)", _MN,
     _CMN + (compare("M", "e", "<", "type"), compare("N", "e", "<", "mu")), _ext_nm_window, "regular")
_row("C43.6", "regular of dim >= 2 via Tor", _MN,
     _CMN + (compare("M", "e", "<", "mu"), compare("N", "e", ">", "type"), min_mult("N")),
     _tor_window, "regular dim>=2")
_row("C43.7", "regular of dim >= 2 via Ext(N,M)", _MN,
     _CMN + (compare("M", "e", "<", "type"), compare("N", "e", ">", "type"), min_mult("N")),
     _ext_nm_window, "regular dim>=2")
_row("C43.8", "regular of dim >= 2 via Ext(M,N)", _MN,
     _CMN + (compare("M", "e", "<", "mu"), compare("N", "e", ">", "mu"), min_mult("N")),
     _ext_s_window, "regular dim>=2")
_row("C43.6'", "regular of dim >= 2 via Tor, window in the Betti numbers of M", _MN,
     _CMN + (compare("M", "e", "<", "mu"), compare("N", "e", ">", "type"), min_mult("N")),
     lambda c, j: [Window("Tor(M,N)", j - c.N.dim + 1, j + beta(c.M, j))], "regular dim>=2")
_row("C43.8'", "regular of dim >= 2 via Ext(M,N), window in the Betti numbers of M", _MN,
     _CMN + (compare("M", "e", "<", "mu"), compare("N", "e", ">", "mu"), min_mult("N")),
     lambda c, j: [Window("Ext(M,N)", j + 1, j + beta(c.M, j) + c.N.dim)], "regular dim>=2")
_row("C43.8''", "regular of dim >= 2 via Ext(M,N) with both modules of min mult", _MN,
     _CMN + (compare("M", "e", "<", "mu"), compare("N", "e", ">", "mu"), min_mult("N"), min_mult("M")),
     _ext_mn_mu_window, "regular dim>=2", admissible=lambda c, j: j >= depth(c.N))
_row("C44.6", "hypersurface e <= 2, not a field, via Tor", _MN,
     _CMN + (compare("M", "e", "<", "mu"), compare("N", "e", ">=", "type"), min_mult("N")),
     _tor_window, "hyp e<=2 not field")
_row("C44.7", "hypersurface e <= 2, not a field, via Ext(N,M)", _MN,
     _CMN + (compare("M", "e", "<", "type"), compare("N", "e", ">=", "type"), min_mult("N")),
     _ext_nm_window, "hyp e<=2 not field")
_row("C44.8", "hypersurface e <= 2, not a field, via Ext(M,N)", _MN,
     _CMN + (compare("M", "e", "<", "mu"), compare("N", "e", ">=", "mu"), min_mult("N")),
     _ext_s_window, "hyp e<=2 not field")


def _self_ext_window(c: Case, j: int) -> List[Window]:
    s = c.M.dim
    top = max(j + 2 * s + sum(comb(s, i) * mu(c.M, j + s + i) for i in range(s + 1)),
              j + beta(c.M, j) + s)
    return [Window("Ext(M,M)", j + 1, top)]


_row("C46.6", "Gorenstein R with a min-mult M, e != 2mu, self-Ext vanishing is regular", ("M", "-"),
     (ring_gorenstein(), nonzero("M"), min_mult("M"), compare("M", "e", "!=", "mu")), _self_ext_window, "regular")
_row("C46.7", "Gorenstein R with a min-mult M, e != 2type, self-Ext vanishing is regular", ("M", "-"),
     (ring_gorenstein(), nonzero("M"), min_mult("M"), compare("M", "e", "!=", "type")), _self_ext_window, "regular")

# Gorenstein and CM characterizations; the "n >> 0" parts are bounded.
_row("C51.2", "min-mult M with e <= 2mu and finite G-dimension", ("M", "-"),
     (nonzero("M"), min_mult("M"), compare("M", "e", "<=", "mu"), gdim_evidence("M")),
     lambda c, j: [], "Gorenstein", mode="evidence", uses_j=False)
_row("C51.3", "min-mult M with e < 2mu and eventually vanishing Ext(M,R)", ("M", "-"),
     (nonzero("M"), min_mult("M"), compare("M", "e", "<", "mu")),
     _evidence("Ext(M,R)", lambda c: c.d + 1), "Gorenstein", mode="evidence", uses_j=False)
_row("C51.4", "CM M with e < 2mu, N of finite pd, eventually vanishing Ext(M,N)", _MN,
     _CMN + (compare("M", "e", "<", "mu"), pd_finite_hyp("N")),
     _evidence("Ext(M,N)", lambda c: c.d + 1), "Gorenstein", mode="evidence", uses_j=False)
_row("C56.2", "min-mult M with e < 2mu and eventually vanishing Ext(M,C), C semidualizing", ("M", "C"),
     (nonzero("M"), nonzero("N"), min_mult("M"), compare("M", "e", "<", "mu"), semidualizing_evidence("N")),
     _evidence("Ext(M,N)", lambda c: c.d + 1), "canonical", mode="evidence", uses_j=False)


# -- verdicts ---------------------------------------------------------------------------------
@dataclass
class TheoremVerdict:
    check_id: str
    theorem: str
    ring: str
    modules: Dict[str, str]
    j: Optional[int]
    window_lo: Optional[int]
    window_hi: Optional[int]
    hypotheses: Dict[str, bool]
    vanished: Optional[bool]
    mode: str
    predicted: Optional[str]
    verified: Optional[bool]
    consistent: bool
    seed: Optional[int]
    char: int
    elapsed_ms: int
    status: str = ""
    windows: List[Tuple[str, int, int]] = field(default_factory=list)

    RECORD_KEYS = ("check_id", "theorem", "ring", "modules", "j", "window_lo", "window_hi", "hypotheses",
                   "vanished", "mode", "predicted", "verified", "consistent", "seed", "char", "elapsed_ms")

    @property
    def fired(self) -> bool:
        return all(self.hypotheses.values()) and self.vanished is True

    def record(self) -> dict:
        return {k: getattr(self, k) for k in self.RECORD_KEYS}


def _vanishes(c: Case, kind: str, n: int) -> bool:
    if n < 0:
        return True
    op, args = kind.split("(")
    a, b = args.rstrip(")").split(",")
    X, Y = c.module(a), c.module(b)
    return (tor if op == "Tor" else ext)(X, Y, n).is_zero()


def evaluate_windows(c: Case, windows: List[Window]) -> Optional[bool]:
    """True if all vanish, False at the first nonvanishing, None if the bound cut the scan short."""
    truncated = False
    for w in windows:
        for n in range(max(w.lo, 0), w.hi + 1):
            if n > c.bound:
                truncated = True
                break
            if not _vanishes(c, w.kind, n):
                return False
    return None if truncated else True


def check(row_id: str, case: Case, j: Optional[int] = None, case_name: str = "") -> TheoremVerdict:
    """Evaluate one table row on one case at index j."""
    row = ROWS[row_id]
    start = time.perf_counter()
    if row.uses_j:
        if j is None or not row.admissible(case, j):
            raise InadmissibleError("j = %r is not admissible for %s" % (j, row_id))
    else:
        j = None
    hyps: Dict[str, bool] = {}
    for name, fn in row.hypotheses:
        if name.endswith("nonzero") or all(hyps.get(k, True) for k in hyps if k.endswith("nonzero")):
            hyps[name] = bool(fn(case))
        else:
            hyps[name] = False
    held = all(hyps.values())
    windows = row.windows(case, j if j is not None else 0) if held else []
    vanished = evaluate_windows(case, windows) if held else None
    fired = all(hyps.values()) and vanished is True
    predicted, verified = None, None
    if fired:
        text, fn = CONCLUSIONS[row.conclusion]
        predicted = text
        verified = bool(fn(case))
    consistent = (not fired) or bool(verified)
    if not all(hyps.values()):
        status = "hypothesis failed: " + ", ".join(k for k, v in hyps.items() if not v)
    elif vanished is None:
        status = "inconclusive: window exceeds bound %d" % case.bound
    elif not vanished:
        status = "window not satisfied, no conclusion"
    else:
        status = "fired, conclusion %s" % ("verified" if verified else "FAILED")
    lo = min((w.lo for w in windows), default=None)
    hi = max((w.hi for w in windows), default=None)
    names = {row.roles[0]: case.M.name or "M"}
    if row.roles[1] != "-" and case.N is not None:
        names[row.roles[1]] = case.N.name or "N"
    return TheoremVerdict(
        check_id="%s:%s:j=%s" % (row_id, case_name or case.ring.describe(), j),
        theorem=row_id, ring=case.ring.describe(), modules=names, j=j,
        window_lo=lo, window_hi=hi, hypotheses=hyps, vanished=vanished, mode=row.mode,
        predicted=predicted, verified=verified, consistent=consistent, seed=case.seed,
        char=case.ring.p, elapsed_ms=int(1000 * (time.perf_counter() - start)), status=status,
        windows=[(w.kind, w.lo, w.hi) for w in windows],
    )


def scan_contrapositive(row_id: str, case: Case, j_max: int = 6, case_name: str = "") -> List[TheoremVerdict]:
    """When the conclusion is known false, no admissible window up to j_max may fully vanish."""
    row = ROWS[row_id]
    _, conclusion = CONCLUSIONS[row.conclusion]
    if conclusion(case):
        return []
    out = []
    js = range(j_max + 1) if row.uses_j else [None]
    for j in js:
        if j is not None and not row.admissible(case, j):
            continue
        out.append(check(row_id, case, j, case_name))
    return out
