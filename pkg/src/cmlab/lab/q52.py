"""Random search for Artinian rings with a module M, m^2 M = 0, length(M) = 2 mu(M),
whose Ext^{>0}(M, R) vanishes through a bound while R is not Gorenstein.

Survivors with type(R) != 1 are flagged as potential counterexamples on bounded
evidence only; nothing here is ever reported as a refutation.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from typing import List, Optional

from ..graded.homology import ext, module_type
from ..graded.module import Module
from ..graded.resolution import resolution
from ..graded.ring import GradedRing
from .build import killed_by_m_squared
from .gdim import bounded_gdim

NAMES = ("x", "y", "z")
# Resolutions past this rank are abandoned and the trial is reported as a limit.
RANK_CAP = 600
# For a self-injective R, Ext^{>0}(M, R) = 0 holds outright; a short prefix is still computed as a cross-check.
GORENSTEIN_CROSS_CHECK = 3


@dataclass
class Q52Params:
    p: int = 32003
    max_vars: int = 3
    max_extra_generators: int = 5
    bound: int = 12
    trials: int = 1000
    max_mu: int = 2
    seed: int = 0

    def __post_init__(self):
        if self.bound < 2:
            raise ValueError("the Ext bound B must be at least 2")
        if not 1 <= self.max_vars <= len(NAMES):
            raise ValueError("max_vars must lie in 1..%d" % len(NAMES))


@dataclass
class Q52Trial:
    trial: int
    ring: str
    mu: int
    length: int
    type_R: int
    ext_vanishing: Optional[bool]       # None: abandoned at the rank cap
    last_checked: int
    route: str
    gdim_passed: Optional[bool] = None
    flagged: bool = False


@dataclass
class Q52Report:
    params: Q52Params
    survivors: List[Q52Trial] = field(default_factory=list)
    flagged: List[Q52Trial] = field(default_factory=list)
    trials_run: int = 0
    degenerate: int = 0
    filtered_out: int = 0
    limits: int = 0
    cross_check_failures: List[int] = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def verdict(self) -> str:
        if self.trials_run == 0:
            return "empty report"
        if self.cross_check_failures:
            return "engine error: Ext(M, R) nonzero over a self-injective ring in trials %s" % self.cross_check_failures
        if self.flagged:
            return "%d potential counterexample(s) (bounded evidence), see flagged" % len(self.flagged)
        return "no counterexample found up to bounds"

    def as_dict(self) -> dict:
        out = asdict(self)
        out["verdict"] = self.verdict
        return out


def random_ring(rng: random.Random, params: Q52Params) -> GradedRing:
    """k[x..]/(m^3 + random quadrics)."""
    n = rng.randint(1, params.max_vars)
    names = NAMES[:n]
    probe = GradedRing(names, (), params.p)
    S = probe.S
    quads = S.monomials_of_degree(2)
    count = rng.randint(0, min(params.max_extra_generators, len(quads)))
    ideal = [{m: 1} for m in S.monomials_of_degree(3)]
    for _ in range(count):
        ideal.append({m: c for m in quads if (c := rng.randrange(params.p))})
    return GradedRing(names, [f for f in ideal if f], params.p)


def random_module(R: GradedRing, mu: int, rng: random.Random) -> Module:
    """R^mu / (m^2 R^mu + U) with U a general codimension-mu subspace of (m R^mu)_1."""
    S = R.S
    F = R.free([0] * mu)
    n = R.nvars
    rels = [F.scale_poly(F.basis(i), {m: 1}) for i in range(mu) for m in S.monomials_of_degree(2)]
    linear = [F.scale_poly(F.basis(i), S.var(v)) for i in range(mu) for v in range(n)]
    for _ in range(n * mu - mu):
        vec: dict = {}
        for v in linear:
            c = rng.randrange(R.p)
            for key, a in v.items():
                vec[key] = (vec.get(key, 0) + c * a) % R.p
        rels.append({k: a for k, a in vec.items() if a})
    return Module(R, [0] * mu, rels, name="M")


def _ext_filter(M: Module, R: GradedRing, upto: int):
    """(all vanished, last index checked); None for the first entry at the rank cap."""
    RM = R.as_module()
    res = resolution(M)
    for i in range(1, upto + 1):
        if res.betti(i) > RANK_CAP:
            return None, i - 1
        if not ext(M, RM, i).is_zero():
            return False, i
    return True, upto


def explore_q52(params: Q52Params) -> Q52Report:
    rng = random.Random(params.seed)
    report = Q52Report(params)
    t0 = time.perf_counter()
    for trial in range(params.trials):
        R = random_ring(rng, params)
        mu = rng.randint(1, params.max_mu)
        M = random_module(R, mu, rng)
        report.trials_run += 1
        length = M.length
        if M.is_zero() or length != 2 * M.num_generators or not killed_by_m_squared(M):
            # Degenerate draws (e.g. R with no linear part); not part of the family.
            report.degenerate += 1
            continue
        type_R = module_type(R.as_module())
        if type_R == 1:
            ok, last = _ext_filter(M, R, min(GORENSTEIN_CROSS_CHECK, params.bound))
            route = "R self-injective; Ext^{1..%d} cross-checked" % last
            if ok is False:
                report.cross_check_failures.append(trial)
                continue
        else:
            ok, last = _ext_filter(M, R, params.bound)
            route = "computed"
        if ok is None:
            report.limits += 1
        if ok is not True:
            if ok is False:
                report.filtered_out += 1
            continue
        entry = Q52Trial(trial, R.describe(), M.num_generators, length, type_R, ok, last, route)
        if type_R != 1:
            entry.gdim_passed = bounded_gdim(M, params.bound).passed
            entry.flagged = True
            report.flagged.append(entry)
        report.survivors.append(entry)
    report.elapsed_s = time.perf_counter() - t0
    return report
