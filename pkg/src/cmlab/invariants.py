"""Per-module invariant reports and structural classification of rings."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import List, Optional, Sequence

from .errors import ZeroModuleError
from .graded.homdim import hom_dim_report
from .graded.homology import depth, module_type
from .graded.module import Module, minimal_generators
from .graded.resolution import resolution
from .graded.ring import GradedRing


@dataclass(frozen=True)
class InvariantReport:
    dim: int
    depth: int
    is_cm: bool
    e: int
    mu: int
    mu_mM: int
    length: Optional[int]
    type: int
    min_mult: bool
    ulrich: bool
    pd: Optional[int]
    id: Optional[int]

    @property
    def pd_finite(self) -> bool:
        return self.pd is not None

    @property
    def id_finite(self) -> bool:
        return self.id is not None

    def as_dict(self) -> dict:
        return asdict(self)


def mu_of_mM(M: Module) -> int:
    """mu(mM): minimal generators of {x_v e_i} modulo the relations of M."""
    Mm = M.minimal()
    free = Mm.free
    vecs = [free.scale_poly(free.basis(i), Mm.ring.S.var(v))
            for i in range(Mm.rank) for v in range(Mm.ring.nvars)]
    return len(minimal_generators(free, vecs, Mm.gb()))


def invariant_report(M: Module) -> InvariantReport:
    if "report" in M.cache:
        return M.cache["report"]
    if M.is_zero():
        raise ZeroModuleError("invariants of the zero module are undefined")
    r = M.dim
    dp = depth(M)
    cm = dp == r
    e = M.multiplicity
    mu = M.num_generators
    mu_m = mu_of_mM(M)
    hd = hom_dim_report(M)
    min_mult = cm and e == mu_m + (1 - r) * mu
    report = InvariantReport(
        dim=r, depth=dp, is_cm=cm, e=e, mu=mu, mu_mM=mu_m, length=M.length,
        type=module_type(M), min_mult=min_mult, ulrich=cm and e == mu,
        pd=hd.pd, id=hd.id,
    )
    M.cache["report"] = report
    return report


@dataclass(frozen=True)
class RingClass:
    is_regular: bool
    is_hypersurface: bool
    is_gorenstein: bool
    is_cm: bool
    min_mult: bool
    e: int
    dim: int
    embdim: int
    type: int
    is_field: bool

    def as_dict(self) -> dict:
        return asdict(self)


def classify_ring(R: GradedRing) -> RingClass:
    """Needs the minimalized presentation (ideal inside m^2)."""
    if not R.minimalized:
        raise ValueError("classification needs a minimalized presentation")
    RM = R.as_module()
    d = R.dim
    e = R.multiplicity
    cm = depth(RM) == d
    t = module_type(RM)
    return RingClass(
        is_regular=not R.ideal,
        is_hypersurface=len(R.ideal) <= 1,
        is_gorenstein=cm and t == 1,
        is_cm=cm,
        min_mult=cm and e == R.nvars - d + 1,
        e=e, dim=d, embdim=R.nvars, type=t,
        is_field=d == 0 and e == 1,
    )


@dataclass(frozen=True)
class ComplexityEstimate:
    estimate: Optional[int]   # None: growth looks exponential
    betti: List[int]
    caveat: str = "heuristic, not a certificate"


def complexity_estimate(M: Module, window: int = 8) -> ComplexityEstimate:
    """Polynomial growth degree of beta_n fitted over n = 0..window."""
    if window < 5:
        raise ValueError("the window needs at least 6 Betti numbers")
    b = resolution(M).betti_numbers(window)
    return ComplexityEstimate(_growth_degree(b), b)


def _growth_degree(b: Sequence[int]) -> Optional[int]:
    if b[-1] == 0:
        return 0
    tail = list(b[len(b) // 2:])
    if all(x > 0 for x in tail) and all(y >= 1.5 * x for x, y in zip(tail, tail[1:])):
        return None
    # Least c such that the c-th finite difference vanishes on the tail: beta_n ~ n^(c-1).
    diffs = list(tail)
    for c in range(1, len(tail)):
        diffs = [y - x for x, y in zip(diffs, diffs[1:])]
        if all(x == 0 for x in diffs):
            return c
    # Fall back to the log-log slope over the tail.
    n0 = len(b) - len(tail)
    xs = [math.log(n0 + i + 1) for i in range(len(tail))]
    ys = [math.log(max(v, 1)) for v in tail]
    slope = (ys[-1] - ys[0]) / (xs[-1] - xs[0])
    return max(1, round(slope) + 1)
