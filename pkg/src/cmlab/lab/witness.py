"""Explicit modules realizing the existence clauses of the ring characterizations.

Each builder takes a ring satisfying the structural side of a characterization
and, for every dimension n in the stated range, constructs a module and
verifies its properties directly from invariant reports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from ..errors import InadmissibleError
from ..graded.duality import dagger
from ..graded.module import Module
from ..graded.ring import GradedRing
from ..graded.sop import cut_by_general_sop
from ..invariants import classify_ring, invariant_report
from .build import cyclic


@dataclass
class Witness:
    theorem: str
    item: str
    n: int
    module: Module
    checks: Dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _properties(N: Module, n: int, inequality: str, finiteness: str) -> Dict[str, bool]:
    rep = invariant_report(N)
    left, op, right = inequality.split()
    bound = 2 * (rep.mu if right == "2mu" else rep.type)
    value = rep.e
    holds = {"<": value < bound, "<=": value <= bound, ">": value > bound,
             ">=": value >= bound, "!=": value != bound}[op]
    return {
        "CM": rep.is_cm,
        "dim = %d" % n: rep.dim == n,
        "min mult": rep.min_mult,
        "e %s %s" % (op, right): holds,
        "%s finite" % finiteness: rep.pd_finite if finiteness == "pd" else rep.id_finite,
    }


def _general_cut(R: GradedRing, t: int, rng: random.Random, name: str) -> Module:
    """R/(x_1..x_t) for a general regular sequence of linear forms preserving e."""
    if t == 0:
        return R.as_module()
    RM = R.as_module()
    if t == R.dim:
        quotient, _ = cut_by_general_sop(RM, t, mode="reduction", rng=rng)
    else:
        # A full reduction restricted to its first t forms keeps e(R/(x)) = e(R).
        _, forms = cut_by_general_sop(RM, R.dim, mode="reduction", rng=rng)
        quotient = RM.quotient_by_forms(forms[:t])
    quotient.name = name
    return quotient


def _seq(count: int, first: int = 1) -> str:
    """Display name of the sequence x_first, ..., x_{first+count-1}."""
    if count <= 0:
        return ""
    if count == 1:
        return "x_%d" % first
    return "x_%d..x_%d" % (first, first + count - 1)


def _variables(R: GradedRing, count: int, offset: int = 0):
    return [R.S.var(i) for i in range(offset, offset + count)]


def _require(cond: bool, text: str) -> None:
    if not cond:
        raise InadmissibleError("ring does not satisfy the structural side: " + text)


def _cut_family(theorem: str, R: GradedRing, rng, items) -> List[Witness]:
    out = []
    d = R.dim
    for n in range(d + 1):
        N = _general_cut(R, d - n, rng, "R/(%s)" % _seq(d - n))
        for item, ineq, fin in items:
            out.append(Witness(theorem, item, n, N, _properties(N, n, ineq, fin)))
    return out


def witness_c41(R: GradedRing, rng: random.Random) -> List[Witness]:
    rc = classify_ring(R)
    _require(rc.is_hypersurface and rc.is_cm and rc.e <= 2, "hypersurface with e <= 2")
    return _cut_family("C41", R, rng, [("2", "e <= 2mu", "pd"), ("3", "e <= 2type", "id")])


def witness_c42(R: GradedRing, rng: random.Random) -> List[Witness]:
    _require(classify_ring(R).is_regular, "regular")
    return _cut_family("C42", R, rng, [("2", "e < 2mu", "pd"), ("3", "e < 2type", "id")])


def witness_c43(R: GradedRing, rng: random.Random) -> List[Witness]:
    rc = classify_ring(R)
    _require(rc.is_regular and R.dim >= 2, "regular of dim >= 2")
    d = R.dim
    out = []
    for n in range(max(d - 2, 0) + 1):
        xs = _variables(R, d - n)
        N = cyclic(R, [R.S.mul(a, b) for i, a in enumerate(xs) for b in xs[i:]], "R/(%s)^2" % _seq(d - n))
        X = dagger(N)
        X.name = "(%s)+" % N.name
        out.append(Witness("C43", "2", n, X, _properties(X, n, "e > 2type", "pd")))
        out.append(Witness("C43", "3", n, N, _properties(N, n, "e > 2mu", "id")))
    return out


def witness_c44(R: GradedRing, rng: random.Random) -> List[Witness]:
    rc = classify_ring(R)
    _require(rc.is_hypersurface and rc.is_cm and rc.e <= 2 and not rc.is_field,
             "hypersurface with e <= 2, not a field")
    d = R.dim
    out = []
    items = [("2", "e >= 2type", "pd"), ("3", "e >= 2mu", "id")]
    if not rc.is_regular:
        for n in range(max(d - 1, 0) + 1):
            N = _general_cut(R, d - n, rng, "R/(%s)" % _seq(d - n))
            for item, ineq, fin in items:
                out.append(Witness("C44", item, n, N, _properties(N, n, ineq, fin)))
        return out
    # Regular: pass to R/(l^2) with l a variable, then cut by the remaining variables.
    square = R.S.mul(R.S.var(0), R.S.var(0))
    for n in range(d):
        name = "R/(%s)" % ", ".join(filter(None, ["x_0^2", _seq(d - 1 - n)]))
        N = cyclic(R, [square] + _variables(R, d - 1 - n, offset=1), name)
        for item, ineq, fin in items:
            out.append(Witness("C44", item, n, N, _properties(N, n, ineq, fin)))
    return out


def witness_c46(R: GradedRing, rng: random.Random) -> List[Witness]:
    _require(classify_ring(R).is_regular, "regular")
    d = R.dim
    out = []
    for n in range(d + 1):
        M = cyclic(R, _variables(R, d - n), "R/(%s)" % _seq(d - n)) if d > n else R.as_module()
        # Ext^{>>0}(M, M) = 0 is certified by pd M < infinity.
        out.append(Witness("C46", "2", n, M, _properties(M, n, "e != 2mu", "pd")))
        out.append(Witness("C46", "3", n, M, _properties(M, n, "e != 2type", "pd")))
    return out


BUILDERS: Dict[str, Callable[[GradedRing, random.Random], List[Witness]]] = {
    "C41": witness_c41, "C42": witness_c42, "C43": witness_c43, "C44": witness_c44, "C46": witness_c46,
}


def witness(theorem: str, R: GradedRing, seed: Optional[int] = 0) -> List[Witness]:
    """Witness modules for every n in the theorem's range; raises if R is outside its class."""
    key = theorem.split(".")[0].upper()
    if key not in BUILDERS:
        raise KeyError("no witness construction for %r" % theorem)
    return BUILDERS[key](R, random.Random(seed))
