"""Seeded random (R, M, N, j) triples for every row, drawn from a fixed pool of modules.

The pool is built once so resolutions and Ext/Tor caches are shared across
draws; a draw only picks indices. Soundness means no verdict is inconsistent.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import NotCohenMacaulayError, ResourceLimitError
from ..graded.duality import canonical_module, dagger, matlis_dual
from ..graded.module import Module
from ..graded.ring import GradedRing
from .build import cyclic, power_quotient
from .corpus import RINGS, make_ring
from .windows import DEFAULT_BOUND, ROWS, Case, TheoremVerdict, check

EXTRA_RINGS: Dict[str, Tuple[Sequence[str], Sequence[str]]] = {
    "k[x,y]/(x^2,y^3)": (("x", "y"), ("x^2", "y^3")),
    "k[x,y]/(x^3-y^3)": (("x", "y"), ("x^3 - y^3",)),
    "k[x,y,z]/(xy)": (("x", "y", "z"), ("x*y",)),
    "k[x,y,z]/(x^2,y^2)": (("x", "y", "z"), ("x^2", "y^2")),
    "k[x,y,z]/(x^2,xy,y^2)": (("x", "y", "z"), ("x^2", "x*y", "y^2")),
}


def _random_quadric(R: GradedRing, rng: random.Random):
    return {m: c for m in R.S.monomials_of_degree(2) if (c := rng.randrange(R.p))}


def module_pool(R: GradedRing, rng: random.Random) -> List[Module]:
    """Nonzero test modules over R: structural ones plus a few general cyclic quotients."""
    out = [R.as_module(), R.residue_field(), power_quotient(R, 2, "R/m^2")]
    sq = out[2]
    try:
        out.append(matlis_dual(sq) if sq.length is not None else dagger(sq))
        out[-1].name = "(R/m^2)^v"
        out.append(canonical_module(R))
        out[-1].name = "omega"
    except NotCohenMacaulayError:
        pass
    if R.nvars:
        out.append(cyclic(R, [R.random_linear_form(rng)], "R/(l)"))
        out.append(cyclic(R, [_random_quadric(R, rng)], "R/(q)"))
    if R.nvars >= 2:
        out.append(cyclic(R, [R.random_linear_form(rng), R.random_linear_form(rng)], "R/(l1,l2)"))
    return [M for M in out if not M.is_zero()]


@dataclass
class SoundnessReport:
    verdicts: List[TheoremVerdict] = field(default_factory=list)
    inadmissible: int = 0
    limits: List[str] = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def inconsistent(self) -> List[TheoremVerdict]:
        return [v for v in self.verdicts if not v.consistent]

    def per_row(self) -> Dict[str, Tuple[int, int]]:
        """row -> (verdicts, fired)."""
        out: Dict[str, Tuple[int, int]] = {}
        for v in self.verdicts:
            n, f = out.get(v.theorem, (0, 0))
            out[v.theorem] = (n + 1, f + v.fired)
        return out


def soundness_scan(rows: Optional[Sequence[str]] = None, per_row: int = 200, seed: int = 0,
                   jmax: int = 6, bound: int = DEFAULT_BOUND) -> SoundnessReport:
    t0 = time.perf_counter()
    rng = random.Random(seed)
    pool = []
    for name in list(RINGS) + list(EXTRA_RINGS):
        if name in RINGS:
            R = make_ring(name)
        else:
            names, ideal = EXTRA_RINGS[name]
            R = GradedRing.from_strings(list(names), list(ideal))
        pool.append((name, R, module_pool(R, rng)))
    report = SoundnessReport()
    for row_id in rows or ROWS:
        row = ROWS[row_id]
        for i in range(per_row):
            draw = random.Random("%d:%s:%d" % (seed, row_id, i))
            name, R, mods = draw.choice(pool)
            a = draw.randrange(len(mods))
            b = draw.randrange(len(mods)) if row.roles[1] != "-" else None
            case = Case(R, mods[a], mods[b] if b is not None else None, bound=bound, seed=seed)
            j = None
            if row.uses_j:
                js = [j for j in range(jmax + 1) if row.admissible(case, j)]
                if not js:
                    report.inadmissible += 1
                    continue
                j = draw.choice(js)
            label = "sound:%s|M=%s|N=%s|draw=%d" % (name, mods[a].name, mods[b].name if b is not None else "-", i)
            try:
                report.verdicts.append(check(row_id, case, j, label))
            except ResourceLimitError as exc:
                report.limits.append("%s: %s" % (label, exc))
    report.elapsed_s = time.perf_counter() - t0
    return report
