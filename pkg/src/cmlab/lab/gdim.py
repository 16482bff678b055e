"""Bounded checks for total reflexivity and for semidualizing modules.

Both properties are quantified over all homological degrees; these checks
stop at a bound B and are only ever reported as evidence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict

from ..graded.homology import depth, ext
from ..graded.module import Module
from ..graded.resolution import resolution


def syzygy_module(M: Module, t: int) -> Module:
    """The t-th syzygy of M in its minimal resolution (t = 0 gives M)."""
    M = M.minimal()
    if t == 0:
        return M
    res = resolution(M).extend(t + 1)
    return Module(M.ring, res.twists[t], res.maps[t + 1], name="Syz%d(%s)" % (t, M.name or "M")).minimal()


def auslander_transpose(M: Module) -> Module:
    """coker of the transposed minimal presentation matrix, Hom(F_1, R) <- Hom(F_0, R)."""
    M = M.minimal()
    ring = M.ring
    F0 = M.free
    b = [F0.degree(v) for v in M.relations]
    rels = []
    dual_free = ring.free([-x for x in b])
    cols = [F0.entries(v) for v in M.relations]
    for i in range(M.rank):
        rels.append(dual_free.vector({j: col[i] for j, col in enumerate(cols) if i in col}))
    return Module(ring, [-x for x in b], rels, name="Tr(%s)" % (M.name or "M"))


def _ext_vanish_range(X: Module, Y: Module, lo: int, hi: int) -> Dict[int, bool]:
    out = {}
    for i in range(lo, hi + 1):
        out[i] = ext(X, Y, i).is_zero()
        if not out[i]:
            break
    return out


@dataclass
class GdimEvidence:
    t: int
    ext_M_R: Dict[int, bool] = field(default_factory=dict)
    ext_G_R: Dict[int, bool] = field(default_factory=dict)
    ext_TrG_R: Dict[int, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.ext_M_R.values()) and all(self.ext_G_R.values()) and all(self.ext_TrG_R.values())


def bounded_gdim(M: Module, B: int) -> GdimEvidence:
    """Evidence that G-dim M is finite, checked through degree B.

    With t = depth R - depth M the t-th syzygy G must be totally reflexive;
    reflexivity of G is tested through Ext(Tr G, R) (Auslander's sequence).
    """
    R = M.ring.as_module()
    t = max(depth(R) - depth(M), 0)
    ev = GdimEvidence(t)
    ev.ext_M_R = _ext_vanish_range(M, R, t + 1, t + B)
    if not ev.passed:
        return ev
    G = syzygy_module(M, t)
    if G.is_zero() or not G.relations:
        return ev
    ev.ext_G_R = _ext_vanish_range(G, R, 1, B)
    if not ev.passed:
        return ev
    TrG = auslander_transpose(G)
    if not TrG.is_zero():
        ev.ext_TrG_R = _ext_vanish_range(TrG, R, 1, B)
    return ev


@dataclass
class SemidualizingEvidence:
    hom_is_cyclic_in_degree_zero: bool
    hom_matches_ring: bool
    self_ext: Dict[int, bool]

    @property
    def passed(self) -> bool:
        return self.hom_is_cyclic_in_degree_zero and self.hom_matches_ring and all(self.self_ext.values())


def bounded_semidualizing(C: Module, B: int) -> SemidualizingEvidence:
    """Hom(C, C) cyclic on a degree-0 generator with the Hilbert series of R, and Ext^{1..B}(C, C) = 0.

    A cyclic Hom(C, C) generated in degree 0 is generated by the identity, so
    equal Hilbert series make the homothety map R -> Hom(C, C) bijective.
    """
    R = C.ring
    H = ext(C, C, 0).presentation().minimal()
    cyclic = H.rank == 1 and H.twists[0] == 0
    same = H.hilbert_series() == R.hilbert_series()
    return SemidualizingEvidence(cyclic, same, _ext_vanish_range(C, C, 1, B))
