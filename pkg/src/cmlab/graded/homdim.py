"""Finite certificates for projective and injective dimension.

pd: with t = depth R - depth M, pd M is finite iff beta_{t+1}(M) = 0, and then
pd M = t (Auslander-Buchsbaum; t < 0 forces pd = infinity).
id: with m = max(depth R, depth M) + 1, id M is finite iff mu^m(M) = 0, and then
id M = depth R (Bass numbers of infinite-id modules never vanish past depth M).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..errors import ZeroModuleError
from .homology import bass_number, depth
from .module import Module
from .resolution import resolution

INFINITE = None


@dataclass(frozen=True)
class HomDimReport:
    pd: Optional[int]
    id: Optional[int]
    pd_witness: int
    id_witness: int

    @property
    def pd_finite(self) -> bool:
        return self.pd is not None

    @property
    def id_finite(self) -> bool:
        return self.id is not None


def projective_dimension(M: Module) -> Optional[int]:
    """pd M, or None when infinite."""
    if M.is_zero():
        raise ZeroModuleError("pd of the zero module is undefined")
    t = depth(M.ring.as_module()) - depth(M)
    if t < 0:
        return INFINITE
    return t if resolution(M).betti(t + 1) == 0 else INFINITE


def injective_dimension(M: Module) -> Optional[int]:
    """id M, or None when infinite."""
    if M.is_zero():
        raise ZeroModuleError("id of the zero module is undefined")
    depth_r = depth(M.ring.as_module())
    m = max(depth_r, depth(M)) + 1
    return depth_r if bass_number(M, m) == 0 else INFINITE


def hom_dim_report(M: Module) -> HomDimReport:
    depth_r = depth(M.ring.as_module())
    return HomDimReport(
        pd=projective_dimension(M),
        id=injective_dimension(M),
        pd_witness=depth_r - depth(M) + 1,
        id_witness=max(depth_r, depth(M)) + 1,
    )
