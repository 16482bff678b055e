"""Small constructors for the modules that the checks and witnesses use."""

from __future__ import annotations

from typing import List, Optional, Sequence

from ..algebra.polyring import Poly
from ..graded.module import Module
from ..graded.ring import GradedRing


def cyclic(R: GradedRing, forms: Sequence[Poly], name: Optional[str] = None) -> Module:
    """R / (forms) as an R-module."""
    return R.as_module().quotient_by_forms(list(forms), name=name)


def monomials(R: GradedRing, d: int) -> List[Poly]:
    S = R.S
    return [{m: 1} for m in S.monomials_of_degree(d)]


def power_quotient(R: GradedRing, t: int, name: Optional[str] = None) -> Module:
    """R / m^t."""
    return cyclic(R, monomials(R, t), name=name or "R/m^%d" % t)


def square_of_variables(R: GradedRing, count: int, name: Optional[str] = None) -> Module:
    """R / (x_1, ..., x_count)^2 in the first ``count`` variables."""
    S = R.S
    xs = [S.var(i) for i in range(count)]
    forms = [S.mul(a, b) for i, a in enumerate(xs) for b in xs[i:]]
    return cyclic(R, forms, name=name)


def killed_by_m_squared(M: Module) -> bool:
    """m^2 M = 0, read off from Hilbert series."""
    if M.is_zero():
        return True
    return M.quotient_by_forms(monomials(M.ring, 2)).hilbert_series() == M.hilbert_series()


def is_free(M: Module) -> bool:
    """A minimal presentation without relations."""
    return not M.is_zero() and not M.minimal().relations
