"""Cutting a module down by general linear forms.

A linear form l is M-regular exactly when H_{M/lM}(t) = (1 - t) H_M(t); the
test needs only two Hilbert series. Randomness comes from the caller's
``random.Random`` so every choice is reproducible from a recorded seed.
"""

from __future__ import annotations

import random
from typing import List, Tuple

from ..errors import SamplingError
from ..algebra.polyring import Poly
from .module import Module

RETRY_LIMIT = 64


def is_regular_form(M: Module, form: Poly) -> Tuple[bool, Module]:
    quotient = M.quotient_by_forms([form])
    return quotient.hilbert_series() == M.hilbert_series().times_one_minus_t(), quotient


def cut_by_general_sop(M: Module, t: int, mode: str = "regular-only", rng: random.Random = None,
                       retries: int = RETRY_LIMIT) -> Tuple[Module, List[Poly]]:
    """M/(l_1..l_t)M for random M-regular linear forms l_i.

    ``mode="reduction"`` further requires t = dim M and resamples the whole
    sequence until  length(M/xM) = e(M).
    """
    if mode not in ("regular-only", "reduction"):
        raise ValueError("unknown mode %r" % mode)
    if t < 0 or t > max(M.dim, 0):
        raise ValueError("t must lie between 0 and dim M")
    if rng is None:
        rng = random.Random(0)
    if mode == "reduction" and t != M.dim:
        raise ValueError("a reduction needs t = dim M")
    e = M.multiplicity if mode == "reduction" else None
    for _ in range(retries if mode == "reduction" else 1):
        current, forms = M, []
        for _ in range(t):
            for _ in range(retries):
                form = M.ring.random_linear_form(rng)
                if not form:
                    continue
                ok, quotient = is_regular_form(current, form)
                if ok:
                    current = quotient
                    forms.append(form)
                    break
            else:
                raise SamplingError("no regular linear form found in %d samples" % retries)
        if mode == "regular-only" or current.length == e:
            return current, forms
    raise SamplingError("reduction not found in %d samples" % retries)
