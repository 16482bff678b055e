"""Seeded finite-length cases shared by the oracle-agreement tests."""

from __future__ import annotations

import random
from typing import List, Tuple

from cmlab.graded.duality import matlis_dual
from cmlab.graded.module import Module
from cmlab.graded.ring import GradedRing
from cmlab.lab.build import cyclic, power_quotient

ARTINIAN_RINGS = [
    (("x",), ("x^2",)),
    (("x",), ("x^3",)),
    (("x",), ("x^5",)),
    (("x", "y"), ("x^2", "y^2")),
    (("x", "y"), ("x^2", "y^3")),
    (("x", "y"), ("x^3", "y^3")),
    (("x", "y"), ("x^2", "x*y", "y^2")),
    (("x", "y"), ("x^2", "y^2", "x*y")),
    (("x", "y"), ("x*y", "x^3", "y^3")),
    (("x", "y", "z"), ("x^2", "y^2", "z^2")),
    (("x", "y", "z"), ("x^2", "y^2", "z^2", "x*y")),
]


def artinian_case(seed: int) -> Tuple[str, Module]:
    """One seeded (description, finite-length module) pair."""
    rng = random.Random(seed)
    names, ideal = ARTINIAN_RINGS[seed % len(ARTINIAN_RINGS)]
    R = GradedRing.from_strings(list(names), list(ideal))
    kind = rng.choice(["k", "R", "R/m^2", "dual", "linear", "quadric"])
    if kind == "k":
        M = R.residue_field()
    elif kind == "R":
        M = R.as_module()
    elif kind == "R/m^2":
        M = power_quotient(R, 2)
    elif kind == "dual":
        M = matlis_dual(power_quotient(R, 2))
    elif kind == "linear":
        M = cyclic(R, [R.random_linear_form(rng)], "R/(l)")
    else:
        S = R.S
        q = {}
        for m in S.monomials_of_degree(2):
            c = rng.randrange(R.p)
            if c:
                q[m] = c
        M = cyclic(R, [q], "R/(q)")
    return "%s over %s (seed %d)" % (kind, R.describe(), seed), M


def artinian_cases(count: int, start: int = 0) -> List[Tuple[str, Module]]:
    return [artinian_case(s) for s in range(start, start + count)]
