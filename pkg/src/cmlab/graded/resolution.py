"""Minimal graded free resolutions over R = S/I, built lazily one step at a time."""

from __future__ import annotations

from collections import Counter
from typing import Dict, List

from ..algebra.groebner import kernel
from ..algebra.polyring import FreeModule, Vector
from .module import Module, minimal_generators


class Resolution:
    """F_0 <- F_1 <- F_2 <- ...  with  maps[n] : F_n -> F_{n-1}  given by columns.

    ``twists[n]`` lists the generator degrees of F_n; ``maps[n][j]`` is the
    image of the j-th basis vector of F_n as a vector in F_{n-1} (over S,
    read modulo I). ``maps[0]`` is unused.
    """

    def __init__(self, module: Module):
        M = module.minimal()
        self.module = M
        self.ring = M.ring
        self.twists: List[List[int]] = [list(M.twists)]
        self.maps: List[List[Vector]] = [[]]
        if M.rank:
            cols = list(M.relations)
            F0 = M.free
            self.twists.append([F0.degree(c) for c in cols])
            self.maps.append(cols)
        else:
            self.twists.append([])
            self.maps.append([])

    @property
    def length_computed(self) -> int:
        return len(self.twists) - 1

    def free(self, n: int) -> FreeModule:
        if n < 0:
            return FreeModule(self.ring.S, [])
        self.extend(n)
        return FreeModule(self.ring.S, self.twists[n])

    def extend(self, n: int) -> "Resolution":
        """Make F_0..F_n (and the maps into them) available."""
        while len(self.twists) <= n:
            self._step()
        return self

    def _step(self) -> None:
        n = len(self.twists) - 1
        cols = self.maps[n]
        if not cols:
            self.twists.append([])
            self.maps.append([])
            return
        ring = self.ring
        target = FreeModule(ring.S, self.twists[n - 1])
        source = FreeModule(ring.S, self.twists[n])
        ker = kernel(cols, self.twists[n], target, seed_gb=ring.ideal_vectors(target))
        nxt = minimal_generators(source, ker, ring.ideal_vectors(source))
        self.twists.append([source.degree(v) for v in nxt])
        self.maps.append(nxt)

    def betti(self, n: int) -> int:
        if n < 0:
            return 0
        self.extend(n)
        return len(self.twists[n])

    def betti_numbers(self, n_max: int) -> List[int]:
        return [self.betti(i) for i in range(n_max + 1)]

    def graded_betti(self, n_max: int) -> Dict[int, Counter]:
        self.extend(n_max)
        return {i: Counter(self.twists[i]) for i in range(n_max + 1)}

    def matrix(self, n: int) -> List[List[dict]]:
        """Entries of maps[n] as rows x columns of polynomials."""
        self.extend(n)
        F = FreeModule(self.ring.S, self.twists[n - 1])
        cols = [F.entry_list(c) for c in self.maps[n]]
        return [[cols[j][i] for j in range(len(cols))] for i in range(F.rank)]

    def betti_table(self, n_max: int) -> str:
        """Macaulay2-style table: row r, column i holds beta_{i, i+r}."""
        g = self.graded_betti(n_max)
        entries = {(i, d - i): c for i, cnt in g.items() for d, c in cnt.items()}
        if not entries:
            return "(zero module)"
        rows = sorted({r for _, r in entries})
        width = max(len(str(c)) for c in entries.values()) + 1
        lines = ["     " + "".join(str(i).rjust(width) for i in range(n_max + 1))]
        for r in range(rows[0], rows[-1] + 1):
            cells = "".join(str(entries.get((i, r), ".")).rjust(width) for i in range(n_max + 1))
            lines.append("%3d: %s" % (r, cells))
        return "\n".join(lines)


def resolution(M: Module) -> Resolution:
    """The (cached) minimal resolution of M."""
    key = "resolution"
    if key not in M.cache:
        M.cache[key] = Resolution(M)
    return M.cache[key]
