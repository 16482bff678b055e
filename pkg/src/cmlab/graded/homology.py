"""Tor and Ext as homology of F(M) (x) N and Hom(F(M), N).

Each homology module is a subquotient K/L of a free S-module G: K is the
kernel of the outgoing map (read modulo the relations of the target) and L
is the image of the incoming map plus the relations of the middle term.
Vanishing is the containment K in L, decided by Groebner reduction.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

from ..algebra.groebner import GBEngine, kernel
from ..algebra.polyring import FreeModule, Vector
from .hilbert import HilbertSeries
from .module import Module, hilbert_of_quotient, minimal_generators
from .resolution import resolution


class Subquotient:
    """K/L inside a free module; ``kernel_gb=None`` means K is all of G."""

    def __init__(self, ring, free: FreeModule, kernel_gb: Optional[List[Vector]], image: GBEngine):
        self.ring = ring
        self.free = free
        self.kernel_gb = kernel_gb
        self.image = image.complete()
        self._zero = None
        self._hilbert = None

    def kernel_generators(self) -> List[Vector]:
        if self.kernel_gb is None:
            return [self.free.basis(i) for i in range(self.free.rank)]
        return self.kernel_gb

    def is_zero(self) -> bool:
        if self._zero is None:
            red = self.image.reduce
            self._zero = all(not red(v, full=False) for v in self.kernel_generators())
        return self._zero

    def hilbert_series(self) -> HilbertSeries:
        if self._hilbert is None:
            top = hilbert_of_quotient(self.free, self.image.lead_terms())
            if self.kernel_gb is None:
                self._hilbert = top
            else:
                bottom = hilbert_of_quotient(self.free, [max(g) for g in self.kernel_gb])
                self._hilbert = top - bottom
        return self._hilbert

    @property
    def length(self):
        """k-dimension if finite, else None."""
        if self.is_zero():
            return 0
        return self.hilbert_series().length

    @property
    def dim(self) -> int:
        return -1 if self.is_zero() else self.hilbert_series().dim

    def presentation(self, name: Optional[str] = None) -> Module:
        """The subquotient as a cokernel presentation over the ring."""
        gb_l = self.image.reduced_basis()
        gens = minimal_generators(self.free, self.kernel_generators(), gb_l)
        degs = [self.free.degree(g) for g in gens]
        if not gens:
            return Module(self.ring, [], [], name=name)
        rels = kernel(gens, degs, self.free, seed_gb=gb_l)
        return Module(self.ring, degs, rels, name=name)


def _block_gb(N: Module, blocks: int, free: FreeModule) -> List[Vector]:
    codec = free.ring.codec
    g = N.rank
    base = N.gb()
    out = []
    for b in range(blocks):
        s = codec.comp_shift(b * g)
        out.extend({k + s: c for k, c in v.items()} for v in base)
    return out


def _tensor_columns(entries: Sequence[dict], g: int, free_out: FreeModule) -> List[Vector]:
    """Images of basis (i, b) under  A (x) 1  where ``entries[i]`` maps out-index -> polynomial."""
    codec = free_out.ring.codec
    cols = []
    for col in entries:
        for b in range(g):
            v = {}
            for o, f in col.items():
                off = codec.offset(o * g + b)
                for m, c in f.items():
                    v[off + m] = c
            cols.append(v)
    return cols


def _block_twists(outer: Sequence[int], inner: Sequence[int], sign: int) -> List[int]:
    return [c + sign * s for s in outer for c in inner]


def _homology(ring, N: Module, sign: int, mid, out, out_entries, inn, in_entries) -> Subquotient:
    S = ring.S
    g = N.rank
    G_mid = FreeModule(S, _block_twists(mid, N.twists, sign))
    if out:
        G_out = FreeModule(S, _block_twists(out, N.twists, sign))
        cols = _tensor_columns(out_entries, g, G_out)
        k_gb = kernel(cols, list(G_mid.twists), G_out, seed_gb=_block_gb(N, len(out), G_out))
    else:
        k_gb = None
    image = GBEngine(G_mid).seed(_block_gb(N, len(mid), G_mid))
    if inn:
        image.extend(_tensor_columns(in_entries, g, G_mid))
    return Subquotient(ring, G_mid, k_gb, image)


def _columns_as_entries(cols: Sequence[Vector], free: FreeModule) -> List[dict]:
    return [free.entries(c) for c in cols]


def _transpose(cols: Sequence[Vector], free: FreeModule, n_rows: int) -> List[dict]:
    """Row i of the matrix whose columns are ``cols``, as {column index: entry}."""
    rows = [dict() for _ in range(n_rows)]
    for j, c in enumerate(cols):
        for i, f in free.entries(c).items():
            rows[i][j] = f
    return rows


def tor(M: Module, N: Module, n: int) -> Subquotient:
    """Tor_n^R(M, N) (requires n >= 0)."""
    if n < 0:
        raise ValueError("homological degree must be non-negative")
    key = ("tor", N, n)
    if key not in M.cache:
        M.cache[key] = _tor(M, N, n)
    return M.cache[key]


def _tor(M: Module, N: Module, n: int) -> Subquotient:
    ring = M.ring
    Nm = N.minimal()
    res = resolution(M).extend(n + 1)
    mid = res.twists[n]
    out = res.twists[n - 1] if n >= 1 else []
    inn = res.twists[n + 1]
    out_entries = _columns_as_entries(res.maps[n], res.free(n - 1)) if n >= 1 else []
    in_entries = _columns_as_entries(res.maps[n + 1], res.free(n))
    return _homology(ring, Nm, +1, mid, out, out_entries, inn, in_entries)


def ext(M: Module, N: Module, n: int) -> Subquotient:
    """Ext^n_R(M, N) (requires n >= 0)."""
    if n < 0:
        raise ValueError("homological degree must be non-negative")
    key = ("ext", N, n)
    if key not in M.cache:
        M.cache[key] = _ext(M, N, n)
    return M.cache[key]


def _ext(M: Module, N: Module, n: int) -> Subquotient:
    ring = M.ring
    Nm = N.minimal()
    res = resolution(M).extend(n + 1)
    mid = res.twists[n]
    out = res.twists[n + 1]
    inn = res.twists[n - 1] if n >= 1 else []
    out_entries = _transpose(res.maps[n + 1], res.free(n), len(mid))
    in_entries = _transpose(res.maps[n], res.free(n - 1), len(inn)) if n >= 1 else []
    return _homology(ring, Nm, -1, mid, out, out_entries, inn, in_entries)


def tor_vanishes(M: Module, N: Module, n: int) -> bool:
    return n < 0 or tor(M, N, n).is_zero()


def ext_vanishes(M: Module, N: Module, n: int) -> bool:
    return n < 0 or ext(M, N, n).is_zero()


def bass_number(N: Module, n: int) -> int:
    """mu^n(N) = dim_k Ext^n(k, N)."""
    if n < 0:
        return 0
    key = ("bass", n)
    if key not in N.cache:
        length = ext(N.ring.residue_field(), N, n).length
        assert length is not None, "Ext(k, -) always has finite length"
        N.cache[key] = length
    return N.cache[key]


def depth(M: Module) -> int:
    """Least n with mu^n(M) != 0."""
    from ..errors import ZeroModuleError
    if M.is_zero():
        raise ZeroModuleError("depth of the zero module is undefined")
    if "depth" in M.cache:
        return M.cache["depth"]
    for n in range(M.ring.nvars + 1):
        if bass_number(M, n):
            M.cache["depth"] = n
            return n
    raise AssertionError("no nonzero Bass number up to the embedding dimension")


def module_type(M: Module) -> int:
    return bass_number(M, depth(M))
