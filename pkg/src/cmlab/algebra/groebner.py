"""Buchberger's algorithm for homogeneous submodules of graded free modules.

The engine is incremental and degree driven: inputs and S-pairs sit in one
queue ordered by degree, so ``complete(upto=d)`` yields a basis that is a true
Groebner basis through degree ``d``. That truncated basis already decides
membership for every vector of degree ``<= d``, which is what the module
minimalization routines rely on.

Pair pruning uses the Gebauer-Moeller criteria. The coprime-leads criterion
is applied only for ideals (rank one); for modules it is not valid in general.
"""

from __future__ import annotations

import heapq
import os
from collections import defaultdict
from typing import Iterable, List, Optional, Sequence

from ..errors import ResourceLimitError
from .monomials import EMAX
from .polyring import FreeModule, Vector, make_monic

DEFAULT_MAX_PAIRS = 5_000_000


def max_pairs_from_env() -> int:
    raw = os.environ.get("CMLAB_MAX_PAIRS")
    if raw is None or not raw.strip():
        return DEFAULT_MAX_PAIRS
    value = int(raw)
    if value <= 0:
        raise ValueError("CMLAB_MAX_PAIRS must be positive")
    return value


class GBEngine:
    """Incremental Groebner basis of a submodule of ``free``."""

    def __init__(self, free: FreeModule, gens: Iterable[Vector] = (), max_pairs: Optional[int] = None):
        self.free = free
        self.codec = free.ring.codec
        self.p = free.ring.p
        self.max_pairs = max_pairs if max_pairs is not None else max_pairs_from_env()
        self.basis: List[Vector] = []
        self.leads: List[int] = []
        self.lead_mono: List[int] = []
        self.by_comp = defaultdict(list)
        self.pairs = {}
        self.pairs_by_comp = defaultdict(set)
        self.queue = []
        self.done = float("-inf")
        self.pair_count = 0
        self._seq = 0
        self._reduced = None
        for g in gens:
            self.add(g)

    # -- input -------------------------------------------------------------------
    def add(self, v: Vector) -> None:
        if not v:
            return
        degs = {self.free.term_degree(t) for t in v}
        if len(degs) != 1:
            raise ValueError("inhomogeneous vector %s" % self.free.format(v))
        d = degs.pop()
        self._seq += 1
        heapq.heappush(self.queue, (d, 0, self._seq, 0, dict(v)))
        if d <= self.done:
            self.done = d - 1
        self._reduced = None

    def extend(self, vs: Iterable[Vector]) -> None:
        for v in vs:
            self.add(v)

    # -- main loop ---------------------------------------------------------------
    def complete(self, upto=None) -> "GBEngine":
        """Process every queued item of degree ``<= upto`` (all if None)."""
        limit = float("inf") if upto is None else upto
        if limit <= self.done:
            return self
        q = self.queue
        while q and q[0][0] <= limit:
            d, kind, _, a, payload = heapq.heappop(q)
            if kind == 0:
                h = self.reduce(payload)
            else:
                key = (a, payload)
                lcm = self.pairs.pop(key, None)
                if lcm is None:
                    continue
                self.pairs_by_comp[self.codec.comp(lcm)].discard(key)
                h = self.reduce(self._spoly(a, payload, lcm))
            if h:
                self._insert(h)
        self.done = max(self.done, limit)
        return self

    def _spoly(self, i: int, j: int, t: int) -> Vector:
        p = self.p
        gi, gj = self.basis[i], self.basis[j]
        si = t - self.leads[i]
        sj = t - self.leads[j]
        out = {k + si: c for k, c in gi.items()}
        for k, c in gj.items():
            k += sj
            nv = (out.get(k, 0) - c) % p
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return out

    def _insert(self, h: Vector) -> None:
        codec = self.codec
        h = make_monic(h, self.p)
        lead = max(h)
        comp = codec.comp(lead)
        mono = codec.mono(lead)
        k = len(self.basis)
        offset = codec.offset(comp)
        twist = self.free.twists[comp]
        divides = codec.divides

        existing = self.by_comp[comp]
        new = {}
        for i in existing:
            new[i] = codec.lcm(self.lead_mono[i], mono)

        # Gebauer-Moeller B: old pairs whose lcm the new lead divides.
        live = self.pairs_by_comp[comp]
        for key in list(live):
            lij = codec.mono(self.pairs[key])
            i, j = key
            if divides(mono, lij) and new[i] != lij and new[j] != lij:
                live.discard(key)
                del self.pairs[key]

        # M: drop (i,k) when another (j,k) has an lcm strictly dividing it.
        lcms = sorted(set(new.values()))
        minimal = set()
        for l in lcms:
            if not any(m != l and divides(m, l) for m in minimal):
                minimal.add(l)
        groups = defaultdict(list)
        for i, l in new.items():
            if l in minimal:
                groups[l].append(i)
        rank_one = self.free.rank == 1
        for l, idxs in groups.items():
            # F: one pair per lcm; product criterion kills the whole group.
            if rank_one and any(codec.coprime(self.lead_mono[i], mono) for i in idxs):
                continue
            i = min(idxs)
            deg = codec.deg(l)
            if deg > EMAX:
                raise ResourceLimitError("pair degree exceeds %d" % EMAX)
            key = (i, k)
            self.pairs[key] = offset + l
            live.add(key)
            self.pair_count += 1
            if self.pair_count > self.max_pairs:
                raise ResourceLimitError("Groebner pair cap of %d exceeded" % self.max_pairs)
            heapq.heappush(self.queue, (deg + twist, 1, offset + l, i, k))

        self.basis.append(h)
        self.leads.append(lead)
        self.lead_mono.append(mono)
        existing.append(k)
        self._reduced = None

    def seed(self, gb: Iterable[Vector]) -> "GBEngine":
        """Preload a known Groebner basis; its internal pairs are skipped.

        Call before anything else is added. Later elements still pair with
        the seeded ones.
        """
        if self.basis or self.queue:
            raise RuntimeError("seed() must precede other input")
        for g in gb:
            if g:
                self.add_reducer(g)
        return self

    def add_reducer(self, h: Vector) -> None:
        """Register ``h`` as a reducer without generating pairs."""
        codec = self.codec
        h = make_monic(h, self.p)
        lead = max(h)
        self.by_comp[codec.comp(lead)].append(len(self.basis))
        self.basis.append(h)
        self.leads.append(lead)
        self.lead_mono.append(codec.mono(lead))

    # -- reduction ---------------------------------------------------------------
    def _reducer(self, t: int) -> Optional[int]:
        codec = self.codec
        idxs = self.by_comp.get(codec.comp(t))
        if not idxs:
            return None
        m = t & codec.mono_mask
        divides = codec.divides
        lm = self.lead_mono
        for i in idxs:
            if divides(lm[i], m):
                return i
        return None

    def reduce(self, v: Vector, full: bool = True) -> Vector:
        """Normal form of ``v`` against the current basis."""
        if not v:
            return {}
        p = self.p
        f = dict(v)
        heap = [-k for k in f]
        heapq.heapify(heap)
        out = {}
        basis, leads = self.basis, self.leads
        while heap:
            t = -heapq.heappop(heap)
            c = f.get(t)
            if c is None:
                continue
            idx = self._reducer(t)
            if idx is None:
                if not full:
                    return f
                out[t] = c
                del f[t]
                continue
            shift = t - leads[idx]
            factor = p - c
            for k, gc in basis[idx].items():
                k += shift
                old = f.get(k)
                if old is None:
                    f[k] = factor * gc % p
                    heapq.heappush(heap, -k)
                else:
                    nv = (old + factor * gc) % p
                    if nv:
                        f[k] = nv
                    else:
                        del f[k]
        return out

    def contains(self, v: Vector) -> bool:
        if not v:
            return True
        self.complete(self.free.degree(v))
        return not self.reduce(v, full=False)

    # -- output ------------------------------------------------------------------
    def reduced_basis(self) -> List[Vector]:
        """The reduced Groebner basis, sorted by decreasing lead term."""
        self.complete()
        if self._reduced is None:
            out = []
            for g, lead in zip(self.basis, self.leads):
                tail = dict(g)
                c = tail.pop(lead)
                r = self.reduce(tail)
                r[lead] = c
                out.append(r)
            out.sort(key=max, reverse=True)
            self._reduced = out
        return list(self._reduced)

    def lead_terms(self) -> List[int]:
        self.complete()
        return list(self.leads)


def normal_form(f: Vector, basis: Sequence[Vector], free: FreeModule) -> Vector:
    """Full reduction of ``f`` by ``basis`` (treated as a list of reducers, no completion)."""
    eng = GBEngine(free)
    for g in basis:
        if g:
            eng.add_reducer(g)
    return eng.reduce(f)


def buchberger(gens: Iterable[Vector], free: FreeModule, max_pairs: Optional[int] = None) -> List[Vector]:
    return GBEngine(free, gens, max_pairs=max_pairs).reduced_basis()


def kernel(columns: Sequence[Vector], col_degrees: Sequence[int], target: FreeModule,
           seed: Iterable[Vector] = (), seed_gb: Iterable[Vector] = (),
           max_pairs: Optional[int] = None) -> List[Vector]:
    """Groebner basis of {c : sum c_j columns[j] in span(seed, seed_gb)} inside S^m.

    ``seed_gb`` must already be a Groebner basis of its span. Each column gets
    a tag basis vector appended after the target components; with
    position-over-term the basis elements whose lead lies in the tag block
    carry zero target part and generate the kernel.
    """
    ring = target.ring
    codec = ring.codec
    r = target.rank
    combined = FreeModule(ring, list(target.twists) + list(col_degrees))
    eng = GBEngine(combined, max_pairs=max_pairs)
    eng.seed(seed_gb)
    for g in seed:
        eng.add(g)
    for j, col in enumerate(columns):
        v = dict(col)
        v[codec.offset(r + j) + codec.one] = 1
        eng.add(v)
    shift = codec.comp_shift(-r)
    out = []
    for g in eng.reduced_basis():
        if codec.comp(max(g)) >= r:
            out.append({k + shift: c for k, c in g.items()})
    return out


def syzygy_matrix(gens: Sequence[Vector], free: FreeModule, seed: Iterable[Vector] = (),
                  max_pairs: Optional[int] = None) -> List[Vector]:
    """Generators of the syzygy module of ``gens`` (modulo ``seed``), as vectors in S^len(gens).

    Zero generators are given degree 0 in the source.
    """
    degs = [free.degree(g) if g else 0 for g in gens]
    return kernel(gens, degs, free, seed, max_pairs=max_pairs)


def schreyer_syzygies(gb: Sequence[Vector], free: FreeModule) -> List[Vector]:
    """Syzygies of a Groebner basis from the standard representations of its S-pairs."""
    ring = free.ring
    codec = ring.codec
    p = ring.p
    gb = [make_monic(g, p) for g in gb]
    leads = [max(g) for g in gb]
    out = []
    for i in range(len(gb)):
        for j in range(i + 1, len(gb)):
            if codec.comp(leads[i]) != codec.comp(leads[j]):
                continue
            mi, mj = codec.mono(leads[i]), codec.mono(leads[j])
            lcm = codec.offset(codec.comp(leads[i])) + codec.lcm(mi, mj)
            si, sj = lcm - leads[i], lcm - leads[j]
            f = {k + si: c for k, c in gb[i].items()}
            for k, c in gb[j].items():
                k += sj
                nv = (f.get(k, 0) - c) % p
                if nv:
                    f[k] = nv
                else:
                    f.pop(k, None)
            syz = {codec.offset(i) + codec.one + si: 1}
            syz[codec.offset(j) + codec.one + sj] = p - 1
            while f:
                t = max(f)
                c = f[t]
                for idx, lt in enumerate(leads):
                    if codec.comp(lt) == codec.comp(t) and codec.divides(codec.mono(lt), codec.mono(t)):
                        break
                else:
                    raise ValueError("input is not a Groebner basis")
                shift = t - lt
                for k, gc in gb[idx].items():
                    k += shift
                    nv = (f.get(k, 0) - c * gc) % p
                    if nv:
                        f[k] = nv
                    else:
                        f.pop(k, None)
                key = codec.offset(idx) + codec.one + shift
                nv = (syz.get(key, 0) - c) % p
                if nv:
                    syz[key] = nv
                else:
                    syz.pop(key, None)
            if syz:
                out.append(syz)
    return out
