"""Graded modules presented as cokernels  M = F / (im(relations) + I*F)."""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence

from ..algebra.field import inverse
from ..algebra.groebner import GBEngine
from ..algebra.polyring import FreeModule, Poly, Vector
from .hilbert import HilbertSeries, lshift, ladd, monomial_numerator


def minimal_generators(free: FreeModule, vectors: Iterable[Vector],
                       seed_gb: Sequence[Vector] = ()) -> List[Vector]:
    """A minimal subset (in reduced form) generating span(vectors) modulo span(seed_gb).

    Vectors are taken by increasing degree; one is kept iff it is not in the
    span of the seed and of those kept before it. ``seed_gb`` must be a
    Groebner basis of its span.
    """
    vecs = sorted((v for v in vectors if v), key=free.degree)
    eng = GBEngine(free).seed(seed_gb)
    kept = []
    for v in vecs:
        eng.complete(free.degree(v))
        r = eng.reduce(v)
        if r:
            kept.append(r)
            eng.add(r)
    return kept


class Module:
    """M = coker(relations) over R, relations given as vectors in S^rank."""

    def __init__(self, ring, twists: Sequence[int], relations: Iterable[Vector] = (),
                 name: Optional[str] = None, minimal: bool = False):
        self.ring = ring
        self.free = FreeModule(ring.S, twists)
        rels = []
        for v in relations:
            if not v:
                continue
            if not self.free.is_homogeneous(v):
                raise ValueError("relation %s is not homogeneous" % self.free.format(v))
            rels.append(dict(v))
        self.relations = tuple(rels)
        self.name = name
        self.is_minimal = minimal
        self._engine = None
        self._hilbert = None
        self._minimal = self if minimal else None
        self._resolution = None
        self.cache: Dict[str, object] = {}

    @property
    def twists(self):
        return self.free.twists

    @property
    def rank(self) -> int:
        return self.free.rank

    def __repr__(self):
        return "Module(%s, twists=%r, %d relations)" % (self.name or "?", self.twists, len(self.relations))

    @classmethod
    def from_entries(cls, ring, twists, rows: Sequence[Sequence[Poly]], name=None) -> "Module":
        """Relations given as lists of polynomials, one entry per generator."""
        F = FreeModule(ring.S, twists)
        return cls(ring, twists, [F.vector(list(r)) for r in rows], name=name)

    # -- Groebner data ---------------------------------------------------------------
    def seed(self) -> List[Vector]:
        return self.ring.ideal_vectors(self.free)

    def engine(self) -> GBEngine:
        """Completed Groebner engine of  im(relations) + I*F."""
        if self._engine is None:
            eng = GBEngine(self.free).seed(self.seed())
            eng.extend(self.relations)
            eng.complete()
            self._engine = eng
        return self._engine

    def gb(self) -> List[Vector]:
        return self.engine().reduced_basis()

    def reduce(self, v: Vector) -> Vector:
        return self.engine().reduce(v)

    def contains(self, v: Vector) -> bool:
        return not self.engine().reduce(v, full=False)

    def hilbert_series(self) -> HilbertSeries:
        if self._hilbert is None:
            self._hilbert = hilbert_of_quotient(self.free, self.engine().lead_terms())
        return self._hilbert

    def is_zero(self) -> bool:
        return self.hilbert_series().is_zero()

    @property
    def dim(self) -> int:
        return self.hilbert_series().dim

    @property
    def multiplicity(self) -> int:
        return self.hilbert_series().multiplicity

    @property
    def length(self):
        return self.hilbert_series().length

    # -- presentations -----------------------------------------------------------------
    def minimal(self) -> "Module":
        """Minimal presentation: generators minimal, every relation entry in m."""
        if self._minimal is None:
            self._minimal = _minimalize(self)
        return self._minimal

    @property
    def num_generators(self) -> int:
        return self.minimal().rank

    def generator_vectors(self) -> List[Vector]:
        return [self.free.basis(i) for i in range(self.rank)]

    def with_relations(self, extra: Iterable[Vector], name: Optional[str] = None) -> "Module":
        return Module(self.ring, self.twists, list(self.relations) + list(extra), name=name)

    def quotient_by_forms(self, forms: Sequence[Poly], name: Optional[str] = None) -> "Module":
        """M / (forms) M."""
        extra = [self.free.scale_poly(self.free.basis(i), f) for f in forms for i in range(self.rank)]
        return self.with_relations(extra, name=name)

    def shifted(self, s: int) -> "Module":
        """M(-s): every generator degree raised by s."""
        return Module(self.ring, [t + s for t in self.twists], self.relations, name=self.name)

    def over(self, ring) -> "Module":
        """Same presentation read over another ring on the same ambient S."""
        if ring.S != self.ring.S:
            raise ValueError("rings have different ambient polynomial rings")
        return Module(ring, self.twists, self.relations, name=self.name)

    def format(self) -> str:
        rows = [self.free.format(v) for v in self.relations]
        return "coker[%s] twists=%r" % ("; ".join(rows), list(self.twists))


def direct_sum(modules: Sequence[Module], name: Optional[str] = None) -> Module:
    ring = modules[0].ring
    twists: List[int] = []
    rels: List[Vector] = []
    codec = ring.S.codec
    for M in modules:
        shift = codec.comp_shift(len(twists))
        rels.extend({k + shift: c for k, c in v.items()} for v in M.relations)
        twists.extend(M.twists)
    return Module(ring, twists, rels, name=name)


def hilbert_of_quotient(free: FreeModule, leads: Iterable[int]) -> HilbertSeries:
    """Hilbert series of F / U from the lead terms of a Groebner basis of U."""
    codec = free.ring.codec
    per_comp: Dict[int, list] = {i: [] for i in range(free.rank)}
    for t in leads:
        per_comp[codec.comp(t)].append(codec.decode(codec.mono(t)))
    num: Dict[int, int] = {}
    for i, gens in per_comp.items():
        num = ladd(num, lshift(monomial_numerator(gens), free.twists[i]))
    return HilbertSeries(num, free.ring.nvars)


def _minimalize(M: Module) -> Module:
    S = M.ring.S
    p = S.p
    codec = S.codec
    one = codec.one
    twists = list(M.twists)
    cols = [dict(M.free.entries(v)) for v in M.relations]

    # Drop generators that some relation expresses through the others.
    while True:
        hit = None
        for j, col in enumerate(cols):
            for i, f in col.items():
                if one in f:
                    hit = (i, j)
                    break
            if hit:
                break
        if hit is None:
            break
        i, j = hit
        pivot = cols.pop(j)
        c_inv = inverse(pivot[i][one], p)
        new_cols = []
        for col in cols:
            a = col.get(i)
            if a:
                factor = S.scale(a, -c_inv)
                for comp, g in pivot.items():
                    updated = S.add(col.get(comp, {}), S.mul(factor, g))
                    if updated:
                        col[comp] = updated
                    else:
                        col.pop(comp, None)
                col.pop(i, None)
            new_cols.append({(c if c < i else c - 1): f for c, f in col.items() if c != i})
        cols = new_cols
        twists.pop(i)

    F = FreeModule(S, twists)
    vecs = [F.vector(col) for col in cols]
    kept = minimal_generators(F, vecs, M.ring.ideal_vectors(F))
    return Module(M.ring, twists, kept, name=M.name, minimal=True)
