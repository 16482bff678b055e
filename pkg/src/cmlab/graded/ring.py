"""Standard graded quotient rings R = S/I of a polynomial ring over F_p."""

from __future__ import annotations

import random
from typing import Iterable, List, Optional, Sequence

from ..algebra.field import DEFAULT_CHAR
from ..algebra.groebner import GBEngine
from ..algebra.parse import parse_poly
from ..algebra.polyring import FreeModule, Poly, PolyRing, Vector, embed_poly, make_monic
from .hilbert import HilbertSeries, monomial_numerator


class GradedRing:
    """R = S/I with I homogeneous and proper.

    With ``minimalize=True`` (the default) linear forms in I are eliminated
    and I is replaced by a minimal generating set, so I lies in m^2. Input
    polynomials in the user's variables are carried over with ``to_ambient``.
    """

    def __init__(self, names: Sequence[str], ideal: Iterable[Poly] = (), char: int = DEFAULT_CHAR,
                 minimalize: bool = True, label: Optional[str] = None):
        self.source = PolyRing(names, char)
        gens = [dict(f) for f in ideal if f]
        for f in gens:
            if not self.source.is_homogeneous(f):
                raise ValueError("ideal generator %s is not homogeneous" % self.source.format(f))
            if self.source.degree(f) == 0:
                raise ValueError("the ideal is the unit ideal")
        self.minimalized = minimalize
        if minimalize:
            kept, images = _eliminate_linear(self.source, gens)
            self.S = PolyRing(kept, char)
            self.images = images
            mapped = [self.source.substitute(f, images, self.S) for f in gens]
            self.ideal = tuple(_minimal_ideal_generators(self.S, mapped))
        else:
            self.S = self.source
            self.images = [self.S.var(i) for i in range(self.S.nvars)]
            self.ideal = tuple(gens)
        self.p = char
        self.label = label
        self._gb = None
        self._hilbert = None
        self._residue = None
        self._free_rank_one = None
        self._polynomial = None
        self._canonical = None

    # -- basic data ----------------------------------------------------------------
    @property
    def names(self):
        return self.S.names

    @property
    def nvars(self) -> int:
        return self.S.nvars

    @classmethod
    def from_strings(cls, names: Sequence[str], ideal: Sequence[str] = (), char: int = DEFAULT_CHAR,
                     minimalize: bool = True, label: Optional[str] = None) -> "GradedRing":
        src = PolyRing(names, char)
        return cls(names, [parse_poly(src, s) for s in ideal], char, minimalize, label)

    def to_ambient(self, f: Poly) -> Poly:
        """Image in S of a polynomial written in the user's variables."""
        if self.S is self.source:
            return dict(f)
        return self.source.substitute(f, self.images, self.S)

    def parse(self, text: str) -> Poly:
        return self.to_ambient(parse_poly(self.source, text))

    def is_polynomial_ring(self) -> bool:
        return not self.ideal

    def describe(self) -> str:
        if self.label:
            return self.label
        return presentation_text(self)

    def __repr__(self):
        return "GradedRing(%s, char=%d)" % (self.describe(), self.p)

    # -- Groebner data -------------------------------------------------------------
    def ideal_gb(self) -> List[Poly]:
        if self._gb is None:
            F = FreeModule(self.S, [0])
            one = self.S.codec.offset(0)
            gb = GBEngine(F, [{one + m: c for m, c in f.items()} for f in self.ideal]).reduced_basis()
            self._gb = [{k - one: c for k, c in g.items()} for g in gb]
        return list(self._gb)

    def ideal_vectors(self, free: FreeModule) -> List[Vector]:
        """Groebner basis of I*F for a free module F (block diagonal, so a GB as is)."""
        codec = self.S.codec
        gb = self.ideal_gb()
        return [embed_poly(g, i, codec) for i in range(free.rank) for g in gb]

    def free(self, twists: Sequence[int]) -> FreeModule:
        return FreeModule(self.S, twists)

    def normal_form(self, f: Poly) -> Poly:
        F = FreeModule(self.S, [0])
        eng = GBEngine(F).seed(self.ideal_vectors(F))
        off = self.S.codec.offset(0)
        r = eng.reduce({off + m: c for m, c in f.items()})
        return {k - off: c for k, c in r.items()}

    def hilbert_series(self) -> HilbertSeries:
        if self._hilbert is None:
            codec = self.S.codec
            leads = [codec.decode(max(g)) for g in self.ideal_gb()]
            self._hilbert = HilbertSeries(monomial_numerator(leads), self.nvars)
        return self._hilbert

    @property
    def dim(self) -> int:
        return self.hilbert_series().dim

    @property
    def multiplicity(self) -> int:
        return self.hilbert_series().multiplicity

    # -- distinguished modules -------------------------------------------------------
    def as_module(self):
        """R as a module over itself (cached, so its invariants are computed once)."""
        if self._free_rank_one is None:
            from .module import Module
            self._free_rank_one = Module(self, [0], [], name="R", minimal=True)
        return self._free_rank_one

    def residue_field(self):
        """The module k = R/m, cached together with its resolution."""
        if self._residue is None:
            from .module import Module
            F = self.free([0])
            rels = [F.vector([self.S.var(i)]) for i in range(self.nvars)]
            self._residue = Module(self, [0], rels, name="k")
        return self._residue

    def polynomial_ring(self) -> "GradedRing":
        """The ambient S as a ring in its own right (same variables)."""
        if self._polynomial is None:
            if self.is_polynomial_ring():
                self._polynomial = self
            else:
                self._polynomial = GradedRing(self.names, (), self.p, minimalize=False)
        return self._polynomial

    def random_linear_form(self, rng: random.Random) -> Poly:
        return self.S.evaluate_linear([rng.randrange(self.p) for _ in range(self.nvars)])


def presentation_text(ring: GradedRing) -> str:
    base = "k[%s]" % ",".join(ring.names)
    if not ring.ideal:
        return base if ring.names else "k"
    return "%s/(%s)" % (base, ", ".join(ring.S.format(f) for f in ring.ideal))


def _eliminate_linear(S: PolyRing, gens: List[Poly]):
    """Variables kept after solving the linear part of I, and images of all variables."""
    F = FreeModule(S, [0])
    off = S.codec.offset(0)
    linear = [{off + m: c for m, c in f.items()} for f in gens if S.degree(f) == 1]
    if not linear:
        return list(S.names), [S.var(i) for i in range(S.nvars)]
    # Reduced row echelon form of the linear generators: leads are distinct variables.
    basis = GBEngine(F, linear).reduced_basis()
    solved = {}
    for g in basis:
        lead = max(g)
        var = S.codec.decode(lead - off).index(1)
        solved[var] = {k - off: (-c) % S.p for k, c in g.items() if k != lead}
    kept = [i for i in range(S.nvars) if i not in solved]
    T = PolyRing([S.names[i] for i in kept], S.p)
    position = {v: j for j, v in enumerate(kept)}
    images = []
    for i in range(S.nvars):
        if i in solved:
            img = {}
            for m, c in solved[i].items():
                j = position[S.codec.decode(m).index(1)]
                img[T.codec.var(j)] = c
            images.append(img)
        else:
            images.append(T.var(position[i]))
    return T.names, images


def _minimal_ideal_generators(S: PolyRing, gens: List[Poly]) -> List[Poly]:
    F = FreeModule(S, [0])
    off = S.codec.offset(0)
    vecs = [{off + m: c for m, c in f.items()} for f in gens if f]
    from .module import minimal_generators
    kept = [make_monic(v, S.p) for v in minimal_generators(F, vecs)]
    return [{k - off: c for k, c in v.items()} for v in kept]
