"""Polynomial rings over F_p and homogeneous free modules over them.

Polynomials are ``dict[int, int]`` mapping a packed monomial to a nonzero
coefficient in ``range(p)``. Free-module vectors use the same shape with the
component folded into the key (see :mod:`cmlab.algebra.monomials`). Both are
treated as immutable once handed out; functions here always return new dicts.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Sequence

from .field import DEFAULT_CHAR, inverse, is_prime, symmetric
from .monomials import MonomialCodec

Poly = Dict[int, int]
Vector = Dict[int, int]


class PolyRing:
    """k[x_1..x_n] with k = F_p and a fixed term order."""

    def __init__(self, names: Sequence[str], char: int = DEFAULT_CHAR, order: str = "grevlex"):
        if not is_prime(char):
            raise ValueError("characteristic %d is not prime" % char)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.names = tuple(names)
        self.p = char
        self.order = order
        self.codec = MonomialCodec(len(self.names), order)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.names == other.names
                and self.p == other.p and self.order == other.order)

    def __hash__(self):
        return hash((self.names, self.p, self.order))

    def __repr__(self):
        return "PolyRing(%r, char=%d, order=%r)" % (self.names, self.p, self.order)

    # -- construction ----------------------------------------------------------
    def const(self, c: int) -> Poly:
        c %= self.p
        return {self.codec.one: c} if c else {}

    def var(self, i) -> Poly:
        if isinstance(i, str):
            i = self.names.index(i)
        return {self.codec.var(i): 1}

    def monomial(self, exps, coeff: int = 1) -> Poly:
        coeff %= self.p
        return {self.codec.encode(tuple(exps)): coeff} if coeff else {}

    def from_terms(self, terms: Iterable) -> Poly:
        """Build from ``(coeff, exponents)`` pairs."""
        out: Poly = {}
        p = self.p
        for c, e in terms:
            k = self.codec.encode(tuple(e))
            v = (out.get(k, 0) + c) % p
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return out

    # -- arithmetic --------------------------------------------------------------
    def add(self, f: Poly, g: Poly) -> Poly:
        return add_scaled(f, g, 1, 0, self.p)

    def sub(self, f: Poly, g: Poly) -> Poly:
        return add_scaled(f, g, -1, 0, self.p)

    def scale(self, f: Poly, c: int) -> Poly:
        c %= self.p
        if not c:
            return {}
        p = self.p
        return {k: v * c % p for k, v in f.items()}

    def neg(self, f: Poly) -> Poly:
        return self.scale(f, -1)

    def mul(self, f: Poly, g: Poly) -> Poly:
        if len(f) > len(g):
            f, g = g, f
        out: Poly = {}
        p = self.p
        codec = self.codec
        for m, c in f.items():
            part = mul_term(g, codec.mul(m, codec.one) - codec.one, c, p)
            for k, v in part.items():
                nv = (out.get(k, 0) + v) % p
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
        return out

    def pow(self, f: Poly, e: int) -> Poly:
        out = self.const(1)
        for _ in range(e):
            out = self.mul(out, f)
        return out

    def degree(self, f: Poly) -> int:
        """Degree of a nonzero homogeneous polynomial."""
        if not f:
            raise ValueError("zero polynomial has no degree")
        return self.codec.deg(next(iter(f)))

    def is_homogeneous(self, f: Poly) -> bool:
        degs = {self.codec.deg(m) for m in f}
        return len(degs) <= 1

    def homogeneous_parts(self, f: Poly) -> Dict[int, Poly]:
        parts: Dict[int, Poly] = {}
        for m, c in f.items():
            parts.setdefault(self.codec.deg(m), {})[m] = c
        return parts

    def evaluate_linear(self, coeffs: Sequence[int]) -> Poly:
        """The linear form sum coeffs[i] * x_i."""
        return {self.codec.var(i): c % self.p for i, c in enumerate(coeffs) if c % self.p}

    def monomials_of_degree(self, d: int) -> list:
        """All monomial keys of total degree ``d``, in decreasing term order."""
        out = []

        def rec(i, left, acc):
            if i == self.nvars - 1:
                out.append(self.codec.encode(tuple(acc + [left])))
                return
            for e in range(left, -1, -1):
                rec(i + 1, left - e, acc + [e])

        if d < 0:
            return []
        if self.nvars == 0:
            return [self.codec.one] if d == 0 else []
        rec(0, d, [])
        out.sort(reverse=True)
        return out

    def substitute(self, f: Poly, images: Sequence[Poly], target: "PolyRing") -> Poly:
        """Evaluate ``f`` at x_i -> images[i], landing in ``target``."""
        out: Poly = {}
        for m, c in f.items():
            term = target.const(c)
            for i, e in enumerate(self.codec.decode(m)):
                if e:
                    term = target.mul(term, target.pow(images[i], e))
            out = target.add(out, term)
        return out

    # -- display -------------------------------------------------------------------
    def format_monomial(self, mono: int) -> str:
        parts = []
        for name, e in zip(self.names, self.codec.decode(mono)):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append("%s^%d" % (name, e))
        return "*".join(parts)

    def format(self, f: Poly) -> str:
        if not f:
            return "0"
        out = []
        for m in sorted(f, reverse=True):
            c = symmetric(f[m], self.p)
            mono = self.format_monomial(m)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = "%d*%s" % (a, mono)
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += " %s %s" % (sign, body)
        return text


def add_scaled(f: Mapping[int, int], g: Mapping[int, int], c: int, shift: int, p: int) -> dict:
    """f + c * (g shifted by ``shift``); ``shift`` is added to every key of g."""
    out = dict(f)
    c %= p
    if not c:
        return out
    for k, v in g.items():
        k += shift
        nv = (out.get(k, 0) + c * v) % p
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def mul_term(g: Mapping[int, int], shift: int, c: int, p: int) -> dict:
    c %= p
    if not c:
        return {}
    return {k + shift: v * c % p for k, v in g.items()}


class FreeModule:
    """Graded free module  sum_i S(-twists[i])  over a polynomial ring ``S``.

    Generator ``e_i`` has degree ``twists[i]``; a term ``c * m * e_i`` has
    degree ``deg(m) + twists[i]``.
    """

    def __init__(self, ring: PolyRing, twists: Sequence[int]):
        self.ring = ring
        self.twists = tuple(int(t) for t in twists)

    @property
    def rank(self) -> int:
        return len(self.twists)

    def __eq__(self, other):
        return isinstance(other, FreeModule) and self.ring == other.ring and self.twists == other.twists

    def __hash__(self):
        return hash((self.ring, self.twists))

    def __repr__(self):
        return "FreeModule(rank=%d, twists=%r)" % (self.rank, self.twists)

    def basis(self, i: int) -> Vector:
        c = self.ring.codec
        return {c.offset(i) + c.one: 1}

    def vector(self, entries) -> Vector:
        """Vector from ``{comp: poly}`` or a sequence of polys (one per component)."""
        if not isinstance(entries, Mapping):
            entries = dict(enumerate(entries))
        codec = self.ring.codec
        out: Vector = {}
        for i, f in entries.items():
            if not 0 <= i < self.rank:
                raise IndexError("component %d out of range" % i)
            off = codec.offset(i)
            for m, c in f.items():
                if c % self.ring.p:
                    out[off + m] = c % self.ring.p
        return out

    def entries(self, v: Vector) -> Dict[int, Poly]:
        codec = self.ring.codec
        out: Dict[int, Poly] = {}
        for t, c in v.items():
            out.setdefault(codec.comp(t), {})[codec.mono(t)] = c
        return out

    def entry_list(self, v: Vector) -> list:
        ent = self.entries(v)
        return [ent.get(i, {}) for i in range(self.rank)]

    def term_degree(self, t: int) -> int:
        codec = self.ring.codec
        return codec.deg(t) + self.twists[codec.comp(t)]

    def degree(self, v: Vector) -> int:
        if not v:
            raise ValueError("zero vector has no degree")
        return self.term_degree(max(v))

    def is_homogeneous(self, v: Vector) -> bool:
        return len({self.term_degree(t) for t in v}) <= 1

    def scale_poly(self, v: Vector, f: Poly) -> Vector:
        """f * v for a polynomial f."""
        p = self.ring.p
        one = self.ring.codec.one
        out: Vector = {}
        for m, c in f.items():
            for k, val in mul_term(v, m - one, c, p).items():
                nv = (out.get(k, 0) + val) % p
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
        return out

    def format(self, v: Vector) -> str:
        return "(" + ", ".join(self.ring.format(f) for f in self.entry_list(v)) + ")"


def vec_add(u: Vector, v: Vector, p: int, c: int = 1) -> Vector:
    return add_scaled(u, v, c, 0, p)


def make_monic(v: Vector, p: int) -> Vector:
    if not v:
        return v
    lc = v[max(v)]
    if lc == 1:
        return dict(v)
    inv = inverse(lc, p)
    return {k: c * inv % p for k, c in v.items()}


def shift_components(v: Vector, delta: int, codec: MonomialCodec) -> Vector:
    """Move every term from component c to c + delta."""
    s = codec.comp_shift(delta)
    return {k + s: c for k, c in v.items()}


def embed_poly(f: Poly, comp: int, codec: MonomialCodec) -> Vector:
    off = codec.offset(comp)
    return {off + m: c for m, c in f.items()}
