"""Hilbert series as exact rational functions  num(t) / (1 - t)^n.

Numerators are Laurent polynomials stored as ``{exponent: coefficient}``;
negative exponents appear for modules with negatively twisted generators.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Dict, Iterable, Sequence, Tuple

Laurent = Dict[int, int]


def _clean(d: Laurent) -> Laurent:
    return {k: v for k, v in d.items() if v}


def lmul(a: Laurent, b: Laurent) -> Laurent:
    out: Laurent = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return _clean(out)


def ladd(a: Laurent, b: Laurent, c: int = 1) -> Laurent:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + c * v
    return _clean(out)


def lshift(a: Laurent, s: int) -> Laurent:
    return {k + s: v for k, v in a.items()}


def one_minus_t_pow(n: int) -> Laurent:
    return {k: (-1) ** k * comb(n, k) for k in range(n + 1)}


def divide_by_one_minus_t(a: Laurent) -> Laurent:
    """Exact quotient a / (1 - t); requires a(1) = 0."""
    if sum(a.values()) != 0:
        raise ValueError("numerator does not vanish at t = 1")
    if not a:
        return {}
    out: Laurent = {}
    acc = 0
    for k in range(min(a), max(a)):
        acc += a.get(k, 0)
        out[k] = acc
    return _clean(out)


def _minimalize(gens: Iterable[Tuple[int, ...]]) -> Tuple[Tuple[int, ...], ...]:
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    kept = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


@lru_cache(maxsize=200_000)
def _numerator(gens: Tuple[Tuple[int, ...], ...]) -> Tuple[Tuple[int, int], ...]:
    if not gens:
        return ((0, 1),)
    if not any(gens[0]):
        return ()
    # Pairwise coprime generators form a regular sequence.
    nvars = len(gens[0])
    owner = [None] * nvars
    shared = None
    for g in gens:
        for i, e in enumerate(g):
            if e:
                if owner[i] is not None:
                    shared = i
                    break
                owner[i] = g
        if shared is not None:
            break
    if shared is None:
        out: Laurent = {0: 1}
        for g in gens:
            out = ladd(out, lshift(out, sum(g)), -1)
        return tuple(sorted(out.items()))
    # Pivot on x_shared^e with e the least positive exponent of that variable:
    # N(J) = N(J + P) + t^e N(J : P).
    e = min(g[shared] for g in gens if g[shared])
    pivot = tuple(e if i == shared else 0 for i in range(nvars))
    plus = _minimalize(list(gens) + [pivot])
    colon = _minimalize(tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gens)
    out = ladd(dict(_numerator(plus)), lshift(dict(_numerator(colon)), e))
    return tuple(sorted(out.items()))


def monomial_numerator(gens: Iterable[Sequence[int]]) -> Laurent:
    """Numerator of the Hilbert series of S / J for a monomial ideal J."""
    return dict(_numerator(_minimalize(tuple(g) for g in gens)))


class HilbertSeries:
    """num(t) / (1 - t)^nvars, compared and reduced exactly."""

    __slots__ = ("numerator", "nvars", "_reduced")

    def __init__(self, numerator: Laurent, nvars: int):
        self.numerator = _clean(dict(numerator))
        self.nvars = nvars
        self._reduced = None

    def reduced(self) -> Tuple[Laurent, int]:
        """(q, r) with  H = q / (1 - t)^r  and q(1) != 0 (q = {} for the zero series)."""
        if self._reduced is None:
            q, r = dict(self.numerator), self.nvars
            if not q:
                self._reduced = ({}, 0)
            else:
                while r > 0 and sum(q.values()) == 0:
                    q = divide_by_one_minus_t(q)
                    r -= 1
                if sum(q.values()) == 0:
                    raise ValueError("Hilbert numerator has a zero at t = 1 beyond the pole order")
                self._reduced = (q, r)
        return self._reduced

    def is_zero(self) -> bool:
        return not self.numerator

    @property
    def dim(self) -> int:
        """Krull dimension; -1 for the zero module."""
        if self.is_zero():
            return -1
        return self.reduced()[1]

    @property
    def multiplicity(self) -> int:
        q, _ = self.reduced()
        return sum(q.values())

    @property
    def length(self):
        """k-dimension when finite, else None."""
        if self.is_zero():
            return 0
        q, r = self.reduced()
        return sum(q.values()) if r == 0 else None

    def coefficient(self, d: int) -> int:
        """dim_k of the degree-d piece."""
        n = self.nvars
        total = 0
        for k, v in self.numerator.items():
            m = d - k
            if m >= 0:
                total += v * (comb(m + n - 1, n - 1) if n > 0 else int(m == 0))
        return total

    def times_one_minus_t(self) -> "HilbertSeries":
        return HilbertSeries(lmul(self.numerator, {0: 1, 1: -1}), self.nvars)

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        return HilbertSeries(ladd(self._lift(other.nvars), other._lift(self.nvars), -1), max(self.nvars, other.nvars))

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        return HilbertSeries(ladd(self._lift(other.nvars), other._lift(self.nvars)), max(self.nvars, other.nvars))

    def _lift(self, n: int) -> Laurent:
        if n <= self.nvars:
            return self.numerator
        return lmul(self.numerator, one_minus_t_pow(n - self.nvars))

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self.reduced() == other.reduced()

    def __hash__(self):
        q, r = self.reduced()
        return hash((tuple(sorted(q.items())), r))

    def __repr__(self):
        q, r = self.reduced()
        return "HilbertSeries(%s / (1-t)^%d)" % (format_laurent(q), r)


def format_laurent(q: Laurent, var: str = "t") -> str:
    if not q:
        return "0"
    parts = []
    for k in sorted(q):
        c = q[k]
        mono = "" if k == 0 else (var if k == 1 else "%s^%d" % (var, k))
        if mono:
            body = mono if abs(c) == 1 else "%d*%s" % (abs(c), mono)
        else:
            body = str(abs(c))
        parts.append(("-" if c < 0 else "+", body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, b in parts[1:]:
        text += " %s %s" % (s, b)
    return text
