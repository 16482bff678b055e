"""Integer packing of monomials and module terms.

A monomial is stored as one int whose natural integer order *is* the term
order. Exponents live in 8-bit fields (the top bit of each field is a guard
bit that is always clear), the total degree sits above them, and for module
terms a component field sits above the degree. Multiplication of monomials is
integer addition (minus the encoding of 1), which keeps the reduction loop in
the Groebner code cheap.

Layout for ``n`` variables, low bits first::

    [field 0] ... [field n-1] [degree:16] [component]

grevlex: field ``i`` holds ``EMAX - e_i``, so among monomials of equal degree
the one with the smaller exponent in the last variable is larger.
lex: field ``n-1-i`` holds ``e_i`` directly. On homogeneous input this is lex.

The component field stores ``CMAX - c`` so that a smaller component index
compares larger (position over term, first component biggest).
"""

from __future__ import annotations

from ..errors import ResourceLimitError

W = 8
EMAX = (1 << (W - 1)) - 1
DEG_BITS = 16
CMAX = (1 << 30) - 1

ORDERS = ("grevlex", "lex")


class MonomialCodec:
    def __init__(self, nvars: int, order: str = "grevlex"):
        if order not in ORDERS:
            raise ValueError("unknown term order %r" % (order,))
        self.n = nvars
        self.order = order
        self.deg_shift = nvars * W
        self.mono_bits = nvars * W + DEG_BITS
        self.mono_mask = (1 << self.mono_bits) - 1
        self.exp_mask = (1 << self.deg_shift) - 1
        self.guard = sum(1 << (W * i + W - 1) for i in range(nvars))
        self.one = self.encode((0,) * nvars)
        self._var = [self.encode(tuple(int(i == j) for j in range(nvars)))
                     for i in range(nvars)]

    # -- monomials ---------------------------------------------------------
    def encode(self, exps) -> int:
        if len(exps) != self.n:
            raise ValueError("expected %d exponents" % self.n)
        key = 0
        deg = 0
        for i, e in enumerate(exps):
            if e < 0:
                raise ValueError("negative exponent")
            if e > EMAX:
                raise ResourceLimitError("exponent %d exceeds %d" % (e, EMAX))
            deg += e
            if self.order == "grevlex":
                key |= (EMAX - e) << (W * i)
            else:
                key |= e << (W * (self.n - 1 - i))
        return key | (deg << self.deg_shift)

    def decode(self, mono: int) -> tuple:
        mono &= self.mono_mask
        out = []
        for i in range(self.n):
            if self.order == "grevlex":
                out.append(EMAX - ((mono >> (W * i)) & EMAX))
            else:
                out.append((mono >> (W * (self.n - 1 - i))) & EMAX)
        return tuple(out)

    def var(self, i: int) -> int:
        return self._var[i]

    def deg(self, mono: int) -> int:
        return ((mono & self.mono_mask) >> self.deg_shift) & 0xFFFF

    def mul(self, a: int, b: int) -> int:
        if self.deg(a) + self.deg(b) > EMAX:
            raise ResourceLimitError("monomial degree exceeds %d" % EMAX)
        return a + b - self.one

    def divides(self, a: int, b: int) -> bool:
        """True iff monomial ``a`` divides monomial ``b`` (keys without component)."""
        ds = self.deg_shift
        if (a >> ds) > (b >> ds):
            return False
        if self.order == "grevlex":
            return ((b - a + self.one) & self.guard) == 0
        g = self.guard
        return (((b | g) - a) & g) == g

    def quotient(self, b: int, a: int) -> int:
        """b / a for a dividing b."""
        return b - a + self.one

    def lcm(self, a: int, b: int) -> int:
        key = 0
        deg = 0
        pick = min if self.order == "grevlex" else max
        for i in range(self.n):
            s = W * i
            f = pick((a >> s) & EMAX, (b >> s) & EMAX)
            key |= f << s
            deg += EMAX - f if self.order == "grevlex" else f
        if deg > EMAX:
            raise ResourceLimitError("monomial degree exceeds %d" % EMAX)
        return key | (deg << self.deg_shift)

    def coprime(self, a: int, b: int) -> bool:
        ea, eb = self.decode(a), self.decode(b)
        return all(x == 0 or y == 0 for x, y in zip(ea, eb))

    def is_one(self, mono: int) -> bool:
        return (mono & self.mono_mask) == self.one

    # -- module terms --------------------------------------------------------
    def offset(self, comp: int) -> int:
        return (CMAX - comp) << self.mono_bits

    def comp(self, term: int) -> int:
        return CMAX - (term >> self.mono_bits)

    def mono(self, term: int) -> int:
        return term & self.mono_mask

    def comp_shift(self, delta: int) -> int:
        """Amount to add to a term key to move it from component c to c + delta."""
        return -(delta << self.mono_bits)
