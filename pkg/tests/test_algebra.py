import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmlab.algebra.field import inverse, is_prime, symmetric
from cmlab.algebra.groebner import GBEngine, buchberger, normal_form, syzygy_matrix
from cmlab.algebra.monomials import MonomialCodec
from cmlab.algebra.parse import ParseError, parse_poly
from cmlab.algebra.polyring import FreeModule, PolyRing
from cmlab.errors import ResourceLimitError

P = 32003
S2 = PolyRing(["x", "y"])
S3 = PolyRing(["x", "y", "z"])


def homogeneous(S, max_deg=3):
    """Strategy for a homogeneous polynomial of S of degree 1..max_deg."""
    @st.composite
    def build(draw):
        d = draw(st.integers(1, max_deg))
        monos = S.monomials_of_degree(d)
        coeffs = draw(st.lists(st.integers(0, 6), min_size=len(monos), max_size=len(monos)))
        return {m: c for m, c in zip(monos, coeffs) if c}
    return build()


def any_poly(S):
    return st.lists(homogeneous(S), max_size=3).map(lambda fs: _sum(S, fs))


def _sum(S, fs):
    out = {}
    for f in fs:
        out = S.add(out, f)
    return out


def test_prime_checks():
    assert is_prime(32003) and is_prime(2) and not is_prime(1) and not is_prime(32001)


@given(st.integers(1, P - 1))
def test_inverse(a):
    assert a * inverse(a, P) % P == 1


@given(st.integers(0, P - 1))
def test_symmetric_representative(a):
    s = symmetric(a, P)
    assert -P // 2 <= s <= P // 2 and (s - a) % P == 0


@given(st.lists(st.integers(0, 20), min_size=3, max_size=3))
def test_codec_round_trip(exps):
    codec = MonomialCodec(3, "grevlex")
    assert codec.decode(codec.encode(tuple(exps))) == tuple(exps)
    assert codec.deg(codec.encode(tuple(exps))) == sum(exps)


def test_codec_divisibility_and_lcm():
    codec = MonomialCodec(2, "grevlex")
    a, b = codec.encode((2, 1)), codec.encode((1, 3))
    assert codec.decode(codec.lcm(a, b)) == (2, 3)
    assert codec.divides(codec.encode((1, 1)), a)
    assert not codec.divides(b, a)


def test_grevlex_order():
    f = parse_poly(S3, "x*z + y^2")
    # grevlex: y^2 > x*z
    assert S3.codec.decode(max(f)) == (0, 2, 0)


@given(any_poly(S2), any_poly(S2), any_poly(S2))
@settings(max_examples=60)
def test_ring_axioms(f, g, h):
    S = S2
    assert S.mul(f, g) == S.mul(g, f)
    assert S.mul(f, S.add(g, h)) == S.add(S.mul(f, g), S.mul(f, h))
    assert S.mul(S.mul(f, g), h) == S.mul(f, S.mul(g, h))
    assert S.sub(f, f) == {}


@given(any_poly(S3))
@settings(max_examples=60)
def test_parse_format_round_trip(f):
    assert parse_poly(S3, S3.format(f)) == f


def test_parse_syntax():
    S = S2
    assert parse_poly(S, "(x+y)^2") == parse_poly(S, "x^2 + 2*x*y + y^2")
    assert parse_poly(S, "x**2 - x^2") == {}
    assert parse_poly(S, "32003*x") == {}


@pytest.mark.parametrize("text", ["2x", "x y", "x +", "x $ y", "w"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_poly(S2, text)


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        parse_poly(S2, "x + $", line=4)
    assert err.value.line == 4 and err.value.col == 5


def ideal_gens(S, fs):
    F = FreeModule(S, [0])
    return F, [F.vector([f]) for f in fs if f]


@given(st.lists(homogeneous(S3, 2), min_size=1, max_size=3), any_poly(S3))
@settings(max_examples=40, deadline=None)
def test_groebner_properties(gens, f):
    F, vecs = ideal_gens(S3, gens)
    gb = buchberger(vecs, F)
    # Generators reduce to zero, normal form is idempotent and unique for a reduced basis.
    for v in vecs:
        assert normal_form(v, gb, F) == {}
    if f:
        for part in S3.homogeneous_parts(f).values():
            v = F.vector([part])
            nf = normal_form(v, gb, F)
            assert normal_form(nf, gb, F) == nf
    assert buchberger(list(reversed(vecs)), F) == gb


@given(st.lists(homogeneous(S2, 2), min_size=1, max_size=3))
@settings(max_examples=40, deadline=None)
def test_syzygies_are_syzygies(gens):
    F, vecs = ideal_gens(S2, gens)
    if not vecs:
        return
    syz = syzygy_matrix(vecs, F)
    src = FreeModule(S2, [F.degree(v) for v in vecs])
    for s in syz:
        total = {}
        for j, c in enumerate(src.entry_list(s)):
            total = S2.add(total, S2.mul(c, F.entry_list(vecs[j])[0]))
        assert total == {}


def test_known_groebner_basis():
    # (x^2 - y^2, x*y) has the S-polynomial y^3 in its reduced basis.
    F, vecs = ideal_gens(S2, [parse_poly(S2, "x^2 - y^2"), parse_poly(S2, "x*y")])
    gb = buchberger(vecs, F)
    assert F.vector([parse_poly(S2, "y^3")]) in gb
    assert len(gb) == 3


def test_membership():
    F, vecs = ideal_gens(S2, [parse_poly(S2, "x^2"), parse_poly(S2, "y^2")])
    eng = GBEngine(F, vecs)
    assert eng.contains(F.vector([parse_poly(S2, "x^2*y + y^3")]))
    assert not eng.contains(F.vector([parse_poly(S2, "x*y")]))


def test_inhomogeneous_input_rejected():
    F = FreeModule(S2, [0])
    with pytest.raises(ValueError):
        GBEngine(F, [F.vector([parse_poly(S2, "x + y^2")])])


def test_pair_cap(monkeypatch):
    monkeypatch.setenv("CMLAB_MAX_PAIRS", "1")
    F, vecs = ideal_gens(S3, [parse_poly(S3, t) for t in ("x^2 - y*z", "y^2 - x*z", "z^2 - x*y", "x*y*z")])
    with pytest.raises(ResourceLimitError):
        buchberger(vecs, F)
