import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmlab.artinian import flatten, socle_dimension
from cmlab.errors import ZeroModuleError
from cmlab.graded.duality import matlis_dual
from cmlab.graded.ring import GradedRing
from cmlab.invariants import classify_ring, complexity_estimate, invariant_report, mu_of_mM
from cmlab.lab.build import cyclic, power_quotient
from cmlab.lab.corpus import RINGS, make_ring

from _cases import artinian_case


def ring(names, ideal=()):
    return GradedRing.from_strings(list(names), list(ideal))


def test_report_for_dual_numbers():
    r = invariant_report(ring("x", ["x^2"]).as_module())
    assert (r.dim, r.depth, r.e, r.length, r.mu, r.type) == (0, 0, 2, 2, 1, 1)
    assert r.min_mult and not r.ulrich and r.mu_mM == 1


def test_report_for_residue_field():
    r = invariant_report(ring("xy", ["x^2"]).residue_field())
    assert r.e == r.length == r.mu == r.type == 1
    assert r.ulrich and r.min_mult


def test_report_for_square_of_maximal_ideal_zero():
    r = invariant_report(ring("xy", ["x^2", "x*y", "y^2"]).as_module())
    assert (r.e, r.mu, r.mu_mM, r.type) == (3, 1, 2, 2)
    assert r.min_mult


def test_zero_module_has_no_report():
    R = ring("x")
    with pytest.raises(ZeroModuleError):
        invariant_report(cyclic(R, [{R.S.codec.one: 1}]))


def test_classify_examples():
    c = classify_ring(ring("xy", ["x^2"]))
    assert c.is_hypersurface and c.e == 2 and c.is_gorenstein and not c.is_regular and not c.is_field
    c = classify_ring(ring("xy"))
    assert c.is_regular and c.dim == 2 and c.e == 1
    c = classify_ring(ring("xy", ["x^2", "x*y"]))
    assert not c.is_cm and c.dim == 1


def test_classify_needs_minimal_presentation():
    R = GradedRing(["x"], [], minimalize=False)
    with pytest.raises(ValueError):
        classify_ring(R)


# (regular, hypersurface, Gorenstein, CM, min mult, e, dim, embdim, type, field)
CLASSIFICATION = {
    "k": (True, True, True, True, True, 1, 0, 0, 1, True),
    "k[x]": (True, True, True, True, True, 1, 1, 1, 1, False),
    "k[x,y]": (True, True, True, True, True, 1, 2, 2, 1, False),
    "k[x,y,z]": (True, True, True, True, True, 1, 3, 3, 1, False),
    "k[x]/(x^2)": (False, True, True, True, True, 2, 0, 1, 1, False),
    "k[x]/(x^3)": (False, True, True, True, False, 3, 0, 1, 1, False),
    "k[x,y]/(x^2)": (False, True, True, True, True, 2, 1, 2, 1, False),
    "k[x,y]/(xy)": (False, True, True, True, True, 2, 1, 2, 1, False),
    "k[x,y]/(x^2,y^2)": (False, False, True, True, False, 4, 0, 2, 1, False),
    "k[x,y]/(x^2,xy,y^2)": (False, False, False, True, True, 3, 0, 2, 2, False),
    "k[x,y]/(x^2,xy)": (False, False, False, False, False, 1, 1, 2, 1, False),
}


@pytest.mark.parametrize("name", sorted(RINGS))
def test_corpus_classification(name):
    c = classify_ring(make_ring(name))
    got = (c.is_regular, c.is_hypersurface, c.is_gorenstein, c.is_cm, c.min_mult,
           c.e, c.dim, c.embdim, c.type, c.is_field)
    assert got == CLASSIFICATION[name]


@pytest.mark.parametrize("name", sorted(RINGS))
def test_implication_chain_and_ring_module_agreement(name):
    R = make_ring(name)
    c = classify_ring(R)
    assert not c.is_regular or c.is_hypersurface
    assert not c.is_hypersurface or c.is_gorenstein
    assert not c.is_gorenstein or c.is_cm
    assert c.is_regular == (len(R.ideal) == 0)
    assert c.is_hypersurface == (c.is_cm and c.embdim - c.dim <= 1)
    assert invariant_report(R.as_module()).min_mult == c.min_mult


@pytest.mark.parametrize("names,ideal,degree", [
    ("xy", ["x^2"], 2), ("xy", ["x*y"], 2), ("x", ["x^3"], 3),
    ("xyz", ["x^3 + y^3 + z^3"], 3), ("xyz", ["x*y - z^2"], 2), ("xy", ["x^4 - y^4"], 4),
])
def test_hypersurface_multiplicity_is_degree(names, ideal, degree):
    c = classify_ring(ring(names, ideal))
    assert c.is_hypersurface and c.e == degree


@given(st.integers(0, 5000))
@settings(max_examples=40, deadline=None)
def test_report_invariants(seed):
    _, M = artinian_case(seed)
    if M.is_zero():
        return
    r = invariant_report(M)
    assert r.is_cm == (r.depth == r.dim)
    assert not r.min_mult or r.is_cm
    assert not r.ulrich or r.min_mult
    if r.is_cm:
        assert r.e >= r.mu_mM + (1 - r.dim) * r.mu
    # Second route: the dense oracle reads length and socle off the flattened module.
    F = flatten(M)
    assert r.length == F.length and r.type == socle_dimension(F)


POSITIVE_DIM = [("xy", []), ("xy", ["x^2"]), ("xy", ["x*y"]), ("xyz", ["x*y"]), ("xyz", ["x^2", "y^2"])]


@given(st.integers(0, 5000), st.sampled_from(POSITIVE_DIM))
@settings(max_examples=30, deadline=None)
def test_report_invariants_positive_dimension(seed, spec):
    R = ring(*spec)
    rng = random.Random(seed)
    M = rng.choice([R.as_module(), R.residue_field(), power_quotient(R, 2),
                    cyclic(R, [R.random_linear_form(rng)])])
    r = invariant_report(M)
    assert r.is_cm == (r.depth == r.dim)
    assert not r.ulrich or r.min_mult
    if r.is_cm:
        assert r.e >= r.mu_mM + (1 - r.dim) * r.mu


def test_mu_of_maximal_ideal_times_module():
    R = ring("xyz")
    assert mu_of_mM(R.as_module()) == 3
    assert mu_of_mM(R.residue_field()) == 0
    assert mu_of_mM(power_quotient(R, 3)) == 3
    D = matlis_dual(power_quotient(ring("xy", ["x^2", "x*y", "y^2"]), 2))
    assert mu_of_mM(D) == 1


def test_complexity_estimates():
    assert complexity_estimate(ring("xy").residue_field()).estimate == 0
    assert complexity_estimate(ring("x", ["x^2"]).residue_field()).estimate == 1
    assert complexity_estimate(ring("xy", ["x^2", "y^2"]).residue_field()).estimate == 2
    est = complexity_estimate(ring("xy", ["x^2", "x*y", "y^2"]).residue_field())
    assert est.estimate is None and "heuristic" in est.caveat


def test_complexity_window_too_short():
    with pytest.raises(ValueError):
        complexity_estimate(ring("x").residue_field(), window=3)
