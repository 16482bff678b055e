"""The ten acceptance criteria; each test records one PASS/FAIL line for the terminal summary."""

import json
import random
import time
from math import comb

from cmlab.artinian import agree_check, fd_betti, flatten, flatten_ring
from cmlab.cli import main
from cmlab.errors import NotCohenMacaulayError, SamplingError
from cmlab.graded.homdim import hom_dim_report, injective_dimension, projective_dimension
from cmlab.graded.homology import bass_number, depth, ext, tor
from cmlab.graded.resolution import resolution
from cmlab.graded.ring import GradedRing
from cmlab.graded.sop import cut_by_general_sop
from cmlab.invariants import classify_ring, invariant_report
from cmlab.lab.build import cyclic, power_quotient
from cmlab.lab.corpus import BUILTIN, MODULES, RINGS, WITNESS_RINGS, contrapositive_scan, make_ring
from cmlab.lab.q52 import Q52Params, explore_q52
from cmlab.lab.windows import ROWS

from _cases import artinian_cases


def ring(names, ideal=()):
    return GradedRing.from_strings(list(names), list(ideal))


def corpus_modules():
    """Every (ring name, module name, module) of the builtin corpus tables."""
    for rname in RINGS:
        R = make_ring(rname)
        for mname, build in MODULES.items():
            try:
                M = build(R)
            except NotCohenMacaulayError:
                continue
            if not M.is_zero():
                yield rname, mname, M


def test_criterion_01_dual_numbers(acceptance_line):
    t0 = time.perf_counter()
    R = ring("x", ["x^2"])
    M, k = R.as_module(), R.residue_field()
    rep = invariant_report(M)
    ok = rep.e == 2 == 2 * rep.mu == 2 * rep.type
    ok &= all(tor(M, k, i).is_zero() and ext(M, k, i).is_zero() for i in range(1, 11))
    # mu^j(M) = 0 for j = 1..10, and id M = 0 certifies it for every j >= 1.
    ok &= all(bass_number(M, j) == 0 for j in range(1, 11)) and injective_dimension(M) == 0
    hd = hom_dim_report(k)
    ok &= hd.pd is None and hd.id is None
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 1.0
    acceptance_line(1, ok, "k[x]/(x^2): e=2=2mu=2type, Tor/Ext(R,k)_{1..10}=0, pd k=id k=inf (%.2f s)" % elapsed)
    assert ok


def test_criterion_02_oracle_equivalence(acceptance_line):
    t0 = time.perf_counter()
    cases = artinian_cases(60)
    bad = []
    for desc, M in cases:
        assert M.ring.nvars <= 3 and M.length <= 40 and M.ring.p == 32003
        rep = agree_check(M, 8)
        if not rep.agree:
            bad.append("%s: %s" % (desc, rep.discrepancy))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60
    acceptance_line(2, ok, "%d finite-length cases, lambda/beta_n/mu^n n<=8 agree; %d disagreements (%.1f s)"
                    % (len(cases), len(bad), elapsed))
    assert ok, bad[:3]


BINOMIAL_RINGS = [("xy", []), ("xyz", []), ("xy", ["x^2"]), ("xy", ["x*y"]),
                  ("xyz", ["x*y"]), ("xyz", ["x^3 + y^3 + z^3"]), ("xyz", ["x^2"])]


def test_criterion_03_bass_binomial_identity(acceptance_line):
    rng = random.Random(36)
    checked, bad = 0, []
    for spec in BINOMIAL_RINGS:
        R = ring(*spec)
        modules = [R.as_module(), cyclic(R, [R.random_linear_form(rng)], "R/(l)"), R.residue_field()]
        for M in modules:
            for s in (1, 2):
                if M.is_zero() or depth(M) < s:
                    continue
                try:
                    Q, _ = cut_by_general_sop(M, s, rng=rng)
                except SamplingError:
                    continue
                for j in range(5):
                    lhs = bass_number(Q, j)
                    rhs = sum(comb(s, i) * bass_number(M, j + i) for i in range(s + 1))
                    checked += 1
                    if lhs != rhs:
                        bad.append((R.describe(), M.name, s, j, lhs, rhs))
    ok = checked >= 30 and not bad
    acceptance_line(3, ok, "mu^j(M/xM) = sum C(s,i) mu^{j+i}(M): %d cases, s in {1,2}, j<=4, %d mismatches"
                    % (checked, len(bad)))
    assert ok, bad[:3]


def test_criterion_04_minimal_multiplicity(acceptance_line):
    rng = random.Random(22)
    inequality, bad = 0, []
    reductions = 0
    for rname, mname, M in corpus_modules():
        rep = invariant_report(M)
        if not rep.is_cm:
            continue
        inequality += 1
        if rep.e < rep.mu_mM + (1 - rep.dim) * rep.mu:
            bad.append((rname, mname, "inequality"))
        if rep.dim > 0:
            try:
                Q, _ = cut_by_general_sop(M, rep.dim, mode="reduction", rng=rng)
            except SamplingError:
                continue
            reductions += 1
            if Q.length != rep.e:
                bad.append((rname, mname, "reduction length"))
    labeled = [ring("x", ["x^2"]).as_module(), ring("xy", ["x^2", "x*y", "y^2"]).as_module(),
               power_quotient(ring("xy"), 2)]
    for M in labeled:
        rep = invariant_report(M)
        if not (rep.min_mult and rep.e == rep.mu_mM + (1 - rep.dim) * rep.mu):
            bad.append((M.ring.describe(), M.name, "labeled equality"))
    ok = not bad and inequality > 0 and reductions > 0
    acceptance_line(4, ok, "e >= mu(mM) + (1-r)mu on %d CM corpus modules, 3 labeled equalities, "
                    "%d reductions with length = e; %d failures" % (inequality, reductions, len(bad)))
    assert ok, bad


def test_criterion_05_auslander_buchsbaum(acceptance_line):
    checked, bad = 0, []
    for rname, mname, M in corpus_modules():
        pd = projective_dimension(M)
        if pd is None:
            continue
        checked += 1
        if pd + depth(M) != depth(M.ring.as_module()):
            bad.append((rname, mname))
    ok = checked > 0 and not bad
    acceptance_line(5, ok, "pd + depth = depth R on %d pd-finite corpus modules; %d failures" % (checked, len(bad)))
    assert ok, bad


def test_criterion_06_betti_growth(acceptance_line):
    ok = True
    for names, ideal, expected in (("x", ["x^2"], [1] * 11),
                                   ("xy", ["x^2", "x*y", "y^2"], [2 ** n for n in range(11)])):
        R = ring(names, ideal)
        k = R.residue_field()
        ok &= resolution(k).betti_numbers(10) == expected
        ok &= fd_betti(flatten_ring(R), flatten(k), 10) == expected
    acceptance_line(6, ok, "beta_n(k) = 1 over k[x]/(x^2) and 2^n over k[x,y]/(x^2,xy,y^2), n<=10, both engines")
    assert ok


# (regular, hypersurface, Gorenstein, CM, min mult, e, type)
LABELED_RINGS = {
    "k": (True, True, True, True, True, 1, 1),
    "k[x]": (True, True, True, True, True, 1, 1),
    "k[x,y]": (True, True, True, True, True, 1, 1),
    "k[x]/(x^2)": (False, True, True, True, True, 2, 1),
    "k[x]/(x^3)": (False, True, True, True, False, 3, 1),
    "k[x,y]/(xy)": (False, True, True, True, True, 2, 1),
    "k[x,y]/(x^2,y^2)": (False, False, True, True, False, 4, 1),
    "k[x,y]/(x^2,xy,y^2)": (False, False, False, True, True, 3, 2),
    "k[x,y]/(x^2,xy)": (False, False, False, False, False, 1, 1),
}


def test_criterion_07_ring_classification(acceptance_line):
    bad = []
    for name, expected in LABELED_RINGS.items():
        c = classify_ring(make_ring(name))
        got = (c.is_regular, c.is_hypersurface, c.is_gorenstein, c.is_cm, c.min_mult, c.e, c.type)
        if got != expected:
            bad.append((name, got))
    ok = not bad
    acceptance_line(7, ok, "%d labeled rings classified as labeled, including the non-CM k[x,y]/(x^2,xy)"
                    % len(LABELED_RINGS))
    assert ok, bad


def test_criterion_08_corpus_run(acceptance_line, tmp_path, capsys):
    out = tmp_path / "report.jsonl"
    t0 = time.perf_counter()
    code = main(["corpus", "--out", str(out)])
    elapsed = time.perf_counter() - t0
    capsys.readouterr()
    recs = [json.loads(line) for line in out.read_text().splitlines()]
    inconsistent = [r for r in recs if not r["consistent"]]
    certificate_rows = {r for r, row in ROWS.items() if row.mode == "certificate"}
    fired_rows = {r["theorem"] for r in recs if all(r["hypotheses"].values()) and r["vanished"] is True}
    witnessed = {r["theorem"].split("(")[0] for r in recs if r["check_id"].startswith("witness:")}
    ok = (code == 0 and not inconsistent and certificate_rows <= fired_rows
          and witnessed == {t for t, _ in WITNESS_RINGS} and elapsed < 300)
    acceptance_line(8, ok, "cmlab corpus exit %d: %d pair cases + %d witness rings, %d records, %d inconsistent, "
                    "%d/%d certificate rows fired (%.1f s)" % (code, len(BUILTIN), len(WITNESS_RINGS), len(recs),
                                                              len(inconsistent), len(certificate_rows & fired_rows),
                                                              len(certificate_rows), elapsed))
    assert ok


def test_criterion_09_contrapositive_scans(acceptance_line):
    scans = contrapositive_scan(jmax=6)
    vanished = [v for v in scans if v.fired]
    ok = bool(scans) and not vanished and all(v.mode == "certificate" for v in scans)
    acceptance_line(9, ok, "%d windows (j<=6) on cases with certified infinite pd/id or failed conclusion; "
                    "%d fully vanished" % (len(scans), len(vanished)))
    assert ok


def test_criterion_10_q52_explorer(acceptance_line):
    t0 = time.perf_counter()
    rep = explore_q52(Q52Params(trials=1000, bound=12, seed=0))
    elapsed = time.perf_counter() - t0
    ok = (rep.trials_run == 1000 and not rep.flagged and not rep.cross_check_failures
          and rep.verdict == "no counterexample found up to bounds" and elapsed < 600)
    acceptance_line(10, ok, "1000 trials, B=12: %d survivors, %d filtered, %d degenerate, %d limits: %s (%.1f s)"
                    % (len(rep.survivors), rep.filtered_out, rep.degenerate, rep.limits, rep.verdict, elapsed))
    assert ok, [vars(t) for t in rep.flagged]
