"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 an inconsistent verdict
(potential refutation or bug), 3 a resource limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Callable, Dict, List, Optional, Sequence

from .artinian import agree_check
from .errors import CmlabError, InadmissibleError, ResourceLimitError
from .graded.homology import bass_number, ext, tor
from .graded.resolution import resolution
from .invariants import classify_ring, complexity_estimate, invariant_report
from .lab.corpus import DEFAULT_JMAX, contrapositive_scan, run_corpus, witness_verdict
from .lab.q52 import Q52Params, explore_q52
from .lab.windows import DEFAULT_BOUND, ROWS, Case, TheoremVerdict, check
from .lab.witness import witness
from .session import Session, load_session

EXIT_OK, EXIT_USAGE, EXIT_INCONSISTENT, EXIT_LIMIT = 0, 1, 2, 3
DEFAULT_NMAX = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Output:
    """Human-readable lines to stdout; line-delimited JSON records to --out."""

    def __init__(self, args):
        self.path = args.out
        self.args = args
        self.records: List[dict] = []

    @property
    def seed(self) -> Optional[int]:
        return self.args.seed

    def say(self, text: str = "") -> None:
        print(text)

    def record(self, rec: dict) -> None:
        self.records.append(rec)

    def flush(self) -> None:
        if self.path:
            with open(self.path, "w", encoding="utf-8") as fh:
                for rec in self.records:
                    fh.write(json.dumps(rec, sort_keys=True) + "\n")


# -- helpers -------------------------------------------------------------------------------------
def _session(args) -> Session:
    path = args.file or args.path
    if not path:
        raise UsageError("a session file is required (positional or --file)")
    with open(path, encoding="utf-8") as fh:
        session = load_session(fh.read())
    for key, value in session.spec.options.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)
    _apply_pair_cap(args)
    return session


def _apply_pair_cap(args) -> None:
    if getattr(args, "max_pairs", None):
        os.environ["CMLAB_MAX_PAIRS"] = str(args.max_pairs)


def _computation(out: Output, command: str, session: Session, modules: Dict[str, str], result, start: float):
    """Records for plain computations: same provenance fields as verdicts, result in place of a verdict."""
    out.record({"command": command, "ring": session.ring.describe(), "modules": modules, "result": result,
                "seed": out.seed, "char": session.ring.p, "elapsed_ms": int(1000 * (time.perf_counter() - start))})


def _fmt_dim(x: Optional[int]) -> str:
    return "inf" if x is None else str(x)


def _nmax(args) -> int:
    return args.nmax if args.nmax is not None else DEFAULT_NMAX


def _verdict_line(v: TheoremVerdict) -> str:
    window = "[%s, %s]" % (v.window_lo, v.window_hi) if v.window_lo is not None else "-"
    return "%-8s j=%-4s window %-10s %s%s" % (v.theorem, v.j if v.j is not None else "-", window, v.status,
                                              "" if v.consistent else "  ** INCONSISTENT **")


# -- commands ------------------------------------------------------------------------------------
def cmd_invariants(args, out: Output) -> int:
    s = _session(args)
    names = [args.module] if args.module else sorted(s.modules)
    for name in names:
        start = time.perf_counter()
        M = s.module(name)
        if M.is_zero():
            out.say("%s: zero module" % name)
            continue
        rep = invariant_report(M)
        out.say("%s: dim = %d, depth = %d, CM = %s, e = %d, mu = %d, mu(mM) = %d, length = %s, type = %d, "
                "min mult = %s, Ulrich = %s, pd = %s, id = %s"
                % (name, rep.dim, rep.depth, rep.is_cm, rep.e, rep.mu, rep.mu_mM, _fmt_dim(rep.length), rep.type,
                   rep.min_mult, rep.ulrich, _fmt_dim(rep.pd), _fmt_dim(rep.id)))
        _computation(out, "invariants", s, {"M": name}, rep.as_dict(), start)
    return EXIT_OK


CLASS_LABELS = {"is_regular": "regular", "is_hypersurface": "hypersurface", "is_gorenstein": "Gorenstein",
                "is_cm": "Cohen-Macaulay", "min_mult": "minimal mult", "e": "e", "dim": "dim",
                "embdim": "embedding dim", "type": "type", "is_field": "field"}


def cmd_classify(args, out: Output) -> int:
    s = _session(args)
    start = time.perf_counter()
    rc = classify_ring(s.ring)
    out.say("ring %s" % s.ring.describe())
    for key, value in rc.as_dict().items():
        label = CLASS_LABELS.get(key, key)
        out.say("  %-18s %s" % (label + ":", ("yes" if value else "no") if isinstance(value, bool) else value))
    _computation(out, "classify", s, {}, rc.as_dict(), start)
    return EXIT_OK


def cmd_resolve(args, out: Output) -> int:
    s = _session(args)
    start = time.perf_counter()
    M = s.module(args.module)
    res = resolution(M)
    n = _nmax(args)
    out.say(res.betti_table(n))
    graded = {i: {str(d): c for d, c in cnt.items()} for i, cnt in res.graded_betti(n).items()}
    _computation(out, "resolve", s, {"M": args.module}, graded, start)
    return EXIT_OK


def cmd_betti(args, out: Output) -> int:
    s = _session(args)
    start = time.perf_counter()
    M = s.module(args.module)
    betti = resolution(M).betti_numbers(_nmax(args))
    out.say("beta(%s) = %s" % (args.module, " ".join(map(str, betti))))
    est = complexity_estimate(M, max(len(betti) - 1, 5))
    out.say("complexity estimate: %s (%s)" % ("unbounded" if est.estimate is None else est.estimate, est.caveat))
    _computation(out, "betti", s, {"M": args.module}, betti, start)
    return EXIT_OK


def cmd_bass(args, out: Output) -> int:
    s = _session(args)
    start = time.perf_counter()
    M = s.module(args.module)
    bass = [bass_number(M, i) for i in range(_nmax(args) + 1)]
    out.say("mu(%s) = %s" % (args.module, " ".join(map(str, bass))))
    _computation(out, "bass", s, {"M": args.module}, bass, start)
    return EXIT_OK


def _homology_cmd(kind: str, fn: Callable) -> Callable:
    def run(args, out: Output) -> int:
        s = _session(args)
        start = time.perf_counter()
        M, N = s.module(args.M), s.module(args.N)
        rows = []
        for i in range(_nmax(args) + 1):
            H = fn(M, N, i)
            info = {"n": i, "zero": H.is_zero(), "dim": None if H.is_zero() else H.dim,
                    "length": H.length}
            rows.append(info)
            out.say("%s_%d(%s, %s): %s" % (kind, i, args.M, args.N,
                                          "0" if info["zero"] else "dim %d, length %s" % (info["dim"], _fmt_dim(info["length"]))))
        _computation(out, kind.lower(), s, {"M": args.M, "N": args.N}, rows, start)
        return EXIT_OK
    return run


def cmd_check(args, out: Output) -> int:
    s = _session(args)
    if args.id not in ROWS:
        raise UsageError("unknown theorem id %r; known: %s" % (args.id, ", ".join(ROWS)))
    row = ROWS[args.id]
    N = s.module(args.N) if args.N else None
    if row.roles[1] != "-" and N is None:
        raise UsageError("%s needs --N" % args.id)
    bound = args.bound if args.bound is not None else DEFAULT_BOUND
    case = Case(s.ring, s.module(args.M), N if row.roles[1] != "-" else None, bound=bound, seed=args.seed)
    name = "%s|M=%s|N=%s" % (s.ring.describe(), args.M, args.N or "-")
    if not row.uses_j:
        js: Sequence[Optional[int]] = [None]
    elif args.j is not None:
        js = [args.j]
    else:
        js = range((args.jmax if args.jmax is not None else DEFAULT_JMAX) + 1)
    verdicts = []
    for j in js:
        try:
            verdicts.append(check(args.id, case, j, name))
        except InadmissibleError as exc:
            if len(js) == 1:
                raise UsageError(str(exc))
    for v in verdicts:
        out.say(_verdict_line(v))
        out.record(v.record())
    return EXIT_OK if all(v.consistent for v in verdicts) else EXIT_INCONSISTENT


def cmd_corpus(args, out: Output) -> int:
    jmax = args.jmax if args.jmax is not None else DEFAULT_JMAX
    bound = args.bound if args.bound is not None else DEFAULT_BOUND
    seed = args.seed if args.seed is not None else 0
    report = run_corpus(jmax=jmax, bound=bound, seed=seed)
    contra = contrapositive_scan(jmax=jmax, bound=bound)
    verdicts = report.verdicts + contra
    for v in verdicts:
        if args.verbose or not v.consistent or v.fired:
            out.say(_verdict_line(v) + "  " + v.check_id)
        rec = v.record()
        rec["seed"] = seed
        out.record(rec)
    bad = [v for v in verdicts if not v.consistent]
    fired_contra = [v for v in contra if v.fired]
    out.say("corpus: %s" % report.summary())
    out.say("contrapositive scans: %d verdicts, %d fully vanished windows" % (len(contra), len(fired_contra)))
    for lim in report.limits:
        out.say("limit: " + lim)
    out.say("all consistent" if not bad else "%d INCONSISTENT verdicts" % len(bad))
    if bad:
        return EXIT_INCONSISTENT
    return EXIT_LIMIT if report.limits else EXIT_OK


def cmd_witness(args, out: Output) -> int:
    s = _session(args)
    seed = args.seed if args.seed is not None else 0
    start = time.perf_counter()
    verdicts = []
    for w in witness(args.id, s.ring, seed):
        v = witness_verdict(args.id, w, s.ring, s.ring.describe(), seed, int(1000 * (time.perf_counter() - start)))
        checks = ", ".join("%s: %s" % kv for kv in w.checks.items())
        out.say("%s(%s) n=%d  %s  %s  [%s]" % (args.id, w.item, w.n, w.module.name, "ok" if w.ok else "FAILED", checks))
        out.record(v.record())
        verdicts.append(v)
        start = time.perf_counter()
    return EXIT_OK if all(v.consistent for v in verdicts) else EXIT_INCONSISTENT


def cmd_explore_q52(args, out: Output) -> int:
    params = Q52Params(trials=args.trials, bound=args.bound if args.bound is not None else 12,
                       max_vars=args.max_vars, max_extra_generators=args.max_extra,
                       seed=args.seed if args.seed is not None else 0)
    report = explore_q52(params)
    out.say("trials %d, degenerate %d, filtered out %d, limits %d, survivors %d (%.1f s)"
            % (report.trials_run, report.degenerate, report.filtered_out, report.limits,
               len(report.survivors), report.elapsed_s))
    for entry in report.flagged:
        out.say("FLAGGED trial %d: %s" % (entry.trial, entry))
    out.say(report.verdict)
    rec = report.as_dict()
    rec["consistent"] = not report.cross_check_failures
    out.record(rec)
    return EXIT_OK if rec["consistent"] else EXIT_INCONSISTENT


def cmd_agree(args, out: Output) -> int:
    s = _session(args)
    start = time.perf_counter()
    rep = agree_check(s.module(args.module), args.nmax if args.nmax is not None else 8)
    out.say("length %s, betti %s, bass %s" % (rep.length, rep.betti, rep.bass))
    out.say("engines agree" if rep.agree else "DISAGREEMENT: %s" % rep.discrepancy)
    _computation(out, "agree", s, {"M": args.module},
                 {"agree": rep.agree, "length": rep.length, "betti": rep.betti, "bass": rep.bass}, start)
    # A disagreement between the engines is a bug; flag the record like an inconsistent verdict.
    out.records[-1]["consistent"] = rep.agree
    return EXIT_OK if rep.agree else EXIT_INCONSISTENT


# -- parser --------------------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", help="write line-delimited JSON records here")
    common.add_argument("--seed", type=int, help="seed for every random choice; recorded in each record")
    common.add_argument("--max-pairs", dest="max_pairs", type=int, help="Groebner pair cap")

    def with_file(p):
        p.add_argument("path", nargs="?", help="session file")
        p.add_argument("--file", help="session file")
        return p

    parser = _Parser(prog="cmlab", description="Homological invariants and windowed vanishing checks over graded rings.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = with_file(sub.add_parser("invariants", parents=[common], help="invariant report per module"))
    p.add_argument("--module")
    p.set_defaults(run=cmd_invariants)

    p = with_file(sub.add_parser("classify", parents=[common], help="structural class of the ring"))
    p.set_defaults(run=cmd_classify)

    for name, fn, text in (("resolve", cmd_resolve, "graded Betti table"),
                           ("betti", cmd_betti, "total Betti numbers"),
                           ("bass", cmd_bass, "Bass numbers")):
        p = with_file(sub.add_parser(name, parents=[common], help=text))
        p.add_argument("--module", required=True)
        p.add_argument("--nmax", type=int)
        p.set_defaults(run=fn)

    for name, fn in (("tor", _homology_cmd("Tor", tor)), ("ext", _homology_cmd("Ext", ext))):
        p = with_file(sub.add_parser(name, parents=[common], help="%s_n(M, N) for n <= nmax" % name.capitalize()))
        p.add_argument("--M", required=True)
        p.add_argument("--N", required=True)
        p.add_argument("--nmax", type=int)
        p.set_defaults(run=fn)

    p = with_file(sub.add_parser("check", parents=[common], help="evaluate one window-table row"))
    p.add_argument("--id", required=True)
    p.add_argument("--M", required=True)
    p.add_argument("--N")
    p.add_argument("--j", type=int)
    p.add_argument("--jmax", type=int)
    p.add_argument("--bound", type=int)
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("corpus", parents=[common], help="run the builtin corpus and contrapositive scans")
    p.add_argument("--jmax", type=int)
    p.add_argument("--bound", type=int)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(run=cmd_corpus)

    p = with_file(sub.add_parser("witness", parents=[common], help="witness modules for C41..C44, C46"))
    p.add_argument("--id", required=True)
    p.set_defaults(run=cmd_witness)

    p = sub.add_parser("explore-q52", parents=[common], help="random search on the Gorenstein question")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--bound", type=int)
    p.add_argument("--max-vars", dest="max_vars", type=int, default=3)
    p.add_argument("--max-extra", dest="max_extra", type=int, default=5)
    p.set_defaults(run=cmd_explore_q52)

    p = with_file(sub.add_parser("agree", parents=[common], help="compare the two engines on a finite-length module"))
    p.add_argument("--module", required=True)
    p.add_argument("--nmax", type=int)
    p.set_defaults(run=cmd_agree)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("a command is required")
        for key in ("nmax", "jmax", "bound"):
            if not hasattr(args, key):
                setattr(args, key, None)
        _apply_pair_cap(args)
        out = Output(args)
        try:
            code = args.run(args, out)
        finally:
            out.flush()
        return code
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print("inconclusive - limit: %s" % exc, file=sys.stderr)
        return EXIT_LIMIT
    except (CmlabError, ValueError, KeyError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
