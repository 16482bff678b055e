"""Small seeded run of the random search for non-Gorenstein rings with Ext(M, R) vanishing.

    python3 demos/gorenstein_search.py [TRIALS] [BOUND]

Every survivor so far lives over a ring of type 1. A survivor over a ring of
larger type would be printed as flagged, on bounded evidence only.
"""

import sys

from cmlab.lab.q52 import Q52Params, explore_q52

trials = int(sys.argv[1]) if len(sys.argv) > 1 else 100
bound = int(sys.argv[2]) if len(sys.argv) > 2 else 8

report = explore_q52(Q52Params(trials=trials, bound=bound, seed=1))
print("trials %d: %d filtered by Ext(M, R) != 0, %d survivors, %d degenerate draws"
      % (report.trials_run, report.filtered_out, len(report.survivors), report.degenerate))
types = sorted({t.type_R for t in report.survivors})
print("ring types among survivors:", types)
for entry in report.survivors[:5]:
    print("  trial %3d  %-40s mu = %d  %s" % (entry.trial, entry.ring, entry.mu, entry.route))
for entry in report.flagged:
    print("FLAGGED", entry)
print(report.verdict)
