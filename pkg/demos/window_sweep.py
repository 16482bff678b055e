"""Sweep every applicable row over one pair of modules and tabulate what fired.

    python3 demos/window_sweep.py [SESSION] [M] [N]

Defaults to the double line k[x,y]/(x^2) with M = k and N = R. Swapping N for
the non-free T or L silences almost every pd/id row: those modules have
infinite projective dimension, so no window can fully vanish.
"""

import sys
from collections import Counter
from pathlib import Path

from cmlab.errors import InadmissibleError
from cmlab.lab.windows import ROWS, Case, check
from cmlab.session import load_session

path = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent / "plane_double_line.cm"
m_name = sys.argv[2] if len(sys.argv) > 2 else "k"
n_name = sys.argv[3] if len(sys.argv) > 3 else "R"

session = load_session(path.read_text())
jmax = session.spec.options.get("jmax", 6)
pair = Case(session.ring, session.module(m_name), session.module(n_name))
single = Case(session.ring, session.module(m_name), None)

seen, fired, predicted = Counter(), Counter(), {}
for row_id, row in ROWS.items():
    c = single if row.roles[1] == "-" else pair
    for j in (range(jmax + 1) if row.uses_j else [None]):
        try:
            v = check(row_id, c, j, path.stem)
        except InadmissibleError:
            continue
        assert v.consistent, v
        seen[row_id] += 1
        if v.fired:
            fired[row_id] += 1
            predicted[row_id] = v.predicted

print("%s, M = %s, N = %s, j <= %d" % (session.ring.describe(), m_name, n_name, jmax))
for row_id in seen:
    if fired[row_id]:
        print("  %-8s fired %d/%d  %s" % (row_id, fired[row_id], seen[row_id], predicted[row_id]))
print("%d verdicts, %d fired, all consistent" % (sum(seen.values()), sum(fired.values())))
