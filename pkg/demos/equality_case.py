"""Walk through k[x]/(x^2): every strict-inequality window is silent here.

R itself has e = 2 = 2 mu = 2 type and is free, so all higher Tor/Ext against
k vanish; yet k has infinite pd and id. The windowed rows therefore must not
fire on (M, N) = (R, k), and they don't: their hypothesis fails.

    python3 demos/equality_case.py
"""

from pathlib import Path

from cmlab.graded.homdim import hom_dim_report
from cmlab.graded.homology import ext, tor
from cmlab.invariants import invariant_report
from cmlab.lab.windows import Case, check
from cmlab.session import load_session

session = load_session((Path(__file__).parent / "dual_numbers.cm").read_text())
R, k = session.module("R"), session.module("k")

rep = invariant_report(R)
print("R: e = %d, mu = %d, type = %d, length = %d" % (rep.e, rep.mu, rep.type, rep.length))
print("Tor_i(R, k) = 0 for i = 1..10:", all(tor(R, k, i).is_zero() for i in range(1, 11)))
print("Ext^i(R, k) = 0 for i = 1..10:", all(ext(R, k, i).is_zero() for i in range(1, 11)))

hd = hom_dim_report(k)
print("pd k = %s, id k = %s  (witness indices %d, %d)"
      % (hd.pd if hd.pd_finite else "inf", hd.id if hd.id_finite else "inf", hd.pd_witness, hd.id_witness))

print()
case = Case(session.ring, R, k)
for row in ("T37.1", "T37.2", "T38", "P32.1", "P33"):
    v = check(row, case, 1, "R, k")
    print("%-6s %s" % (row, v.status))
