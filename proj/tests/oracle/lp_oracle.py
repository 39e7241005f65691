# Generates random small bounded LPs, solves them with scipy/HiGHS, and emits
# a C++ table of frozen instances + optimal objectives for the simplex tests.
# Duals are checked in-test via strong duality / complementary slackness, so
# only objectives are frozen (duals may be non-unique).
import numpy as np
from scipy.optimize import linprog

rng = np.random.default_rng(20260810)
instances = []
for t in range(24):
    n = int(rng.integers(2, 7))     # variables
    m = int(rng.integers(1, 6))     # rows
    c = np.round(rng.uniform(-5, 5, n), 3)
    A = np.round(rng.uniform(-3, 3, (m, n)), 3)
    # mix of senses encoded: 0 '<=', 1 '>=', 2 '='
    senses = rng.integers(0, 3, m)
    x_feas = np.round(rng.uniform(0, 1, n), 3)  # build b so x_feas is feasible
    b = A @ x_feas
    for i in range(m):
        if senses[i] == 0: b[i] += abs(rng.uniform(0, 2))
        elif senses[i] == 1: b[i] -= abs(rng.uniform(0, 2))
    b = np.round(b, 3)
    ub = np.round(rng.uniform(1.0, 4.0, n), 3)
    A_ub, b_ub, A_eq, b_eq = [], [], [], []
    for i in range(m):
        if senses[i] == 0: A_ub.append(A[i]); b_ub.append(b[i])
        elif senses[i] == 1: A_ub.append(-A[i]); b_ub.append(-b[i])
        else: A_eq.append(A[i]); b_eq.append(b[i])
    res = linprog(c, A_ub=np.array(A_ub) if A_ub else None,
                  b_ub=np.array(b_ub) if b_ub else None,
                  A_eq=np.array(A_eq) if A_eq else None,
                  b_eq=np.array(b_eq) if b_eq else None,
                  bounds=[(0, u) for u in ub], method="highs")
    assert res.status == 0, (t, res.status)
    instances.append((n, m, c, A, senses, b, ub, res.fun))

def fmt(v): return "{" + ",".join(f"{x:.10g}" for x in np.atleast_1d(v).ravel()) + "}"
print("// generated by tests/oracle/lp_oracle.py (scipy HiGHS)")
print("static const LpCase kLpCases[] = {")
for (n, m, c, A, senses, b, ub, obj) in instances:
    print("  {%d, %d, %s, %s, %s, %s, %s, %.12g}," % (
        n, m, fmt(c), fmt(A), "{" + ",".join(str(int(s)) for s in senses) + "}",
        fmt(b), fmt(ub), obj))
print("};")
