"""Expectation-level CR identity test from saved per-config observable arrays."""
import sys
import numpy as np
from hexperc.hexlattice import *
import importlib.util
spec_ = importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py")
crc = importlib.util.module_from_spec(spec_); spec_.loader.exec_module(crc)

dom = discretize(crc.rect_spec(6.5, 7.2))
z = np.load("dev/brute11.npz")

def admissible_edges(dom):
    out = []
    for v in range(dom.nv):
        if not all(f >= 0 for f in dom.vert_sector[v]):
            continue
        for s in range(3):
            out.append((v, s))
    return out

def report(NL, NR, QU, QD, label):
    nbr = dom.vert_nbr
    edges = admissible_edges(dom)
    # |dN| bound census
    dnl_max = 0; dnr_max = 0
    bad = []
    for v, s in edges:
        y0, y1, y2 = (nbr[v,(s+k)%3] for k in range(3))
        dnl = NL[:,y0] - NL[:,v]; dnr = NR[:,y0] - NR[:,v]
        dnl_max = max(dnl_max, int(np.abs(dnl).max()))
        dnr_max = max(dnr_max, int(np.abs(dnr).max()))
        lhs = 2 * (int((dnl == 1).sum()) - int((dnr == -1).sum()))
        qd_up_1 = int(((QD[:,y1] == 1) & (QD[:,v] == 0)).sum())
        qu_up_1 = int(((QU[:,y1] == 1) & (QU[:,v] == 0)).sum())
        qd_up_2 = int(((QD[:,y2] == 1) & (QD[:,v] == 0)).sum())
        qu_up_2 = int(((QU[:,y2] == 1) & (QU[:,v] == 0)).sum())
        rhs = (qd_up_1 - qu_up_1) - (qd_up_2 - qu_up_2)
        if lhs != rhs:
            bad.append((v, s, lhs, rhs))
    print("[%s] admissible edges: %d   max|dnl|=%d max|dnr|=%d   CR violations: %d"
          % (label, len(edges), dnl_max, dnr_max, len(bad)))
    for v, s, lhs, rhs in bad[:12]:
        print("    v=%d s=%d LHS=%d RHS=%d  diff=%d" % (v, s, lhs, rhs, lhs-rhs))
    return bad

report(z["NL"].astype(int), z["NR"].astype(int), z["QU"].astype(int), z["QD"].astype(int), "brute")
report(z["eNL"].astype(int), z["eNR"].astype(int), z["eQU"].astype(int), z["eQD"].astype(int), "engine")
