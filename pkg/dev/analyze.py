import numpy as np
from hexperc.hexlattice import *
import importlib.util
spec_ = importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py")
crc = importlib.util.module_from_spec(spec_); spec_.loader.exec_module(crc)

dom = discretize(crc.rect_spec(6.5, 7.2))
z = np.load("dev/brute11.npz")
NL, NR, QU, QD = z["NL"].astype(int), z["NR"].astype(int), z["QU"].astype(int), z["QD"].astype(int)
eNL, eNR, eQU, eQD = z["eNL"].astype(int), z["eNR"].astype(int), z["eQU"].astype(int), z["eQD"].astype(int)

print("=== brute vs engine disagreements (config,vertex pairs) ===")
for name, b, e in (("nl",NL,eNL),("nr",NR,eNR),("qu",QU,eQU),("qd",QD,eQD)):
    d = (b != e)
    print("  %s: %6d of %d   configs affected: %d" % (name, d.sum(), d.size, (d.any(axis=1)).sum()))

def cr_table(NLv, NRv, QUv, QDv, label):
    nbr = dom.vert_nbr
    bad = {}
    tot = 0
    for v in range(dom.nv):
        for s in range(3):
            y = nbr[v, s]
            if y < 0: continue
            s1, s2 = (s+1)%3, (s+2)%3
            y1, y2 = nbr[v,s1], nbr[v,s2]
            if y1 < 0 or y2 < 0: continue
            tot += 1
            rho = (2*((NLv[:,y]-NLv[:,v]) + (NRv[:,y]-NRv[:,v]))
                   - ((QDv[:,y1]-QDv[:,v]) - (QUv[:,y1]-QUv[:,v]))
                   + ((QDv[:,y2]-QDv[:,v]) - (QUv[:,y2]-QUv[:,v])))
            nz = np.nonzero(rho)[0]
            if len(nz): bad[(v,s)] = (len(nz), int(rho.sum()), nz[:6].tolist())
    print("=== per-config CR residual [%s]: %d/%d edges violated ===" % (label, len(bad), tot))
    for k in list(bad)[:14]:
        print("   v=%d s=%d  nviol=%d sum=%d  sample cfgs %s" % (k[0], k[1], *bad[k]))
    return bad

bad_b = cr_table(NL, NR, QU, QD, "brute")
bad_e = cr_table(eNL, eNR, eQU, eQD, "engine")
