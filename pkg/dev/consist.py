"""Consistency of family-implied jumps + comparison with brute/engine."""
import numpy as np
from hexperc.hexlattice import *
import importlib.util
spec_ = importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py")
crc = importlib.util.module_from_spec(spec_); spec_.loader.exec_module(crc)

dom = discretize(crc.rect_spec(6.5, 7.2))
nc = 1 << dom.nf
nbr = dom.vert_nbr
fam = np.load("dev/fam11.npz")
z = np.load("dev/brute11.npz")
NL, NR = z["NL"].astype(int), z["NR"].astype(int)
QU, QD = z["QU"].astype(int), z["QD"].astype(int)
eNL, eNR = z["eNL"].astype(int), z["eNR"].astype(int)
eQU, eQD = z["eQU"].astype(int), z["eQD"].astype(int)

full = sorted(set(int(k.split("_")[0]) for k in fam.files))
fullset = set(full)

def F(v, s, name):
    return fam["%d_%d_%s" % (v, s, name)]

def slot_of(v, y):
    for s in range(3):
        if nbr[v, s] == y: return s
    return -1

print("=== tau vs tau2 expansion agreement (same jump two ways) ===")
bad_uu = bad_dd = 0; tot = 0
for x in full:
    for sg in range(3):
        zv = nbr[x, sg]
        if zv < 0: continue
        tot += 1
        ju_t = F(x, (sg - 1) % 3, "TuY") | F(x, (sg - 1) % 3, "TuZ") | F(x, (sg - 1) % 3, "TuW")
        ju_t2 = F(x, (sg + 1) % 3, "T2uY") | F(x, (sg + 1) % 3, "T2uZ") | F(x, (sg + 1) % 3, "T2uW")
        jd_t = F(x, (sg - 1) % 3, "TdY") | F(x, (sg - 1) % 3, "TdZ") | F(x, (sg - 1) % 3, "TdW")
        jd_t2 = F(x, (sg + 1) % 3, "T2dY") | F(x, (sg + 1) % 3, "T2dZ") | F(x, (sg + 1) % 3, "T2dW")
        du = int((ju_t != ju_t2).sum()); dd = int((jd_t != jd_t2).sum())
        if du: bad_uu += 1
        if dd: bad_dd += 1
        if du or dd:
            print("  x=%d sg=%d  qu-mismatch=%d qd-mismatch=%d  (tau says %d, tau2 says %d)"
                  % (x, sg, du, dd, int(ju_t.sum()), int(ju_t2.sum())))
print("edges tested %d; qu two-way disagreements %d; qd %d" % (tot, bad_uu, bad_dd))

print("=== family vs brute/engine jump comparison (interior-tail edges) ===")
rows = []
for x in full:
    for sg in range(3):
        y = nbr[x, sg]
        if y < 0: continue
        # N down/up events need reversed-edge family too
        sb = slot_of(y, x)
        have_rev = y in fullset and sb >= 0
        Br_dn = F(x, sg, "Br")
        Bl_up = F(x, sg, "Bl")
        dn_b = (NR[:, y] - NR[:, x]) == -1
        up_b = (NL[:, y] - NL[:, x]) == +1
        dn_e = (eNR[:, y] - eNR[:, x]) == -1
        up_e = (eNL[:, y] - eNL[:, x]) == +1
        ju = F(x, (sg - 1) % 3, "TuY") | F(x, (sg - 1) % 3, "TuZ") | F(x, (sg - 1) % 3, "TuW")
        jd = F(x, (sg - 1) % 3, "TdY") | F(x, (sg - 1) % 3, "TdZ") | F(x, (sg - 1) % 3, "TdW")
        qu_b = (QU[:, y] == 1) & (QU[:, x] == 0)
        qd_b = (QD[:, y] == 1) & (QD[:, x] == 0)
        qu_e = (eQU[:, y] == 1) & (eQU[:, x] == 0)
        qd_e = (eQD[:, y] == 1) & (eQD[:, x] == 0)
        rows.append((x, sg,
                     int((Br_dn != dn_b).sum()), int((Br_dn != dn_e).sum()),
                     int((Bl_up != up_b).sum()), int((Bl_up != up_e).sum()),
                     int((ju != qu_b).sum()), int((ju != qu_e).sum()),
                     int((jd != qd_b).sum()), int((jd != qd_e).sum())))
hdr = "x sg | nrB nrE | nlB nlE | quB quE | qdB qdE"
print(hdr)
tots = np.zeros(8, int)
for r in rows:
    tots += np.array(r[2:])
    if any(c > 0 for c in r[2:]):
        print("  %2d %d  | %4d %4d | %4d %4d | %4d %4d | %4d %4d" % r)
print("TOTALS:", tots, " (B=brute mismatches, E=engine mismatches)")
