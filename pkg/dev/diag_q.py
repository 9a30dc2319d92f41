"""Dissect Q-jump mismatches at one admissible edge."""
import numpy as np
from hexperc.hexlattice import *
from hexperc import percolation as perc
import importlib.util
crc = importlib.util.module_from_spec(importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py"))
crc.__spec__.loader.exec_module(crc)
dom = discretize(crc.rect_spec(6.5, 7.2))
nf, nv, nbr = dom.nf, dom.nv, dom.vert_nbr
fam = np.load("dev/fam11.npz")
q = np.load("dev/q11_F.npz")   # engulfed->neither
QU, QD = q["QU"], q["QD"]

x, s = 6, 1
ty, t2y = nbr[x, (s+2)%3], nbr[x, (s+1)%3]
print("x=%d y=%d ty=%d t2y=%d   sec[x]=%s" % (x, nbr[x,s], ty, t2y, dom.vert_sector[x]))
g = lambda nm: fam["%d_%d_%s" % (x, s, nm)].astype(bool)
ev_tu = g("TdY") | g("TdZ") | g("TdW")
ju_tu = QU[:, ty].astype(bool) & ~QU[:, x].astype(bool)
both = int((g("TdY") & g("TdZ")).sum() + (g("TdY") & g("TdW")).sum() + (g("TdZ") & g("TdW")).sum())
print("family overlap count (should be 0 if disjoint):", both)
a_not_b = np.where(ev_tu & ~ju_tu)[0]
b_not_a = np.where(ju_tu & ~ev_tu)[0]
print("fam-but-not-jump: %d   jump-but-not-fam: %d" % (len(a_not_b), len(b_not_a)))

def show(code):
    colors = perc.coloring_from_index(code, nf)
    print("  code %4d  colors(W=1): %s" % (code, "".join("W" if c else "B" for c in colors)))
    print("    QU[x]=%d QU[ty]=%d QD[x]=%d QD[ty]=%d  fams: " % (QU[code,x],QU[code,ty],QD[code,x],QD[code,ty]),
          [nm for nm in ("TdY","TdZ","TdW","TuY","T2dY","T2uW","Br","Bl") if fam["%d_%d_%s" % (x,s,nm)][code]])
for c in a_not_b[:4]: show(c)
print("  ---")
for c in b_not_a[:4]: show(c)
