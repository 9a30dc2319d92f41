"""Direct: same jump event, two displayed pattern sums."""
import numpy as np
from hexperc.hexlattice import *
import importlib.util
crc = importlib.util.module_from_spec(importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py"))
crc.__spec__.loader.exec_module(crc)
dom = discretize(crc.rect_spec(6.5, 7.2))
nv, nbr = dom.nv, dom.vert_nbr
fam = np.load("dev/fam11.npz")
full = set(int(k.split("_")[0]) for k in fam.files)
def fs(x, s, names): return sum(int(fam["%d_%d_%s" % (x, s, nm)].sum()) for nm in names)
U = ("TdY","TdZ","TdW"); D = ("TuY","T2dY","TdW")
U2 = ("T2dY","TuY","T2uW"); D2 = ("TdZ","TdY","T2uW")
bad = tot = 0
for a in sorted(full):
    for k in range(3):
        b = nbr[a][k]
        if b < 0: continue
        su, s2 = (k+1) % 3, (k+2) % 3
        uu, u2 = fs(a, su, U), fs(a, s2, U2)
        dd, d2 = fs(a, su, D), fs(a, s2, D2)
        tot += 1
        if uu != u2 or dd != d2:
            bad += 1
            if bad <= 12:
                print("edge (%2d,%2d): P[Qu-jump] claimed %4d (tau line) vs %4d (tau2 line);"
                      " Qd: %4d vs %4d" % (a, b, uu, u2, dd, d2))
print("conflicting claims on %d of %d oriented edges" % (bad, tot))
