"""Consistency of the displayed Q-jump system: tau vs tau^2 predictions per edge."""
import numpy as np
from hexperc.hexlattice import *
import importlib.util
crc = importlib.util.module_from_spec(importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py"))
crc.__spec__.loader.exec_module(crc)
dom = discretize(crc.rect_spec(6.5, 7.2))
nv, nbr = dom.nv, dom.vert_nbr
fam = np.load("dev/fam11.npz")
full = set(int(k.split("_")[0]) for k in fam.files)

def fs(x, s, names):
    return sum(int(fam["%d_%d_%s" % (x, s, nm)].sum()) for nm in names)

U = ("TdY", "TdZ", "TdW"); D = ("TuY", "T2dY", "TdW")
U2 = ("T2dY", "TuY", "T2uW"); D2 = ("TdZ", "TdY", "T2uW")
print("edge (a,b): netU_tau netU_tau2 | netD_tau netD_tau2")
bad = tot = 0
for a in sorted(full):
    for k in range(3):
        b = nbr[a][k]
        if b < 0 or b not in full or b < a: continue
        t = [i for i in range(3) if nbr[b][i] == a][0]
        nu_t  = fs(a, (k+1) % 3, U)  - fs(b, (t+1) % 3, U)
        nu_t2 = fs(a, (k+2) % 3, U2) - fs(b, (t+2) % 3, U2)
        nd_t  = fs(a, (k+1) % 3, D)  - fs(b, (t+1) % 3, D)
        nd_t2 = fs(a, (k+2) % 3, D2) - fs(b, (t+2) % 3, D2)
        tot += 1
        mark = ""
        if nu_t != nu_t2 or nd_t != nd_t2:
            bad += 1; mark = "  <-- inconsistent"
        print("(%2d,%2d): %4d %4d | %4d %4d%s" % (a, b, nu_t, nu_t2, nd_t, nd_t2, mark))
print("inconsistent: %d of %d edges" % (bad, tot))
