"""Net (two-sided) Q-jump tests: convention-independent check."""
import numpy as np
from hexperc.hexlattice import *
import importlib.util
crc = importlib.util.module_from_spec(importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py"))
crc.__spec__.loader.exec_module(crc)
dom = discretize(crc.rect_spec(6.5, 7.2))
nf, nv, nbr = dom.nf, dom.nv, dom.vert_nbr
fam = np.load("dev/fam11.npz")
adm = [(x, s) for x in range(nv) if dom.interior[x]
       and all(y >= 0 and dom.interior[y] for y in nbr[x]) for s in range(3)]

def fam_sum(x, s, names):
    return sum(int(fam["%d_%d_%s" % (x, s, nm)].sum()) for nm in names)

U_NAMES = ("TdY", "TdZ", "TdW"); D_NAMES = ("TuY", "T2dY", "TdW")
U2_NAMES = ("T2dY", "TuY", "T2uW"); D2_NAMES = ("TdZ", "TdY", "T2uW")

def rev_base(x, tgt):
    """Given rotated edge <x,tgt>, return (x', s') of the base edge whose tau-edge is <tgt, x>."""
    t = [i for i in range(3) if nbr[tgt][i] == x][0]
    return tgt, (t + 1) % 3

def rev_base2(x, tgt):
    """Base edge whose tau^2-edge is <tgt, x>."""
    t = [i for i in range(3) if nbr[tgt][i] == x][0]
    return tgt, (t + 2) % 3

for tag in ("qform11", "qspec11", "q11_F", "q11_T"):
    q = np.load("dev/%s.npz" % tag)
    QU, QD = q["QU"].astype(int), q["QD"].astype(int)
    bad = [0]*4
    for (x, s) in adm:
        ty, t2y = nbr[x, (s+2) % 3], nbr[x, (s+1) % 3]
        net = (int((QU[:, ty] - QU[:, x]).sum()), int((QD[:, ty] - QD[:, x]).sum()),
               int((QU[:, t2y] - QU[:, x]).sum()), int((QD[:, t2y] - QD[:, x]).sum()))
        xr, sr = rev_base(x, ty)
        xr2, sr2 = rev_base2(x, t2y)
        fnet = (fam_sum(x, s, U_NAMES) - fam_sum(xr, sr, U_NAMES),
                fam_sum(x, s, D_NAMES) - fam_sum(xr, sr, D_NAMES),
                fam_sum(x, s, U2_NAMES) - fam_sum(xr2, sr2, U2_NAMES),
                fam_sum(x, s, D2_NAMES) - fam_sum(xr2, sr2, D2_NAMES))
        for i in range(4):
            if net[i] != fnet[i]: bad[i] += 1
    print("%-8s net-mismatch edges [tau Hu, tau Hd, tau2 Hu, tau2 Hd]: %s of %d"
          % (tag, bad, len(adm)))
