"""Granular A-vs-family comparison at admissible edges for all combos."""
import numpy as np
from hexperc.hexlattice import *
import importlib.util
spec_ = importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py")
crc = importlib.util.module_from_spec(spec_); spec_.loader.exec_module(crc)
dom = discretize(crc.rect_spec(6.5, 7.2))
nbr = dom.vert_nbr; nv = dom.nv
Z = np.load("dev/interf11.npz")
fam = np.load("dev/fam11.npz")
nc = Z["wb_min"].shape[0]
wv = dom.wv
adm = [(x, s) for x in range(nv) if dom.interior[x]
       and all(y >= 0 and dom.interior[y] for y in nbr[x]) for s in range(3)]

def N_of(k): return k - k[:, wv][:, None]
cands = {t + "_" + c: N_of(Z[t + "_" + c].astype(int))
         for t in ("wb", "bw") for c in ("min", "max")}

for name, NA in cands.items():
    rows = []
    for (x, s) in adm:
        y = nbr[x, s]
        up = (NA[:, y] - NA[:, x]) == 1
        dn = (NA[:, y] - NA[:, x]) == -1
        Bl = fam["%d_%d_Bl" % (x, s)]; Br = fam["%d_%d_Br" % (x, s)]
        rows.append((x, s, int((up != Bl).sum()), int((dn != Br).sum()),
                     int((up != Br).sum()), int((dn != Bl).sum())))
    t = np.array(rows)[:, 2:].sum(axis=0)
    print("%s  adm-edge totals: up!=Bl %5d  dn!=Br %5d | up!=Br %5d  dn!=Bl %5d"
          % (name, *t))
    if t.min() == 0:
        print("   ZERO combo found!")
# detail for the best candidate
print()
print("per-edge for bw_max (dn vs Bl) and (up vs Br):")
NA = cands["bw_max"]
for (x, s) in adm:
    y = nbr[x, s]
    up = (NA[:, y] - NA[:, x]) == 1
    dn = (NA[:, y] - NA[:, x]) == -1
    Bl = fam["%d_%d_Bl" % (x, s)]; Br = fam["%d_%d_Br" % (x, s)]
    print("  (%2d,%d): up%4d Bl%4d Br%4d | dn%4d | u!=Bl%4d d!=Br%4d u!=Br%4d d!=Bl%4d"
          % (x, s, int(up.sum()), int(Bl.sum()), int(Br.sum()), int(dn.sum()),
             int((up != Bl).sum()), int((dn != Br).sum()),
             int((up != Br).sum()), int((dn != Bl).sum())))
