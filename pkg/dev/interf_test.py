"""Test candidate N definitions (interface counts) against flip, A=B, CR."""
import numpy as np
from hexperc.hexlattice import *
import importlib.util
spec_ = importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py")
crc = importlib.util.module_from_spec(spec_); spec_.loader.exec_module(crc)
dom = discretize(crc.rect_spec(6.5, 7.2))
nbr = dom.vert_nbr; nv = dom.nv
nc = K0 = None
Z = np.load("dev/interf11.npz")
fam = np.load("dev/fam11.npz")
nc = Z["wb_min"].shape[0]
flip = (nc - 1) - np.arange(nc)
wv = dom.wv

adm = [(x, s) for x in range(nv) if dom.interior[x]
       and all(y >= 0 and dom.interior[y] for y in nbr[x]) for s in range(3)]
full = sorted(set(int(k.split("_")[0]) for k in fam.files))

def N_of(k):
    return k - k[:, wv][:, None]

print("=== flip identity: N_A(c) == N_B(flip c) for which (A,B) pairing? ===")
cands = {}
for typ in ("wb", "bw"):
    for conv in ("min", "max"):
        cands[typ + "_" + conv] = N_of(Z[typ + "_" + conv].astype(int))
for a in cands:
    for b in cands:
        bad = int((cands[a] != cands[b][flip]).sum())
        if bad == 0:
            print("  N^l=%s, N^r=%s : flip EXACT" % (a, b))

print("=== A=B family test at full-sector tails (Al vs Bl fam, Ar vs Br fam) ===")
for a in cands:
    NA = cands[a]
    tot_up_mism = tot_dn_mism = 0
    for x in full:
        for s in range(3):
            y = nbr[x, s]
            if y < 0: continue
            up = (NA[:, y] - NA[:, x]) == 1
            dn = (NA[:, y] - NA[:, x]) == -1
            Bl = fam["%d_%d_%s" % (x, s, "Bl")]
            Br = fam["%d_%d_%s" % (x, s, "Br")]
            tot_up_mism += int((up != Bl).sum())
            tot_dn_mism += int((dn != Br).sum())
    print("  %s: as-N^l up-vs-Bl mismatches %6d   as-N^r dn-vs-Br mismatches %6d"
          % (a, tot_up_mism, tot_dn_mism))
