"""Jump-structure analysis: are interface-k fields chain-exact in BOTH
jump directions at interior edges, and is the flip defect boundary-only?"""
import numpy as np
from hexperc.hexlattice import *
import importlib.util
crc = importlib.util.module_from_spec(importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py"))
crc.__spec__.loader.exec_module(crc)
dom = discretize(crc.rect_spec(6.5, 7.2))
nv, nbr, wv = dom.nv, dom.vert_nbr, dom.wv

I4 = np.load("dev/interf11.npz"); fam = np.load("dev/fam11.npz")
nc = I4["wb_min"].shape[0]
flip = (nc - 1) - np.arange(nc)

kbw = I4["bw_min"].astype(int)   # N^l candidate: blackside for bw = min
kwb = I4["wb_max"].astype(int)   # N^r candidate: blackside for wb = max
Nl = kbw - kbw[:, wv][:, None]
Nr = kwb - kwb[:, wv][:, None]

adm = [(x, s) for x in range(nv) if dom.interior[x]
       and all(y >= 0 and dom.interior[y] for y in nbr[x]) for s in range(3)]
up_m = dn_m = up_m2 = dn_m2 = 0
for (x, s) in adm:
    y = nbr[x, s]
    d_l = Nl[:, y] - Nl[:, x]
    d_r = Nr[:, y] - Nr[:, x]
    Bl = fam["%d_%d_Br" % (x, s)]          # paper B_l (stored name swapped)
    Br = fam["%d_%d_Bl" % (x, s)]          # paper B_r
    negBr = Br[flip]                        # B_r evaluated on flipped coloring
    negBl = Bl[flip]
    up_m += int(((d_l == 1) != Bl).sum())
    dn_m += int(((d_l == -1) != negBr).sum())
    up_m2 += int(((d_r == 1) != negBl).sum())   # N^r up = A_r at reversed? check
    dn_m2 += int(((d_r == -1) != Br).sum())
print("N^l=bw_min:  up vs B_l  mism %d ; down vs B_r(flip) mism %d" % (up_m, dn_m))
print("N^r=wb_max:  down vs B_r mism %d ; up vs B_l(flip)  mism %d" % (dn_m2, up_m2))

D = Nl - Nr[flip]
bad = np.nonzero(np.abs(D).sum(0))[0]
print("vertices where flip identity fails:", bad.tolist())
print("interior flags of those:", [bool(dom.interior[v]) for v in bad])
# classify: vertices with all three faces present?
for v in bad.tolist():
    fs = [f for f in dom.vert_sector[v] if f >= 0]
    print("  v%-3d interior=%d nfaces=%d pos=(%.2f,%.2f) defect_sum=%d" %
          (v, int(dom.interior[v]), len(fs), dom.vert_pos[v,0], dom.vert_pos[v,1],
           int(D[:, v].sum())))
