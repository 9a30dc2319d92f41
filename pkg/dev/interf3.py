"""Count-level (probability) chain tests for all convention variants."""
import numpy as np
from hexperc.hexlattice import *
import importlib.util
crc = importlib.util.module_from_spec(importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py"))
crc.__spec__.loader.exec_module(crc)
dom = discretize(crc.rect_spec(6.5, 7.2))
nv, nbr, wv = dom.nv, dom.vert_nbr, dom.wv

I4 = np.load("dev/interf11.npz")   # wb_min wb_max bw_min bw_max
M  = np.load("dev/minor11.npz")    # wb_0 wb_1 bw_0 bw_1 (minority, tie variants)
fam = np.load("dev/fam11.npz")
nc = I4["wb_min"].shape[0]
flip = (nc - 1) - np.arange(nc)

adm = [(x, s) for x in range(nv) if dom.interior[x]
       and all(y >= 0 and dom.interior[y] for y in nbr[x]) for s in range(3)]

# paper naming now: A_l = up-event of k_bw, matching family string stored as "Br"
# (old naming); A_r = dn-event of k_wb, matching stored "Bl".
variants = {
    "blackside (bw_min, wb_max)": (I4["bw_min"], I4["wb_max"]),
    "whiteside (bw_max, wb_min)": (I4["bw_max"], I4["wb_min"]),
    "minority  (bw_0,  wb_0)  ": (M["bw_0"], M["wb_0"]),
    "same-min  (bw_min, wb_min)": (I4["bw_min"], I4["wb_min"]),
    "same-max  (bw_max, wb_max)": (I4["bw_max"], I4["wb_max"]),
}
for nameV, (kbw, kwb) in variants.items():
    kbw = kbw.astype(int); kwb = kwb.astype(int)
    Nl = kbw - kbw[:, wv][:, None]
    Nr = kwb - kwb[:, wv][:, None]
    ev_mis = cnt_l = cnt_r = 0
    for (x, s) in adm:
        y = nbr[x, s]
        Al = (Nl[:, y] - Nl[:, x]) == 1
        Ar = (Nr[:, x] - Nr[:, y]) == 1
        Bl_f = fam["%d_%d_Br" % (x, s)]   # stored names swapped vs paper
        Br_f = fam["%d_%d_Bl" % (x, s)]
        ev_mis += int((Al != Bl_f).sum()) + int((Ar != Br_f).sum())
        cnt_l += abs(int(Al.sum()) - int(Bl_f.sum()))
        cnt_r += abs(int(Ar.sum()) - int(Br_f.sum()))
    fl = np.array_equal(Nl, Nr[flip])
    hd = int(np.abs(Nl.sum(0) - Nr.sum(0)).max())
    print("%s: event-mism %5d | count-diff l %3d r %3d | flip %s | max|Hl-Hr|*2^F %d"
          % (nameV, ev_mis, cnt_l, cnt_r, "EXACT" if fl else "no", hd))
