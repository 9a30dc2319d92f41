"""Does any Q variant give the exact CR combination per admissible edge?"""
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
for tag in ("qform11", "qspec11", "q11_F", "q11_T"):
    q = np.load("dev/%s.npz" % tag)
    QU, QD = q["QU"].astype(int), q["QD"].astype(int)
    bad = 0; mx = 0
    for (x, s) in adm:
        ty, t2y = nbr[x, (s+2) % 3], nbr[x, (s+1) % 3]
        ju_t = int((QU[:, ty] - QU[:, x]).clip(0).sum())
        jd_t = int((QD[:, ty] - QD[:, x]).clip(0).sum())
        ju_2 = int((QU[:, t2y] - QU[:, x]).clip(0).sum())
        jd_2 = int((QD[:, t2y] - QD[:, x]).clip(0).sum())
        comb = (jd_t - ju_t) - (jd_2 - ju_2)
        g = lambda nm: int(fam["%d_%d_%s" % (x, s, nm)].sum())
        target = 2 * (g("Br") - g("Bl"))
        if comb != target:
            bad += 1; mx = max(mx, abs(comb - target))
    print("%-8s: combination wrong at %d/%d admissible edges (max |diff| %d/2048)"
          % (tag, bad, len(adm), mx))
