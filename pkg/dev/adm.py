"""CR + chains restricted to spec-admissible edges (x,y,tau.y,tau2.y all interior)."""
import numpy as np
from hexperc.hexlattice import *
import importlib.util
spec_ = importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py")
crc = importlib.util.module_from_spec(spec_); spec_.loader.exec_module(crc)

dom = discretize(crc.rect_spec(6.5, 7.2))
nbr = dom.vert_nbr
interior = dom.interior
z = np.load("dev/brute11.npz")
NL, NR = z["NL"].astype(int), z["NR"].astype(int)
QU, QD = z["QU"].astype(int), z["QD"].astype(int)
eNL, eNR = z["eNL"].astype(int), z["eNR"].astype(int)
eQU, eQD = z["eQU"].astype(int), z["eQD"].astype(int)

adm = []
for x in range(dom.nv):
    if not interior[x]: continue
    ys = nbr[x]
    if all(y >= 0 and interior[y] for y in ys):
        for s in range(3):
            adm.append((x, s))
print("admissible (x,slot):", adm)

def cr(NLa, NRa, QUa, QDa, x, s):
    y, ty, t2y = nbr[x, s], nbr[x, (s + 1) % 3], nbr[x, (s + 2) % 3]
    lhs = 2 * (int(((NLa[:, y] - NLa[:, x]) == 1).sum())
               - int(((NRa[:, y] - NRa[:, x]) == -1).sum()))
    rhs = (int(((QDa[:, ty] == 1) & (QDa[:, x] == 0)).sum())
           - int(((QUa[:, ty] == 1) & (QUa[:, x] == 0)).sum())
           - int(((QDa[:, t2y] == 1) & (QDa[:, x] == 0)).sum())
           + int(((QUa[:, t2y] == 1) & (QUa[:, x] == 0)).sum()))
    return lhs, rhs

print("edge        brute lhs rhs    engine lhs rhs")
okb = oke = 0
for (x, s) in adm:
    bl, br_ = cr(NL, NR, QU, QD, x, s)
    el, er = cr(eNL, eNR, eQU, eQD, x, s)
    okb += bl == br_; oke += el == er
    print("  (%2d,%d)   %5d %5d %s   %5d %5d %s"
          % (x, s, bl, br_, "OK " if bl == br_ else "BAD", el, er, "OK " if el == er else "BAD"))
print("brute %d/%d engine %d/%d" % (okb, len(adm), oke, len(adm)))
