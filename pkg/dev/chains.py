"""Link-by-link chain testing at a single edge over all configs."""
import sys
import numpy as np
from hexperc.hexlattice import *
from hexperc import percolation as perc
import importlib.util
spec_ = importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py")
crc = importlib.util.module_from_spec(spec_); spec_.loader.exec_module(crc)
spec2 = importlib.util.spec_from_file_location("triple", "dev/triple.py")
tri = importlib.util.module_from_spec(spec2); spec2.loader.exec_module(tri)

dom = discretize(crc.rect_spec(6.5, 7.2))
z = np.load("dev/brute11.npz")
NL, NR = z["NL"].astype(int), z["NR"].astype(int)
QU, QD = z["QU"].astype(int), z["QD"].astype(int)
nc = 1 << dom.nf

v, s = (int(sys.argv[1]), int(sys.argv[2])) if len(sys.argv) > 2 else (1, 0)
nbr = dom.vert_nbr
y0, y1, y2 = nbr[v, s], nbr[v, (s+1)%3], nbr[v, (s+2)%3]
I, L, R = tri.edge_faces_ILR(dom, v, s)
print("edge v=%d s=%d  y=%d tauy=%d tau2y=%d  I=f%d L=f%d R=f%d" % (v, s, y0, y1, y2, I, L, R))

fams = {
    "B":  "Ibdu Lwd Rwu",  "C":  "Ibdu Lwd Rwdu", "D":  "Ibdu Lwdu Rwu",
    "B2": "Iwdu Lbd Rwdu", "B3": "Iwdu Lwdu Rbu",
    "Bl": "Ibdu Lwu Rwd",  "Cl": "Ibdu Lwdu Rwd", "Dl": "Ibdu Lbu Rwdu",
    "Cl2":"Iwdu Lwdu Rbd", "Dl2":"Iwdu Lbu Rwdu",
    "Y":  "Iwdu Lwdu Rbu", "Z":  "Iwdu Lwd Rbdu", "W":  "Iwd Lwdu Rbdu",
    "Zf": "Iwdu Lbd Rwdu", "Wf": "Ibd Lwdu Rwdu",
    "Ytd":"Iwdu Lbu Rwdu", "Ztd":"Iwdu Lwdu Rbd", "Wtd":"Ibd Lwdu Rwdu",
    "Yt2u":"Iwdu Lwdu Rbd","Zt2u":"Iwdu Lbu Rwdu","Wt2u":"Ibu Lwdu Rwdu",
    "Yt2d":"Iwdu Lbd Rwdu","Zt2d":"Iwdu Lwdu Rbu","Wt2d":"Ibu Lwdu Rwdu",
}
reqs = {k: tri.family(dom, v, s, fam) for k, fam in fams.items()}
ind = {k: np.zeros(nc, bool) for k in fams}
for code in range(nc):
    colors = perc.coloring_from_index(code, dom.nf)
    for k, rq in reqs.items():
        ind[k][code] = tri.triple_event(dom, colors, rq)

A_r = (NR[:, y0] - NR[:, v]) == -1          # dnr = -1
A_l = (NL[:, y0] - NL[:, v]) == +1
Xtu  = (QU[:, y1] == 1) & (QU[:, v] == 0)
Xtd  = (QD[:, y1] == 1) & (QD[:, v] == 0)
Xt2u = (QU[:, y2] == 1) & (QU[:, v] == 0)
Xt2d = (QD[:, y2] == 1) & (QD[:, v] == 0)

def cmp(name, a, b):
    na, nb = int(a.sum()), int(b.sum())
    extra = int((a & ~b).sum()); miss = int((~a & b).sum())
    flag = "OK " if na == nb else "FAIL"
    print("  %s %-28s %5d vs %5d   (a&~b=%d, ~a&b=%d)" % (flag, name, na, nb, extra, miss))
    return a & ~b, ~a & b

print("-- chain R --")
cmp("P-level A==B", A_r, ind["B"])
cmp("B == C|D (count)", ind["B"], ind["C"] | ind["D"])
print("   C&D overlap:", int((ind["C"] & ind["D"]).sum()))
cmp("C == B2 (prob)", ind["C"], ind["B2"])
cmp("D == B3 (prob)", ind["D"], ind["B3"])
print("-- chain L --")
cmp("P-level A==B'", A_l, ind["Bl"])
cmp("B' == C'|D' (count)", ind["Bl"], ind["Cl"] | ind["Dl"])
print("   C'&D' overlap:", int((ind["Cl"] & ind["Dl"]).sum()))
cmp("C' == C2 (prob)", ind["Cl"], ind["Cl2"])
cmp("D' == D2 (prob)", ind["Dl"], ind["Dl2"])
print("-- chain tau u --")
cmp("X == Y|Z|W", Xtu, ind["Y"] | ind["Z"] | ind["W"])
print("   overlaps YZ,YW,ZW:", int((ind["Y"]&ind["Z"]).sum()), int((ind["Y"]&ind["W"]).sum()), int((ind["Z"]&ind["W"]).sum()))
cmp("Z == Zf (prob)", ind["Z"], ind["Zf"])
cmp("W == Wf (prob)", ind["W"], ind["Wf"])
print("-- chain tau d --")
cmp("X == Y|Z|W", Xtd, ind["Ytd"] | ind["Ztd"] | ind["Wtd"])
print("-- chain tau2 u --")
cmp("X == Y|Z|W", Xt2u, ind["Yt2u"] | ind["Zt2u"] | ind["Wt2u"])
print("-- chain tau2 d --")
cmp("X == Y|Z|W", Xt2d, ind["Yt2d"] | ind["Zt2d"] | ind["Wt2d"])

np.savez("dev/chain_%d_%d.npz" % (v, s), **{k: ind[k] for k in fams},
         A_r=A_r, A_l=A_l, Xtu=Xtu, Xtd=Xtd, Xt2u=Xt2u, Xt2d=Xt2d)
