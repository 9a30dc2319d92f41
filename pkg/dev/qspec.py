"""Spec fast-criterion Q fields + expansion tests."""
import numpy as np
from hexperc.hexlattice import *
from hexperc import percolation as perc
import importlib.util
crc = importlib.util.module_from_spec(importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py"))
crc.__spec__.loader.exec_module(crc)
dom = discretize(crc.rect_spec(6.5, 7.2))
nf, nv, nbr = dom.nf, dom.nv, dom.vert_nbr
nc = 1 << nf
adj = [[int(g) for g in dom.face_adj[f] if g >= 0] for f in range(nf)]
vsec = [[int(f) for f in dom.vert_sector[v] if f >= 0] for v in range(nv)]
NBU, NBD = dom.face_nb_u, dom.face_nb_d

def q_fast(colors, up):
    """up=True: Q^u (W_u = white clusters touching u, comps must touch only open d)."""
    touch = NBU if up else NBD
    other = NBD if up else NBU
    lab = np.full(nf, -1, np.int32); tu = []
    for f0 in range(nf):
        if not colors[f0] or lab[f0] >= 0: continue
        cid = len(tu); lab[f0] = cid; st = [f0]; t = False
        while st:
            f = st.pop()
            if touch[f]: t = True
            for g in adj[f]:
                if colors[g] and lab[g] < 0: lab[g] = cid; st.append(g)
        tu.append(t)
    inW = np.zeros(nf, bool)
    for f in range(nf):
        if colors[f] and tu[lab[f]]: inW[f] = True
    fl = np.full(nf, -1, np.int32); bad = []
    for f0 in range(nf):
        if inW[f0] or fl[f0] >= 0: continue
        cid = len(bad); fl[f0] = cid; st = [f0]; t = False
        while st:
            f = st.pop()
            if other[f]: t = True   # meets boundary outside the allowed arc
            for g in adj[f]:
                if not inW[g] and fl[g] < 0: fl[g] = cid; st.append(g)
        bad.append(t)
    q = np.empty(nv, np.uint8)
    for v in range(nv):
        ok = True
        for f in vsec[v]:
            if not inW[f] and bad[fl[f]]: ok = False; break
        q[v] = ok
    return q

fam = np.load("dev/fam11.npz")
adm = [(x, s) for x in range(nv) if dom.interior[x]
       and all(y >= 0 and dom.interior[y] for y in nbr[x]) for s in range(3)]
QU = np.zeros((nc, nv), np.uint8); QD = np.zeros((nc, nv), np.uint8)
for code in range(nc):
    colors = perc.coloring_from_index(code, nf).astype(bool)
    QU[code] = q_fast(colors, True)
    QD[code] = q_fast(colors, False)
np.savez_compressed("dev/qspec11.npz", QU=QU, QD=QD)
r = [0]*4; rows = []
for (x, s) in adm:
    ty, t2y = nbr[x, (s+2) % 3], nbr[x, (s+1) % 3]
    g = lambda nm: int(fam["%d_%d_%s" % (x, s, nm)].sum())
    got = (int((QU[:, ty].astype(int) - QU[:, x]).clip(0).sum()),
           int((QD[:, ty].astype(int) - QD[:, x]).clip(0).sum()),
           int((QU[:, t2y].astype(int) - QU[:, x]).clip(0).sum()),
           int((QD[:, t2y].astype(int) - QD[:, x]).clip(0).sum()))
    e = (g("TdY")+g("TdZ")+g("TdW"), g("TuY")+g("T2dY")+g("TdW"),
         g("T2dY")+g("TuY")+g("T2uW"), g("TdZ")+g("TdY")+g("T2uW"))
    rows.append((x, s, got, e))
    for i in range(4):
        if got[i] != e[i]: r[i] += 1
print("spec-Q bad edges [tau+Hu, tau+Hd, tau2+Hu, tau2+Hd]:", r, "of", len(adm))
for x, s, got, e in rows[:6]:
    print("  (%d,%d): jump %s  fam %s" % (x, s, got, e))
