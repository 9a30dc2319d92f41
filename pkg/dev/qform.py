"""True formal Q fields: quantify over white simple d-d (u-u) paths."""
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
lrf = set(int(f) for f in dom.lv_faces) | set(int(f) for f in dom.rv_faces)

def field(colors, arc_path, arc_conn, single_ok=True):
    """Q field: white simple path from arc_path to arc_path, cluster connected
    to arc_conn, separating z from l and r."""
    tgt = NBD if arc_path == "d" else NBU
    con = NBU if arc_conn == "u" else NBD
    # cluster labels + arc_conn contact
    lab = np.full(nf, -1, np.int32); cton = []
    for f0 in range(nf):
        if not colors[f0] or lab[f0] >= 0: continue
        cid = len(cton); lab[f0] = cid; st = [f0]; t = False
        while st:
            f = st.pop()
            if con[f]: t = True
            for g in adj[f]:
                if colors[g] and lab[g] < 0: lab[g] = cid; st.append(g)
        cton.append(t)
    q = np.zeros(nv, np.uint8)
    seen_sets = set()
    ends = [f for f in range(nf) if colors[f] and tgt[f] and cton[lab[f]]]
    def process(pathset):
        key = frozenset(pathset)
        if key in seen_sets: return
        seen_sets.add(key)
        # flood comps of non-path faces; mark l/r-tainted comps
        fl = np.full(nf, -1, np.int8)
        taint = []
        for f0 in range(nf):
            if f0 in pathset or fl[f0] >= 0: continue
            cid = len(taint); fl[f0] = cid; st = [f0]; t = False
            while st:
                f = st.pop()
                if f in lrf: t = True
                for g in adj[f]:
                    if g not in pathset and fl[g] < 0: fl[g] = cid; st.append(g)
            taint.append(t)
        for v in range(nv):
            if q[v]: continue
            ok = True
            for f in vsec[v]:
                if f not in pathset and taint[fl[f]]: ok = False; break
            if ok: q[v] = 1
    # enumerate simple paths between d-faces (within white subgraph)
    def dfs(cur, path, goal_check):
        if goal_check(cur) and (single_ok or len(path) > 1):
            process(path)
            # continue extending: longer paths can separate more
        for g in adj[cur]:
            if colors[g] and g not in path:
                path.add(g); dfs(g, path, goal_check); path.discard(g)
    for a in ends:
        dfs(a, {a}, lambda f: tgt[f])
    return q

fam = np.load("dev/fam11.npz")
adm = [(x, s) for x in range(nv) if dom.interior[x]
       and all(y >= 0 and dom.interior[y] for y in nbr[x]) for s in range(3)]
QU = np.zeros((nc, nv), np.uint8); QD = np.zeros((nc, nv), np.uint8)
for code in range(nc):
    colors = perc.coloring_from_index(code, nf).astype(bool)
    QU[code] = field(colors, "d", "u")
    QD[code] = field(colors, "u", "d")
np.savez_compressed("dev/qform11.npz", QU=QU, QD=QD)
r = [0]*4; worst = []
for (x, s) in adm:
    ty, t2y = nbr[x, (s+2) % 3], nbr[x, (s+1) % 3]
    g = lambda nm: int(fam["%d_%d_%s" % (x, s, nm)].sum())
    dtu = int((QU[:, ty].astype(int) - QU[:, x]).clip(0).sum())
    dtd = int((QD[:, ty].astype(int) - QD[:, x]).clip(0).sum())
    d2u = int((QU[:, t2y].astype(int) - QU[:, x]).clip(0).sum())
    d2d = int((QD[:, t2y].astype(int) - QD[:, x]).clip(0).sum())
    e = (g("TdY")+g("TdZ")+g("TdW"), g("TuY")+g("T2dY")+g("TdW"),
         g("T2dY")+g("TuY")+g("T2uW"), g("TdZ")+g("TdY")+g("T2uW"))
    got = (dtu, dtd, d2u, d2d)
    for i in range(4):
        if got[i] != e[i]:
            r[i] += 1
            if len(worst) < 8: worst.append((x, s, i, got[i], e[i]))
print("formal-Q bad edges per slot [tau+Hu, tau+Hd, tau2+Hu, tau2+Hd]:", r, "of", len(adm))
for wts in worst: print("   (%d,%d) slot%d: jump=%d fam=%d" % wts)
