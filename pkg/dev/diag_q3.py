import numpy as np
from hexperc.hexlattice import *
from hexperc import percolation as perc
import importlib.util
crc = importlib.util.module_from_spec(importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py"))
crc.__spec__.loader.exec_module(crc)
dom = discretize(crc.rect_spec(6.5, 7.2))
nf, nv = dom.nf, dom.nv
code = 560
colors = perc.coloring_from_index(code, nf)
lab = np.full(nf, -1, np.int32); comps = []
for f0 in range(nf):
    if colors[f0] != 1 or lab[f0] >= 0: continue
    comp = []; st = [f0]; lab[f0] = len(comps)
    while st:
        f = st.pop(); comp.append(int(f))
        for g in dom.face_adj[f]:
            if g >= 0 and colors[g] == 1 and lab[g] < 0:
                lab[g] = lab[f0]; st.append(int(g))
    comps.append(comp)
print("white clusters:", comps)
for comp in comps:
    tu = any(dom.face_nb_u[f] for f in comp); td = any(dom.face_nb_d[f] for f in comp)
    print("  comp %s: u=%s d=%s -> qualifies %s" % (comp, tu, td, tu and td))
    if not (tu and td): continue
    C = set(comp)
    fl = np.full(nf, -1, np.int32); props = []
    for f0 in range(nf):
        if f0 in C or fl[f0] >= 0: continue
        cid = len(props); st = [f0]; fl[f0] = cid
        tl = tr = tuu = tdd = False
        while st:
            f = st.pop()
            if f in dom.lv_faces: tl = True
            if f in dom.rv_faces: tr = True
            if dom.face_nb_u[f]: tuu = True
            if dom.face_nb_d[f]: tdd = True
            for g in dom.face_adj[f]:
                if g >= 0 and g not in C and fl[g] < 0:
                    fl[g] = cid; st.append(int(g))
        props.append((tl, tr, tuu, tdd))
    print("  fl:", fl.tolist(), " props(l,r,u,d):", props)
    for v in (6, 19):
        fs = [f for f in dom.vert_sector[v] if f >= 0]
        out = [int(fl[f]) for f in fs if f not in C]
        print("  v%d: faces %s out-comps %s" % (v, fs, out))
q = np.load("dev/q11_F.npz")
print("stored QU row:", q["QU"][code].tolist())
print("stored QD row:", q["QD"][code].tolist())
