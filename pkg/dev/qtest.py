"""Family-level CR check + definitional Q fields + jump-event tests."""
import numpy as np
from collections import deque
from hexperc.hexlattice import *
from hexperc import percolation as perc
import importlib.util
crc = importlib.util.module_from_spec(importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py"))
crc.__spec__.loader.exec_module(crc)
dom = discretize(crc.rect_spec(6.5, 7.2))
nf, nv, nbr, wv = dom.nf, dom.nv, dom.vert_nbr, dom.wv
nc = 1 << nf
fam = np.load("dev/fam11.npz")
full = sorted(set(int(k.split("_")[0]) for k in fam.files))
adm = [(x, s) for x in range(nv) if dom.interior[x]
       and all(y >= 0 and dom.interior[y] for y in nbr[x]) for s in range(3)]

# --- family-level CR: B_l - B_r == TuY + T2dY - TdY - TdZ per edge? ---
bad = 0
for (x, s) in adm:
    g = lambda nm: int(fam["%d_%d_%s" % (x, s, nm)].sum())
    lhs = g("Br") - g("Bl")            # paper B_l - B_r in stored names
    rhs = g("TuY") + g("T2dY") - g("TdY") - g("TdZ")
    if lhs != rhs:
        bad += 1; print("  CR-family mismatch at (%d,%d): %d vs %d" % (x, s, lhs, rhs))
print("family-level CR: %d/%d admissible edges bad" % (bad, len(adm)))

# --- definitional Q fields ---
def q_fields(rule_engulfed_true):
    QU = np.zeros((nc, nv), np.uint8); QD = np.zeros((nc, nv), np.uint8)
    for code in range(nc):
        colors = perc.coloring_from_index(code, nf)
        # white clusters touching u and d
        lab = np.full(nf, -1, np.int32); comps = []
        for f0 in range(nf):
            if colors[f0] != 1 or lab[f0] >= 0: continue
            comp = []; st = [f0]; lab[f0] = len(comps)
            while st:
                f = st.pop(); comp.append(f)
                for g in dom.face_adj[f]:
                    if g >= 0 and colors[g] == 1 and lab[g] < 0:
                        lab[g] = lab[f0]; st.append(g)
            comps.append(comp)
        for comp in comps:
            if not (any(dom.face_nb_u[f] for f in comp) and any(dom.face_nb_d[f] for f in comp)):
                continue
            C = set(comp)
            # components of non-C faces
            fl = np.full(nf, -1, np.int32); props = []
            for f0 in range(nf):
                if f0 in C or fl[f0] >= 0: continue
                cid = len(props); st = [f0]; fl[f0] = cid
                tl = tr = tu = td = False
                while st:
                    f = st.pop()
                    if f in dom.lv_faces: tl = True
                    if f in dom.rv_faces: tr = True
                    if dom.face_nb_u[f]: tu = True
                    if dom.face_nb_d[f]: td = True
                    for g in dom.face_adj[f]:
                        if g >= 0 and g not in C and fl[g] < 0:
                            fl[g] = cid; st.append(g)
                props.append((tl, tr, tu, td))
            for v in range(nv):
                fs = [f for f in dom.vert_sector[v] if f >= 0]
                out = [fl[f] for f in fs if f not in C]
                if not out:
                    if rule_engulfed_true:
                        QU[code, v] = 1; QD[code, v] = 1
                    continue
                if any(props[c][0] or props[c][1] for c in out):
                    continue   # touches a component with l or r: not separated
                if any(props[c][3] for c in out): QU[code, v] = 1
                if any(props[c][2] for c in out): QD[code, v] = 1
    return QU, QD

for label, rule in [("engulfed->both", True), ("engulfed->neither", False)]:
    QU, QD = q_fields(rule)
    # jump events along tau e (CW: slot (s+2)%3) and tau^2 e (slot (s+1)%3)
    r1 = r2 = r3 = r4 = 0; n1 = 0
    for (x, s) in adm:
        ty  = nbr[x, (s + 2) % 3]
        t2y = nbr[x, (s + 1) % 3]
        g = lambda nm: int(fam["%d_%d_%s" % (x, s, nm)].sum())
        dtu  = int((QU[:, ty].astype(int)  - QU[:, x]).clip(0).sum())   # count Q(ty)\Q(x)
        dtd  = int((QD[:, ty].astype(int)  - QD[:, x]).clip(0).sum())
        d2u  = int((QU[:, t2y].astype(int) - QU[:, x]).clip(0).sum())
        d2d  = int((QD[:, t2y].astype(int) - QD[:, x]).clip(0).sum())
        e_tu  = g("TdY") + g("TdZ") + g("TdW")
        e_td  = g("TuY") + g("T2dY") + g("TdW")
        e_2u  = g("T2dY") + g("TuY") + g("T2uW")
        e_2d  = g("TdZ") + g("TdY") + g("T2uW")
        r1 += int(dtu != e_tu); r2 += int(dtd != e_td)
        r3 += int(d2u != e_2u); r4 += int(d2d != e_2d)
        n1 += 1
    print("%s: bad edges  tau+Hu %d  tau+Hd %d  tau2+Hu %d  tau2+Hd %d  (of %d)"
          % (label, r1, r2, r3, r4, n1))
    np.savez_compressed("dev/q11_%s.npz" % ("T" if rule else "F"), QU=QU, QD=QD)
