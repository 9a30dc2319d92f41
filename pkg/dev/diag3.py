"""Dissect A=B mismatches for the minority convention."""
import numpy as np
from collections import deque
import importlib.util
spec_ = importlib.util.spec_from_file_location("interf2x", "dev/interf2.py")
# reimplement the small pieces instead of exec (interf2 runs full loop)
from hexperc.hexlattice import *
from hexperc import percolation as perc
crc = importlib.util.module_from_spec(importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py"))
crc.__spec__.loader.exec_module(crc)
dom = discretize(crc.rect_spec(6.5, 7.2))
nf, nv, nbr = dom.nf, dom.nv, dom.vert_nbr

def clusters(colors, color):
    lab = np.full(nf, -1, np.int32); n = 0
    for f0 in range(nf):
        if colors[f0] != color or lab[f0] >= 0: continue
        stack = [f0]; lab[f0] = n
        while stack:
            f = stack.pop()
            for g in dom.face_adj[f]:
                if g >= 0 and colors[g] == color and lab[g] < 0:
                    lab[g] = n; stack.append(g)
        n += 1
    return lab, n

def crossing_sets(colors, color):
    lab, n = clusters(colors, color)
    tu = np.zeros(n, bool); td = np.zeros(n, bool)
    for f in range(nf):
        if lab[f] >= 0:
            if dom.face_nb_u[f] > 0: tu[lab[f]] = True
            if dom.face_nb_d[f] > 0: td[lab[f]] = True
    return [frozenset(np.nonzero(lab == c)[0].tolist()) for c in range(n) if tu[c] and td[c]]

def face_sides(A, B):
    side = np.full(nf, -1, np.int8); q = deque()
    for f in dom.lv_faces:
        if side[f] < 0: side[f] = 0; q.append(f)
    while q:
        f = q.popleft()
        for g in dom.face_adj[f]:
            if g < 0 or side[g] >= 0: continue
            if (f in A and g in B) or (f in B and g in A): continue
            side[g] = 0; q.append(g)
    side[side < 0] = 1
    return side

def interfaces(colors):
    W = crossing_sets(colors, 1); B = crossing_sets(colors, 0)
    allc = [(K, 1) for K in W] + [(K, 0) for K in B]
    if len(allc) <= 1: return []
    def right_of(Y, X):
        seen = np.zeros(nf, bool); q = deque()
        for f in dom.lv_faces:
            if f in X: return True
            if not seen[f]: seen[f] = True; q.append(f)
        while q:
            f = q.popleft()
            for g in dom.face_adj[f]:
                if g < 0 or seen[g] or g in X: continue
                seen[g] = True; q.append(g)
        return not any(seen[f] for f in Y)
    order = []
    for item in allc:
        pos = 0
        for j, other in enumerate(order):
            if right_of(item[0], other[0]): pos = j + 1
        order.insert(pos, item)
    out = []
    for i in range(len(order) - 1):
        (A, ca), (Bc, cb) = order[i], order[i + 1]
        out.append((A, Bc, "wb" if ca == 1 else "bw"))
    return out

M = np.load("dev/minor11.npz"); fam = np.load("dev/fam11.npz")
kwb = M["wb_0"].astype(int)
wv = dom.wv
Nl = kwb[:, wv][:, None] - kwb
adm = [(x, s) for x in range(nv) if dom.interior[x]
       and all(y >= 0 and dom.interior[y] for y in nbr[x]) for s in range(3)]

shown = 0
for (x, s) in adm:
    y = nbr[x, s]
    Al = (Nl[:, y] - Nl[:, x]) == 1
    Bl = fam["%d_%d_Bl" % (x, s)]
    bad = np.nonzero(Al != Bl)[0]
    if len(bad) == 0: continue
    for code in bad[:2]:
        colors = perc.coloring_from_index(int(code), nf)
        sec = dom.vert_sector[x]
        R, I, L = sec[s], sec[(s+1)%3], sec[(s+2)%3]
        print("edge (x=%d,s=%d,y=%d) code %d  Al=%d Bl=%d  colors=%s" %
              (x, s, y, code, int(Al[code]), int(Bl[code]), "".join(str(c) for c in colors)))
        print("   I=%d(%s) L=%d(%s) R=%d(%s)  kwb[x]=%d kwb[y]=%d kwb[w]=%d" %
              (I, "bw"[colors[I]], L, "bw"[colors[L]], R, "bw"[colors[R]],
               kwb[code, x], kwb[code, y], kwb[code, wv]))
        for (A, B, typ) in interfaces(colors):
            side = face_sides(A, B)
            print("   iface %s A=%s B=%s sides=%s  x-faces %s y-faces %s w-faces %s" %
                  (typ, sorted(A), sorted(B), "".join(str(v) for v in side),
                   [int(side[f]) for f in dom.vert_sector[x] if f >= 0],
                   [int(side[f]) for f in dom.vert_sector[y] if f >= 0],
                   [int(side[f]) for f in dom.vert_sector[wv] if f >= 0]))
        shown += 1
        if shown >= 4: break
    if shown >= 4: break
