"""Minority-convention interface k fields + full identity tests."""
import numpy as np, time
from collections import deque
from hexperc.hexlattice import *
from hexperc import percolation as perc
import importlib.util
spec_ = importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py")
crc = importlib.util.module_from_spec(spec_); spec_.loader.exec_module(crc)

dom = discretize(crc.rect_spec(6.5, 7.2))
nf, nv = dom.nf, dom.nv
nc = 1 << nf
nbr = dom.vert_nbr

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
    return [frozenset(np.nonzero(lab == c)[0].tolist())
            for c in range(n) if tu[c] and td[c]]

def face_sides(A, B):
    side = np.full(nf, -1, np.int8)
    q = deque()
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
        assert ca != cb
        out.append((A, Bc, "wb" if ca == 1 else "bw"))
    return out

def vertex_k_minor(side, tie):
    kv = np.zeros(nv, np.int8)
    for v in range(nv):
        vals = [int(side[f]) for f in dom.vert_sector[v] if f >= 0]
        n1 = sum(vals); n0 = len(vals) - n1
        if n0 == 0: kv[v] = 1
        elif n1 == 0: kv[v] = 0
        elif n0 == n1: kv[v] = tie          # 2-face boundary vertex, 1-1
        else: kv[v] = 1 if n1 < n0 else 0    # minority side wins
    return kv

t0 = time.time()
K = {("wb", 0): np.zeros((nc, nv), np.int16), ("wb", 1): np.zeros((nc, nv), np.int16),
     ("bw", 0): np.zeros((nc, nv), np.int16), ("bw", 1): np.zeros((nc, nv), np.int16)}
for code in range(nc):
    colors = perc.coloring_from_index(code, nf)
    for (A, Bc, typ) in interfaces(colors):
        side = face_sides(A, Bc)
        for tie in (0, 1):
            K[(typ, tie)][code] += vertex_k_minor(side, tie)
np.savez_compressed("dev/minor11.npz", **{"%s_%d" % k: v for k, v in K.items()})
print("computed %.1fs" % (time.time() - t0))

fam = np.load("dev/fam11.npz")
flip = (nc - 1) - np.arange(nc)
wv = dom.wv
adm = [(x, s) for x in range(nv) if dom.interior[x]
       and all(y >= 0 and dom.interior[y] for y in nbr[x]) for s in range(3)]
full = sorted(set(int(k.split("_")[0]) for k in fam.files))

for tie in (0, 1):
    kwb = K[("wb", tie)].astype(int); kbw = K[("bw", tie)].astype(int)
    Nl = kwb[:, wv][:, None] - kwb
    Nr = kbw[:, wv][:, None] - kbw
    print("tie=%d: flip N^l(c)==N^r(cbar): %s" % (tie, "EXACT" if np.array_equal(Nl, Nr[flip]) else
          "bad %d" % int((Nl != Nr[flip]).sum())))
    up_mis = dn_mis = 0
    for (x, s) in adm:
        y = nbr[x, s]
        Al = (Nl[:, y] - Nl[:, x]) == 1      # dn of kwb
        Ar_x = (Nr[:, x] - Nr[:, y]) == 1    # {N^r(x)=N^r(y)+1} = up of kbw
        up_mis += int((Ar_x != fam["%d_%d_Br" % (x, s)]).sum())
        dn_mis += int((Al != fam["%d_%d_Bl" % (x, s)]).sum())
    print("   adm edges: {N^l(y)=N^l(x)+1} vs Bl mism %d ; {N^r(x)=N^r(y)+1} vs Br mism %d"
          % (dn_mis, up_mis))
    # gradient bound per config on ALL edges
    mx = 0
    for x in range(nv):
        for s in range(3):
            y = nbr[x, s]
            if y < 0 or y < x: continue
            mx = max(mx, int(np.abs(Nl[:, y] - Nl[:, x]).max()),
                     int(np.abs(Nr[:, y] - Nr[:, x]).max()))
    print("   max |dN| over all edges:", mx)
