"""Interface-based N observables: count u-d interfaces between adjacent
crossing clusters (white and black alternate l->r). Test all convention
variants against flip identity, A=B families, and CR at admissible edges."""
import numpy as np, time
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
    out = []
    for c in range(n):
        if tu[c] and td[c]:
            out.append(frozenset(np.nonzero(lab == c)[0].tolist()))
    return out

def face_sides(A, B):
    """Faces l-side/r-side of the interface between adjacent crossing
    clusters A,B: flood faces from l's incident faces, blocking A<->B steps."""
    side = np.full(nf, -1, np.int8)
    # seed: all faces, flood from l's faces (dom.lv_faces)
    from collections import deque
    q = deque()
    for f in dom.lv_faces:
        side[f] = 0; q.append(f)
    while q:
        f = q.popleft()
        for g in dom.face_adj[f]:
            if g < 0 or side[g] >= 0: continue
            if (f in A and g in B) or (f in B and g in A): continue
            side[g] = 0; q.append(g)
    side[side < 0] = 1
    return side  # 0 = l-side, 1 = r-side

def interfaces(colors):
    """Ordered list of (lower cluster, upper cluster, type) where type
    'wb' means white on l-side, black on r-side; 'bw' the reverse.
    Build: order all crossing clusters (both colors) l->r; consecutive pairs."""
    W = crossing_sets(colors, 1)
    B = crossing_sets(colors, 0)
    allc = [(K, 1) for K in W] + [(K, 0) for K in B]
    if len(allc) <= 1: return []
    # order clusters l->r by side-occlusion: cluster X is left of Y iff
    # flooding from l blocked on X's faces cannot reach Y... simpler: use
    # face_sides of each adjacent pair? For ordering, sort by min over faces of
    # (number of crossing clusters separating from l). Robust simple approach:
    # remove cluster X's faces; Y is right of X iff Y disconnected from l-faces.
    def right_of(Y, X):
        # Y right of X if removing X's faces disconnects all Y faces from l side
        from collections import deque
        seen = np.zeros(nf, bool)
        q = deque()
        for f in dom.lv_faces:
            if f in X: return True  # l engulfed by X: everything "right"
            seen[f] = True; q.append(f)
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
        if ca == cb: raise RuntimeError("same-color neighbors in chain")
        out.append((A, Bc, "wb" if ca == 1 else "bw"))
    return out

# per config: vertex k-values for each (type, conv) combination
def vertex_k(side, conv):
    """side: per-face 0/1; vertex value by min or max over incident faces."""
    kv = np.zeros(nv, np.int8)
    for v in range(nv):
        vals = [side[f] for f in dom.vert_sector[v] if f >= 0]
        kv[v] = (min(vals) if conv == "min" else max(vals))
    return kv

t0 = time.time()
K = {}  # (typ, conv) -> per-config per-vertex counts
for typ in ("wb", "bw"):
    for conv in ("min", "max"):
        K[(typ, conv)] = np.zeros((nc, nv), np.int16)
for code in range(nc):
    colors = perc.coloring_from_index(code, nf)
    for (A, Bc, typ) in interfaces(colors):
        side = face_sides(A, Bc)
        for conv in ("min", "max"):
            kv = vertex_k(side, conv)
            K[(typ, conv)][code] += kv
    if code % 512 == 0: print("  %d %.1fs" % (code, time.time() - t0), flush=True)
np.savez_compressed("dev/interf11.npz",
                    **{"%s_%s" % k: v for k, v in K.items()})
print("done %.1fs" % (time.time() - t0))
