"""X-operational vs family sums; sweep Q conventions."""
import numpy as np
from itertools import product
from hexperc.hexlattice import *
from hexperc import percolation as perc
import importlib.util
crc = importlib.util.module_from_spec(importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py"))
crc.__spec__.loader.exec_module(crc)
dom = discretize(crc.rect_spec(6.5, 7.2))
nf, nv, nbr = dom.nf, dom.nv, dom.vert_nbr
nc = 1 << nf
fam = np.load("dev/fam11.npz")
adm = [(x, s) for x in range(nv) if dom.interior[x]
       and all(y >= 0 and dom.interior[y] for y in nbr[x]) for s in range(3)]
adj = [[int(g) for g in dom.face_adj[f] if g >= 0] for f in range(nf)]
UD = {"u": dom.face_nb_u, "d": dom.face_nb_d}

def arms_disjoint(colors, fa, fb, arc):
    """White simple path fa->arc and fb->arc, site-disjoint; fa,fb white."""
    tgt = UD[arc]
    seen = set()
    def dfs_path(cur, path):
        if tgt[cur]:
            yield set(path)
            # keep extending? a longer path only hurts disjointness; minimal enough
            return
        for g in adj[cur]:
            if colors[g] and g not in path:
                path.add(g); yield from dfs_path(g, path); path.discard(g)
    for P1 in dfs_path(fa, {fa}):
        # white path fb->arc avoiding P1
        st = [fb]; vis = {fb} | P1
        if fb in P1: continue
        ok = False
        while st:
            f = st.pop()
            if tgt[f]: ok = True; break
            for g in adj[f]:
                if colors[g] and g not in vis:
                    vis.add(g); st.append(g)
        if ok: return True
    return False

# connectivity helpers per config
def white_clusters(colors):
    lab = np.full(nf, -1, np.int32); comps = []
    for f0 in range(nf):
        if not colors[f0] or lab[f0] >= 0: continue
        comp = [f0]; lab[f0] = len(comps); st = [f0]
        while st:
            f = st.pop()
            for g in adj[f]:
                if colors[g] and lab[g] < 0:
                    lab[g] = lab[f0]; st.append(g); comp.append(g)
        comps.append(comp)
    return lab, comps

# --- per-edge X counts (both tau directions) vs family sums ---
ILR = {}
for (x, s) in adm:
    L = int(dom.vert_sector[x][s]); I = int(dom.vert_sector[x][(s+1) % 3]); R = int(dom.vert_sector[x][(s+2) % 3])
    ILR[(x, s)] = (I, L, R)
Xcnt = {k: [0, 0, 0, 0] for k in adm}   # [tau_u(IL), tau_d(IL), tau2_u(IR), tau2_d(IR)]
for code in range(nc):
    colors = perc.coloring_from_index(code, nf).astype(bool)
    lab, comps = white_clusters(colors)
    ctu = [any(dom.face_nb_u[f] for f in c) for c in comps]
    ctd = [any(dom.face_nb_d[f] for f in c) for c in comps]
    for (x, s) in adm:
        I, L, R = ILR[(x, s)]
        # X(tau e): I and L on white d-d path connected to u
        if colors[I] and colors[L] and lab[I] == lab[L]:
            cl = lab[I]
            if ctu[cl] and ctd[cl] and arms_disjoint(colors, I, L, "d"):
                Xcnt[(x, s)][0] += 1
            if ctu[cl] and ctd[cl] and arms_disjoint(colors, I, L, "u"):
                Xcnt[(x, s)][1] += 1
        # mirror guess for tau^2: I and R on white path
        if colors[I] and colors[R] and lab[I] == lab[R]:
            cl = lab[I]
            if ctu[cl] and ctd[cl] and arms_disjoint(colors, I, R, "d"):
                Xcnt[(x, s)][2] += 1
            if ctu[cl] and ctd[cl] and arms_disjoint(colors, I, R, "u"):
                Xcnt[(x, s)][3] += 1
b = [0, 0, 0, 0]
for (x, s) in adm:
    g = lambda nm: int(fam["%d_%d_%s" % (x, s, nm)].sum())
    e_tu = g("TdY") + g("TdZ") + g("TdW"); e_td = g("TuY") + g("T2dY") + g("TdW")
    e_2u = g("T2dY") + g("TuY") + g("T2uW"); e_2d = g("TdZ") + g("TdY") + g("T2uW")
    c = Xcnt[(x, s)]
    for i, e in enumerate((e_tu, e_td, e_2u, e_2d)):
        if c[i] != e:
            b[i] += 1
            if b[i] <= 2: print("  X mismatch slot%d (%d,%d): X=%d fam=%d" % (i, x, s, c[i], e))
print("X-operational bad edges per slot [tauIL_d, tauIL_u, tau2IR_d, tau2IR_u]:", b, "of", len(adm))
