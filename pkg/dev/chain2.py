"""All six chain links at admissible edges, probability level (counts/2048)."""
import numpy as np, importlib.util, time
from hexperc.hexlattice import *
from hexperc import percolation as perc
spec_ = importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py")
crc = importlib.util.module_from_spec(spec_); spec_.loader.exec_module(crc)
spec2 = importlib.util.spec_from_file_location("triple", "dev/triple.py")
tri = importlib.util.module_from_spec(spec2); spec2.loader.exec_module(tri)

dom = discretize(crc.rect_spec(6.5, 7.2))
nbr = dom.vert_nbr
nc = 1 << dom.nf
fam = np.load("dev/fam11.npz")
z = np.load("dev/brute11.npz")
NL, NR = z["NL"].astype(int), z["NR"].astype(int)
QU, QD = z["QU"].astype(int), z["QD"].astype(int)

adm = [(x, s) for x in range(dom.nv) if dom.interior[x]
       and all(y >= 0 and dom.interior[y] for y in nbr[x]) for s in range(3)]

EXTRA = {"C": "Ibdu Lwd Rwdu", "D": "Ibdu Lwdu Rwu",
         "Cl": "Ibdu Lwdu Rwd", "Dl": "Ibdu Lbu Rwdu"}
wcache = {}
def clusters_with_touch(dom, colors, color):
    lab, n = tri._clusters(dom, colors, color)
    tu = np.zeros(n, bool); td = np.zeros(n, bool)
    for f in range(dom.nf):
        c = lab[f]
        if c >= 0:
            if dom.face_nb_u[f] > 0: tu[c] = True
            if dom.face_nb_d[f] > 0: td[c] = True
    return lab, tu, td
def cached_triple(colors, reqs, cl_w, cl_b):
    for f, c, _ in reqs:
        if colors[f] != c: return False
    for color in (0, 1):
        group = [(f, arcs) for f, c, arcs in reqs if c == color]
        if not group: continue
        lab, touch_u, touch_d = (cl_w if color == 1 else cl_b)
        if len(group) == 1:
            f, arcs = group[0]
            for a in arcs:
                if not (touch_u[lab[f]] if a == "u" else touch_d[lab[f]]): return False
        else:
            (f1, arcs1), (f2, arcs2) = group
            if lab[f1] != lab[f2]:
                for f, arcs in group:
                    for a in arcs:
                        if not (touch_u[lab[f]] if a == "u" else touch_d[lab[f]]): return False
            else:
                cluster = frozenset(g for g in range(dom.nf) if lab[g] == lab[f1])
                key = (cluster, f1, arcs1, f2, arcs2)
                if key not in wcache:
                    found = False
                    for A in tri._connected_subsets(dom, cluster, f1):
                        if f2 in A or not tri._arcs_ok(dom, A, arcs1): continue
                        rest = cluster - A
                        comp = {f2}; stack = [f2]
                        while stack:
                            f = stack.pop()
                            for g in dom.face_adj[f]:
                                if g >= 0 and g in rest and g not in comp:
                                    comp.add(g); stack.append(g)
                        if tri._arcs_ok(dom, comp, arcs2): found = True; break
                    wcache[key] = found
                if not wcache[key]: return False
    return True

reqs_all = {(x, s, k): tri.family(dom, x, s, p)
            for (x, s) in adm for k, p in EXTRA.items()}
IND = {key: np.zeros(nc, bool) for key in reqs_all}
t0 = time.time()
for code in range(nc):
    colors = perc.coloring_from_index(code, dom.nf)
    cw = clusters_with_touch(dom, colors, 1); cb = clusters_with_touch(dom, colors, 0)
    for key, rq in reqs_all.items():
        IND[key][code] = cached_triple(colors, rq, cw, cb)
print("extras %.1fs" % (time.time() - t0))

def F(x, s, name): return fam["%d_%d_%s" % (x, s, name)]
def m(a, b): return "=" if a == b else "X"
for (x, s) in adm:
    y, ty, t2y = nbr[x, s], nbr[x, (s + 1) % 3], nbr[x, (s + 2) % 3]
    Ar = int(((NR[:, y] - NR[:, x]) == -1).sum())
    Al = int(((NL[:, y] - NL[:, x]) == 1).sum())
    Xu1 = int(((QU[:, ty] == 1) & (QU[:, x] == 0)).sum())
    Xd1 = int(((QD[:, ty] == 1) & (QD[:, x] == 0)).sum())
    Xu2 = int(((QU[:, t2y] == 1) & (QU[:, x] == 0)).sum())
    Xd2 = int(((QD[:, t2y] == 1) & (QD[:, x] == 0)).sum())
    B = int(F(x, s, "Br").sum()); Bl_ = int(F(x, s, "Bl").sum())
    C = int(IND[(x, s, "C")].sum()); D = int(IND[(x, s, "D")].sum())
    Cl = int(IND[(x, s, "Cl")].sum()); Dl = int(IND[(x, s, "Dl")].sum())
    Cf = int(F(x, s, "T2dY").sum()); Df = int(F(x, s, "TuY").sum())
    Clf = int(F(x, s, "T2uY").sum()); Dlf = int(F(x, s, "T2uZ").sum())
    tu = Df + Cf + int(F(x, s, "TdW").sum())
    td = int(F(x, s, "TdY").sum()) + Clf + int(F(x, s, "TdW").sum())
    t2u = Clf + int(F(x, s, "T2uZ").sum()) + int(F(x, s, "T2uW").sum())
    t2d = Cf + Df + int(F(x, s, "T2uW").sum())
    print("(%2d,%d) r: A%5d B%5d%s | B,C+D%5d%s | C%4d Cf%4d%s | D%4d Df%4d%s"
          % (x, s, Ar, B, m(Ar, B), C + D, m(B, C + D), C, Cf, m(C, Cf), D, Df, m(D, Df)))
    print("       l: A%5d B%5d%s | B,C+D%5d%s | C%4d Cf%4d%s | D%4d Df%4d%s"
          % (Al, Bl_, m(Al, Bl_), Cl + Dl, m(Bl_, Cl + Dl), Cl, Clf, m(Cl, Clf), Dl, Dlf, m(Dl, Dlf)))
    print("       q: u1 %4d vs %4d%s | d1 %4d vs %4d%s | u2 %4d vs %4d%s | d2 %4d vs %4d%s"
          % (Xu1, tu, m(Xu1, tu), Xd1, td, m(Xd1, td), Xu2, t2u, m(Xu2, t2u), Xd2, t2d, m(Xd2, t2d)))
