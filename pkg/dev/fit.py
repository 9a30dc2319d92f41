"""Family-implied jump fields vs brute/engine observable jumps, per config."""
import sys, time
import numpy as np
from hexperc.hexlattice import *
from hexperc import percolation as perc
import importlib.util
spec_ = importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py")
crc = importlib.util.module_from_spec(spec_); spec_.loader.exec_module(crc)
spec2 = importlib.util.spec_from_file_location("triple", "dev/triple.py")
tri = importlib.util.module_from_spec(spec2); spec2.loader.exec_module(tri)

dom = discretize(crc.rect_spec(6.5, 7.2))
nc = 1 << dom.nf
nbr = dom.vert_nbr

full = [v for v in range(dom.nv) if all(f >= 0 for f in dom.vert_sector[v])]
fullset = set(full)
print("full-sector vertices:", full)

# families needed per (v,s):
FAM = {
    "Br": "Ibdu Lwd Rwu",    # N^r down-event along e
    "Bl": "Ibdu Lwu Rwd",    # N^l up-event along e
    "TuY": "Iwdu Lwdu Rbu", "TuZ": "Iwdu Lwd Rbdu", "TuW": "Iwd Lwdu Rbdu",
    "TdY": "Iwdu Lbu Rwdu", "TdZ": "Iwdu Lwdu Rbd", "TdW": "Ibd Lwdu Rwdu",
    "T2uY": "Iwdu Lwdu Rbd", "T2uZ": "Iwdu Lbu Rwdu", "T2uW": "Ibu Lwdu Rwdu",
    "T2dY": "Iwdu Lbd Rwdu", "T2dZ": "Iwdu Lwdu Rbu", "T2dW": "Ibu Lwdu Rwdu",
}
# witness cache across configs: key -> bool
wcache = {}

def cached_triple(dom, colors, reqs, cl_w, cl_b):
    for f, c, _ in reqs:
        if colors[f] != c:
            return False
    for color in (0, 1):
        group = [(f, arcs) for f, c, arcs in reqs if c == color]
        if not group: continue
        lab, touch_u, touch_d = (cl_w if color == 1 else cl_b)
        if len(group) == 1:
            f, arcs = group[0]
            c_ = lab[f]
            for a in arcs:
                if not (touch_u[c_] if a == "u" else touch_d[c_]):
                    return False
        else:
            (f1, arcs1), (f2, arcs2) = group
            if lab[f1] != lab[f2]:
                for f, arcs in group:
                    c_ = lab[f]
                    for a in arcs:
                        if not (touch_u[c_] if a == "u" else touch_d[c_]):
                            return False
            else:
                cluster = frozenset(g for g in range(dom.nf) if lab[g] == lab[f1])
                key = (cluster, f1, arcs1, f2, arcs2)
                if key not in wcache:
                    found = False
                    for A in tri._connected_subsets(dom, cluster, f1):
                        if f2 in A or not tri._arcs_ok(dom, A, arcs1):
                            continue
                        rest = cluster - A
                        comp = {f2}; stack = [f2]
                        while stack:
                            f = stack.pop()
                            for g in dom.face_adj[f]:
                                if g >= 0 and g in rest and g not in comp:
                                    comp.add(g); stack.append(g)
                        if tri._arcs_ok(dom, comp, arcs2):
                            found = True; break
                    wcache[key] = found
                if not wcache[key]:
                    return False
    return True

def clusters_with_touch(dom, colors, color):
    lab, n = tri._clusters(dom, colors, color)
    tu = np.zeros(n, bool); td = np.zeros(n, bool)
    for f in range(dom.nf):
        c = lab[f]
        if c >= 0:
            if dom.face_nb_u[f] > 0: tu[c] = True
            if dom.face_nb_d[f] > 0: td[c] = True
    return lab, tu, td

reqs_all = {}
for v in full:
    for s in range(3):
        for k, fam in FAM.items():
            reqs_all[(v, s, k)] = tri.family(dom, v, s, fam)

t0 = time.time()
IND = {key: np.zeros(nc, bool) for key in reqs_all}
for code in range(nc):
    colors = perc.coloring_from_index(code, dom.nf)
    cl_w = clusters_with_touch(dom, colors, 1)
    cl_b = clusters_with_touch(dom, colors, 0)
    for key, rq in reqs_all.items():
        IND[key][code] = cached_triple(dom, colors, rq, cl_w, cl_b)
    if code % 512 == 0:
        print("  %d/%d %.1fs (cache %d)" % (code, nc, time.time() - t0, len(wcache)), flush=True)
np.savez_compressed("dev/fam11.npz",
                    **{"%d_%d_%s" % k: v for k, v in IND.items()})
print("done %.1fs" % (time.time() - t0))
