"""Literal, path-enumeration implementations of the vertex observables.

Exponential cost; only for tiny enumeration domains.  These serve as the
semantic anchor: the engine must match them config-by-config.
"""
import numpy as np
from hexperc import percolation as perc

def cluster_faces(dom, labels, c):
    return [f for f in range(dom.nf) if labels[f] == c]

def comp_labels_excluding(dom, excl):
    """Components of all faces not in excl (a set); returns comp id per face (-1 in excl)."""
    comp = np.full(dom.nf, -1, np.int32)
    n = 0
    for f0 in range(dom.nf):
        if f0 in excl or comp[f0] >= 0: continue
        stack=[f0]; comp[f0]=n
        while stack:
            f=stack.pop()
            for d in range(6):
                g=int(dom.face_adj[f,d])
                if g>=0 and g not in excl and comp[g]<0:
                    comp[g]=n; stack.append(g)
        n+=1
    return comp, n

def vert_faces(dom, v):
    return [int(f) for f in dom.vert_sector[v] if f >= 0]

def reach_flags(dom, comp, n, targets):
    """Per-component flag: contains a face from targets."""
    fl = np.zeros(n, bool)
    for f in targets:
        if comp[f] >= 0: fl[comp[f]] = True
    return fl

def simple_paths(dom, K, starts, ends):
    """All simple paths within face set K from starts to ends (sets). Yields tuples."""
    Kset = set(K)
    adj = {f: [int(g) for g in dom.face_adj[f] if g >= 0 and int(g) in Kset] for f in K}
    out = []
    def dfs(f, path, onpath):
        if f in ends and len(path) >= 1:
            out.append(tuple(path))
            # continue extending: longer paths may separate when short ones don't
        for g in adj[f]:
            if g not in onpath:
                path.append(g); onpath.add(g)
                dfs(g, path, onpath)
                path.pop(); onpath.remove(g)
    for s in starts:
        dfs(s, [s], {s})
    return out

def q_event(dom, colors, endpoint_arc, cluster_arc, single_min_edges=1):
    """Literal Q event at every vertex.

    endpoint_arc: 'u' -> path endpoints carry edges on u (this is q^d);
                  'd' -> endpoints on d (q^u).
    cluster_arc: arc the path's cluster must touch.
    """
    cl = perc.label_clusters(dom, colors)
    nbu = dom.face_nb_u; nbd = dom.face_nb_d
    end_cnt = nbu if endpoint_arc == "u" else nbd
    c_touch = cl.touch_u if cluster_arc == "u" else cl.touch_d
    out = np.zeros(dom.nv, bool)
    lr_faces = set(int(f) for f in dom.lv_faces) | set(int(f) for f in dom.rv_faces)
    for c in range(cl.n):
        if not c_touch[c]: continue
        K = cluster_faces(dom, cl.labels, c)
        ends = [f for f in K if end_cnt[f] > 0]
        if not ends: continue
        paths = set()
        for p in simple_paths(dom, K, ends, set(ends)):
            if len(p) == 1 and end_cnt[p[0]] < single_min_edges: continue
            paths.add(frozenset(p))
        for gam in paths:
            comp, n = comp_labels_excluding(dom, gam)
            badflag = reach_flags(dom, comp, n, lr_faces)
            for v in range(dom.nv):
                if out[v]: continue
                fs = vert_faces(dom, v)
                if not fs: continue
                sep = True
                for f in fs:
                    if f in gam: continue
                    if badflag[comp[f]]: sep = False; break
                if sep: out[v] = True
    return out

def leftmost_paths(dom, colors, side):
    """Minimal-area u-d simple path of each crossing cluster. side='left' ->
    minimize faces reachable from l; 'right' -> from r. Returns list of
    (frozenset, flagged_tie)."""
    cl = perc.label_clusters(dom, colors)
    seeds_all = dom.lv_faces if side == "left" else dom.rv_faces
    res = []
    for c in cl.crossing():
        K = cluster_faces(dom, cl.labels, int(c))
        starts = [f for f in K if dom.face_nb_u[f] > 0]
        ends = set(f for f in K if dom.face_nb_d[f] > 0)
        best = None; best_area = None; tie = False
        seen = set()
        for p in simple_paths(dom, K, starts, ends):
            fp = frozenset(p)
            if fp in seen: continue
            seen.add(fp)
            comp, n = comp_labels_excluding(dom, fp)
            area = 0
            fl = reach_flags(dom, comp, n, [f for f in seeds_all if f not in fp])
            area = sum(1 for f in range(dom.nf) if comp[f] >= 0 and fl[comp[f]])
            key = (area, tuple(sorted(fp)))
            if best is None or key < best_area:
                best, best_area, tie = fp, key, False
            elif key[0] == best_area[0] and key[1] != best_area[1]:
                tie = True
        res.append((best, tie))
    return res

def n_event(dom, colors, side):
    """Literal signed separation count at every vertex for the given side's
    boundary paths."""
    out = np.zeros(dom.nv, np.int32)
    paths = leftmost_paths(dom, colors, side)
    wv_f = vert_faces(dom, dom.wv)
    for gam, _tie in paths:
        comp, n = comp_labels_excluding(dom, gam)
        fl_l = reach_flags(dom, comp, n, [f for f in dom.lv_faces if f not in gam])
        fl_w = reach_flags(dom, comp, n, [f for f in wv_f if f not in gam])
        # vertex connected to l / w off the path?
        def conn(v, fl):
            return any(fl[comp[f]] for f in vert_faces(dom, v) if f not in gam)
        l_with_w = any(fl_l[c2] and fl_w[c2] for c2 in range(n))
        for v in range(dom.nv):
            zl = conn(v, fl_l)
            # pattern {l,w}|{z,r}: w with l, z not with l -> +1
            # pattern {l,z}|{w,r}: z with l, w not with l -> -1
            if l_with_w and not zl: out[v] += 1
            elif zl and not l_with_w: out[v] -= 1
    return out
