"""Triple (disjointly-witnessed) connection events around an edge tail, by
exhaustive witness search. Dev-only exactness reference."""
import numpy as np
from hexperc.hexlattice import *


def _clusters(dom, colors, color):
    lab = np.full(dom.nf, -1, np.int32)
    nl_ = 0
    for f0 in range(dom.nf):
        if colors[f0] != color or lab[f0] >= 0: continue
        stack = [f0]; lab[f0] = nl_
        while stack:
            f = stack.pop()
            for g in dom.face_adj[f]:
                if g >= 0 and colors[g] == color and lab[g] < 0:
                    lab[g] = nl_; stack.append(g)
        nl_ += 1
    return lab, nl_


def _touch(dom, members, arc):
    cnt = dom.face_nb_u if arc == "u" else dom.face_nb_d
    return any(cnt[f] > 0 for f in members)


def _connected_subsets(dom, cluster, f0):
    """All connected subsets of `cluster` (a frozenset) containing f0."""
    cluster = frozenset(cluster)
    seen = set()
    out = []
    start = frozenset([f0])
    stack = [start]
    seen.add(start)
    while stack:
        S = stack.pop()
        out.append(S)
        for f in S:
            for g in dom.face_adj[f]:
                if g >= 0 and g in cluster and g not in S:
                    T = S | {g}
                    if T not in seen:
                        seen.add(T); stack.append(T)
    return out


def _arcs_ok(dom, S, arcs):
    return all(_touch(dom, S, a) for a in arcs)


def triple_event(dom, colors, reqs):
    """reqs: list of (face, color, arcs) with color in {0,1}, arcs subset of {"u","d"}.
    True iff there exist witnesses: connected monochromatic sets W_i containing
    face_i touching each arc in arcs_i, pairwise disjoint within each color."""
    # face color preconditions
    for f, c, _ in reqs:
        if colors[f] != c:
            return False
    for color in (0, 1):
        group = [(f, arcs) for f, c, arcs in reqs if c == color]
        if not group:
            continue
        lab, _n = _clusters(dom, colors, color)
        if len(group) == 1:
            f, arcs = group[0]
            members = [g for g in range(dom.nf) if lab[g] == lab[f]]
            if not _arcs_ok(dom, members, arcs):
                return False
        elif len(group) == 2:
            (f1, arcs1), (f2, arcs2) = group
            if lab[f1] != lab[f2]:
                for f, arcs in group:
                    members = [g for g in range(dom.nf) if lab[g] == lab[f]]
                    if not _arcs_ok(dom, members, arcs):
                        return False
            else:
                cluster = frozenset(g for g in range(dom.nf) if lab[g] == lab[f1])
                found = False
                for A in _connected_subsets(dom, cluster, f1):
                    if f2 in A or not _arcs_ok(dom, A, arcs1):
                        continue
                    rest = cluster - A
                    comp = {f2}
                    stack = [f2]
                    while stack:
                        f = stack.pop()
                        for g in dom.face_adj[f]:
                            if g >= 0 and g in rest and g not in comp:
                                comp.add(g); stack.append(g)
                    if _arcs_ok(dom, comp, arcs2):
                        found = True
                        break
                if not found:
                    return False
        else:
            raise NotImplementedError
    return True


def edge_faces_ILR(dom, v, s):
    sec = dom.vert_sector[v]
    R = sec[s]; I = sec[(s + 1) % 3]; L = sec[(s + 2) % 3]
    return I, L, R

WHITE, BLACK = 1, 0

def family(dom, v, s, name):
    """name like 'Ibb.Lw.Rw^' — encode: face letter, color, sub(d)/sup(u).
    Use compact spec: list of (role, color, arcs)."""
    I, L, R = edge_faces_ILR(dom, v, s)
    fmap = {"I": I, "L": L, "R": R}
    reqs = []
    for part in name.split():
        role = part[0]
        c = WHITE if part[1] == "w" else BLACK
        arcs = []
        if "d" in part[2:]: arcs.append("d")
        if "u" in part[2:]: arcs.append("u")
        reqs.append((fmap[role], c, tuple(arcs)))
    return reqs
