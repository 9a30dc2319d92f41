"""Visualize configs + brute internals on the 11-face domain."""
import sys
import numpy as np
from hexperc.hexlattice import *
from hexperc import percolation as perc
import importlib.util
spec_ = importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py")
crc = importlib.util.module_from_spec(spec_); spec_.loader.exec_module(crc)
spec3 = importlib.util.spec_from_file_location("brute", "dev/brute.py")
brute = importlib.util.module_from_spec(spec3); spec3.loader.exec_module(brute)

dom = discretize(crc.rect_spec(6.5, 7.2))

def show(code):
    colors = perc.coloring_from_index(code, dom.nf)
    print("config %d: white=%s" % (code, [f for f in range(dom.nf) if colors[f]]))
    # faces by axial: column q -> list (r, fid)
    cols = {}
    for fid, (q, r) in enumerate(dom.faces_axial):
        cols.setdefault(q, []).append((r, fid))
    qs = sorted(cols)
    maxr = max(r for q in cols for r, _ in cols[q])
    for rr in range(maxr, -1, -1):
        row = []
        for q in qs:
            m = dict(cols[q])
            if rr in m:
                f = m[rr]
                row.append("%2d%s" % (f, "W" if colors[f] else "b"))
            else:
                row.append("   ")
        print("   r=%d  %s" % (rr, "  ".join(row)))
    print("   centers: " + "  ".join("f%d(%.1f,%.1f)" % (f, dom.face_center[f].real, dom.face_center[f].imag) for f in range(dom.nf)))
    nl = brute.n_event(dom, colors, "left")
    nr = brute.n_event(dom, colors, "right")
    qd = brute.q_event(dom, colors, "u", "d")
    qu = brute.q_event(dom, colors, "d", "u")
    lp = brute.leftmost_paths(dom, colors, "left")
    rp = brute.leftmost_paths(dom, colors, "right")
    print("   left paths:", [sorted(g) for g, t in lp], " right paths:", [sorted(g) for g, t in rp])
    vs = [int(x) for x in sys.argv[2:]] if len(sys.argv) > 2 else [0, 1, 2, 6]
    for v in vs:
        print("   v%-2d pos(%.2f,%.2f) faces%s  nl=%+d nr=%+d qu=%d qd=%d"
              % (v, dom.vert_pos[v].real, dom.vert_pos[v].imag, brute.vert_faces(dom, v),
                 nl[v], nr[v], qu[v], qd[v]))

show(int(sys.argv[1]))
