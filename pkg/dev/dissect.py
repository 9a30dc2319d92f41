"""Find configs violating the per-config CR identity at one edge; dump them."""
import sys
import numpy as np
from hexperc.hexlattice import *
from hexperc import observables as obs
from hexperc import percolation as perc

def rect_spec(w, h, delta=1.0):
    poly = PolygonSpec((complex(0,0), complex(w,0), complex(w,h), complex(0,h)))
    per = 2*(w+h)
    marks = Marks(l=(2*w+h+h/2)/per, r=(w+h/2)/per, w=(w+h+w/2)/per)
    return DomainSpec(poly, marks, delta)

dom = discretize(rect_spec(6.5, 7.2))

def contrib(sv, v, s):
    nbr = dom.vert_nbr
    y = int(nbr[v, s]); s1, s2 = (s+1)%3, (s+2)%3
    y1, y2 = int(nbr[v, s1]), int(nbr[v, s2])
    dnl = int(sv.nl[y] - sv.nl[v]); dnr = int(sv.nr[y] - sv.nr[v])
    t  = 2*((dnl==1) - (dnr==-1))
    q1 = (int(sv.qd[y1] and not sv.qd[v]) - int(sv.qu[y1] and not sv.qu[v]))
    q2 = (int(sv.qd[y2] and not sv.qd[v]) - int(sv.qu[y2] and not sv.qu[v]))
    return t - q1 + q2, (dnl, dnr, int(sv.qu[v]), int(sv.qu[y1]), int(sv.qu[y2]),
                         int(sv.qd[v]), int(sv.qd[y1]), int(sv.qd[y2]))

v, s = int(sys.argv[1]), int(sys.argv[2])
y = int(dom.vert_nbr[v,s])
print("edge x=%d(%s) -> y=%d(%s); tau-heads: %d, %d" % (
    v, dom.vert_pos[v], y, dom.vert_pos[y],
    dom.vert_nbr[v,(s+1)%3], dom.vert_nbr[v,(s+2)%3]))
bad = {}
for code in range(1 << dom.nf):
    colors = perc.coloring_from_index(code, dom.nf)
    sv = obs.evaluate(dom, colors)
    c, det = contrib(sv, v, s)
    if c != 0:
        bad.setdefault(c, []).append((code, det))
for c in sorted(bad):
    print("contrib %+d: %d configs" % (c, len(bad[c])))
total = sum(c*len(v2) for c, v2 in bad.items())
print("edge residual:", total)
# dump a few
for c in sorted(bad):
    for code, det in bad[c][:2]:
        print("--- code=%d contrib=%+d  (dnl,dnr,qu[x,y1,y2],qd[x,y1,y2])=%s" % (code, c, det))
        colors = perc.coloring_from_index(code, dom.nf)
        print("   white faces:", np.nonzero(colors)[0].tolist())
