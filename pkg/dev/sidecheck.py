"""Measure which fan face lies left/right of an oriented edge, and which
faces are adjacent to the rotated edges, using raw coordinates only."""
import numpy as np
from hexperc.hexlattice import PolygonSpec, Marks, DomainSpec, discretize, OrientedEdge
from hexperc import analysis as ana


def rect_spec(w, h, delta=1.0):
    poly = PolygonSpec((complex(0, 0), complex(w, 0), complex(w, h), complex(0, h)))
    per = 2 * (w + h)
    marks = Marks(l=(2 * w + h + h / 2) / per, r=(w + h / 2) / per,
                  w=(w + h + w / 2) / per)
    return DomainSpec(poly, marks, delta)


dom = discretize(rect_spec(6.5, 7.2))
fc = dom.face_center  # complex face centers
vp = dom.vert_pos

def side(e, f):
    """+1 if face center f is left of oriented edge e, -1 right."""
    ev = vp[e.head] - vp[e.tail]
    mid = (vp[e.head] + vp[e.tail]) / 2
    cr = (ev.real * (fc[f] - mid).imag) - (ev.imag * (fc[f] - mid).real)
    return 1 if cr > 0 else -1

def is_adjacent(f, e):
    """Face f has edge e as one of its sides: both endpoints at distance
    ~side length from center."""
    a = abs(fc[f] - vp[e.tail])
    b = abs(fc[f] - vp[e.head])
    s = abs(vp[e.head] - vp[e.tail])
    return abs(a - s) < 1e-9 and abs(b - s) < 1e-9

bad = 0
rows = 0
for e in ana.admissible_edges(dom):
    opp, left, right = ana.edge_fan(dom, e)
    rows += 1
    sl, sr = side(e, left), side(e, right)
    r1 = dom.rotate_edge(e, 1)
    r2 = dom.rotate_edge(e, 2)
    adj_e = {f for f in (opp, left, right) if is_adjacent(f, e)}
    adj_r1 = {f for f in (opp, left, right) if is_adjacent(f, r1)}
    adj_r2 = {f for f in (opp, left, right) if is_adjacent(f, r2)}
    ok = (sl == 1 and sr == -1
          and adj_e == {left, right}
          and adj_r1 == {right, opp}
          and adj_r2 == {left, opp})
    if not ok:
        bad += 1
        if bad <= 3:
            print("edge", e, "left-side sign", sl, "right-side sign", sr)
            print("   adj(e)", adj_e, "adj(rot1)", adj_r1, "adj(rot2)", adj_r2,
                  "fan (opp,left,right)", (opp, left, right))
print("edges checked:", rows, "violations of "
      "[left really left, right really right, e~{left,right}, "
      "rot1~{right,opp}, rot2~{left,opp}]:", bad)
