"""Is P[N^l jump +1] == P[N^r jump -1] exactly at every admissible edge?
Decides whether the two tau-orientation readings coexist."""
import numpy as np
from hexperc.hexlattice import PolygonSpec, Marks, DomainSpec, discretize
from hexperc import analysis as ana


def rect_spec(w, h, delta=1.0):
    poly = PolygonSpec((complex(0, 0), complex(w, 0), complex(w, h), complex(0, h)))
    per = 2 * (w + h)
    marks = Marks(l=(2 * w + h + h / 2) / per, r=(w + h / 2) / per,
                  w=(w + h + w / 2) / per)
    return DomainSpec(poly, marks, delta)


dom = discretize(rect_spec(6.5, 7.2))
eprobs = ana.expansion_probs(dom)
neq = 0
mx = 0.0
for e, ep in eprobs.items():
    d = ep.jumps["dl_plus"] - ep.jumps["dr_minus"]
    if d != 0:
        neq += 1
        mx = max(mx, abs(float(d)))
print("edges with P[nl+1] != P[nr-1]: %d/%d, max |diff| %.6g"
      % (neq, len(eprobs), mx))
