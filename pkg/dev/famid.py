"""Identify which triple-pattern each stored TuZ/TuW array equals."""
import numpy as np
from hexperc.hexlattice import PolygonSpec, Marks, DomainSpec, discretize, OrientedEdge
from hexperc import percolation as perc
from hexperc import analysis as ana

def rect_spec(w, h, delta=1.0):
    poly = PolygonSpec((complex(0, 0), complex(w, 0), complex(w, h), complex(0, h)))
    per = 2 * (w + h)
    marks = Marks(l=(2 * w + h + h / 2) / per, r=(w + h / 2) / per,
                  w=(w + h + w / 2) / per)
    return DomainSpec(poly, marks, delta)

dom = discretize(rect_spec(6.5, 7.2))
nf = dom.nf
fam = np.load("dev/fam11.npz")

def parse(tok):
    return (tok[0], tok[1:])

cands = {}
for opp in ("wud", "bu", "bd", "bud", "wu", "wd"):
    for left in ("wud", "bu", "bd", "bud", "wu", "wd"):
        for right in ("wud", "bu", "bd", "bud", "wu", "wd"):
            key = "%s.%s.%s" % (opp, left, right)
            cands[key] = ana.TriplePattern(parse(opp), parse(left), parse(right))

edset = sorted(set((int(k.split("_")[0]), int(k.split("_")[1]))
                   for k in fam.keys()))
fans = {}
for (x, s) in edset:
    e = OrientedEdge(x, int(dom.vert_nbr[x, s]))
    fans[(x, s)] = ana.edge_fan(dom, e)

evcache = {}
def evaluator(code):
    ev = evcache.get(code)
    if ev is None:
        evcache.clear()
        ev = ana.PatternEvaluator(dom, perc.coloring_from_index(code, nf))
        evcache[code] = ev
    return ev

for nm in ("TuZ", "TuW"):
    stored = {es: fam["%d_%d_%s" % (es[0], es[1], nm)] for es in edset}
    hits = []
    for k, pat in cands.items():
        ok = True
        for code in range(1 << nf):
            ev = evaluator(code)
            for es in edset:
                if ev.triple(fans[es], pat) != bool(stored[es][code]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            hits.append(k)
    print(nm, "matches:", hits)
