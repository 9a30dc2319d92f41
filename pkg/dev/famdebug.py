"""Find first disagreements between PatternEvaluator and frozen families."""
import numpy as np
from collections import Counter
from hexperc.hexlattice import PolygonSpec, Marks, DomainSpec, discretize, OrientedEdge
from hexperc import percolation as perc
from hexperc import analysis as ana


def rect_spec(w, h, delta=1.0):
    poly = PolygonSpec((complex(0, 0), complex(w, 0), complex(w, h), complex(0, h)))
    per = 2 * (w + h)
    marks = Marks(l=(2 * w + h + h / 2) / per, r=(w + h / 2) / per,
                  w=(w + h + w / 2) / per)
    return DomainSpec(poly, marks, delta)


FAM2PAT = {}
for i, nm in enumerate(["TdY", "TdZ", "TdW"]):
    FAM2PAT[nm] = ana.QSUMS["du_tau"][i]
for i, nm in enumerate(["TuY", "TuZ", "TuW"]):
    FAM2PAT[nm] = ana.QSUMS["dd_tau"][i]
for i, nm in enumerate(["T2dY", "T2dZ", "T2dW"]):
    FAM2PAT[nm] = ana.QSUMS["du_tau2"][i]
for i, nm in enumerate(["T2uY", "T2uZ", "T2uW"]):
    FAM2PAT[nm] = ana.QSUMS["dd_tau2"][i]
FAM2PAT["Br"] = ana.CHAINS["dl_plus"][0][0]
FAM2PAT["Bl"] = ana.CHAINS["dr_minus"][0][0]

dom = discretize(rect_spec(6.5, 7.2))
nf = dom.nf
fam = np.load("dev/fam11.npz")
keys = list(fam.keys())
edset = sorted(set((int(k.split("_")[0]), int(k.split("_")[1])) for k in keys))

byfam = Counter()
examples = []
for code in range(1 << nf):
    colors = perc.coloring_from_index(code, nf)
    ev = ana.PatternEvaluator(dom, colors)
    for (x, s) in edset:
        e = OrientedEdge(x, int(dom.vert_nbr[x, s]))
        faces = ana.edge_fan(dom, e)
        for nm, pat in FAM2PAT.items():
            key = "%d_%d_%s" % (x, s, nm)
            if key not in fam:
                continue
            mine = bool(ev.triple(faces, pat))
            ref = bool(fam[key][code])
            if mine != ref:
                byfam[nm] += 1
                if len(examples) < 6:
                    examples.append((code, x, s, nm, ref, mine, faces, pat.key))
print("mismatches by family:", dict(byfam))
for ex in examples:
    code, x, s, nm, ref, mine, faces, pk = ex
    colors = perc.coloring_from_index(code, nf)
    print("code", code, "whites", np.nonzero(colors)[0].tolist(),
          "edge", (x, s), nm, "ref", ref, "mine", mine)
    print("   fan opp,left,right =", faces, " pattern", pk)
print("nb_u", dom.face_nb_u.tolist())
print("nb_d", dom.face_nb_d.tolist())
print("adj:")
for f in range(nf):
    print("  ", f, [int(g) for g in dom.face_adj[f]])
