"""Inspect leftBoundary definitional failures."""
import numpy as np
from hexperc.hexlattice import PolygonSpec, Marks, DomainSpec, discretize
from hexperc import percolation as perc
from hexperc import observables as obs
from hexperc import exact_oracle as eo


def rect_spec(w, h, delta=1.0):
    poly = PolygonSpec((complex(0, 0), complex(w, 0), complex(w, h), complex(0, h)))
    per = 2 * (w + h)
    marks = Marks(l=(2 * w + h + h / 2) / per, r=(w + h / 2) / per,
                  w=(w + h + w / 2) / per)
    return DomainSpec(poly, marks, delta)


dom = discretize(rect_spec(6.5, 7.2))
nf = dom.nf
shown = 0
for code in range(0, 1 << nf, 8):
    colors = perc.coloring_from_index(code, nf)
    ok, det = eo._check_left_boundary(dom, colors)
    if ok:
        continue
    labels = perc.label_clusters(dom, colors, True)
    print("code", code, "white faces", np.nonzero(colors)[0].tolist())
    for cid in obs.crossing_clusters(dom, labels):
        kfaces = set(np.nonzero(labels.labels == cid)[0].tolist())
        cands = eo._all_ud_paths(dom, kfaces)
        tr = obs.trace_boundary(dom, labels, cid, "left")
        tfaces = tuple(int(f) for f in tr.faces)
        in_c = tfaces in cands
        print("  cluster", cid, "faces", sorted(kfaces))
        print("  trace", tfaces, "in cands:", in_c, " (%d cands)" % len(cands))
        if in_c:
            lt = eo._left_region(dom, tfaces)
            for p in cands:
                lp = eo._left_region(dom, p)
                if not (lt <= lp):
                    print("    violating cand", p, "lt-lp", sorted(lt - lp),
                          "lp", sorted(lp), "lt", sorted(lt))
                    break
    print("  nb_u", dom.face_nb_u.tolist())
    print("  nb_d", dom.face_nb_d.tolist())
    shown += 1
    if shown >= 3:
        break
