import numpy as np
from hexperc.hexlattice import *
from hexperc import percolation as perc
import importlib.util
crc = importlib.util.module_from_spec(importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py"))
crc.__spec__.loader.exec_module(crc)
dom = discretize(crc.rect_spec(6.5, 7.2))
nf, nv = dom.nf, dom.nv
print("faces_axial:", dom.faces_axial.tolist())
print("face_nb_u:", dom.face_nb_u.tolist())
print("face_nb_d:", dom.face_nb_d.tolist())
print("lv_faces:", sorted(dom.lv_faces), " rv_faces:", sorted(dom.rv_faces))
print("lv=%d rv=%d wv=%d" % (dom.lv, dom.rv, dom.wv))
for v in (6, 19, 31, 13, 35, 7, 1):
    print("v%d: sector=%s nbr=%s interior=%s" % (v, dom.vert_sector[v].tolist(),
          dom.vert_nbr[v].tolist(), bool(dom.interior[v])))
# face adjacency rows
for f in range(nf):
    print("f%d adj: %s" % (f, [g for g in dom.face_adj[f] if g >= 0]))
# dissect config 560 pockets
code = 560
colors = perc.coloring_from_index(code, nf)
print("code 560 colors:", colors.tolist())
