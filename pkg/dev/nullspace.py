import numpy as np
from hexperc.hexlattice import *
import importlib.util
spec_ = importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py")
crc = importlib.util.module_from_spec(spec_); spec_.loader.exec_module(crc)

dom = discretize(crc.rect_spec(6.5, 7.2))
z = np.load("dev/brute11.npz")
which = __import__("sys").argv[1] if len(__import__("sys").argv) > 1 else "brute"
pre = "" if which == "brute" else "e"
NL, NR = z[pre+"NL"].astype(int), z[pre+"NR"].astype(int)
QU, QD = z[pre+"QU"].astype(int), z[pre+"QD"].astype(int)

def cols(v, s):
    nbr = dom.vert_nbr
    y = [nbr[v,(s+k)%3] for k in range(3)]
    if min(y) < 0: return None
    c = [NL[:,y[0]]-NL[:,v], NR[:,y[0]]-NR[:,v]]
    for k in range(3):
        c.append(QD[:,y[k]]-QD[:,v])
        c.append(QU[:,y[k]]-QU[:,v])
    return np.stack(c, axis=1)   # (nc, 8)

names = ["dnl@s","dnr@s","dqd@s","dqu@s","dqd@s1","dqu@s1","dqd@s2","dqu@s2"]
for cls in (0, 1):
    mats = []
    for v in range(dom.nv):
        if vertex_class(dom.vert_icoord[v][0]) != cls: continue
        for s in range(3):
            M = cols(v, s)
            if M is not None: mats.append(M)
    big = np.concatenate(mats, axis=0).astype(float)
    u_, sv, vt = np.linalg.svd(big, full_matrices=True)
    print("[%s] class %d: %d edge-blocks, singular values:" % (which, cls, len(mats)))
    print("   ", np.array2string(sv, precision=3))
    null = vt[sv < 1e-9 * sv[0]] if len(sv) == 8 else vt[len(sv):]
    for nv_ in vt[::-1]:
        resid = np.abs(big @ nv_).max()
        if resid < 1e-8:
            w = nv_ / np.abs(nv_)[np.abs(nv_) > 1e-8].min()
            print("    NULLVEC:", " ".join("%+.3f %s" % (a, b) for a, b in zip(w, names) if abs(a) > 1e-9))
