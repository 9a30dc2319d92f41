"""Integrate the forced jump field dN = 1[B_l(c)] - 1[B_r(cbar)] from w."""
import numpy as np
from collections import deque
from hexperc.hexlattice import *
import importlib.util
crc = importlib.util.module_from_spec(importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py"))
crc.__spec__.loader.exec_module(crc)
dom = discretize(crc.rect_spec(6.5, 7.2))
nv, nbr, wv = dom.nv, dom.vert_nbr, dom.wv

fam = np.load("dev/fam11.npz"); I4 = np.load("dev/interf11.npz")
full = sorted(set(int(k.split("_")[0]) for k in fam.files))
nc = I4["wb_min"].shape[0]
flip = (nc - 1) - np.arange(nc)

# oriented forced jumps at edges with x full-sector
dN = {}
for x in full:
    for s in range(3):
        Bl = fam["%d_%d_Br" % (x, s)].astype(np.int8)   # paper B_l
        Br = fam["%d_%d_Bl" % (x, s)].astype(np.int8)   # paper B_r
        dN[(x, s)] = Bl - Br[flip]

# antisymmetry on doubly-constrained edges
anti_bad = 0; pairs = 0
for x in full:
    for s in range(3):
        y = nbr[x, s]
        if y in full and y > x:
            s2 = [t for t in range(3) if nbr[y, t] == x][0]
            pairs += 1
            anti_bad += int((dN[(x, s)] != -dN[(y, s2)]).sum())
print("doubly-constrained edges: %d, antisymmetry violations: %d" % (pairs, anti_bad))

# integrate per config by BFS from w
N = np.full((nc, nv), 99, np.int32)
inconsist = 0; unreached = set()
edges_from = {v: [] for v in range(nv)}   # v -> (nbr, key, sign)
for (x, s), arr in dN.items():
    y = nbr[x, s]
    edges_from[x].append((y, (x, s), +1))
    edges_from[y].append((x, (x, s), -1))
for code in range(nc):
    N[code, wv] = 0
    q = deque([wv])
    while q:
        v = q.popleft()
        for (u, key, sg) in edges_from[v]:
            val = N[code, v] + sg * int(dN[key][code])
            if N[code, u] == 99:
                N[code, u] = val; q.append(u)
            elif N[code, u] != val:
                inconsist += 1
    unreached |= {v for v in range(nv) if N[code, v] == 99}
print("path inconsistencies:", inconsist)
print("unreached vertices:", sorted(unreached))

reach = [v for v in range(nv) if v not in unreached]
D = N[:, reach] - N[flip][:, reach]
print("flip self-consistency on reached set:", "EXACT" if not D.any() else "bad %d" % int(np.abs(D).sum()))
kbw = I4["bw_min"].astype(int); Nl_bw = kbw - kbw[:, wv][:, None]
kwb = I4["wb_max"].astype(int); Nr_wb = kwb - kwb[:, wv][:, None]
dif1 = int((N[:, reach] != Nl_bw[:, reach]).sum())
dif2 = int((N[:, reach] != Nr_wb[flip][:, reach]).sum())
print("forced vs bw_min same-config: %d diffs ; vs wb_max flipped: %d diffs" % (dif1, dif2))
np.savez_compressed("dev/forced11.npz", N=N, reach=np.array(reach))
