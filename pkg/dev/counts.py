"""Count-level chain test for flip-defined pairs."""
import numpy as np
from hexperc.hexlattice import *
import importlib.util
crc = importlib.util.module_from_spec(importlib.util.spec_from_file_location("crcheck", "dev/crcheck.py"))
crc.__spec__.loader.exec_module(crc)
dom = discretize(crc.rect_spec(6.5, 7.2))
nv, nbr, wv = dom.nv, dom.vert_nbr, dom.wv
fam = np.load("dev/fam11.npz"); I4 = np.load("dev/interf11.npz")
full = sorted(set(int(k.split("_")[0]) for k in fam.files))
nc = I4["wb_min"].shape[0]

for name, k in [("bw_min", I4["bw_min"]), ("wb_max", I4["wb_max"]),
                ("bw_max", I4["bw_max"]), ("wb_min", I4["wb_min"])]:
    k = k.astype(int)
    N = k - k[:, wv][:, None]
    bad_up = bad_dn = 0; worst = []
    for x in full:
        for s in range(3):
            y = nbr[x, s]
            d = N[:, y] - N[:, x]
            nBl = int(fam["%d_%d_Br" % (x, s)].sum())   # paper B_l count
            nBr = int(fam["%d_%d_Bl" % (x, s)].sum())   # paper B_r count
            du, dd = int((d == 1).sum()), int((d == -1).sum())
            if du != nBl: bad_up += 1; worst.append(("up", x, s, du, nBl))
            if dd != nBr: bad_dn += 1; worst.append(("dn", x, s, dd, nBr))
    print("%s: edges with #up!=#B_l: %d, #dn!=#B_r: %d" % (name, bad_up, bad_dn))
    for wrec in worst[:6]: print("   ", wrec)
