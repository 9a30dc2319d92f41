import numpy as np
fam = np.load("dev/fam11.npz")
full = sorted(set(int(k.split("_")[0]) for k in fam.files))
print("vertex: sum_s (Bl_paper - Br_paper) = sum_s (storedBr - storedBl)")
for x in full:
    t = sum(int(fam["%d_%d_Br" % (x, s)].sum()) - int(fam["%d_%d_Bl" % (x, s)].sum())
            for s in range(3))
    print("  v%-3d: %d" % (x, t))
