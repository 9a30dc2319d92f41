"""CR residual from pure jump counts with the new engine, 11F domain.

r(e) = 2(al+ - ar-) - [(qd+ - qu+)@tau_e - (qd+ - qu+)@tau2_e]
with two candidate slot mappings for (tau, tau2): (s+2,s+1) and (s+1,s+2).
"""
import numpy as np
from hexperc.hexlattice import PolygonSpec, Marks, DomainSpec, discretize
from hexperc import percolation as perc
from hexperc import observables as obs
from valnew import rect_spec


def main():
    dom = discretize(rect_spec(6.5, 7.2))
    nf, nv = dom.nf, dom.nv
    nc = 1 << nf
    cnt = np.zeros((nv, 3, 8), np.int64)  # al+, al-, ar+, ar-, qu+, qu-, qd+, qd-
    nbr = dom.vert_nbr
    for code in range(nc):
        colors = perc.coloring_from_index(code, nf)
        nl, nr, qu, qd = obs.config_observables(dom, colors)
        for v in range(nv):
            for s in range(3):
                y = nbr[v, s]
                if y < 0:
                    continue
                dnl = nl[y] - nl[v]
                dnr = nr[y] - nr[v]
                if dnl == 1:
                    cnt[v, s, 0] += 1
                elif dnl == -1:
                    cnt[v, s, 1] += 1
                if dnr == 1:
                    cnt[v, s, 2] += 1
                elif dnr == -1:
                    cnt[v, s, 3] += 1
                if qu[y] and not qu[v]:
                    cnt[v, s, 4] += 1
                elif qu[v] and not qu[y]:
                    cnt[v, s, 5] += 1
                if qd[y] and not qd[v]:
                    cnt[v, s, 6] += 1
                elif qd[v] and not qd[y]:
                    cnt[v, s, 7] += 1
    full = [v for v in range(nv) if all(nbr[v, s] >= 0 for s in range(3))]
    print("full-sector vertices:", full)
    bad1 = bad2 = tot = 0
    for v in full:
        for s in range(3):
            s1, s2 = (s + 1) % 3, (s + 2) % 3
            nside = 2 * (cnt[v, s, 0] - cnt[v, s, 3])
            q_s1 = cnt[v, s1, 6] - cnt[v, s1, 4]
            q_s2 = cnt[v, s2, 6] - cnt[v, s2, 4]
            r1 = nside - (q_s2 - q_s1)   # paper-tau -> slot s+2
            r2 = nside - (q_s1 - q_s2)   # paper-tau -> slot s+1
            tot += 1
            if r1 != 0:
                bad1 += 1
            if r2 != 0:
                bad2 += 1
            if r1 != 0 and r2 != 0:
                print("  edge (%d,%d): nside=%d qs1=%d qs2=%d r1=%d r2=%d"
                      % (v, s, nside, q_s1, q_s2, r1, r2))
    print("mapping tau->s+2: %d/%d nonzero; tau->s+1: %d/%d nonzero"
          % (bad1, tot, bad2, tot))
    # also vertex-sum checks: sum over slots of each quantity
    for v in full:
        ns = sum(2 * (cnt[v, s, 0] - cnt[v, s, 3]) for s in range(3))
        qs = sum(cnt[v, s, 6] - cnt[v, s, 4] for s in range(3))
        if ns != 0 or qs != 0:
            print("  vertex %d: sum nside=%d sum (qd+-qu+)=%d" % (v, ns, qs))
    print("vertex-sum check done")


if __name__ == "__main__":
    main()
