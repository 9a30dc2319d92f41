"""Dev loop: exact CR residual on a tiny domain via full enumeration."""
import sys
import numpy as np
from hexperc.hexlattice import *
from hexperc import observables as obs
from hexperc import percolation as perc

def rect_spec(w, h, delta=1.0):
    poly = PolygonSpec((complex(0,0), complex(w,0), complex(w,h), complex(0,h)))
    per = 2*(w+h)
    marks = Marks(l=(2*w+h+h/2)/per, r=(w+h/2)/per, w=(w+h+w/2)/per)
    return DomainSpec(poly, marks, delta)

def enumerate_counts(dom):
    nf, nv = dom.nf, dom.nv
    nc = 1 << nf
    sums = np.zeros((4, nv), np.int64)      # nl, nr, qu, qd
    # per oriented edge (v, s): 8 counters
    cnt = np.zeros((nv, 3, 8), np.int64)    # al+, al-, ar+, ar-, au+, au-, ad+, ad-
    nbr = dom.vert_nbr
    for code in range(nc):
        colors = perc.coloring_from_index(code, nf)
        sv = obs.evaluate(dom, colors)
        sums[0] += sv.nl; sums[1] += sv.nr; sums[2] += sv.qu; sums[3] += sv.qd
        for v in range(nv):
            for s in range(3):
                y = nbr[v, s]
                if y < 0: continue
                dnl = sv.nl[y] - sv.nl[v]
                dnr = sv.nr[y] - sv.nr[v]
                if dnl == 1: cnt[v,s,0]+=1
                elif dnl == -1: cnt[v,s,1]+=1
                if dnr == 1: cnt[v,s,2]+=1
                elif dnr == -1: cnt[v,s,3]+=1
                if sv.qu[y] and not sv.qu[v]: cnt[v,s,4]+=1
                elif sv.qu[v] and not sv.qu[y]: cnt[v,s,5]+=1
                if sv.qd[y] and not sv.qd[v]: cnt[v,s,6]+=1
                elif sv.qd[v] and not sv.qd[y]: cnt[v,s,7]+=1
    return sums, cnt

def residuals(dom, cnt):
    out = []
    nbr = dom.vert_nbr
    for v in range(dom.nv):
        for s in range(3):
            y = nbr[v, s]
            if y < 0: continue
            s1, s2 = (s+1)%3, (s+2)%3
            if nbr[v,s1] < 0 or nbr[v,s2] < 0: continue
            r = 2*(cnt[v,s,0] - cnt[v,s,3]) - (cnt[v,s1,6]-cnt[v,s1,4]) + (cnt[v,s2,6]-cnt[v,s2,4])
            out.append((v, s, int(y), r))
    return out

if __name__ == "__main__":
    dom = discretize(rect_spec(6.5, 7.2))
    print(dom, "interior verts:", int(dom.interior.sum()))
    sums, cnt = enumerate_counts(dom)
    res = residuals(dom, cnt)
    inter = dom.interior
    bad_int = [(v,s,y,r) for v,s,y,r in res if r != 0 and inter[v] and inter[y]]
    bad_x = [(v,s,y,r) for v,s,y,r in res if r != 0 and inter[v]]
    bad_all = [(v,s,y,r) for v,s,y,r in res if r != 0]
    print("edges checked:", len(res))
    print("nonzero residual, x&y interior:", len(bad_int))
    print("nonzero residual, x interior:", len(bad_x))
    print("nonzero residual, any:", len(bad_all))
    for v,s,y,r in bad_int[:20]:
        print("  INT v=%d s=%d y=%d resid=%d  pos=%s" % (v,s,y,r,dom.vert_pos[v]))
    for v,s,y,r in bad_x[:10]:
        print("  X   v=%d s=%d y=%d resid=%d" % (v,s,y,r))
    np.save("dev/sums11.npy", sums); np.save("dev/cnt11.npy", cnt)
