"""Validate the rewritten observables engine on the 11-face dev domain.

Checks:
 1. N-side: per-config jump events at the 12 admissible edges equal the
    stored connection-family indicators (Br / Bl) exactly.
 2. Q-side invariants: color-negation co-exclusion at every vertex;
    exact on-arc saturation P[Q^u] = 2^-(#incident faces) at vertices
    strictly inside arc u (mirror for d); H^u, H^d <= 1/2.
 3. event_qu/event_qd (python path) parity with the batch kernel.
 4. accumulate_field determinism + merge identity + sampler parity.
 5. trace ops smoke: traces/region_index/n_left run clean; count
    engine-vs-trace disagreements; neighbor jumps of engine nl/nr <= 1.
"""
import sys
import numpy as np
from hexperc.hexlattice import PolygonSpec, Marks, DomainSpec, discretize
from hexperc import percolation as perc
from hexperc import observables as obs


def rect_spec(w, h, delta=1.0):
    poly = PolygonSpec((complex(0, 0), complex(w, 0), complex(w, h), complex(0, h)))
    per = 2 * (w + h)
    marks = Marks(l=(2 * w + h + h / 2) / per, r=(w + h / 2) / per,
                  w=(w + h + w / 2) / per)
    return DomainSpec(poly, marks, delta)


def main():
    dom = discretize(rect_spec(6.5, 7.2))
    nf, nv = dom.nf, dom.nv
    print("domain: F=%d V=%d" % (nf, nv))
    nc = 1 << nf

    NL = np.zeros((nc, nv), np.int32)
    NR = np.zeros((nc, nv), np.int32)
    QU = np.zeros((nc, nv), bool)
    QD = np.zeros((nc, nv), bool)
    for code in range(nc):
        colors = perc.coloring_from_index(code, nf)
        nl, nr, qu, qd = obs.config_observables(dom, colors)
        NL[code], NR[code], QU[code], QD[code] = nl, nr, qu, qd

    # ---- 1. family equality at admissible edges ----
    fam = np.load("/root/pkg/dev/fam11.npz")
    bad = 0
    edges = sorted({tuple(map(int, k.split("_")[:2])) for k in fam.files})
    for (x, s) in edges:
        y = int(dom.vert_nbr[x, s])
        br = fam["%d_%d_Br" % (x, s)].astype(bool)
        bl = fam["%d_%d_Bl" % (x, s)].astype(bool)
        al = (NL[:, y] - NL[:, x]) == 1
        ar = (NR[:, x] - NR[:, y]) == 1
        mb = int((al != br).sum())
        ma = int((ar != bl).sum())
        bad += mb + ma
        if mb or ma:
            print("edge (%d,%d)->%d: Br mismatch %d, Bl mismatch %d" % (x, s, y, mb, ma))
    print("1. family equality: %d mismatches over %d edges" % (bad, len(edges)))

    # ---- 2. Q invariants ----
    comp_code = (nc - 1) ^ np.arange(nc)
    co_u = int((QU & QU[comp_code]).sum())
    co_d = int((QD & QD[comp_code]).sum())
    print("2a. co-exclusion violations: qu %d, qd %d" % (co_u, co_d))
    arc = dom.arc_of_edge
    C = len(dom.cycle)
    sat_bad = 0
    for p in range(C):
        v = int(dom.cycle[p])
        e_prev, e_next = (p - 1) % C, p
        inc = [int(f) for f in dom.vert_sector[v] if f >= 0]
        if arc[e_prev] == 0 and arc[e_next] == 0 and v not in (dom.lv, dom.rv):
            want = nc >> len(inc)
            got = int(QU[:, v].sum())
            if got != want:
                sat_bad += 1
                print("   arc-u vertex %d: sum QU=%d expected %d" % (v, got, want))
        if arc[e_prev] == 1 and arc[e_next] == 1 and v not in (dom.lv, dom.rv):
            want = nc >> len(inc)
            got = int(QD[:, v].sum())
            if got != want:
                sat_bad += 1
                print("   arc-d vertex %d: sum QD=%d expected %d" % (v, got, want))
    print("2b. on-arc saturation mismatches: %d" % sat_bad)
    print("2c. max H^u=%.4f max H^d=%.4f (<=0.5 expected)"
          % (QU.sum(0).max() / nc, QD.sum(0).max() / nc))

    # ---- 3. python event parity ----
    rng = np.random.default_rng(7)
    mism = 0
    for code in rng.integers(0, nc, 64):
        colors = perc.coloring_from_index(int(code), nf)
        labels = perc.label_clusters(dom, colors, True)
        for v in range(nv):
            if obs.event_qu(v, dom, labels) != bool(QU[code, v]):
                mism += 1
            if obs.event_qd(v, dom, labels) != bool(QD[code, v]):
                mism += 1
    print("3. python-vs-kernel event mismatches: %d" % mism)

    # ---- 4. accumulate_field determinism / merge / sampler parity ----
    f1 = obs.accumulate_field(dom, seed=42, count=400)
    f2 = obs.accumulate_field(dom, seed=42, count=400)
    same = all(
        np.array_equal(getattr(f1, a), getattr(f2, a))
        for a in ("s_nl", "s_nl2", "s_nr", "s_nr2", "s_nlnr", "c_qu", "c_qd", "c_quqd")
    )
    fa = obs.accumulate_field(dom, seed=42, count=150)
    fb = obs.accumulate_field(dom, seed=42, count=250, start=150)
    fm = fa.merge(fb)
    mergeok = all(
        np.array_equal(getattr(fm, a), getattr(f1, a))
        for a in ("s_nl", "s_nl2", "s_nr", "s_nr2", "s_nlnr", "c_qu", "c_qd", "c_quqd")
    ) and fm.n == f1.n
    fw = obs.accumulate_field(dom, seed=42, count=400, workers=4)
    workok = np.array_equal(fw.s_nl, f1.s_nl) and np.array_equal(fw.c_qu, f1.c_qu)
    # sampler parity: kernel colors vs percolation.sample_coloring
    okc = True
    for idx in (0, 1, 17, 399):
        ref = perc.sample_coloring(nf, 42, idx)
        got = np.empty(nf, np.uint8)
        obs._sample_colors_into(np.uint64(42), np.uint64(idx), nf, got)
        if not np.array_equal(ref, got.astype(bool)):
            okc = False
    print("4. determinism=%s merge=%s workers=%s sampler_parity=%s"
          % (same, mergeok, workok, okc))

    # ---- 5. trace ops ----
    diff_nl = diff_nr = 0
    checked = 0
    jump_bad = 0
    for code in range(0, nc, 3):
        colors = perc.coloring_from_index(code, nf)
        labels = perc.label_clusters(dom, colors, True)
        ids = obs.crossing_clusters(dom, labels)
        lt = [obs.trace_boundary(dom, labels, c, "left") for c in ids]
        rt = [obs.trace_boundary(dom, labels, c, "right") for c in ids]
        ril = obs.region_index(dom, lt)
        rir = obs.region_index(dom, rt)
        for v in range(nv):
            if obs.n_left(dom, ril, v) != NL[code, v]:
                diff_nl += 1
            if obs.n_right(dom, rir, v) != NR[code, v]:
                diff_nr += 1
        checked += nv
        for v in range(nv):
            for s in range(3):
                y = int(dom.vert_nbr[v, s])
                if y < 0:
                    continue
                if abs(int(NL[code, y]) - int(NL[code, v])) > 1:
                    jump_bad += 1
                if abs(int(NR[code, y]) - int(NR[code, v])) > 1:
                    jump_bad += 1
    print("5. trace-vs-engine diffs: nl %d, nr %d of %d vertex evals; "
          "|jump|>1 count %d" % (diff_nl, diff_nr, checked, jump_bad))


if __name__ == "__main__":
    main()
