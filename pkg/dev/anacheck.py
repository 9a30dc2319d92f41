"""Validate analysis.py on the 11-face dev domain.

1. geometric identity residual == (0,0) at every admissible edge
2. new PatternEvaluator vs frozen dev family indicators (420 arrays)
3. chain equalities from exact enumeration:
   jump == L1 == L2 == L3 for dl_plus / dr_minus at every edge;
   Q-line sums vs rotated-edge jump probabilities (count mismatches)
4. cr_scan_exact: every residual exactly 0
5. morera_sum exactness: constant and position fields on a contour
6. interior_dual_sum with exact derivative inputs (report value)
7. MC cr residual at one edge within 4 SE of 0; jump_counts_mc vs
   exact report proportions
"""
import sys
import numpy as np
from fractions import Fraction
from hexperc.hexlattice import PolygonSpec, Marks, DomainSpec, discretize, OrientedEdge
from hexperc import percolation as perc
from hexperc import observables as obs
from hexperc import exact_oracle as eo
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
for i, nm in enumerate(["T2dY", "T2dZ", "T2dW"]):
    FAM2PAT[nm] = ana.QSUMS["du_tau2"][i]
for i, nm in enumerate(["T2uY", "T2uZ", "T2uW"]):
    FAM2PAT[nm] = ana.QSUMS["dd_tau2"][i]
# Tu* froze the pre-flip trichotomy of the d-event derivative along the
# 240-degree edge: first term equals the displayed one, the other two
# are the unflipped forms (black face connected to both arcs).
FAM2PAT["TuY"] = ana.QSUMS["dd_tau"][0]
FAM2PAT["TuZ"] = ana.TriplePattern(("w", "ud"), ("b", "ud"), ("w", "d"))
FAM2PAT["TuW"] = ana.TriplePattern(("w", "d"), ("b", "ud"), ("w", "ud"))
FAM2PAT["Br"] = ana.CHAINS["dl_plus"][0][0]
FAM2PAT["Bl"] = ana.CHAINS["dr_minus"][0][0]


def main():
    dom = discretize(rect_spec(6.5, 7.2))
    nf = dom.nf
    nc = 1 << nf

    # 1. geometric identity
    edges = ana.admissible_edges(dom)
    bad = [e for e in edges if ana.edge_identity_residual(dom, e) != (0, 0)]
    print("1. geometric identity nonzero at %d/%d edges" % (len(bad), len(edges)))
    if bad:
        sys.exit(1)

    # 2. evaluator vs frozen families
    fam = np.load("dev/fam11.npz")
    keys = list(fam.keys())
    edset = sorted(set((int(k.split("_")[0]), int(k.split("_")[1])) for k in keys))
    print("   frozen edges: %d, families: %d" % (len(edset), len(keys)))
    mism = 0
    for code in range(nc):
        colors = perc.coloring_from_index(code, nf)
        ev = ana.PatternEvaluator(dom, colors)
        for (x, s) in edset:
            e = OrientedEdge(x, int(dom.vert_nbr[x, s]))
            faces = ana.edge_fan(dom, e)
            for nm, pat in FAM2PAT.items():
                key = "%d_%d_%s" % (x, s, nm)
                if key not in fam:
                    continue
                if bool(ev.triple(faces, pat)) != bool(fam[key][code]):
                    mism += 1
    print("2. evaluator vs frozen indicators: %d mismatches" % mism)
    if mism:
        sys.exit(1)

    # 2b. trichotomy: pre-flip terms partition the positive d-jump
    # along the 240-degree rotated edge, per configuration
    tri_mism = 0
    tri_overlap = 0
    neg_jump = 0
    jump_cnt = {es: 0 for es in edset}
    for code in range(nc):
        colors = perc.coloring_from_index(code, nf)
        _, _, _, qd = obs.config_observables(dom, colors)
        for (x, s) in edset:
            e = OrientedEdge(x, int(dom.vert_nbr[x, s]))
            h = dom.rotate_edge(e, 2).head
            jump = bool(qd[h]) and not bool(qd[x])
            if jump:
                jump_cnt[(x, s)] += 1
            if bool(qd[x]) and not bool(qd[h]):
                neg_jump += 1
            bits = [bool(fam["%d_%d_%s" % (x, s, nm)][code])
                    for nm in ("TuY", "TuZ", "TuW")]
            if sum(bits) > 1:
                tri_overlap += 1
            if jump != any(bits):
                tri_mism += 1
    print("2b. trichotomy-vs-jump mismatches: %d; overlaps: %d; "
          "negative jumps: %d" % (tri_mism, tri_overlap, neg_jump))
    tri_eq = disp_eq = 0
    for (x, s) in edset:
        tri = sum(int(fam["%d_%d_%s" % (x, s, nm)].sum())
                  for nm in ("TuY", "TuZ", "TuW"))
        disp = sum(int(fam["%d_%d_%s" % (x, s, nm)].sum())
                   for nm in ("TuY", "T2dY", "TdW"))
        if tri == jump_cnt[(x, s)]:
            tri_eq += 1
        if disp == jump_cnt[(x, s)]:
            disp_eq += 1
    print("    P equalities over %d edges: trichotomy==jump at %d, "
          "display==jump at %d" % (len(edset), tri_eq, disp_eq))

    # 3. chain equalities by enumeration
    eprobs = ana.expansion_probs(dom)
    rep = eo.enumerate_exact(dom)
    chain_bad = 0
    qline_bad = 0
    qline_tot = 0
    for e, ep in eprobs.items():
        for name in ("dl_plus", "dr_minus"):
            j = ep.jumps[name]
            sums = [ep.chain_level_sum(name, li) for li in range(3)]
            if not (j == sums[0] == sums[1] == sums[2]):
                chain_bad += 1
        for name in ("du_tau", "dd_tau", "du_tau2", "dd_tau2"):
            qline_tot += 1
            if ep.jumps[name] != ep.qsum(name):
                qline_bad += 1
    print("3. N-chain equality failures: %d/%d edges" % (chain_bad, len(eprobs)))
    print("   Q-line jump-vs-sum mismatches: %d/%d lines" % (qline_bad, qline_tot))
    if chain_bad:
        sys.exit(1)

    # 4. CR residual exact zero
    rows = ana.cr_scan_exact(dom)
    nz = [(e, r) for e, r in rows if r != 0]
    print("4. cr_scan_exact nonzero at %d/%d edges" % (len(nz), len(rows)))
    if nz:
        print("   e.g.", nz[:3])
        sys.exit(1)

    # 5. morera exactness on a small contour
    ctr = dom.vert_pos[int(dom.nv // 2)]
    try:
        contour = ana.discretize_contour(dom, ana.circle_points(ctr, 2.2, 720))
    except Exception as ex:
        print("   contour construction failed:", ex)
        contour = None
    if contour:
        const = ana.morera_sum(dom, contour, np.full(dom.nv, 1.7 - 0.4j))
        posf = ana.morera_sum(dom, contour, np.asarray(dom.vert_pos, complex))
        print("5. morera const=%.3g position=%.3g (len %d)"
              % (abs(const), abs(posf), len(contour)))
        if abs(const) > 1e-12 or abs(posf) > 1e-12:
            sys.exit(1)

    # 6. interior dual sum experiments with exact inputs
    dplus = ana.field_dplus_exact(rep)
    tot_all = 0j
    for e in edges:
        tot_all += np.conj(dom.edge_vec(e)) * dplus(e)
    print("6. dual sum over ALL admissible oriented edges: |%.6g|" % abs(tot_all))
    if contour:
        ids = ana.interior_dual_sum(dom, contour, dplus)
        print("   dual sum inside contour: |%.6g|" % abs(ids))

    # 7. MC checks
    e0 = edges[0]
    vals = ana.cr_sample_residuals(dom, e0, seed=7, samples=4000)
    m = vals.mean()
    se = vals.std(ddof=1) / np.sqrt(len(vals))
    print("7. MC cr residual %.4f +- %.4f (|z|=%.2f)" % (m, se, abs(m) / se))
    cnt = ana.jump_counts_mc(dom, [e0], seed=11, samples=20000, workers=2)
    x, s = e0.tail, dom.edge_slot(e0)
    worst = 0.0
    for tag, sign in ana.JUMP_COLS:
        p = float(rep.jump_prob(x, s, tag, sign))
        phat = cnt[0, ana.JUMP_COLS[(tag, sign)]] / 20000.0
        sehat = max(np.sqrt(p * (1 - p) / 20000.0), 1e-9)
        worst = max(worst, abs(phat - p) / sehat)
    print("   jump_counts_mc worst |z| over 8 events: %.2f" % worst)
    if abs(m) > 4 * se or worst > 4.5:
        sys.exit(1)
    print("ALL OK")


if __name__ == "__main__":
    main()
