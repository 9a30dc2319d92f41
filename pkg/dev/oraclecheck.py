"""Smoke-test exact_oracle on the 11-face dev domain.

1. enumerate_exact vs a brute python loop over config_observables.
2. gray=True and workers=3 produce identical reports.
3. definitional_report over a subsample of colorings (all four claims).
"""
import sys
import io
import numpy as np
from fractions import Fraction
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


def main():
    dom = discretize(rect_spec(6.5, 7.2))
    nf, nv = dom.nf, dom.nv
    nc = 1 << nf
    print("domain: F=%d V=%d configs=%d" % (nf, nv, nc))

    rep = eo.enumerate_exact(dom)
    rep_g = eo.enumerate_exact(dom, gray=True)
    rep_w = eo.enumerate_exact(dom, workers=3)
    rep_gw = eo.enumerate_exact(dom, gray=True, workers=3)
    for other, name in ((rep_g, "gray"), (rep_w, "workers"), (rep_gw, "gray+workers")):
        same = (np.array_equal(rep.sum_nl, other.sum_nl)
                and np.array_equal(rep.sum_nr, other.sum_nr)
                and np.array_equal(rep.cnt_qu, other.cnt_qu)
                and np.array_equal(rep.cnt_qd, other.cnt_qd)
                and np.array_equal(rep.ecnt, other.ecnt))
        print("report identical (%s): %s" % (name, same))
        if not same:
            sys.exit(1)

    # brute reference via the public per-config API
    s_nl = np.zeros(nv, np.int64)
    s_nr = np.zeros(nv, np.int64)
    c_qu = np.zeros(nv, np.int64)
    c_qd = np.zeros(nv, np.int64)
    ecnt = np.zeros((len(rep.edges), 8), np.int64)
    for code in range(nc):
        colors = perc.coloring_from_index(code, nf)
        nl, nr, qu, qd = obs.config_observables(dom, colors)
        s_nl += nl
        s_nr += nr
        c_qu += qu
        c_qd += qd
        for i, (x, s, y) in enumerate(rep.edges):
            dl = nl[y] - nl[x]
            dr = nr[y] - nr[x]
            if dl == 1:
                ecnt[i, 0] += 1
            elif dl == -1:
                ecnt[i, 1] += 1
            if dr == 1:
                ecnt[i, 2] += 1
            elif dr == -1:
                ecnt[i, 3] += 1
            if qu[y] and not qu[x]:
                ecnt[i, 4] += 1
            elif qu[x] and not qu[y]:
                ecnt[i, 5] += 1
            if qd[y] and not qd[x]:
                ecnt[i, 6] += 1
            elif qd[x] and not qd[y]:
                ecnt[i, 7] += 1
    # config_observables returns nl/nr relative to wv; the report accessors do too
    wv = int(dom.wv)
    ok_nl = all(Fraction(int(s_nl[v]), nc) == rep.h_l(v) for v in range(nv))
    ok_nr = all(Fraction(int(s_nr[v]), nc) == rep.h_r(v) for v in range(nv))
    ok_qu = np.array_equal(c_qu, rep.cnt_qu)
    ok_qd = np.array_equal(c_qd, rep.cnt_qd)
    ok_e = np.array_equal(ecnt, rep.ecnt)
    print("brute vs report: nl=%s nr=%s qu=%s qd=%s edges=%s"
          % (ok_nl, ok_nr, ok_qu, ok_qd, ok_e))
    if not (ok_nl and ok_nr and ok_qu and ok_qd and ok_e):
        sys.exit(1)

    # serialization smoke
    buf = io.StringIO()
    rep.write_text(buf)
    print("serialized %d lines" % buf.getvalue().count("\n"))

    # H^l == H^r exact?
    print("H^l == H^r exact:", rep.hl_equals_hr())

    # definitional checks on a subsample (every 8th code keeps it quick)
    codes = range(0, nc, 8)
    out = eo.definitional_report(dom, codes=codes)
    for claim, d in out.items():
        print("claim %-13s configs=%d failures=%d ambiguous=%d strict_disagree=%d"
              % (claim, d["configs"], d["failures"], d["ambiguous"],
                 d["strict_disagree"]))
        if d["failures"]:
            sys.exit(1)
    print("ALL OK")


if __name__ == "__main__":
    main()
