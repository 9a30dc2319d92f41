"""Run brute literal observables over all configs; test per-config CR identity
and compare with the engine."""
import sys, time
import numpy as np
from hexperc.hexlattice import *
from hexperc import observables as obs
from hexperc import percolation as perc
import importlib.util
spec_ = importlib.util.spec_from_file_location("brute", "dev/brute.py")
brute = importlib.util.module_from_spec(spec_); spec_.loader.exec_module(brute)

def rect_spec(w, h, delta=1.0):
    poly = PolygonSpec((complex(0,0), complex(w,0), complex(w,h), complex(0,h)))
    per = 2*(w+h)
    marks = Marks(l=(2*w+h+h/2)/per, r=(w+h/2)/per, w=(w+h+w/2)/per)
    return DomainSpec(poly, marks, delta)

dom = discretize(rect_spec(6.5, 7.2))
nf, nv = dom.nf, dom.nv
nc = 1 << nf
t0=time.time()
NL = np.zeros((nc, nv), np.int8); NR = np.zeros((nc, nv), np.int8)
QU = np.zeros((nc, nv), bool);    QD = np.zeros((nc, nv), bool)
eNL = np.zeros((nc, nv), np.int8); eNR = np.zeros((nc, nv), np.int8)
eQU = np.zeros((nc, nv), bool);    eQD = np.zeros((nc, nv), bool)
for code in range(nc):
    colors = perc.coloring_from_index(code, nf)
    NL[code] = brute.n_event(dom, colors, "left")
    NR[code] = brute.n_event(dom, colors, "right")
    QU[code] = brute.q_event(dom, colors, "d", "u")
    QD[code] = brute.q_event(dom, colors, "u", "d")
    sv = obs.evaluate(dom, colors)
    eNL[code] = sv.nl; eNR[code] = sv.nr; eQU[code] = sv.qu; eQD[code] = sv.qd
    if code % 256 == 0: print("  %d/%d  %.1fs" % (code, nc, time.time()-t0), flush=True)
np.savez_compressed("dev/brute11.npz", NL=NL, NR=NR, QU=QU, QD=QD,
                    eNL=eNL, eNR=eNR, eQU=eQU, eQD=eQD)
print("done %.1fs" % (time.time()-t0))
