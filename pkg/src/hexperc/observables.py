"""Per-configuration vertex observables and streaming field accumulation.

Four quantities are attached to every lattice vertex z of a discretized
two-marked-arc domain:

* ``N^l(z)`` / ``N^r(z)`` -- signed counts of oriented interfaces between
  top-bottom crossing clusters passing between z and the reference mark
  w.  They are computed from a single region decomposition of the face
  set: order all crossing clusters (of both colors) from the l corner to
  the r corner, cut the domain along the contact seams of consecutive
  clusters, and index the resulting regions 0..m-1.  A vertex takes the
  minimum incident region index for the left count and the maximum for
  the right count, so an interface running through a vertex is
  attributed to its west side for ``N^l`` and to its east side for
  ``N^r``.  ``N^l(z)`` is the number of black-west seams strictly west
  of z minus the same count at w; ``N^r`` is the white-west analogue.

* ``Q^u(z)`` / ``Q^d(z)`` -- indicator events: z is fenced off from the
  side marks, against the bottom (resp. top) arc, by white clusters
  anchored on the top (resp. bottom) arc.  ``Q^u`` holds when, after
  removing every white cluster touching arc u, each face component
  around z meets the domain boundary only strictly inside arc d (no
  arc-u edges, no corner faces); a vertex entirely surrounded by the
  removed clusters counts as engulfed (event true).

The module also provides the literal boundary-trace machinery
(``trace_boundary`` / ``region_index`` / ``n_left`` / ``n_right``):
side-extremal simple face paths through individual white crossing
clusters and the separation count they induce.  The two constructions
agree in the scaling limit but can differ on configurations where a
white crossing cluster has no black crossing neighbour; both are kept
because the seam-based counts satisfy exact finite-mesh difference
identities while the trace-based counts follow the literal separation
bookkeeping.  ``exact_oracle`` measures the disagreement.

All per-sample work is expressed over flat integer arrays so the hot
path can be jitted with numba when available; the pure-Python versions
of the kernels remain importable for cross-checks (set
``HEXPERC_PURE=1`` before import to disable compilation).
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import OverlappingTraces
from .hexlattice import DiscreteDomain
from .percolation import ClusterLabels

__all__ = [
    "BoundaryTrace",
    "RegionIndex",
    "ObservableField",
    "crossing_clusters",
    "trace_boundary",
    "region_index",
    "n_left",
    "n_right",
    "event_qu",
    "event_qd",
    "config_observables",
    "accumulate_field",
]


def _identity(f):
    return f


if os.environ.get("HEXPERC_PURE"):
    _jit = _identity
else:
    try:
        from numba import njit as _numba_njit

        def _jit(f):
            return _numba_njit(cache=True, nogil=True)(f)

    except ImportError:  # pragma: no cover - numba is a normal dependency
        _jit = _identity


# ----------------------------------------------------------------------
# jitted kernels (pure functions of flat arrays)
# ----------------------------------------------------------------------


def _mix64(z):
    # splitmix64 finalizer; must match percolation._mix bit for bit
    z = ((z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)) & np.uint64(
        0xFFFFFFFFFFFFFFFF
    )
    z = ((z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)) & np.uint64(
        0xFFFFFFFFFFFFFFFF
    )
    return z ^ (z >> np.uint64(31))


def _sample_colors_into(seed, index, nf, out):
    gold = np.uint64(0x9E3779B97F4A7C15)
    base = _mix64(seed + gold * (index + np.uint64(1)))
    for f in range(nf):
        u = _mix64(base + gold * (np.uint64(f) + np.uint64(1)))
        out[f] = np.uint8(u >> np.uint64(63))


def _label_color(colors, want, adj, labels, touch_u, touch_d, nbu, nbd, stack):
    """Label connected components of faces with colors[f] == want.

    labels is filled with -1 elsewhere; returns the component count.
    touch_u / touch_d receive per-component arc-contact flags (length-nf
    scratch arrays; entries 0..k-1 are valid on return).
    """
    nf = colors.shape[0]
    for f in range(nf):
        labels[f] = -1
    k = 0
    for f0 in range(nf):
        if colors[f0] != want or labels[f0] >= 0:
            continue
        tu = np.uint8(0)
        td = np.uint8(0)
        top = 0
        stack[top] = f0
        top += 1
        labels[f0] = k
        while top > 0:
            top -= 1
            f = stack[top]
            if nbu[f] > 0:
                tu = np.uint8(1)
            if nbd[f] > 0:
                td = np.uint8(1)
            for j in range(6):
                g = adj[f, j]
                if g >= 0 and colors[g] == want and labels[g] < 0:
                    labels[g] = k
                    stack[top] = g
                    top += 1
        touch_u[k] = tu
        touch_d[k] = td
        k += 1
    return k


def _chain_and_regions(
    colors,
    adj,
    arcu_inner,
    wlab,
    wtu,
    wtd,
    blab,
    btu,
    btd,
    chain_color,
    chain_pos_w,
    chain_pos_b,
    region,
    stack,
):
    """Order both-color crossing clusters from l to r and index regions.

    Returns the chain length m (>= 0), or -1 if the color-alternation
    invariant is violated (never expected on a valid domain).  On return
    region[f] holds, for every face, the chain position of the unique
    crossing cluster on the same side of all consecutive-pair seams.

    The flood needs no explicit seam test: all chain-cluster faces are
    seeded up front, so a seam edge (between faces of two different
    chain clusters) is never traversed, and a face outside the chain is
    adjacent to faces of at most one chain cluster -- a face adjacent to
    two of them would either merge two same-color clusters or provide a
    monochromatic bypass around the separating interface between
    consecutive ones.
    """
    nf = colors.shape[0]
    for f in range(nf):
        chain_pos_w[f] = -1
        chain_pos_b[f] = -1
    m = 0
    for t in range(arcu_inner.shape[0]):
        f = arcu_inner[t]
        if colors[f] == 1:
            c = wlab[f]
            if wtu[c] == 1 and wtd[c] == 1 and chain_pos_w[c] < 0:
                chain_pos_w[c] = m
                chain_color[m] = 1
                m += 1
        else:
            c = blab[f]
            if btu[c] == 1 and btd[c] == 1 and chain_pos_b[c] < 0:
                chain_pos_b[c] = m
                chain_color[m] = 0
                m += 1
    for i in range(1, m):
        if chain_color[i] == chain_color[i - 1]:
            return -1
    if m == 0:
        for f in range(nf):
            region[f] = 0
        return 0
    top = 0
    for f in range(nf):
        if colors[f] == 1:
            region[f] = chain_pos_w[wlab[f]]
        else:
            region[f] = chain_pos_b[blab[f]]
        if region[f] >= 0:
            stack[top] = f
            top += 1
    while top > 0:
        top -= 1
        f = stack[top]
        rf = region[f]
        for j in range(6):
            g = adj[f, j]
            if g < 0 or region[g] >= 0:
                continue
            region[g] = rf
            stack[top] = g
            top += 1
    for f in range(nf):
        if region[f] < 0:
            region[f] = 0
    return m


def _vertex_counts(vert_sector, region, chain_color, m, kl, kr):
    """Per-vertex seam counts.

    kl[v] = number of black-west seams strictly west of v's minimum
    incident region; kr[v] = number of white-west seams strictly west of
    the maximum.  Seam i sits between regions i and i+1 and is
    black-west exactly when chain cluster i is black.
    """
    nv = vert_sector.shape[0]
    size = m if m > 0 else 1
    nbw = np.zeros(size, dtype=np.int32)
    nwb = np.zeros(size, dtype=np.int32)
    for t in range(1, m):
        nbw[t] = nbw[t - 1] + (1 if chain_color[t - 1] == 0 else 0)
        nwb[t] = nwb[t - 1] + (1 if chain_color[t - 1] == 1 else 0)
    for v in range(nv):
        mn = 2147483647
        mx = -1
        for j in range(3):
            f = vert_sector[v, j]
            if f < 0:
                continue
            r = region[f]
            if r < mn:
                mn = r
            if r > mx:
                mx = r
        if mx < 0:
            kl[v] = 0
            kr[v] = 0
        else:
            kl[v] = nbw[mn]
            kr[v] = nwb[mx]


def _q_field(colors, adj, wlab, wtouch, vert_sector, taintf, comp, tainted, stack, q):
    """Fencing criterion for one arc, all vertices at once.

    wtouch flags white clusters anchored on the fencing arc; taintf
    marks faces whose boundary contact lies outside the allowed
    opposite arc.  q[v] = 1 iff every incident face is either in an
    anchored white cluster or in a component (after removing those
    clusters) containing no tainted face.
    """
    nf = colors.shape[0]
    nv = vert_sector.shape[0]
    for f in range(nf):
        comp[f] = -1
    k = 0
    for f0 in range(nf):
        if comp[f0] >= 0:
            continue
        if colors[f0] == 1 and wtouch[wlab[f0]] == 1:
            continue
        bad = np.uint8(0)
        top = 0
        stack[top] = f0
        top += 1
        comp[f0] = k
        while top > 0:
            top -= 1
            f = stack[top]
            if taintf[f] == 1:
                bad = np.uint8(1)
            for j in range(6):
                g = adj[f, j]
                if g < 0 or comp[g] >= 0:
                    continue
                if colors[g] == 1 and wtouch[wlab[g]] == 1:
                    continue
                comp[g] = k
                stack[top] = g
                top += 1
        tainted[k] = bad
        k += 1
    for v in range(nv):
        ok = np.uint8(1)
        for j in range(3):
            f = vert_sector[v, j]
            if f < 0:
                continue
            if colors[f] == 1 and wtouch[wlab[f]] == 1:
                continue
            if tainted[comp[f]] == 1:
                ok = np.uint8(0)
                break
        q[v] = ok


def _batch_accumulate(
    seed,
    start,
    count,
    adj,
    arcu_inner,
    vert_sector,
    wv,
    nbu,
    nbd,
    taint_u,
    taint_d,
    s_nl,
    s_nl2,
    s_nr,
    s_nr2,
    s_nlnr,
    c_qu,
    c_qd,
    c_quqd,
):
    """Sample ``count`` colorings starting at index ``start`` and add
    per-vertex integer power sums in place.  Returns -1 if any sample
    violates the chain alternation invariant, else 0."""
    nf = adj.shape[0]
    nv = vert_sector.shape[0]
    colors = np.empty(nf, dtype=np.uint8)
    wlab = np.empty(nf, dtype=np.int32)
    blab = np.empty(nf, dtype=np.int32)
    wtu = np.empty(nf, dtype=np.uint8)
    wtd = np.empty(nf, dtype=np.uint8)
    btu = np.empty(nf, dtype=np.uint8)
    btd = np.empty(nf, dtype=np.uint8)
    chain_color = np.empty(nf + 1, dtype=np.uint8)
    chain_pos_w = np.empty(nf, dtype=np.int32)
    chain_pos_b = np.empty(nf, dtype=np.int32)
    region = np.empty(nf, dtype=np.int32)
    comp = np.empty(nf, dtype=np.int32)
    tainted = np.empty(nf, dtype=np.uint8)
    stack = np.empty(nf, dtype=np.int32)
    kl = np.empty(nv, dtype=np.int32)
    kr = np.empty(nv, dtype=np.int32)
    qu = np.empty(nv, dtype=np.uint8)
    qd = np.empty(nv, dtype=np.uint8)
    for s in range(count):
        _sample_colors_into(seed, start + np.uint64(s), nf, colors)
        _label_color(colors, np.uint8(1), adj, wlab, wtu, wtd, nbu, nbd, stack)
        _label_color(colors, np.uint8(0), adj, blab, btu, btd, nbu, nbd, stack)
        m = _chain_and_regions(
            colors, adj, arcu_inner, wlab, wtu, wtd, blab, btu, btd,
            chain_color, chain_pos_w, chain_pos_b, region, stack,
        )
        if m < 0:
            return -1
        _vertex_counts(vert_sector, region, chain_color, m, kl, kr)
        _q_field(colors, adj, wlab, wtu, vert_sector, taint_u, comp, tainted, stack, qu)
        _q_field(colors, adj, wlab, wtd, vert_sector, taint_d, comp, tainted, stack, qd)
        klw = np.int64(kl[wv])
        krw = np.int64(kr[wv])
        for v in range(nv):
            a = np.int64(kl[v]) - klw
            b = np.int64(kr[v]) - krw
            s_nl[v] += a
            s_nl2[v] += a * a
            s_nr[v] += b
            s_nr2[v] += b * b
            s_nlnr[v] += a * b
            c_qu[v] += qu[v]
            c_qd[v] += qd[v]
            c_quqd[v] += qu[v] * qd[v]
    return 0


_mix64 = _jit(_mix64)
_sample_colors_into = _jit(_sample_colors_into)
_label_color = _jit(_label_color)
_chain_and_regions = _jit(_chain_and_regions)
_vertex_counts = _jit(_vertex_counts)
_q_field = _jit(_q_field)
_batch_accumulate = _jit(_batch_accumulate)


# ----------------------------------------------------------------------
# per-domain kernel inputs
# ----------------------------------------------------------------------


def _kernel_arrays(dom: DiscreteDomain):
    """Flat arrays the kernels need, cached on the domain object."""
    cached = getattr(dom, "_obs_arrays", None)
    if cached is not None:
        return cached
    adj = np.ascontiguousarray(dom.face_adj.astype(np.int32))
    # inner faces along arc u walked from the l corner toward r
    arcu_inner = np.ascontiguousarray(
        dom.cyc_inner_face[np.asarray(dom.arcu_edges)[::-1]].astype(np.int32)
    )
    vs = np.ascontiguousarray(dom.vert_sector.astype(np.int32))
    nbu = np.ascontiguousarray(dom.face_nb_u.astype(np.int32))
    nbd = np.ascontiguousarray(dom.face_nb_d.astype(np.int32))
    mark = np.zeros(dom.nf, dtype=np.uint8)
    mark[dom.lv_faces] = 1
    mark[dom.rv_faces] = 1
    # a component is tainted for Q^u when it reaches arc u or a corner;
    # contact strictly inside arc d is the only allowed kind
    taint_u = ((nbu > 0) | (mark == 1)).astype(np.uint8)
    taint_d = ((nbd > 0) | (mark == 1)).astype(np.uint8)
    out = (adj, arcu_inner, vs, int(dom.wv), nbu, nbd, taint_u, taint_d)
    dom._obs_arrays = out
    return out


def config_observables(dom: DiscreteDomain, colors: np.ndarray):
    """Evaluate (N^l, N^r, Q^u, Q^d) at every vertex for one coloring.

    Same code path as the sampling loop; the exact enumeration oracle
    calls this directly.
    """
    adj, arcu_inner, vs, wv, nbu, nbd, taint_u, taint_d = _kernel_arrays(dom)
    nf, nv = dom.nf, dom.nv
    col = np.ascontiguousarray(np.asarray(colors).astype(np.uint8))
    wlab = np.empty(nf, dtype=np.int32)
    blab = np.empty(nf, dtype=np.int32)
    wtu = np.empty(nf, dtype=np.uint8)
    wtd = np.empty(nf, dtype=np.uint8)
    btu = np.empty(nf, dtype=np.uint8)
    btd = np.empty(nf, dtype=np.uint8)
    chain_color = np.empty(nf + 1, dtype=np.uint8)
    region = np.empty(nf, dtype=np.int32)
    comp = np.empty(nf, dtype=np.int32)
    tainted = np.empty(nf, dtype=np.uint8)
    stack = np.empty(nf, dtype=np.int32)
    kl = np.empty(nv, dtype=np.int32)
    kr = np.empty(nv, dtype=np.int32)
    qu = np.empty(nv, dtype=np.uint8)
    qd = np.empty(nv, dtype=np.uint8)
    _label_color(col, np.uint8(1), adj, wlab, wtu, wtd, nbu, nbd, stack)
    _label_color(col, np.uint8(0), adj, blab, btu, btd, nbu, nbd, stack)
    m = _chain_and_regions(
        col, adj, arcu_inner, wlab, wtu, wtd, blab, btu, btd,
        chain_color, np.empty(nf, dtype=np.int32), np.empty(nf, dtype=np.int32),
        region, stack,
    )
    if m < 0:
        raise RuntimeError("crossing-chain colors failed to alternate")
    _vertex_counts(vs, region, chain_color, m, kl, kr)
    _q_field(col, adj, wlab, wtu, vs, taint_u, comp, tainted, stack, qu)
    _q_field(col, adj, wlab, wtd, vs, taint_d, comp, tainted, stack, qd)
    nl = (kl - kl[wv]).astype(np.int32)
    nr = (kr - kr[wv]).astype(np.int32)
    return nl, nr, qu.astype(bool), qd.astype(bool)


# ----------------------------------------------------------------------
# streaming field
# ----------------------------------------------------------------------


@dataclass
class ObservableField:
    """Per-vertex streaming accumulators for the four observables.

    Integer power sums are stored instead of running means, so merging
    worker results is exact: accumulating a key range in one pass and
    merging partial fields over any split of the same range produce
    bit-identical state.  Means, variances and the complex field are
    derived views.
    """

    nv: int
    n: int = 0
    s_nl: Optional[np.ndarray] = None
    s_nl2: Optional[np.ndarray] = None
    s_nr: Optional[np.ndarray] = None
    s_nr2: Optional[np.ndarray] = None
    s_nlnr: Optional[np.ndarray] = None
    c_qu: Optional[np.ndarray] = None
    c_qd: Optional[np.ndarray] = None
    c_quqd: Optional[np.ndarray] = None

    def __post_init__(self):
        for name in (
            "s_nl", "s_nl2", "s_nr", "s_nr2", "s_nlnr", "c_qu", "c_qd", "c_quqd"
        ):
            if getattr(self, name) is None:
                setattr(self, name, np.zeros(self.nv, dtype=np.int64))

    # -- single-observable views --------------------------------------
    def _sums(self, which: str):
        return {
            "nl": (self.s_nl, self.s_nl2),
            "nr": (self.s_nr, self.s_nr2),
            "qu": (self.c_qu, self.c_qu),
            "qd": (self.c_qd, self.c_qd),
        }[which]

    def mean(self, which: str) -> np.ndarray:
        s, _ = self._sums(which)
        if self.n == 0:
            return np.zeros(self.nv)
        return s / self.n

    def var(self, which: str) -> np.ndarray:
        """Unbiased per-sample variance from the exact power sums."""
        if self.n < 2:
            return np.zeros(self.nv)
        s, s2 = self._sums(which)
        return (s2 - (s / self.n) * s) / (self.n - 1)

    def se(self, which: str) -> np.ndarray:
        return np.sqrt(self.var(which) / max(self.n, 1))

    # -- observable fields --------------------------------------------
    @property
    def hl(self) -> np.ndarray:
        return self.mean("nl")

    @property
    def hr(self) -> np.ndarray:
        return self.mean("nr")

    @property
    def hu(self) -> np.ndarray:
        return self.mean("qu")

    @property
    def hd(self) -> np.ndarray:
        return self.mean("qd")

    @property
    def h(self) -> np.ndarray:
        """Complex field (H^l + H^r) - (sqrt(3)/2) i (H^u - H^d)."""
        return (self.hl + self.hr) - 0.5 * np.sqrt(3.0) * 1j * (self.hu - self.hd)

    def se_re(self) -> np.ndarray:
        """Standard error of Re h = mean(N^l + N^r)."""
        if self.n < 2:
            return np.zeros(self.nv)
        n = self.n
        var_sum = (
            self.s_nl2 + self.s_nr2 + 2.0 * self.s_nlnr
            - (self.s_nl + self.s_nr) ** 2 / n
        ) / (n - 1)
        return np.sqrt(np.maximum(var_sum, 0.0) / n)

    def se_im(self) -> np.ndarray:
        """Standard error of Im h = -(sqrt(3)/2) mean(Q^u - Q^d)."""
        if self.n < 2:
            return np.zeros(self.nv)
        n = self.n
        var_diff = (
            self.c_qu + self.c_qd - 2.0 * self.c_quqd
            - (self.c_qu - self.c_qd) ** 2 / n
        ) / (n - 1)
        return 0.5 * np.sqrt(3.0) * np.sqrt(np.maximum(var_diff, 0.0) / n)

    # -- combination ---------------------------------------------------
    def merge(self, other: "ObservableField") -> "ObservableField":
        if other.nv != self.nv:
            raise ValueError("field sizes differ")
        return ObservableField(
            nv=self.nv,
            n=self.n + other.n,
            s_nl=self.s_nl + other.s_nl,
            s_nl2=self.s_nl2 + other.s_nl2,
            s_nr=self.s_nr + other.s_nr,
            s_nr2=self.s_nr2 + other.s_nr2,
            s_nlnr=self.s_nlnr + other.s_nlnr,
            c_qu=self.c_qu + other.c_qu,
            c_qd=self.c_qd + other.c_qd,
            c_quqd=self.c_quqd + other.c_quqd,
        )

    def write_csv(self, dom: DiscreteDomain, fh) -> None:
        """One row per vertex; the caller owns any header lines."""
        fh.write("vx,vy,n,Hl,Hr,Hu,Hd,HRe,HIm,seRe,seIm\n")
        hre = self.hl + self.hr
        him = -0.5 * np.sqrt(3.0) * (self.hu - self.hd)
        sre, sim = self.se_re(), self.se_im()
        hl, hr, hu, hd = self.hl, self.hr, self.hu, self.hd
        for v in range(self.nv):
            p = dom.vert_pos[v]
            fh.write(
                "%.10g,%.10g,%d,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.3g,%.3g\n"
                % (p.real, p.imag, self.n, hl[v], hr[v], hu[v], hd[v],
                   hre[v], him[v], sre[v], sim[v])
            )


def accumulate_field(
    dom: DiscreteDomain,
    seed: int,
    count: int,
    start: int = 0,
    field: Optional[ObservableField] = None,
    workers: int = 1,
) -> ObservableField:
    """Stream ``count`` independent colorings into per-vertex sums.

    Samples are keyed by (seed, absolute index), so the result does not
    depend on ``workers`` or on how the index range is chunked.
    """
    adj, arcu_inner, vs, wv, nbu, nbd, taint_u, taint_d = _kernel_arrays(dom)
    if field is None:
        field = ObservableField(nv=dom.nv)

    def run(lo: int, cnt: int) -> ObservableField:
        part = ObservableField(nv=dom.nv)
        rc = _batch_accumulate(
            np.uint64(seed), np.uint64(lo), cnt,
            adj, arcu_inner, vs, wv, nbu, nbd, taint_u, taint_d,
            part.s_nl, part.s_nl2, part.s_nr, part.s_nr2, part.s_nlnr,
            part.c_qu, part.c_qd, part.c_quqd,
        )
        if rc != 0:
            raise RuntimeError("crossing-chain colors failed to alternate")
        part.n = cnt
        return part

    if workers <= 1 or count < 2 * workers:
        return field.merge(run(start, count))

    from concurrent.futures import ThreadPoolExecutor

    chunk = (count + workers - 1) // workers
    jobs = []
    lo = start
    while lo < start + count:
        cnt = min(chunk, start + count - lo)
        jobs.append((lo, cnt))
        lo += cnt
    with ThreadPoolExecutor(max_workers=workers) as ex:
        parts = list(ex.map(lambda j: run(*j), jobs))
    for part in parts:
        field = field.merge(part)
    return field


# ----------------------------------------------------------------------
# crossing clusters and literal boundary traces
# ----------------------------------------------------------------------


def crossing_clusters(dom: DiscreteDomain, labels: ClusterLabels) -> list:
    """White clusters touching both arcs, ordered west to east by first
    contact along arc u walked from the l corner toward r."""
    order = []
    seen = set()
    for i in np.asarray(dom.arcu_edges)[::-1]:
        f = int(dom.cyc_inner_face[i])
        c = int(labels.labels[f])
        if c < 0 or c in seen:
            continue
        seen.add(c)
        if labels.touch_u[c] and labels.touch_d[c]:
            order.append(c)
    return order


@dataclass
class BoundaryTrace:
    """Side-extremal simple face path through one white crossing cluster
    from arc u to arc d."""

    faces: np.ndarray  # ordered face ids, arc-u end first
    side: str  # "left" or "right"
    cluster_id: int

    def __post_init__(self):
        self.faces = np.asarray(self.faces, dtype=np.int32)


def trace_boundary(
    dom: DiscreteDomain, labels: ClusterLabels, cluster_id: int, side: str = "left"
) -> BoundaryTrace:
    """Extremal simple path in a crossing cluster from arc u to arc d.

    Wall-following: enter the cluster through its side-extremal arc-u
    edge and repeatedly take the sharpest available turn toward the
    requested side (face directions are stored in counterclockwise
    order, so for a left trace the first in-cluster direction
    counterclockwise from the incoming one is the sharpest right turn,
    which hugs the wall on the west).  The walk runs along the
    cluster's outer wall and ends when that wall reaches arc d: the
    direction scan hits a boundary edge on arc d before the next
    in-cluster step.  (Merely entering a face that touches arc d is
    not enough -- the hugged wall may pass such a face and anchor
    further along.)  Chronological loop erasure keeps the path simple
    and drops every peninsula the wall walk circumnavigated.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    lab = labels.labels
    walk = np.asarray(dom.arcu_edges)
    if side == "left":
        walk = walk[::-1]
    start = -1
    j_in = -1
    for i in walk:
        f = int(dom.cyc_inner_face[i])
        if lab[f] == cluster_id:
            start = f
            j_in = int(dom.cyc_inner_dir[i])
            break
    if start < 0:
        raise ValueError("cluster %d does not touch arc u" % cluster_id)
    d_edge = getattr(dom, "_d_edge_map", None)
    if d_edge is None:
        d_edge = np.zeros((dom.nf, 6), dtype=bool)
        for i in np.asarray(dom.arcd_edges):
            d_edge[int(dom.cyc_inner_face[i]), int(dom.cyc_inner_dir[i])] = True
        dom._d_edge_map = d_edge
    adj = dom.face_adj
    path = [start]
    pos = {start: 0}
    cur = start
    guard = 0
    while True:
        guard += 1
        if guard > 6 * dom.nf + 6:
            raise RuntimeError("boundary trace failed to terminate")
        nxt = -1
        j_step = -1
        done = False
        for t in range(1, 7):
            j = (j_in + t) % 6 if side == "left" else (j_in - t) % 6
            g = int(adj[cur, j])
            if g < 0 and d_edge[cur, j]:
                done = True
                break
            if g >= 0 and lab[g] == cluster_id:
                nxt = g
                j_step = j
                break
        if done:
            break
        if nxt < 0:
            raise RuntimeError("boundary trace lost the cluster")
        if nxt in pos:
            cut = pos[nxt]
            for h in path[cut + 1 :]:
                del pos[h]
            del path[cut + 1 :]
        else:
            path.append(nxt)
            pos[nxt] = len(path) - 1
        j_in = (j_step + 3) % 6
        cur = nxt
    return BoundaryTrace(np.array(path, dtype=np.int32), side, cluster_id)


@dataclass
class RegionIndex:
    """Per-face count k of traces separating the face from the l corner.

    Faces on a trace carry the k of the region on their own l side; the
    parallel boolean mask records which faces those are.
    """

    k: np.ndarray
    on_trace: np.ndarray
    side: str


def region_index(dom: DiscreteDomain, traces: Sequence[BoundaryTrace]) -> RegionIndex:
    """Count, for every face, how many traces separate it from l.

    For each trace in turn, flood the face set from l's incident faces
    treating that trace's faces as walls; every face left unreached is
    separated by it.  A trace never separates its own faces, which
    therefore carry the count of the region on their l side.
    """
    nf = dom.nf
    owner = np.full(nf, -1, dtype=np.int32)
    side = traces[0].side if traces else "left"
    for t, tr in enumerate(traces):
        if tr.side != side:
            raise OverlappingTraces("traces mix left and right sides")
        for f in tr.faces:
            if owner[f] >= 0:
                raise OverlappingTraces("face %d lies on two traces" % int(f))
            owner[f] = t
    k = np.zeros(nf, dtype=np.int32)
    for t in range(len(traces)):
        reach = np.zeros(nf, dtype=bool)
        dq = deque()
        for f in dom.lv_faces:
            f = int(f)
            if owner[f] != t and not reach[f]:
                reach[f] = True
                dq.append(f)
        while dq:
            f = dq.popleft()
            for g in dom.face_adj[f]:
                g = int(g)
                if g < 0 or reach[g] or owner[g] == t:
                    continue
                reach[g] = True
                dq.append(g)
        sep = ~reach
        sep[owner == t] = False
        k += sep.astype(np.int32)
    return RegionIndex(k, owner >= 0, side)


def _vertex_k(dom: DiscreteDomain, region: RegionIndex, v: int, use_max: bool) -> int:
    ks_open = []
    ks_trace = []
    for f in dom.vert_sector[v]:
        f = int(f)
        if f < 0:
            continue
        if region.on_trace[f]:
            ks_trace.append(int(region.k[f]))
        else:
            ks_open.append(int(region.k[f]))
    if ks_open:
        return max(ks_open) if use_max else min(ks_open)
    if ks_trace:
        # vertex buried inside a trace band: its l side carries the
        # trace's own k, its r side one more
        return max(ks_trace) + 1 if use_max else min(ks_trace)
    return 0


def n_left(dom: DiscreteDomain, region: RegionIndex, z: int, w: int = None) -> int:
    """Signed left-boundary count N^l(z) = k(z) - k(w) from a left-trace
    region index; a vertex takes the minimum k over its incident
    off-trace faces, so an on-trace vertex reads its l side."""
    if w is None:
        w = dom.wv
    return _vertex_k(dom, region, z, False) - _vertex_k(dom, region, w, False)


def n_right(dom: DiscreteDomain, region: RegionIndex, z: int, w: int = None) -> int:
    """Mirror count from right traces: maximum incident k, so an
    on-trace vertex reads its r side."""
    if w is None:
        w = dom.wv
    return _vertex_k(dom, region, z, True) - _vertex_k(dom, region, w, True)


# ----------------------------------------------------------------------
# fencing events
# ----------------------------------------------------------------------


def _event_q(z: int, dom: DiscreteDomain, labels: ClusterLabels, up: bool) -> bool:
    _, _, _, _, nbu, nbd, taint_u, taint_d = _kernel_arrays(dom)
    touch = labels.touch_u if up else labels.touch_d
    taintf = taint_u if up else taint_d
    lab = labels.labels
    nf = dom.nf
    in_wall = np.zeros(nf, dtype=bool)
    white = lab >= 0
    in_wall[white] = touch[lab[white]] > 0
    incident = [int(f) for f in dom.vert_sector[z] if f >= 0]
    if not incident:
        return False
    if all(in_wall[f] for f in incident):
        return True  # engulfed by the anchored clusters
    seen = np.zeros(nf, dtype=bool)
    for f0 in incident:
        if in_wall[f0] or seen[f0]:
            continue
        seen[f0] = True
        dq = deque([f0])
        while dq:
            f = dq.popleft()
            if taintf[f]:
                return False
            for g in dom.face_adj[f]:
                g = int(g)
                if g < 0 or in_wall[g] or seen[g]:
                    continue
                seen[g] = True
                dq.append(g)
    return True


def event_qu(z: int, dom: DiscreteDomain, labels: ClusterLabels) -> bool:
    """z is fenced off from the side marks, against arc d, by white
    clusters touching arc u.

    Criterion: after removing every white cluster that touches u, each
    component meeting z's faces touches the boundary only strictly
    inside arc d (no arc-u edges, no corner faces).  A vertex whose
    incident faces all lie in removed clusters counts as engulfed
    (event true).
    """
    return _event_q(z, dom, labels, True)


def event_qd(z: int, dom: DiscreteDomain, labels: ClusterLabels) -> bool:
    """Mirror event: fenced against arc u by white clusters touching d."""
    return _event_q(z, dom, labels, False)
