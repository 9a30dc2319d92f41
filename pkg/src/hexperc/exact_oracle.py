"""Exhaustive enumeration over all 2^F colorings of tiny domains.

Ground truth for everything the sampling engine estimates: exact
per-vertex expectations of the four observables, exact per-edge
derivative-event probabilities (all with denominator 2^F), and literal
from-the-definition verification of boundary traces, separation counts
and the fencing events.

The enumeration shares the per-configuration kernels with the Monte
Carlo engine, so agreement between the two is a statement about the
estimator, not about two unrelated implementations.  The definitional
checks, by contrast, are deliberately independent code: exhaustive
simple-path search and continuum-faithful reachability floods.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import TooLarge
from .hexlattice import DiscreteDomain
from .percolation import coloring_from_index, label_clusters
from . import observables as obs
from .observables import (
    _chain_and_regions,
    _kernel_arrays,
    _label_color,
    _q_field,
    _vertex_counts,
    crossing_clusters,
    n_left,
    region_index,
    trace_boundary,
)

__all__ = [
    "ExactReport",
    "enumerate_exact",
    "definitional_check",
    "definitional_report",
    "format_prob",
]

HARD_LIMIT = 24
DEFAULT_BOUND = 20

# per-edge counter columns
JUMP_COLS = {
    ("l", +1): 0, ("l", -1): 1,
    ("r", +1): 2, ("r", -1): 3,
    ("u", +1): 4, ("u", -1): 5,
    ("d", +1): 6, ("d", -1): 7,
}


def format_prob(num: int, nf: int) -> str:
    return "%d/2^%d" % (num, nf)


def _enum_range(
    lo,
    hi,
    use_gray,
    adj,
    arcu_inner,
    vert_sector,
    nbu,
    nbd,
    taint_u,
    taint_d,
    ex,
    es_y,
    sum_nl,
    sum_nr,
    cnt_qu,
    cnt_qd,
    ecnt,
):
    """Accumulate exact sums over coloring codes in [lo, hi).

    Jump counters use the raw per-vertex counts (the reference-vertex
    offset cancels in differences).  Returns -1 on an alternation
    failure, else 0.
    """
    nf = adj.shape[0]
    nv = vert_sector.shape[0]
    ne = ex.shape[0]
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
    gprev = np.int64(-1)
    for code in range(lo, hi):
        if use_gray == 1:
            g = code ^ (code >> 1)
            if gprev < 0:
                for f in range(nf):
                    colors[f] = np.uint8((g >> f) & 1)
            else:
                diff = g ^ gprev
                f = 0
                while (diff >> f) & 1 == 0:
                    f += 1
                colors[f] = np.uint8(1 - colors[f])
            gprev = np.int64(g)
        else:
            for f in range(nf):
                colors[f] = np.uint8((code >> f) & 1)
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
        for v in range(nv):
            sum_nl[v] += kl[v]
            sum_nr[v] += kr[v]
            cnt_qu[v] += qu[v]
            cnt_qd[v] += qd[v]
        for i in range(ne):
            x = ex[i]
            y = es_y[i]
            dl = kl[y] - kl[x]
            dr = kr[y] - kr[x]
            if dl == 1:
                ecnt[i, 0] += 1
            elif dl == -1:
                ecnt[i, 1] += 1
            if dr == 1:
                ecnt[i, 2] += 1
            elif dr == -1:
                ecnt[i, 3] += 1
            if qu[y] == 1 and qu[x] == 0:
                ecnt[i, 4] += 1
            elif qu[x] == 1 and qu[y] == 0:
                ecnt[i, 5] += 1
            if qd[y] == 1 and qd[x] == 0:
                ecnt[i, 6] += 1
            elif qd[x] == 1 and qd[y] == 0:
                ecnt[i, 7] += 1
    return 0


_enum_range = obs._jit(_enum_range)


@dataclass
class ExactReport:
    """Exact enumeration results; every probability has denominator 2^F.

    Vertex sums store raw region counts; expectation accessors subtract
    the reference-vertex value, mirroring the estimator's definition.
    """

    nf: int
    nv: int
    wv: int
    sum_nl: np.ndarray  # per-vertex sums of the raw left count
    sum_nr: np.ndarray
    cnt_qu: np.ndarray
    cnt_qd: np.ndarray
    edges: np.ndarray  # (E, 3) int32: tail vertex, slot, head vertex
    ecnt: np.ndarray  # (E, 8) int64 jump counters
    _eidx: Dict[Tuple[int, int], int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._eidx:
            self._eidx = {
                (int(v), int(s)): i for i, (v, s, _) in enumerate(self.edges)
            }

    @property
    def n_configs(self) -> int:
        return 1 << self.nf

    # -- vertex expectations ------------------------------------------
    def h_l(self, v: int) -> Fraction:
        return Fraction(int(self.sum_nl[v] - self.sum_nl[self.wv]), self.n_configs)

    def h_r(self, v: int) -> Fraction:
        return Fraction(int(self.sum_nr[v] - self.sum_nr[self.wv]), self.n_configs)

    def h_u(self, v: int) -> Fraction:
        return Fraction(int(self.cnt_qu[v]), self.n_configs)

    def h_d(self, v: int) -> Fraction:
        return Fraction(int(self.cnt_qd[v]), self.n_configs)

    # -- edge derivative probabilities --------------------------------
    def jump_count(self, v: int, s: int, tag: str, sign: int) -> int:
        return int(self.ecnt[self._eidx[(v, s)], JUMP_COLS[(tag, sign)]])

    def jump_prob(self, v: int, s: int, tag: str, sign: int) -> Fraction:
        return Fraction(self.jump_count(v, s, tag, sign), self.n_configs)

    def head(self, v: int, s: int) -> int:
        return int(self.edges[self._eidx[(v, s)], 2])

    # -- whole-report identities --------------------------------------
    def hl_equals_hr(self) -> bool:
        a = self.sum_nl - self.sum_nl[self.wv]
        b = self.sum_nr - self.sum_nr[self.wv]
        return bool(np.array_equal(a, b))

    # -- serialization ------------------------------------------------
    def write_text(self, fh) -> None:
        """Schema: one line per record;
        ``vertex <id> <nl-num> <nr-num> <qu-num> <qd-num>`` and
        ``edge <tail> <slot> <head> <8 counters>``, all probabilities
        to be read as count/2^F."""
        fh.write("exact-report nf=%d nv=%d wv=%d\n" % (self.nf, self.nv, self.wv))
        for v in range(self.nv):
            fh.write(
                "vertex %d %d %d %d %d\n"
                % (
                    v,
                    int(self.sum_nl[v] - self.sum_nl[self.wv]),
                    int(self.sum_nr[v] - self.sum_nr[self.wv]),
                    int(self.cnt_qu[v]),
                    int(self.cnt_qd[v]),
                )
            )
        for i, (v, s, y) in enumerate(self.edges):
            fh.write(
                "edge %d %d %d %s\n"
                % (v, s, y, " ".join(str(int(c)) for c in self.ecnt[i]))
            )


def _edge_table(dom: DiscreteDomain) -> np.ndarray:
    rows = []
    for v in range(dom.nv):
        for s in range(3):
            y = int(dom.vert_nbr[v, s])
            if y >= 0:
                rows.append((v, s, y))
    return np.array(rows, dtype=np.int32)


def enumerate_exact(
    dom: DiscreteDomain,
    size_bound: int = DEFAULT_BOUND,
    workers: int = 1,
    gray: bool = False,
) -> ExactReport:
    """Evaluate all 2^F colorings and return exact counts.

    ``gray=True`` walks the codes in Gray order, updating the coloring
    by a single face flip per step; it must produce identical counts to
    the plain path (each splits into per-worker ranges the same way, so
    the result is independent of ``workers``).
    """
    if size_bound > HARD_LIMIT:
        raise TooLarge(
            "size bound %d exceeds the hard enumeration limit %d"
            % (size_bound, HARD_LIMIT)
        )
    if dom.nf > size_bound:
        raise TooLarge(
            "domain has %d faces, enumeration bound is %d" % (dom.nf, size_bound)
        )
    if dom.nf > DEFAULT_BOUND:
        warnings.warn(
            "enumerating %d faces (above the default bound %d); this may take a while"
            % (dom.nf, DEFAULT_BOUND),
            RuntimeWarning,
        )
    adj, arcu_inner, vs, wv, nbu, nbd, taint_u, taint_d = _kernel_arrays(dom)
    edges = _edge_table(dom)
    ex = np.ascontiguousarray(edges[:, 0])
    ey = np.ascontiguousarray(edges[:, 2])
    nc = 1 << dom.nf

    def run(lo: int, hi: int):
        sum_nl = np.zeros(dom.nv, dtype=np.int64)
        sum_nr = np.zeros(dom.nv, dtype=np.int64)
        cnt_qu = np.zeros(dom.nv, dtype=np.int64)
        cnt_qd = np.zeros(dom.nv, dtype=np.int64)
        ecnt = np.zeros((len(edges), 8), dtype=np.int64)
        rc = _enum_range(
            lo, hi, 1 if gray else 0,
            adj, arcu_inner, vs, nbu, nbd, taint_u, taint_d,
            ex, ey, sum_nl, sum_nr, cnt_qu, cnt_qd, ecnt,
        )
        if rc != 0:
            raise RuntimeError("crossing-chain colors failed to alternate")
        return sum_nl, sum_nr, cnt_qu, cnt_qd, ecnt

    if workers <= 1 or nc < 4 * workers:
        parts = [run(0, nc)]
    else:
        from concurrent.futures import ThreadPoolExecutor

        chunk = (nc + workers - 1) // workers
        ranges = [(lo, min(lo + chunk, nc)) for lo in range(0, nc, chunk)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda r: run(*r), ranges))
    sum_nl = sum(p[0] for p in parts)
    sum_nr = sum(p[1] for p in parts)
    cnt_qu = sum(p[2] for p in parts)
    cnt_qd = sum(p[3] for p in parts)
    ecnt = sum(p[4] for p in parts)
    return ExactReport(
        nf=dom.nf, nv=dom.nv, wv=int(dom.wv),
        sum_nl=sum_nl, sum_nr=sum_nr, cnt_qu=cnt_qu, cnt_qd=cnt_qd,
        edges=edges, ecnt=ecnt,
    )


# ----------------------------------------------------------------------
# literal definitional verification (independent code paths)
# ----------------------------------------------------------------------


def _reach_avoiding(dom: DiscreteDomain, blocked: np.ndarray, seeds) -> np.ndarray:
    """Faces reachable from ``seeds`` stepping only between unblocked
    faces that share an edge (the continuum-faithful passage rule:
    vertex pinches do not connect)."""
    reach = np.zeros(dom.nf, dtype=bool)
    dq = deque()
    for f in seeds:
        f = int(f)
        if f >= 0 and not blocked[f] and not reach[f]:
            reach[f] = True
            dq.append(f)
    while dq:
        f = dq.popleft()
        for g in dom.face_adj[f]:
            g = int(g)
            if g < 0 or reach[g] or blocked[g]:
                continue
            reach[g] = True
            dq.append(g)
    return reach


def _separates(dom: DiscreteDomain, pfaces, side_a, side_b) -> bool:
    """Does the closed hexagon set ``pfaces`` cut every continuous path
    between the two vertex/corner groups?  Groups are given as lists of
    face seeds (for corner points) or vertex ids prefixed ("v", id)."""
    blocked = np.zeros(dom.nf, dtype=bool)
    blocked[list(pfaces)] = True

    def seed_faces(group):
        faces = []
        for item in group:
            if isinstance(item, tuple) and item[0] == "v":
                for f in dom.vert_sector[item[1]]:
                    if f >= 0:
                        faces.append(int(f))
            else:
                faces.append(int(item))
        return faces

    reach = _reach_avoiding(dom, blocked, seed_faces(side_a))
    for f in seed_faces(side_b):
        if not blocked[f] and reach[f]:
            return False
    return True


def _definitional_n_left(dom: DiscreteDomain, traces, z: int, w: int) -> int:
    """Literal signed count: traces separating {l, w} from {z, r} minus
    traces separating {l, z} from {w, r}."""
    lw_faces = [int(f) for f in dom.lv_faces]
    rw_faces = [int(f) for f in dom.rv_faces]
    pos = neg = 0
    for tr in traces:
        p = [int(f) for f in tr.faces]
        if _separates(dom, p, lw_faces + [("v", w)], [("v", z)] + rw_faces):
            pos += 1
        if _separates(dom, p, lw_faces + [("v", z)], [("v", w)] + rw_faces):
            neg += 1
    return pos - neg


def _touches_trace(dom: DiscreteDomain, traces, v: int) -> bool:
    on = set()
    for tr in traces:
        on.update(int(f) for f in tr.faces)
    return any(int(f) in on for f in dom.vert_sector[v] if f >= 0)


def _all_ud_paths(dom: DiscreteDomain, kfaces: set) -> List[Tuple[int, ...]]:
    """All simple face paths within a cluster from an arc-u face to an
    arc-d face (endpoints satisfy the contact, interior unrestricted)."""
    nb_u, nb_d = dom.face_nb_u, dom.face_nb_d
    adj = dom.face_adj
    out = []
    starts = sorted(f for f in kfaces if nb_u[f] > 0)

    def extend(path, used):
        f = path[-1]
        if nb_d[f] > 0:
            out.append(tuple(path))
        for g in adj[f]:
            g = int(g)
            if g < 0 or g not in kfaces or g in used:
                continue
            used.add(g)
            path.append(g)
            extend(path, used)
            path.pop()
            used.remove(g)

    for s in starts:
        extend([s], {s})
    return out


def _left_region(dom: DiscreteDomain, pfaces) -> frozenset:
    blocked = np.zeros(dom.nf, dtype=bool)
    blocked[list(pfaces)] = True
    reach = _reach_avoiding(dom, blocked, dom.lv_faces)
    return frozenset(np.nonzero(reach)[0].tolist())


def _check_left_boundary(dom: DiscreteDomain, colors) -> Tuple[bool, dict]:
    """trace_boundary('left') must pick, for every white crossing
    cluster, a minimal-left-territory simple u-d path: its left region
    is contained in that of every other candidate path."""
    labels = label_clusters(dom, colors, True)
    detail = {"clusters": 0, "ambiguous": 0}
    ok = True
    for cid in crossing_clusters(dom, labels):
        detail["clusters"] += 1
        kfaces = set(np.nonzero(labels.labels == cid)[0].tolist())
        cands = _all_ud_paths(dom, kfaces)
        tr = trace_boundary(dom, labels, cid, "left")
        tfaces = tuple(int(f) for f in tr.faces)
        if tfaces not in cands:
            ok = False
            continue
        lt = _left_region(dom, tfaces)
        minimal = True
        for p in cands:
            lp = _left_region(dom, p)
            if not (lt <= lp):
                minimal = False
                break
        if not minimal:
            ok = False
    return ok, detail


def _check_separation(dom: DiscreteDomain, colors) -> Tuple[bool, dict]:
    """region_index/n_left bookkeeping against the literal signed
    separation count.

    Vertices incident to a trace face follow the engine's documented
    carry-the-left-value convention, which the group-based literal test
    does not encode; those are tallied separately and do not fail the
    check.  At clean vertices (and a clean reference) the two must
    agree exactly.
    """
    labels = label_clusters(dom, colors, True)
    ids = crossing_clusters(dom, labels)
    traces = [trace_boundary(dom, labels, c, "left") for c in ids]
    ri = region_index(dom, traces)
    w = int(dom.wv)
    if _touches_trace(dom, traces, w):
        return True, {"vertices": 0, "mismatches": 0, "convention": dom.nv}
    bad = conv = 0
    checked = 0
    for z in range(dom.nv):
        if _touches_trace(dom, traces, z):
            conv += 1
            continue
        checked += 1
        lit = _definitional_n_left(dom, traces, z, w)
        eng = n_left(dom, ri, z)
        if lit != eng:
            bad += 1
    return bad == 0, {"vertices": checked, "mismatches": bad, "convention": conv}


def _cluster_pocket_q(
    dom: DiscreteDomain, colors, z: int, up: bool
) -> Tuple[bool, bool]:
    """Literal fencing event from the definition, per cluster.

    Returns (strict, permissive): strict demands an anchored pocket --
    some white cluster touching the fencing arc cuts z from both
    corners, with z's surroundings meeting the boundary strictly inside
    the far arc; permissive additionally accepts the ambiguous
    enclosure cases (engulfed vertex, or a surrounding component with
    no boundary contact at all).
    """
    labels = label_clusters(dom, colors, True)
    touch_far = labels.touch_d if up else labels.touch_u
    touch_near = labels.touch_u if up else labels.touch_d
    nb_far = dom.face_nb_d if up else dom.face_nb_u
    nb_near = dom.face_nb_u if up else dom.face_nb_d
    incident = [int(f) for f in dom.vert_sector[z] if f >= 0]
    mark_faces = set(int(f) for f in dom.lv_faces) | set(int(f) for f in dom.rv_faces)
    strict = permissive = False
    for cid in range(labels.n):
        if not touch_near[cid]:
            continue  # the fence must be connected to the near arc
        blocked = labels.labels == cid
        all_engulfed = True
        cut = True
        has_contact = False
        for f0 in incident:
            if blocked[f0]:
                continue
            all_engulfed = False
            comp = _reach_avoiding(dom, blocked, [f0])
            idxs = np.nonzero(comp)[0]
            for g in idxs:
                g = int(g)
                if g in mark_faces or nb_near[g] > 0:
                    cut = False
                    break
                if nb_far[g] > 0:
                    has_contact = True
            if not cut:
                break
        if not cut:
            continue
        permissive = True
        # a genuine far-to-far fence needs the cluster anchored on the
        # far arc and an actual pocket against it; engulfed vertices and
        # contact-free enclosures are circuit readings
        if not all_engulfed and has_contact and touch_far[cid]:
            strict = True
    return strict, permissive


def _check_q(dom: DiscreteDomain, colors, up: bool) -> Tuple[bool, dict]:
    labels = label_clusters(dom, colors, True)
    fast = obs.event_qu if up else obs.event_qd
    agree = True
    detail = {"ambiguous": 0, "strict_disagree": 0}
    for z in range(dom.nv):
        eng = fast(z, dom, labels)
        strict, permissive = _cluster_pocket_q(dom, colors, z, up)
        if strict != permissive:
            detail["ambiguous"] += 1
        if eng != permissive:
            agree = False
        if eng != strict:
            detail["strict_disagree"] += 1
    return agree, detail


def definitional_check(dom: DiscreteDomain, colors, claim: str) -> bool:
    """Literal verification of one claim on one coloring.

    claims: ``leftBoundary`` (traces are minimal-left simple u-d
    paths), ``separation`` (region-index counts equal the literal
    signed separation counts at every vertex), ``qu`` / ``qd`` (the
    fast fencing criterion matches a per-cluster pocket search; the
    fast criterion follows the permissive reading of enclosures --
    see ``definitional_report`` for the ambiguity counts).
    """
    if dom.nf > DEFAULT_BOUND:
        raise TooLarge("definitional checks are restricted to tiny domains")
    if claim == "leftBoundary":
        return _check_left_boundary(dom, colors)[0]
    if claim == "separation":
        return _check_separation(dom, colors)[0]
    if claim == "qu":
        return _check_q(dom, colors, True)[0]
    if claim == "qd":
        return _check_q(dom, colors, False)[0]
    raise ValueError("unknown claim %r" % claim)


def definitional_report(
    dom: DiscreteDomain,
    claims: Sequence[str] = ("leftBoundary", "separation", "qu", "qd"),
    codes: Optional[Sequence[int]] = None,
) -> Dict[str, dict]:
    """Run definitional checks over many colorings and tally results.

    For the fencing claims the report carries both readings of the
    ambiguous enclosure configurations (vertex engulfed, or enclosed by
    a circuit with no boundary contact): ``ambiguous`` counts colorings
    where they differ, ``strict_disagree`` counts vertex evaluations
    where the fast criterion differs from the strict reading.
    """
    if codes is None:
        codes = range(1 << dom.nf)
    out: Dict[str, dict] = {
        c: {"configs": 0, "failures": 0, "ambiguous": 0, "strict_disagree": 0}
        for c in claims
    }
    for code in codes:
        colors = coloring_from_index(int(code), dom.nf)
        for c in claims:
            out[c]["configs"] += 1
            if c == "leftBoundary":
                ok, _ = _check_left_boundary(dom, colors)
            elif c == "separation":
                ok, _ = _check_separation(dom, colors)
            elif c in ("qu", "qd"):
                ok, det = _check_q(dom, colors, c == "qu")
                out[c]["ambiguous"] += 1 if det["ambiguous"] else 0
                out[c]["strict_disagree"] += det["strict_disagree"]
            else:
                raise ValueError("unknown claim %r" % c)
            if not ok:
                out[c]["failures"] += 1
    return out
