"""Discrete complex-analysis identities on the observable field.

The derivative of each observable along an oriented lattice edge is a
difference of probabilities of *connection patterns*: triple events
placing color/contact requirements on the three faces around the edge
tail, with pairwise disjoint witness paths.  This module implements

- the pattern algebra and its per-coloring evaluation (including the
  disjoint-witness search for same-color pairs),
- the displayed expansion chains of the six edge derivatives and their
  exhaustive verification,
- the discrete Cauchy-Riemann residual built from expansion-consistent
  inputs (exact rational on enumerable domains, Monte Carlo elsewhere),
- Morera-style contour sums, the interior dual-edge sum and the
  per-edge geometric identity behind its reindexing,
- convergence reports against a continuum reference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import ContourLeavesDomain, OutsideDomain, TooLarge
from .hexlattice import DiscreteDomain, OrientedEdge, sqrt3_i_int
from . import observables as obs_mod
from .observables import ObservableField, config_observables
from .percolation import coloring_from_index, label_clusters, sample_coloring

__all__ = [
    "TriplePattern",
    "PATTERNS",
    "CHAINS",
    "QSUMS",
    "CRProbs",
    "cr_residual",
    "cr_probs_exact",
    "cr_scan_exact",
    "cr_scan_mc",
    "six_term_expansions",
    "expansion_probs",
    "admissible_edges",
    "edge_identity_residual",
    "interior_dual_sum",
    "morera_sum",
    "discretize_contour",
    "circle_points",
    "contour_interior_vertices",
    "convergence_report",
    "ConvergenceReport",
]

SQRT3 = math.sqrt(3.0)


# ----------------------------------------------------------------------
# connection patterns around an oriented edge
# ----------------------------------------------------------------------
#
# For an oriented edge e with full face fan at its tail, the three faces
# are labelled by role: "left" flanks e on the left, "right" on the
# right, "opp" is the remaining face of the fan.  A connection is a
# (color, arcs) requirement: the face has that color and its witness
# path of that color reaches each named arc ("u", "d" or "ud"; a "ud"
# witness need not be two disjoint paths).  Within one pattern the
# witnesses of the three faces must be pairwise disjoint; witness sets
# of different colors are automatically disjoint, so only same-color
# pairs need a split search.


@dataclass(frozen=True)
class TriplePattern:
    opp: Tuple[str, str]
    left: Tuple[str, str]
    right: Tuple[str, str]

    @property
    def key(self) -> str:
        def one(c):
            return "%s%s" % c

        return "%s.%s.%s" % (one(self.opp), one(self.left), one(self.right))


def _p(o, l, r) -> TriplePattern:
    return TriplePattern(o, l, r)


W, B = "w", "b"

# expansion chains of the four observable derivatives along e itself;
# each chain is a list of levels, every level a list of patterns whose
# probabilities sum to the derivative probability
CHAINS: Dict[str, List[List[TriplePattern]]] = {
    # P[N^l増(head) = N^l(tail) + 1]
    "dl_plus": [
        [_p((B, "ud"), (W, "u"), (W, "d"))],
        [_p((B, "ud"), (W, "ud"), (W, "d")), _p((B, "ud"), (B, "u"), (W, "ud"))],
        [_p((W, "ud"), (W, "ud"), (B, "d")), _p((W, "ud"), (B, "u"), (W, "ud"))],
    ],
    # P[N^r(head) = N^r(tail) - 1]
    "dr_minus": [
        [_p((B, "ud"), (W, "d"), (W, "u"))],
        [_p((B, "ud"), (W, "d"), (W, "ud")), _p((B, "ud"), (W, "ud"), (W, "u"))],
        [_p((W, "ud"), (B, "d"), (W, "ud")), _p((W, "ud"), (W, "ud"), (B, "u"))],
    ],
}

# displayed three-term sums for the fencing-event derivatives along the
# rotated edges, expressed as patterns at the base edge; "tau" is the
# edge rotated by 240 degrees ccw about the tail, "tau2" by 120
QSUMS: Dict[str, List[TriplePattern]] = {
    "du_tau": [
        _p((W, "ud"), (W, "ud"), (B, "u")),
        _p((W, "ud"), (B, "d"), (W, "ud")),
        _p((B, "d"), (W, "ud"), (W, "ud")),
    ],
    "dd_tau": [
        _p((W, "ud"), (B, "u"), (W, "ud")),
        _p((W, "ud"), (W, "ud"), (B, "d")),
        _p((B, "d"), (W, "ud"), (W, "ud")),
    ],
    "du_tau2": [
        _p((W, "ud"), (W, "ud"), (B, "d")),
        _p((W, "ud"), (B, "u"), (W, "ud")),
        _p((B, "u"), (W, "ud"), (W, "ud")),
    ],
    "dd_tau2": [
        _p((W, "ud"), (B, "d"), (W, "ud")),
        _p((W, "ud"), (W, "ud"), (B, "u")),
        _p((B, "u"), (W, "ud"), (W, "ud")),
    ],
}

ROTATION_OF = {"du_tau": 2, "dd_tau": 2, "du_tau2": 1, "dd_tau2": 1}


def _all_patterns() -> List[TriplePattern]:
    seen = {}
    for levels in CHAINS.values():
        for level in levels:
            for p in level:
                seen[p.key] = p
    for pats in QSUMS.values():
        for p in pats:
            seen[p.key] = p
    return list(seen.values())


PATTERNS: List[TriplePattern] = _all_patterns()


def edge_fan(dom: DiscreteDomain, e: OrientedEdge) -> Tuple[int, int, int]:
    """(opp, left, right) faces around the tail of e; the tail must
    carry a full face fan."""
    if not dom.interior[e.tail]:
        raise OutsideDomain(
            "edge tail %d lacks a full face fan" % e.tail
        )
    s = dom.edge_slot(e)
    sec = dom.vert_sector[e.tail]
    return int(sec[(s + 1) % 3]), int(sec[s]), int(sec[(s + 2) % 3])


def admissible_edges(dom: DiscreteDomain) -> List[OrientedEdge]:
    """Oriented edges whose tail has a full face fan (so all three
    rotations of the edge stay in the domain)."""
    out = []
    for v in np.nonzero(dom.interior)[0]:
        for s in range(3):
            h = int(dom.vert_nbr[v, s])
            if h >= 0:
                out.append(OrientedEdge(int(v), h))
    return out


# ----------------------------------------------------------------------
# per-coloring pattern evaluation
# ----------------------------------------------------------------------


def _split_exists(dom, cfaces, fa, need_a, fb, need_b) -> bool:
    """Do disjoint connected witness sets exist inside one cluster?

    W_a contains fa and touches every arc in need_a, W_b likewise for
    fb; both are subsets of the cluster and disjoint.  Cached on the
    domain keyed by the cluster face set, since the answer depends only
    on the cluster's shape and the boundary-contact tables.
    """
    key = (cfaces, fa, need_a, fb, need_b)
    cache = getattr(dom, "_split_cache", None)
    if cache is None:
        cache = {}
        dom._split_cache = cache
    hit = cache.get(key)
    if hit is not None:
        return hit
    res = _split_search(dom, cfaces, fa, need_a, fb, need_b)
    cache[key] = res
    cache[(cfaces, fb, need_b, fa, need_a)] = res
    return res


def _contact_bits(dom, f) -> int:
    return (1 if dom.face_nb_u[f] > 0 else 0) | (2 if dom.face_nb_d[f] > 0 else 0)


def _need_bits(need: str) -> int:
    return (1 if "u" in need else 0) | (2 if "d" in need else 0)


def _split_search(dom, cfaces, fa, need_a, fb, need_b) -> bool:
    faces = list(cfaces)
    n = len(faces)
    idx = {f: i for i, f in enumerate(faces)}
    ia, ib = idx[fa], idx[fb]
    adj_local: List[List[int]] = [[] for _ in range(n)]
    for i, f in enumerate(faces):
        for g in dom.face_adj[f]:
            j = idx.get(int(g))
            if j is not None:
                adj_local[i].append(j)
    contact = [_contact_bits(dom, f) for f in faces]
    na, nb = _need_bits(need_a), _need_bits(need_b)

    def comp_from(start: int, avoid_mask: int) -> Tuple[int, int]:
        """(mask, contacts) of the component of ``start`` avoiding the
        masked faces."""
        if (avoid_mask >> start) & 1:
            return 0, 0
        seen = 1 << start
        bits = contact[start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in adj_local[i]:
                if (seen >> j) & 1 or (avoid_mask >> j) & 1:
                    continue
                seen |= 1 << j
                bits |= contact[j]
                stack.append(j)
        return seen, bits

    whole_mask, whole_bits = comp_from(ia, 0)
    if whole_bits & (na | nb) != (na | nb):
        return False

    # fast certificates: give one side its free component, then check
    # whether the remainder still serves the other side
    mb, bb = comp_from(ib, 1 << ia)
    if bb & nb == nb:
        ma, ba = comp_from(ia, mb)
        if ba & na == na:
            return True
    ma, ba = comp_from(ia, 1 << ib)
    if ba & na == na:
        mb2, bb2 = comp_from(ib, ma)
        if bb2 & nb == nb:
            return True

    # exhaustive: all connected subsets containing fa, avoiding fb
    seen_masks = {1 << ia}
    stack = [(1 << ia, contact[ia])]
    while stack:
        smask, sbits = stack.pop()
        if sbits & na == na:
            _, cb = comp_from(ib, smask)
            if cb & nb == nb:
                return True
        for i in range(n):
            if not (smask >> i) & 1:
                continue
            for j in adj_local[i]:
                if j == ib or (smask >> j) & 1:
                    continue
                nmask = smask | (1 << j)
                if nmask in seen_masks:
                    continue
                seen_masks.add(nmask)
                stack.append((nmask, sbits | contact[j]))
    return False


class PatternEvaluator:
    """Evaluates connection patterns on one coloring of one domain."""

    def __init__(self, dom: DiscreteDomain, colors: np.ndarray):
        self.dom = dom
        self.colors = colors
        self.lab = {
            W: label_clusters(dom, colors, True),
            B: label_clusters(dom, colors, False),
        }
        self._cluster_faces: Dict[Tuple[str, int], frozenset] = {}

    def _cfaces(self, color: str, c: int) -> frozenset:
        key = (color, c)
        got = self._cluster_faces.get(key)
        if got is None:
            got = frozenset(np.nonzero(self.lab[color].labels == c)[0].tolist())
            self._cluster_faces[key] = got
        return got

    def connected(self, f: int, color: str, arcs: str) -> bool:
        lab = self.lab[color]
        c = int(lab.labels[f])
        if c < 0:
            return False
        if "u" in arcs and not lab.touch_u[c]:
            return False
        if "d" in arcs and not lab.touch_d[c]:
            return False
        return True

    def triple(self, faces: Tuple[int, int, int], pat: TriplePattern) -> bool:
        spec = list(zip(faces, (pat.opp, pat.left, pat.right)))
        for f, (color, arcs) in spec:
            if not self.connected(f, color, arcs):
                return False
        for color in (W, B):
            group = [(f, arcs) for f, (c, arcs) in spec if c == color]
            if len(group) == 2:
                (fa, na), (fb, nb) = group
                lab = self.lab[color].labels
                if lab[fa] == lab[fb]:
                    cf = self._cfaces(color, int(lab[fa]))
                    if not _split_exists(self.dom, cf, fa, na, fb, nb):
                        return False
        return True


# ----------------------------------------------------------------------
# the six displayed expansions
# ----------------------------------------------------------------------


DERIVS = ("dl_plus", "dr_minus", "du_tau", "dd_tau", "du_tau2", "dd_tau2")


def derivative_jumps(dom: DiscreteDomain, e: OrientedEdge, obs=None, colors=None):
    """Indicator of each of the six derivative events on one coloring.

    ``obs`` may carry precomputed (nl, nr, qu, qd) arrays for the
    coloring to avoid recomputation in enumeration loops.
    """
    if obs is None:
        obs = config_observables(dom, colors)
    nl, nr, qu, qd = obs
    x = e.tail
    out = {}
    out["dl_plus"] = int(nl[e.head]) - int(nl[x]) == 1
    out["dr_minus"] = int(nr[e.head]) - int(nr[x]) == -1
    for name, k in ROTATION_OF.items():
        h = dom.rotate_edge(e, k).head
        q = qu if name.startswith("du") else qd
        out[name] = bool(q[h]) and not bool(q[x])
    return out


@dataclass
class ExpansionIndicators:
    """Pattern/event indicators of the six expansions on one coloring."""

    edge: OrientedEdge
    jumps: Dict[str, bool]
    chain_levels: Dict[str, List[List[bool]]]
    qsum_terms: Dict[str, List[bool]]

    def vector(self) -> Dict[str, bool]:
        """Flat indicator vector keyed by derivative/level/term."""
        out = dict()
        for name, val in self.jumps.items():
            out["%s.jump" % name] = val
        for name, levels in self.chain_levels.items():
            for li, level in enumerate(levels):
                for ti, val in enumerate(level):
                    out["%s.l%d.t%d" % (name, li + 1, ti)] = val
        for name, terms in self.qsum_terms.items():
            for ti, val in enumerate(terms):
                out["%s.t%d" % (name, ti)] = val
        return out


def six_term_expansions(
    dom: DiscreteDomain,
    e: OrientedEdge,
    colors: np.ndarray,
    size_bound: int = 20,
) -> ExpansionIndicators:
    """Evaluate every displayed expansion term on one coloring.

    The disjoint-witness searches limit this to small domains; raise
    TooLarge beyond ``size_bound`` faces.
    """
    if dom.nf > size_bound:
        raise TooLarge(
            "expansion indicators on %d faces exceed the bound %d"
            % (dom.nf, size_bound)
        )
    faces = edge_fan(dom, e)
    ev = PatternEvaluator(dom, colors)
    jumps = derivative_jumps(dom, e, colors=colors)
    chain_levels = {
        name: [[ev.triple(faces, p) for p in level] for level in levels]
        for name, levels in CHAINS.items()
    }
    qsum_terms = {
        name: [ev.triple(faces, p) for p in pats] for name, pats in QSUMS.items()
    }
    return ExpansionIndicators(e, jumps, chain_levels, qsum_terms)


@dataclass
class EdgeExpansionProbs:
    """Exact probabilities of every expansion ingredient at one edge."""

    edge: OrientedEdge
    jumps: Dict[str, Fraction]
    patterns: Dict[str, Fraction]  # keyed by pattern key

    def chain_level_sum(self, name: str, level: int) -> Fraction:
        return sum(
            (self.patterns[p.key] for p in CHAINS[name][level]), Fraction(0)
        )

    def qsum(self, name: str) -> Fraction:
        return sum((self.patterns[p.key] for p in QSUMS[name]), Fraction(0))


def expansion_probs(
    dom: DiscreteDomain,
    edges: Optional[Sequence[OrientedEdge]] = None,
    size_bound: int = 20,
) -> Dict[OrientedEdge, EdgeExpansionProbs]:
    """Exact pattern and jump probabilities by full enumeration.

    Pattern indicators at different edges of the same vertex fan reuse
    the evaluator's caches; the disjoint-split cache persists on the
    domain across colorings.
    """
    if dom.nf > size_bound:
        raise TooLarge(
            "enumeration of %d faces exceeds the bound %d" % (dom.nf, size_bound)
        )
    if edges is None:
        edges = admissible_edges(dom)
    fans = {e: edge_fan(dom, e) for e in edges}
    nc = 1 << dom.nf
    jc = {e: {name: 0 for name in DERIVS} for e in edges}
    pc = {e: {p.key: 0 for p in PATTERNS} for e in edges}
    for code in range(nc):
        colors = coloring_from_index(code, dom.nf)
        ev = PatternEvaluator(dom, colors)
        obs = config_observables(dom, colors)
        for e in edges:
            faces = fans[e]
            jmp = derivative_jumps(dom, e, obs=obs)
            for name, val in jmp.items():
                if val:
                    jc[e][name] += 1
            for p in PATTERNS:
                if ev.triple(faces, p):
                    pc[e][p.key] += 1
    out = {}
    for e in edges:
        out[e] = EdgeExpansionProbs(
            e,
            {k: Fraction(v, nc) for k, v in jc[e].items()},
            {k: Fraction(v, nc) for k, v in pc[e].items()},
        )
    return out


# ----------------------------------------------------------------------
# discrete Cauchy-Riemann residual
# ----------------------------------------------------------------------


@dataclass
class CRProbs:
    """The six derivative probabilities entering the residual at one
    edge: the two boundary-count events along e, and the fencing
    events along the two rotated edges."""

    dl_plus: object
    dr_minus: object
    du_tau: object
    dd_tau: object
    du_tau2: object
    dd_tau2: object


def cr_residual(e: OrientedEdge, probs: CRProbs):
    """2(P[dl+] - P[dr-]) - [(P[dd+] - P[du+]) at tau minus the same at
    tau^2]; exact inputs give an exact result."""
    lhs = 2 * (probs.dl_plus - probs.dr_minus)
    rhs = (probs.dd_tau - probs.du_tau) - (probs.dd_tau2 - probs.du_tau2)
    return lhs - rhs


def cr_probs_exact(
    dom: DiscreteDomain, e: OrientedEdge, size_bound: int = 20,
    _probs: Optional[EdgeExpansionProbs] = None,
) -> CRProbs:
    """Expansion-consistent exact inputs: boundary-count derivatives
    from their defining events, fencing derivatives from the displayed
    three-term sums."""
    ep = _probs if _probs is not None else expansion_probs(dom, [e], size_bound)[e]
    return CRProbs(
        dl_plus=ep.jumps["dl_plus"],
        dr_minus=ep.jumps["dr_minus"],
        du_tau=ep.qsum("du_tau"),
        dd_tau=ep.qsum("dd_tau"),
        du_tau2=ep.qsum("du_tau2"),
        dd_tau2=ep.qsum("dd_tau2"),
    )


def cr_scan_exact(
    dom: DiscreteDomain,
    edges: Optional[Sequence[OrientedEdge]] = None,
    size_bound: int = 20,
):
    """(edge, residual Fraction) for every admissible edge."""
    if edges is None:
        edges = admissible_edges(dom)
    probs = expansion_probs(dom, edges, size_bound)
    return [(e, cr_residual(e, cr_probs_exact(dom, e, _probs=probs[e])))
            for e in edges]


def cr_sample_residuals(
    dom: DiscreteDomain,
    e: OrientedEdge,
    seed: int,
    samples: int,
    size_bound: int = 20,
) -> np.ndarray:
    """Per-sample value of the expansion-consistent residual combination
    (an integer in [-4, 4] per coloring; its mean estimates the
    residual, and a single-variable standard error applies)."""
    if dom.nf > size_bound:
        raise TooLarge(
            "per-sample pattern indicators on %d faces exceed the bound %d"
            % (dom.nf, size_bound)
        )
    faces = edge_fan(dom, e)
    vals = np.empty(samples, dtype=np.int8)
    for i in range(samples):
        colors = sample_coloring(dom.nf, seed, i)
        ev = PatternEvaluator(dom, colors)
        jmp = derivative_jumps(dom, e, colors=colors)
        qs = {name: sum(ev.triple(faces, p) for p in QSUMS[name]) for name in QSUMS}
        lhs = 2 * (int(jmp["dl_plus"]) - int(jmp["dr_minus"]))
        rhs = (qs["dd_tau"] - qs["du_tau"]) - (qs["dd_tau2"] - qs["du_tau2"])
        vals[i] = lhs - rhs
    return vals


def cr_scan_mc(
    dom: DiscreteDomain,
    edges: Sequence[OrientedEdge],
    seed: int,
    samples: int,
    size_bound: int = 20,
):
    """(edge, mean residual, standard error) per edge, shared samples."""
    out = []
    for e in edges:
        vals = cr_sample_residuals(dom, e, seed, samples, size_bound)
        mean = float(vals.mean())
        se = float(vals.std(ddof=1) / math.sqrt(len(vals))) if len(vals) > 1 else 0.0
        out.append((e, mean, se))
    return out


def write_cr_csv(dom: DiscreteDomain, rows, fh) -> None:
    """rows: (edge, residual[, se]); columns ex, ey, dir, residual, se."""
    fh.write("ex,ey,dir,residual,se\n")
    for row in rows:
        e = row[0]
        res = row[1]
        se = row[2] if len(row) > 2 else 0.0
        pos = dom.vert_pos[e.tail]
        fh.write(
            "%.9g,%.9g,%d,%.12g,%.6g\n"
            % (pos.real, pos.imag, dom.edge_slot(e), float(res), float(se))
        )


# ----------------------------------------------------------------------
# contours, Morera sums and the interior dual sum
# ----------------------------------------------------------------------


def circle_points(center: complex, radius: float, n: int = 720) -> np.ndarray:
    t = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    return center + radius * np.exp(1j * t)


def discretize_contour(dom: DiscreteDomain, points: Sequence[complex]) -> List[int]:
    """Closed lattice-vertex walk approximating a closed curve.

    Walks the nearest domain vertex of each sample point in order,
    dropping repeats and immediate backtracks; consecutive vertices
    must come out adjacent (supply a denser sampling otherwise).  Every
    vertex must lie within one lattice spacing of its sample point,
    else the curve has left the discretized domain.
    """
    pos = dom.vert_pos
    pts = np.asarray(points, dtype=complex)
    near = np.empty(len(pts), dtype=np.int64)
    for i, p in enumerate(pts):
        d = np.abs(pos - p)
        j = int(np.argmin(d))
        if d[j] > 1.5 * dom.delta:
            raise ContourLeavesDomain(
                "contour point %g%+gi is %.3g away from the nearest vertex"
                % (p.real, p.imag, d[j])
            )
        near[i] = j
    walk: List[int] = []
    for v in near:
        v = int(v)
        if walk and v == walk[-1]:
            continue
        if len(walk) >= 2 and v == walk[-2]:
            walk.pop()
            continue
        walk.append(v)
    while len(walk) >= 2 and walk[0] == walk[-1]:
        walk.pop()
    if len(walk) < 3:
        raise ContourLeavesDomain("contour collapsed to fewer than 3 vertices")
    nbr = dom.vert_nbr
    for a, b in zip(walk, walk[1:] + walk[:1]):
        if b not in [int(x) for x in nbr[a]]:
            raise ContourLeavesDomain(
                "consecutive contour vertices %d, %d are not adjacent; "
                "sample the curve more densely" % (a, b)
            )
    return walk


def morera_sum(dom: DiscreteDomain, contour: Sequence[int], values) -> complex:
    """Contour Riemann sum of the field: sum over contour edges of the
    edge displacement times the mean of the endpoint values.

    ``values`` is a complex per-vertex array or a callable on vertex
    ids.  Closed lattice contours annihilate constants exactly, and the
    midpoint rule makes the identity field exact as well.
    """
    if callable(values):
        vals = {v: values(v) for v in contour}
        get = vals.__getitem__
    else:
        arr = np.asarray(values)
        get = lambda v: arr[v]
    total = 0.0 + 0.0j
    for a, b in zip(contour, list(contour[1:]) + [contour[0]]):
        e = OrientedEdge(int(a), int(b))
        total += dom.edge_vec(e) * (get(a) + get(b)) / 2.0
    return total


def contour_interior_vertices(dom: DiscreteDomain, contour: Sequence[int]) -> np.ndarray:
    """Vertices strictly enclosed by a closed lattice contour.

    Lattice flood: remove the contour vertices, flood the vertex graph
    from the domain boundary cycle; unreached vertices off the contour
    are enclosed.
    """
    on = np.zeros(dom.nv, dtype=bool)
    on[list(contour)] = True
    outside = np.zeros(dom.nv, dtype=bool)
    stack = [int(v) for v in dom.cycle if not on[int(v)]]
    for v in stack:
        outside[v] = True
    while stack:
        v = stack.pop()
        for h in dom.vert_nbr[v]:
            h = int(h)
            if h < 0 or on[h] or outside[h]:
                continue
            outside[h] = True
            stack.append(h)
    return ~(on | outside)


def edge_identity_residual(dom: DiscreteDomain, e: OrientedEdge) -> Tuple[int, int]:
    """Integer-exact residual of the per-edge geometric identity

        sqrt(3) i conj(e) + conj(tau^2 e) - conj(tau e) = 0,

    with tau the 240-degree and tau^2 the 120-degree rotation about the
    tail.  Components are in the (delta/2, delta*sqrt(3)/2) integer
    basis; (0, 0) means the identity holds exactly."""
    a, b = dom.edge_vec_int(e)
    ra, rb = sqrt3_i_int(a, -b)
    a1, b1 = dom.edge_vec_int(dom.rotate_edge(e, 1))
    a2, b2 = dom.edge_vec_int(dom.rotate_edge(e, 2))
    return (ra + a1 - a2, rb + (-b1) - (-b2))


def interior_dual_sum(
    dom: DiscreteDomain,
    contour: Sequence[int],
    dplus: Callable[[OrientedEdge], complex],
) -> complex:
    """Sum of conj(e) times the forward field derivative over every
    oriented admissible edge strictly enclosed by the contour.

    ``dplus(e)`` returns the forward derivative of the complex field
    along e (for the observable field: d+H^l + d+H^r - (sqrt(3)/2) i
    (d+H^u - d+H^d) built from whatever estimates are at hand)."""
    inside = contour_interior_vertices(dom, contour)
    total = 0.0 + 0.0j
    for e in admissible_edges(dom):
        if inside[e.tail] and inside[e.head]:
            total += np.conj(dom.edge_vec(e)) * dplus(e)
    return total


# ----------------------------------------------------------------------
# Monte Carlo derivative-event estimation
# ----------------------------------------------------------------------


def _edge_batch_range(
    seed,
    start,
    count,
    adj,
    arcu_inner,
    vert_sector,
    nbu,
    nbd,
    taint_u,
    taint_d,
    ex,
    ey,
    ecnt,
):
    """Count the eight jump events at each listed edge over ``count``
    samples starting at index ``start``; the sample stream matches the
    field estimator's.  Returns -1 on an alternation failure."""
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
    for s in range(count):
        obs_mod._sample_colors_into(seed, start + np.uint64(s), nf, colors)
        obs_mod._label_color(
            colors, np.uint8(1), adj, wlab, wtu, wtd, nbu, nbd, stack
        )
        obs_mod._label_color(
            colors, np.uint8(0), adj, blab, btu, btd, nbu, nbd, stack
        )
        m = obs_mod._chain_and_regions(
            colors, adj, arcu_inner, wlab, wtu, wtd, blab, btu, btd,
            chain_color, chain_pos_w, chain_pos_b, region, stack,
        )
        if m < 0:
            return -1
        obs_mod._vertex_counts(vert_sector, region, chain_color, m, kl, kr)
        obs_mod._q_field(
            colors, adj, wlab, wtu, vert_sector, taint_u, comp, tainted, stack, qu
        )
        obs_mod._q_field(
            colors, adj, wlab, wtd, vert_sector, taint_d, comp, tainted, stack, qd
        )
        for i in range(ne):
            x = ex[i]
            y = ey[i]
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


_edge_batch_range = obs_mod._jit(_edge_batch_range)

# columns of the per-edge jump counters
JUMP_COLS = {
    ("l", +1): 0, ("l", -1): 1,
    ("r", +1): 2, ("r", -1): 3,
    ("u", +1): 4, ("u", -1): 5,
    ("d", +1): 6, ("d", -1): 7,
}


def jump_counts_mc(
    dom: DiscreteDomain,
    edges: Sequence[OrientedEdge],
    seed: int,
    samples: int,
    start: int = 0,
    workers: int = 1,
) -> np.ndarray:
    """(len(edges), 8) int64 jump-event counts over shared samples."""
    adj, arcu_inner, vs, wv, nbu, nbd, taint_u, taint_d = obs_mod._kernel_arrays(dom)
    ex = np.array([e.tail for e in edges], dtype=np.int32)
    ey = np.array([e.head for e in edges], dtype=np.int32)

    def run(lo, cnt):
        ecnt = np.zeros((len(edges), 8), dtype=np.int64)
        rc = _edge_batch_range(
            np.uint64(seed), np.uint64(lo), cnt,
            adj, arcu_inner, vs, nbu, nbd, taint_u, taint_d, ex, ey, ecnt,
        )
        if rc != 0:
            raise RuntimeError("crossing-chain colors failed to alternate")
        return ecnt

    if workers <= 1:
        return run(start, samples)
    from concurrent.futures import ThreadPoolExecutor

    chunk = (samples + workers - 1) // workers
    jobs = []
    lo = start
    while lo < start + samples:
        cnt = min(chunk, start + samples - lo)
        jobs.append((lo, cnt))
        lo += cnt
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda j: run(*j), jobs))
    return sum(parts)


def field_dplus_exact(report) -> Callable[[OrientedEdge], complex]:
    """Forward derivative of the complex field from exact enumeration
    counts: (d+H^l + d+H^r) - (sqrt(3)/2) i (d+H^u - d+H^d), each
    d+ being P[up-jump] - P[down-jump] along the edge."""

    def dplus(e: OrientedEdge) -> complex:
        v, h = e.tail, e.head
        s = None
        for cand in range(3):
            i = report._eidx.get((v, cand))
            if i is not None and int(report.edges[i, 2]) == h:
                s = cand
                break
        if s is None:
            raise ValueError("edge not tracked by the report: %r" % (e,))
        dl = report.jump_prob(v, s, "l", +1) - report.jump_prob(v, s, "l", -1)
        dr = report.jump_prob(v, s, "r", +1) - report.jump_prob(v, s, "r", -1)
        du = report.jump_prob(v, s, "u", +1) - report.jump_prob(v, s, "u", -1)
        dd = report.jump_prob(v, s, "d", +1) - report.jump_prob(v, s, "d", -1)
        return complex(dl + dr) - (SQRT3 / 2.0) * 1j * complex(du - dd)

    return dplus


# ----------------------------------------------------------------------
# convergence reporting
# ----------------------------------------------------------------------


@dataclass
class ConvergenceRow:
    delta: float
    nsamples: int
    supdist: float
    se: float
    argmax: complex


@dataclass
class ConvergenceReport:
    rows: List[ConvergenceRow]

    @property
    def monotone(self) -> bool:
        sup = [r.supdist for r in self.rows]
        return all(b <= a for a, b in zip(sup, sup[1:]))

    def write_csv(self, fh) -> None:
        fh.write("delta,nsamples,supdist,se\n")
        for r in self.rows:
            fh.write(
                "%.9g,%d,%.9g,%.6g\n" % (r.delta, r.nsamples, r.supdist, r.se)
            )


def convergence_report(
    entries: Sequence[Tuple[DiscreteDomain, ObservableField]],
    reference: Callable[[complex], complex],
    where: Optional[Callable[[complex], bool]] = None,
) -> ConvergenceReport:
    """Sup-distance of the estimated field to a continuum reference,
    per refinement level (entries ordered coarse to fine).

    ``where`` restricts the comparison (e.g. to a compact subset away
    from the boundary); the reported standard error is the field's at
    the sup-attaining vertex.
    """
    rows = []
    for dom, field in entries:
        h = field.h
        best = -1.0
        argmax = 0j
        bestse = 0.0
        se_re = field.se_re()
        se_im = field.se_im()
        for v in range(dom.nv):
            z = dom.vert_pos[v]
            if where is not None and not where(z):
                continue
            dist = abs(h[v] - reference(z))
            if dist > best:
                best = dist
                argmax = z
                bestse = math.hypot(se_re[v], se_im[v])
        rows.append(
            ConvergenceRow(
                delta=float(dom.delta),
                nsamples=int(field.n),
                supdist=float(best),
                se=float(bestse),
                argmax=argmax,
            )
        )
    return ConvergenceReport(rows)
