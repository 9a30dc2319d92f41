"""Honeycomb discretization of Jordan domains with marked boundary points.

Faces are flat-top hexagons of side ``delta``, addressed by axial
coordinates ``(q, r)``; the center of face ``(q, r)`` is at
``delta * (1.5 q, sqrt(3) (r + q/2))``.  Corner ``k`` (k = 0..5) of a face
sits at angle ``60 k`` degrees from the center, so every vertex lies on the
half-integer grid

    (ix * delta / 2,  iy * delta * sqrt(3) / 2),   ix, iy integers.

The integer pair ``(ix, iy)`` is used as the canonical vertex key.  Edge
vectors, 120-degree rotations and the sqrt(3)*i dual map are all exact in
these integer coordinates:

    rot120(a, b)  = ((-a - 3 b) // 2, (a - b) // 2)
    sqrt3_i(a, b) = (-3 b, a)

which keeps every geometric identity in the analysis modules an exact
integer statement instead of a floating-point one.

Vertices come in two classes by ``ix mod 3``: class 0 (``ix % 3 == 2``) has
its three edges at angles 0/120/240 degrees, class 1 (``ix % 3 == 1``) at
60/180/300.  Edges at a vertex are indexed by a slot ``s`` in {0, 1, 2};
slot ``s + 1`` is always the 120-degree counterclockwise rotation of slot
``s``.  The face wedged between edge slots ``s`` and ``s + 1`` is the
sector face ``s``; for an oriented edge leaving a vertex at slot ``s``,
sector ``s`` is the face on its left and sector ``(s + 2) % 3`` the face on
its right.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

import numpy as np

from .errors import (
    BoundaryEdge,
    EmptyDiscretization,
    InvalidDomain,
    MarkCollision,
    OutsideDomain,
)

SQRT3 = math.sqrt(3.0)

# corner k of a face, as an (ix, iy) offset from the face center
CORNER_OFF = ((2, 0), (1, 1), (-1, 1), (-2, 0), (-1, -1), (1, -1))

# axial offset of the neighbor sharing the edge between corners d and d+1
AXIAL_DIRS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))

# integer edge vector for a class-c vertex, slot s  (class 0: angles
# 0/120/240, class 1: 60/180/300; slot s+1 = slot s rotated 120 ccw)
EDGE_VEC = (
    ((2, 0), (-1, 1), (-1, -1)),
    ((1, 1), (-2, 0), (1, -1)),
)

# face-center offset from the vertex for sector s (between slots s, s+1)
SECTOR_OFF = (
    ((1, 1), (-2, 0), (1, -1)),
    ((-1, 1), (-1, -1), (2, 0)),
)

EDGE_SLOT = tuple({v: s for s, v in enumerate(EDGE_VEC[c])} for c in (0, 1))


def vertex_class(ix: int) -> int:
    m = ix % 3
    if m == 2:
        return 0
    if m == 1:
        return 1
    raise ValueError("not a vertex coordinate: ix %% 3 == 0 (ix=%d)" % ix)


def rot120_int(a: int, b: int) -> tuple[int, int]:
    """Rotate an integer lattice vector by 120 degrees counterclockwise."""
    return ((-a - 3 * b) // 2, (a - b) // 2)


def sqrt3_i_int(a: int, b: int) -> tuple[int, int]:
    """Multiply an integer lattice vector by sqrt(3)*i, exactly."""
    return (-3 * b, a)


# ---------------------------------------------------------------------------
# domain specifications


@dataclass(frozen=True)
class DiscSpec:
    """Disc of given center and radius; boundary parameter is the angle."""

    center: complex
    radius: float

    def boundary_point(self, t: float) -> complex:
        return self.center + self.radius * complex(math.cos(t), math.sin(t))

    def contains(self, p: complex) -> bool:
        return abs(p - self.center) <= self.radius * (1.0 + 1e-12)

    def bbox(self) -> tuple[float, float, float, float]:
        c, r = self.center, self.radius
        return (c.real - r, c.imag - r, c.real + r, c.imag + r)


@dataclass(frozen=True)
class PolygonSpec:
    """Simple polygon, vertices counterclockwise; boundary parameter is the
    normalized arc length in [0, 1) starting at ``vertices[0]``."""

    vertices: tuple[complex, ...]

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise ValueError("polygon needs at least 3 vertices")
        area = 0.0
        vs = self.vertices
        for i in range(len(vs)):
            a, b = vs[i], vs[(i + 1) % len(vs)]
            area += a.real * b.imag - b.real * a.imag
        if area <= 0:
            raise ValueError("polygon vertices must be counterclockwise")

    def _sides(self):
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def perimeter(self) -> float:
        return sum(abs(b - a) for a, b in self._sides())

    def boundary_point(self, t: float) -> complex:
        t = t % 1.0
        left = t * self.perimeter()
        for a, b in self._sides():
            seg = abs(b - a)
            if left <= seg or (a, b) == self._sides()[-1]:
                if seg == 0:
                    continue
                return a + (b - a) * min(left / seg, 1.0)
            left -= seg
        return self.vertices[0]

    def contains(self, p: complex) -> bool:
        # inclusive point-in-polygon: on-edge points count as inside
        scale = max(abs(v) for v in self.vertices) + 1.0
        eps = 1e-12 * scale
        for a, b in self._sides():
            d = b - a
            L2 = d.real * d.real + d.imag * d.imag
            if L2 == 0:
                continue
            t = ((p - a).real * d.real + (p - a).imag * d.imag) / L2
            t = min(1.0, max(0.0, t))
            if abs(a + t * d - p) <= eps:
                return True
        inside = False
        x, y = p.real, p.imag
        for a, b in self._sides():
            if (a.imag > y) != (b.imag > y):
                xc = a.real + (y - a.imag) * (b.real - a.real) / (b.imag - a.imag)
                if x < xc:
                    inside = not inside
        return inside

    def bbox(self) -> tuple[float, float, float, float]:
        xs = [v.real for v in self.vertices]
        ys = [v.imag for v in self.vertices]
        return (min(xs), min(ys), max(xs), max(ys))


Shape = Union[DiscSpec, PolygonSpec]


@dataclass(frozen=True)
class Marks:
    """Boundary parameters of the three marked points l, r, w."""

    l: float
    r: float
    w: float


@dataclass(frozen=True)
class DomainSpec:
    shape: Shape
    marks: Marks
    delta: float

    def __post_init__(self):
        if self.delta <= 0:
            raise ValueError("delta must be positive")


class OrientedEdge(NamedTuple):
    tail: int
    head: int


class DualEdge(NamedTuple):
    vec: complex
    from_face: int  # face on the right of the primal edge
    to_face: int  # face on the left


class BoundaryArcs(NamedTuple):
    u: list[OrientedEdge]  # counterclockwise from r to l
    d: list[OrientedEdge]  # counterclockwise from l to r


# ---------------------------------------------------------------------------
# discretization


class DiscreteDomain:
    """Largest connected union of hexagonal faces inside a Jordan domain,
    together with vertex/edge tables and the marked boundary structure.

    Attributes of interest (F faces, V vertices):

    faces_axial   (F, 2) int64, axial (q, r) of each face
    face_center   (F,) complex128
    face_adj      (F, 6) int32, neighbor face per direction, -1 if absent
    vert_icoord   (V, 2) int64, integer vertex coordinates (ix, iy)
    vert_pos      (V,) complex128
    vert_cls      (V,) uint8, vertex class 0/1
    vert_nbr      (V, 3) int32, neighbor vertex per slot, -1 if no edge
    vert_sector   (V, 3) int32, face in sector s, -1 if absent
    interior      (V,) bool, all three sector faces present
    cycle         (C,) int32, boundary vertices in ccw order
    cyc_pos       (V,) int32, position in cycle, -1 off-boundary
    lv, rv, wv    vertex ids of the marks
    arc_of_edge   (C,) uint8, arc of cycle edge i->i+1: 0 = u, 1 = d
    face_nb_u/d   (F,) int16, # boundary edges of the face on u / d
    face_nb_u_int/d_int   same, counting only edges not incident to lv, rv
    arcu_edges    int32 cycle indices of u edges, ccw order (r to l)
    arcd_edges    int32 cycle indices of d edges, ccw order (l to r)
    lv_faces, rv_faces    int32 face ids incident to lv / rv
    """

    def __init__(self, spec: DomainSpec):
        self.spec = spec
        self.delta = spec.delta
        self._build_faces()
        self._build_vertices()
        self._build_boundary()
        self._place_marks()
        self._classify_boundary_edges()

    # -- construction ------------------------------------------------------

    def _build_faces(self):
        shape, delta = self.spec.shape, self.spec.delta
        xmin, ymin, xmax, ymax = shape.bbox()
        q_lo = math.floor((xmin - 2 * delta) / (1.5 * delta))
        q_hi = math.ceil((xmax + 2 * delta) / (1.5 * delta))
        kept = []
        for q in range(q_lo, q_hi + 1):
            r_lo = math.floor((ymin - 2 * delta) / (SQRT3 * delta) - q / 2) - 1
            r_hi = math.ceil((ymax + 2 * delta) / (SQRT3 * delta) - q / 2) + 1
            for r in range(r_lo, r_hi + 1):
                cx, cy = 1.5 * delta * q, SQRT3 * delta * (r + q / 2)
                ok = True
                for dx, dy in CORNER_OFF:
                    p = complex(cx + dx * delta / 2, cy + dy * delta * SQRT3 / 2)
                    if not shape.contains(p):
                        ok = False
                        break
                if ok:
                    kept.append((q, r))
        if not kept:
            raise EmptyDiscretization(
                "no hexagon of side %g fits inside the domain" % delta
            )
        # largest connected component (ties: the one holding the smallest
        # (q, r) in lexicographic order)
        kept_set = set(kept)
        seen: dict[tuple[int, int], int] = {}
        comps: list[list[tuple[int, int]]] = []
        for f in sorted(kept):
            if f in seen:
                continue
            comp = [f]
            seen[f] = len(comps)
            stack = [f]
            while stack:
                q, r = stack.pop()
                for dq, dr in AXIAL_DIRS:
                    g = (q + dq, r + dr)
                    if g in kept_set and g not in seen:
                        seen[g] = len(comps)
                        comp.append(g)
                        stack.append(g)
            comps.append(comp)
        comp = max(comps, key=len)  # max() keeps the earliest on ties
        comp.sort()
        self.nf = len(comp)
        self.faces_axial = np.array(comp, dtype=np.int64)
        self._face_id = {f: i for i, f in enumerate(comp)}
        delta = self.spec.delta
        self.face_center = np.array(
            [
                complex(1.5 * delta * q, SQRT3 * delta * (r + q / 2))
                for q, r in comp
            ],
            dtype=np.complex128,
        )
        adj = np.full((self.nf, 6), -1, dtype=np.int32)
        for i, (q, r) in enumerate(comp):
            for d, (dq, dr) in enumerate(AXIAL_DIRS):
                j = self._face_id.get((q + dq, r + dr))
                if j is not None:
                    adj[i, d] = j
        self.face_adj = adj

    def _build_vertices(self):
        delta = self.spec.delta
        vid: dict[tuple[int, int], int] = {}
        icoords: list[tuple[int, int]] = []
        corner = np.empty((self.nf, 6), dtype=np.int32)
        for i, (q, r) in enumerate(self.faces_axial):
            cx, cy = 3 * int(q), 2 * int(r) + int(q)
            for k, (dx, dy) in enumerate(CORNER_OFF):
                key = (cx + dx, cy + dy)
                v = vid.get(key)
                if v is None:
                    v = len(icoords)
                    vid[key] = v
                    icoords.append(key)
                corner[i, k] = v
        self.nv = len(icoords)
        self.face_corner = corner
        self.vert_icoord = np.array(icoords, dtype=np.int64)
        self.vert_pos = np.array(
            [
                complex(ix * delta / 2, iy * delta * SQRT3 / 2)
                for ix, iy in icoords
            ],
            dtype=np.complex128,
        )
        self.vert_cls = np.array(
            [vertex_class(ix) for ix, _ in icoords], dtype=np.uint8
        )
        nbr = np.full((self.nv, 3), -1, dtype=np.int32)
        sector = np.full((self.nv, 3), -1, dtype=np.int32)
        ne = 0
        for i in range(self.nf):
            for k in range(6):
                a, b = corner[i, k], corner[i, (k + 1) % 6]
                for t, h in ((a, b), (b, a)):
                    c = self.vert_cls[t]
                    dvec = (
                        int(self.vert_icoord[h, 0] - self.vert_icoord[t, 0]),
                        int(self.vert_icoord[h, 1] - self.vert_icoord[t, 1]),
                    )
                    s = EDGE_SLOT[c][dvec]
                    if nbr[t, s] == -1:
                        nbr[t, s] = h
                        if t <= h:
                            ne += 1
                    elif nbr[t, s] != h:
                        raise InvalidDomain("inconsistent edge table")
                # sector face: offset of the face center from each corner
            cxy = (3 * int(self.faces_axial[i, 0]),
                   2 * int(self.faces_axial[i, 1]) + int(self.faces_axial[i, 0]))
            for k in range(6):
                v = corner[i, k]
                off = (cxy[0] - int(self.vert_icoord[v, 0]),
                       cxy[1] - int(self.vert_icoord[v, 1]))
                c = self.vert_cls[v]
                s = SECTOR_OFF[c].index(off)
                sector[v, s] = i
        # count undirected edges properly
        ne = 0
        for v in range(self.nv):
            for s in range(3):
                if nbr[v, s] >= 0 and v < nbr[v, s]:
                    ne += 1
        self.ne = ne
        self.vert_nbr = nbr
        self.vert_sector = sector
        self.interior = (sector >= 0).all(axis=1)
        if self.nv - self.ne + self.nf != 1:
            raise InvalidDomain(
                "face set is not simply connected "
                "(V - E + F = %d)" % (self.nv - self.ne + self.nf)
            )

    def _build_boundary(self):
        # directed boundary edges, inner face on the left: corner d ->
        # corner d+1 of every face whose neighbor d is missing
        nxt: dict[int, int] = {}
        inner: dict[int, tuple[int, int]] = {}  # tail -> (face, d)
        for i in range(self.nf):
            for d in range(6):
                if self.face_adj[i, d] == -1:
                    a = int(self.face_corner[i, d])
                    b = int(self.face_corner[i, (d + 1) % 6])
                    if a in nxt:
                        raise InvalidDomain("boundary is not a simple cycle")
                    nxt[a] = b
                    inner[a] = (i, d)
        if not nxt:
            raise InvalidDomain("domain has no boundary")
        start = min(nxt.keys(), key=lambda v: (int(self.vert_icoord[v, 0]),
                                               int(self.vert_icoord[v, 1])))
        cycle = [start]
        v = nxt[start]
        while v != start:
            cycle.append(v)
            v = nxt.get(v, start)
            if len(cycle) > len(nxt) + 1:
                raise InvalidDomain("boundary walk does not close")
        if len(cycle) != len(nxt):
            raise InvalidDomain("boundary has more than one cycle")
        self.cycle = np.array(cycle, dtype=np.int32)
        self.cyc_pos = np.full(self.nv, -1, dtype=np.int32)
        self.cyc_pos[self.cycle] = np.arange(len(cycle), dtype=np.int32)
        self.cyc_inner_face = np.array(
            [inner[v][0] for v in cycle], dtype=np.int32
        )
        self.cyc_inner_dir = np.array(
            [inner[v][1] for v in cycle], dtype=np.int32
        )

    def _snap(self, p: complex) -> int:
        d = np.abs(self.vert_pos[self.cycle] - p)
        best = float(d.min())
        # ties: first hit in cycle order
        idx = int(np.nonzero(d <= best * (1 + 1e-12) + 1e-300)[0][0])
        return int(self.cycle[idx])

    def _place_marks(self):
        sh, mk = self.spec.shape, self.spec.marks
        self.lv = self._snap(sh.boundary_point(mk.l))
        self.rv = self._snap(sh.boundary_point(mk.r))
        self.wv = self._snap(sh.boundary_point(mk.w))
        if len({self.lv, self.rv, self.wv}) < 3:
            raise MarkCollision(
                "marks snapped to vertices l=%d r=%d w=%d" % (self.lv, self.rv, self.wv)
            )
        # w must lie on the arc u (ccw strictly between r and l)
        C = len(self.cycle)
        pl, pr, pw = (int(self.cyc_pos[v]) for v in (self.lv, self.rv, self.wv))
        if (pw - pr) % C >= (pl - pr) % C:
            raise MarkCollision("mark w does not lie strictly inside arc u")

    def _classify_boundary_edges(self):
        C = len(self.cycle)
        pl, pr = int(self.cyc_pos[self.lv]), int(self.cyc_pos[self.rv])
        span_u = (pl - pr) % C
        arc = np.empty(C, dtype=np.uint8)
        for i in range(C):
            arc[i] = 0 if (i - pr) % C < span_u else 1
        self.arc_of_edge = arc
        self.arcu_edges = np.array(
            [(pr + k) % C for k in range(span_u)], dtype=np.int32
        )
        self.arcd_edges = np.array(
            [(pl + k) % C for k in range(C - span_u)], dtype=np.int32
        )
        near = np.zeros(C, dtype=bool)
        for v in (self.lv, self.rv):
            p = int(self.cyc_pos[v])
            near[p] = True
            near[(p - 1) % C] = True
        self.edge_near_mark = near
        self.face_nb_u = np.zeros(self.nf, dtype=np.int16)
        self.face_nb_d = np.zeros(self.nf, dtype=np.int16)
        self.face_nb_u_int = np.zeros(self.nf, dtype=np.int16)
        self.face_nb_d_int = np.zeros(self.nf, dtype=np.int16)
        for i in range(C):
            f = int(self.cyc_inner_face[i])
            if arc[i] == 0:
                self.face_nb_u[f] += 1
                if not near[i]:
                    self.face_nb_u_int[f] += 1
            else:
                self.face_nb_d[f] += 1
                if not near[i]:
                    self.face_nb_d_int[f] += 1
        self.lv_faces = self._incident_faces(self.lv)
        self.rv_faces = self._incident_faces(self.rv)

    def _incident_faces(self, v: int) -> np.ndarray:
        fs = [int(f) for f in self.vert_sector[v] if f >= 0]
        return np.array(sorted(set(fs)), dtype=np.int32)

    # -- edge algebra ------------------------------------------------------

    def edge_slot(self, e: OrientedEdge) -> int:
        for s in range(3):
            if self.vert_nbr[e.tail, s] == e.head:
                return s
        raise ValueError("not an edge of the domain: %r" % (e,))

    def edge_vec_int(self, e: OrientedEdge) -> tuple[int, int]:
        return (
            int(self.vert_icoord[e.head, 0] - self.vert_icoord[e.tail, 0]),
            int(self.vert_icoord[e.head, 1] - self.vert_icoord[e.tail, 1]),
        )

    def edge_vec(self, e: OrientedEdge) -> complex:
        a, b = self.edge_vec_int(e)
        return complex(a * self.delta / 2, b * self.delta * SQRT3 / 2)

    def rotate_edge(self, e: OrientedEdge, k: int = 1) -> OrientedEdge:
        """Rotate an oriented edge about its tail by k * 120 degrees ccw."""
        s = (self.edge_slot(e) + k) % 3
        h = int(self.vert_nbr[e.tail, s])
        if h < 0:
            raise OutsideDomain(
                "rotation of %r by %d leaves the domain" % (e, k)
            )
        return OrientedEdge(e.tail, h)

    def edge_faces(self, e: OrientedEdge) -> tuple[int, int]:
        """(left, right) faces of an oriented edge; -1 when absent."""
        s = self.edge_slot(e)
        return (
            int(self.vert_sector[e.tail, s]),
            int(self.vert_sector[e.tail, (s + 2) % 3]),
        )

    def dual_edge(self, e: OrientedEdge) -> DualEdge:
        """Dual edge crossing e from its right face to its left face; its
        vector is sqrt(3) * i times the primal edge vector."""
        left, right = self.edge_faces(e)
        if left < 0 or right < 0:
            raise BoundaryEdge("dual edge undefined on the boundary: %r" % (e,))
        a, b = sqrt3_i_int(*self.edge_vec_int(e))
        return DualEdge(
            complex(a * self.delta / 2, b * self.delta * SQRT3 / 2), right, left
        )

    def boundary_arcs(self) -> BoundaryArcs:
        C = len(self.cycle)

        def edges(idx):
            return [
                OrientedEdge(int(self.cycle[i]), int(self.cycle[(i + 1) % C]))
                for i in idx
            ]

        return BoundaryArcs(edges(self.arcu_edges), edges(self.arcd_edges))

    def interior_edges(self) -> list[OrientedEdge]:
        """All oriented edges whose two flanking faces both exist."""
        out = []
        for v in range(self.nv):
            for s in range(3):
                h = int(self.vert_nbr[v, s])
                if h < 0:
                    continue
                if self.vert_sector[v, s] >= 0 and self.vert_sector[v, (s + 2) % 3] >= 0:
                    out.append(OrientedEdge(v, int(h)))
        return out

    def __repr__(self):
        return "DiscreteDomain(faces=%d, vertices=%d, delta=%g)" % (
            self.nf,
            self.nv,
            self.delta,
        )


def discretize(spec: DomainSpec) -> DiscreteDomain:
    """Discretize a marked Jordan domain at mesh size ``spec.delta``."""
    return DiscreteDomain(spec)
