"""Face colorings and cluster structure.

A configuration assigns each hexagonal face the color white (True) or black
(False), independently with probability 1/2 each.  Sampling is counter
based: the color of face ``f`` in sample ``i`` for a given seed is a pure
function of ``(seed, i, f)``, so results do not depend on how samples are
chunked across workers, and any sample can be regenerated in isolation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hexlattice import DiscreteDomain

_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_GOLD = np.uint64(0x9E3779B97F4A7C15)


def _mix(z):
    """Finalizer of the splitmix64 generator (vectorized, uint64 in/out)."""
    with np.errstate(over="ignore"):
        z = (z ^ (z >> np.uint64(30))) * _M1
        z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def sample_coloring(nf: int, seed: int, index: int) -> np.ndarray:
    """Colors of all faces for sample ``index``: True = white."""
    with np.errstate(over="ignore"):
        base = _mix(np.uint64(seed) + _GOLD * np.uint64(index + 1))
        f = np.arange(nf, dtype=np.uint64)
        u = _mix(base + _GOLD * (f + np.uint64(1)))
    return (u >> np.uint64(63)).astype(bool)


def coloring_from_index(code: int, nf: int) -> np.ndarray:
    """Coloring encoded as an ``nf``-bit integer; bit f set = face f white."""
    f = np.arange(nf, dtype=np.uint64)
    if nf <= 63:
        return ((np.uint64(code) >> f) & np.uint64(1)).astype(bool)
    return np.array([(code >> int(i)) & 1 for i in range(nf)], dtype=bool)


def negate(colors: np.ndarray) -> np.ndarray:
    """Swap the two colors on every face (an involution; at p = 1/2 the
    negated configuration is equally likely, which is what the
    color-symmetry checks exploit)."""
    return ~np.asarray(colors, dtype=bool)


@dataclass
class ClusterLabels:
    """Connected components of the faces of one color.

    labels[f] is the cluster id of face f, or -1 if f has the other color.
    touch_u[c] / touch_d[c] tell whether cluster c owns a boundary edge on
    the corresponding marked arc.
    """

    labels: np.ndarray
    n: int
    touch_u: np.ndarray
    touch_d: np.ndarray

    def crossing(self) -> np.ndarray:
        """Ids of clusters touching both arcs."""
        return np.nonzero(self.touch_u & self.touch_d)[0]


def label_clusters(
    dom: DiscreteDomain, colors: np.ndarray, color: bool = True
) -> ClusterLabels:
    """Label the connected clusters of ``color`` faces by flood fill."""
    nf = dom.nf
    labels = np.full(nf, -1, dtype=np.int32)
    adj = dom.face_adj
    n = 0
    stack = []
    for f0 in range(nf):
        if colors[f0] != color or labels[f0] >= 0:
            continue
        labels[f0] = n
        stack.append(f0)
        while stack:
            f = stack.pop()
            for d in range(6):
                g = adj[f, d]
                if g >= 0 and colors[g] == color and labels[g] < 0:
                    labels[g] = n
                    stack.append(g)
        n += 1
    touch_u = np.zeros(n, dtype=bool)
    touch_d = np.zeros(n, dtype=bool)
    on_u = np.nonzero(dom.face_nb_u)[0]
    on_d = np.nonzero(dom.face_nb_d)[0]
    for f in on_u:
        if labels[f] >= 0:
            touch_u[labels[f]] = True
    for f in on_d:
        if labels[f] >= 0:
            touch_d[labels[f]] = True
    return ClusterLabels(labels, n, touch_u, touch_d)
