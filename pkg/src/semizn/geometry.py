"""Exact lattice-polytope machinery: convex hulls over Q, strict faces with
witnessing directions, face-accessibility of step graphs, and the refined
normal fan that turns "for every nonzero direction v" conditions into a
finite list of rational representatives.

The fan construction rests on two standard facts: the common refinement of
the normal fans of several polytopes is the normal fan of their Minkowski
sum, and a hyperplane split by a^⊥ is the normal fan of the segment
conv{0, a}.  Each face of the sum polytope yields one cell; a representative
in the cell's relative interior is the sum of the primitive outer normals of
the facets containing the face (plus, when the sum polytope is not
full-dimensional, the basis vectors of the orthogonal complement of its
affine hull for the lineality cell).  Every representative is verified
a posteriori to select exactly its face, so the enumeration is
self-certifying.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

from semizn import linalg


@dataclass(frozen=True)
class Face:
    """Strict face: all input points on it, its dimension, and an ambient
    direction whose argmax over the polytope is exactly this face."""

    point_indices: frozenset
    points: tuple
    dim: int
    direction: tuple


class LatticePolytope:
    def __init__(self, points: Sequence[Sequence[int]]):
        if not points:
            raise ValueError("empty point set")
        pts = sorted({tuple(int(v) for v in p) for p in points})
        self.points = tuple(pts)
        self.n = len(pts[0])
        if any(len(p) != self.n for p in pts):
            raise ValueError("points of mixed dimension")
        self._build()

    # -- construction ---------------------------------------------------------
    def _build(self):
        p0 = self.points[0]
        basis = []
        rows = []
        for p in self.points[1:]:
            diff = [a - b for a, b in zip(p, p0)]
            if linalg.rank(rows + [diff], self.n) > len(basis):
                basis.append(diff)
                rows.append(diff)
        self.dim = len(basis)
        self._basis = basis
        bmat = [[basis[j][i] for j in range(self.dim)] for i in range(self.n)]
        self._coords = []
        for p in self.points:
            rhs = [a - b for a, b in zip(p, p0)]
            c = linalg.solve_linear(bmat, rhs) if self.dim else []
            self._coords.append(tuple(c))
        self._facets = self._facet_hyperplanes()
        self._faces = self._face_lattice()
        if self.dim == 0:
            self.vertices = [self.points[0]]
        else:
            self.vertices = sorted(
                f.points[0] for f in self._faces if f.dim == 0
            )
        self._verify_faces()

    def _facet_hyperplanes(self):
        """Facets as (coord normal, support, point index set), exact."""
        k = self.dim
        coords = self._coords
        m = len(coords)
        if k == 0:
            return []
        if k == 1:
            vals = [c[0] for c in coords]
            top = max(vals)
            bot = min(vals)
            return [
                ((1,), top, frozenset(i for i in range(m) if vals[i] == top)),
                ((-1,), -bot, frozenset(i for i in range(m) if vals[i] == bot)),
            ]
        if k == 2:
            return self._facets_2d()
        if comb(m, k) > 2_000_000:
            raise ValueError("point set too large for exact facet enumeration")
        found = {}
        for idxs in combinations(range(m), k):
            base = coords[idxs[0]]
            diffs = [
                [coords[i][j] - base[j] for j in range(k)] for i in idxs[1:]
            ]
            null = linalg.nullspace(diffs, k)
            if len(null) != 1:
                continue
            h = linalg.primitive_vector(null[0])
            vals = [linalg.dot(h, c) for c in coords]
            ref = linalg.dot(h, base)
            if all(v <= ref for v in vals):
                pass
            elif all(v >= ref for v in vals):
                h = tuple(-x for x in h)
                vals = [-v for v in vals]
                ref = -ref
            else:
                continue
            on = frozenset(i for i in range(m) if vals[i] == ref)
            found[h] = (h, ref, on)
        return sorted(found.values())

    def _facets_2d(self):
        coords = self._coords
        order = sorted(range(len(coords)), key=lambda i: coords[i])

        def cross(o, a, b):
            return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

        lower: list[int] = []
        for i in order:
            while len(lower) >= 2 and cross(coords[lower[-2]], coords[lower[-1]], coords[i]) <= 0:
                lower.pop()
            lower.append(i)
        upper: list[int] = []
        for i in reversed(order):
            while len(upper) >= 2 and cross(coords[upper[-2]], coords[upper[-1]], coords[i]) <= 0:
                upper.pop()
            upper.append(i)
        ring = lower[:-1] + upper[:-1]
        facets = {}
        for t in range(len(ring)):
            p = coords[ring[t]]
            q = coords[ring[(t + 1) % len(ring)]]
            h = linalg.primitive_vector((q[1] - p[1], -(q[0] - p[0])))
            ref = linalg.dot(h, p)
            on = frozenset(
                i for i, c in enumerate(coords) if linalg.dot(h, c) == ref
            )
            facets[h] = (h, ref, on)
        return sorted(facets.values())

    def _ambient_normal(self, h_coords):
        """Lift a coord-space normal to an ambient integer direction."""
        rows = [list(b) for b in self._basis]
        w = linalg.solve_linear(rows, list(h_coords))
        return linalg.primitive_vector(w)

    def _face_lattice(self):
        facet_sets = [f[2] for f in self._facets]
        ambient = [self._ambient_normal(f[0]) for f in self._facets]
        self._facet_normals = ambient
        seen = set(facet_sets)
        queue = list(facet_sets)
        while queue:
            cur = queue.pop()
            for fs in facet_sets:
                inter = cur & fs
                if inter and inter not in seen:
                    seen.add(inter)
                    queue.append(inter)
        faces = []
        for s in seen:
            pts = tuple(self.points[i] for i in sorted(s))
            d = self._affine_dim(s)
            direction = [0] * self.n
            for fs, w in zip(facet_sets, ambient):
                if s <= fs:
                    direction = [a + b for a, b in zip(direction, w)]
            faces.append(
                Face(frozenset(s), pts, d, linalg.primitive_vector(direction))
            )
        faces.sort(key=lambda f: (f.dim, f.points))
        return faces

    def _affine_dim(self, idx_set) -> int:
        idxs = sorted(idx_set)
        base = self._coords[idxs[0]]
        rows = [
            [self._coords[i][j] - base[j] for j in range(self.dim)] for i in idxs[1:]
        ]
        return linalg.rank(rows, self.dim) if rows else 0

    def _verify_faces(self):
        for f in self._faces:
            got = self.face_points(f.direction)
            if got != f.point_indices:
                raise RuntimeError("face witness direction failed verification")

    # -- queries ----------------------------------------------------------------
    def strict_faces(self) -> list[Face]:
        return list(self._faces)

    def support_value(self, v: Sequence):
        return max(linalg.dot(v, p) for p in self.points)

    def face_points(self, v: Sequence) -> frozenset:
        """Indices of the points attaining max v.x."""
        vals = [linalg.dot(v, p) for p in self.points]
        top = max(vals)
        return frozenset(i for i, val in enumerate(vals) if val == top)

    def complement_basis(self) -> list[tuple]:
        """Primitive integer basis of the orthogonal complement of the
        affine hull's direction space (empty when full-dimensional)."""
        if self.dim == self.n:
            return []
        rows = [list(b) for b in self._basis]
        null = linalg.nullspace(rows, self.n) if rows else [
            [Fraction(int(i == j)) for j in range(self.n)] for i in range(self.n)
        ]
        return [linalg.primitive_vector(v) for v in null]

    def ambient_halfspaces(self) -> list[tuple]:
        """Facet description {x : w.x <= b} in ambient coordinates; only
        complete for full-dimensional polytopes."""
        if self.dim != self.n:
            raise ValueError("halfspace description requires a full-dimensional polytope")
        out = []
        for w in self._facet_normals:
            out.append((w, self.support_value(w)))
        return sorted(out)

    def __eq__(self, other):
        return (
            isinstance(other, LatticePolytope)
            and self.n == other.n
            and self.vertices == other.vertices
        )

    def __hash__(self):
        return hash((self.n, tuple(self.vertices)))

    def __repr__(self):
        return f"LatticePolytope(dim={self.dim}, vertices={len(self.vertices)})"


def convex_hull(points: Sequence[Sequence[int]]) -> LatticePolytope:
    return LatticePolytope(points)


# ---------------------------------------------------------------------------
# Face accessibility of step graphs
# ---------------------------------------------------------------------------

def is_face_accessible(graph):
    """Directional accessibility: for every nonzero direction, the argmax
    face of the vertex hull must contain the start of an edge leaving it.

    Returns (ok, report).  For full-dimensional hulls this is exactly
    "every strict face has an escaping edge"; lower-dimensional hulls are
    never accessible (any direction flattening the hull selects the whole
    polytope, which no edge can leave), and the report marks them so.
    """
    P = convex_hull(graph.vertices())
    report = []
    ok = True
    for face in P.strict_faces():
        fpts = set(face.points)
        acc = any(
            e[0] in fpts and graph.destination(e) not in fpts for e in graph.edges
        )
        report.append({
            "direction": list(face.direction),
            "face": [list(p) for p in face.points],
            "accessible": acc,
        })
        ok = ok and acc
    for w in P.complement_basis():
        report.append({
            "direction": list(w),
            "face": [list(p) for p in P.points],
            "accessible": False,
            "reason": "hull is not full-dimensional",
        })
        ok = False
    return ok, report


# ---------------------------------------------------------------------------
# Refined normal fan
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FanCell:
    """One cell of the refined fan: a representative direction in its
    relative interior, the selected face of each input polytope (as point
    subsets), and the sign of v.a for each hyperplane normal a."""

    direction: tuple
    face_points: tuple
    selected: tuple
    hyperplane_signs: tuple


def _minkowski_points(point_sets):
    acc = None
    for pts in point_sets:
        if acc is None:
            acc = [tuple(p) for p in pts]
        else:
            acc = [
                tuple(a + b for a, b in zip(p, q)) for p in acc for q in pts
            ]
        acc = list(convex_hull(acc).vertices)
    return acc


def refined_fan(polytopes, hyperplanes=()) -> list[FanCell]:
    """Finite set of rational directions meeting the relative interior of
    every cell of the common refinement of the polytopes' normal fans and
    the hyperplanes a^⊥, covering all nonzero directions."""
    point_sets = []
    for P in polytopes:
        pts = P.points if isinstance(P, LatticePolytope) else [tuple(p) for p in P]
        if not pts:
            raise ValueError("empty polytope in fan input")
        point_sets.append(list(pts))
    if not point_sets:
        raise ValueError("need at least one polytope")
    n = len(point_sets[0][0])
    segs = []
    for a in hyperplanes:
        a = tuple(int(v) for v in a)
        if any(a):
            segs.append([(0,) * n, a])
    if n == 0:
        return []
    Q = convex_hull(_minkowski_points(point_sets + segs))

    def make_cell(v, face_idx_set):
        selected = tuple(
            frozenset(
                p for p in pts
                if linalg.dot(v, p) == max(linalg.dot(v, q) for q in pts)
            )
            for pts in point_sets
        )
        signs = []
        for a in hyperplanes:
            val = linalg.dot(v, a)
            signs.append(0 if val == 0 else (1 if val > 0 else -1))
        return FanCell(
            direction=tuple(v),
            face_points=tuple(Q.points[i] for i in sorted(face_idx_set)),
            selected=selected,
            hyperplane_signs=tuple(signs),
        )

    cells = []
    for face in Q.strict_faces():
        cells.append(make_cell(face.direction, face.point_indices))
    for w in Q.complement_basis():
        all_idx = frozenset(range(len(Q.points)))
        for v in (w, tuple(-x for x in w)):
            if Q.face_points(v) != all_idx:
                raise RuntimeError("lineality representative failed verification")
            cells.append(make_cell(v, all_idx))
    cells.sort(key=lambda c: c.direction)
    return cells
