"""Conforming triangulations of simple polygons.

The pipeline is dependency-free and deterministic: the polygon boundary is
subdivided to the target size, triangulated by ear clipping, refined by
longest-edge (Rivara) bisection until every boundary edge is at most
``h_max`` and every interior edge at most ``2*h_max``, then improved by
Lawson edge flips interleaved with guarded Laplacian smoothing of the
interior nodes (boundary nodes stay pinned on the polygon).

Node ordering is reproducible: boundary-chain nodes first in traversal
order, then bisection midpoints in creation order.  All comparisons are
relative, so re-triangulating a polygon scaled by a power of two (with
``h_max`` scaled alike) reproduces the scaled node set bit for bit.
"""
from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from .geometry import Polygon, PolygonError, _fmt17


class MeshError(RuntimeError):
    """The triangulation violates a structural invariant."""


class MeshResourceError(MeshError):
    """The requested resolution is infeasibly fine."""


class TriangleMesh:
    """Immutable conforming triangle mesh of a polygon.

    ``boundary_edges`` are directed node pairs following the polygon
    boundary counterclockwise, each tagged with the index of the polygon
    edge it subdivides.
    """

    def __init__(self, nodes, triangles, boundary_edges, boundary_tags):
        self.nodes = np.ascontiguousarray(np.asarray(nodes, dtype=float))
        self.triangles = np.ascontiguousarray(np.asarray(triangles, dtype=np.int32))
        self.boundary_edges = np.ascontiguousarray(np.asarray(boundary_edges, dtype=np.int32))
        self.boundary_tags = np.ascontiguousarray(np.asarray(boundary_tags, dtype=np.int32))
        for a in (self.nodes, self.triangles, self.boundary_edges, self.boundary_tags):
            a.setflags(write=False)
        self._cache: dict = {}

    # -- sizes ---------------------------------------------------------------

    @property
    def node_count(self) -> int:
        return self.nodes.shape[0]

    @property
    def tri_count(self) -> int:
        return self.triangles.shape[0]

    def __repr__(self) -> str:
        return (f"TriangleMesh(nodes={self.node_count}, triangles={self.tri_count}, "
                f"boundary_edges={self.boundary_edges.shape[0]})")

    # -- cached geometry -----------------------------------------------------

    def _get(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    @property
    def tri_areas(self) -> np.ndarray:
        def build():
            p = self.nodes[self.triangles]  # (T,3,2)
            d1 = p[:, 1] - p[:, 0]
            d2 = p[:, 2] - p[:, 0]
            return 0.5 * (d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0])
        return self._get("tri_areas", build)

    @property
    def tri_grads(self) -> np.ndarray:
        """Per-triangle gradient operators: (T, 2, 3) mapping nodal values
        of the three vertices to the constant gradient of the linear
        interpolant."""
        def build():
            p = self.nodes[self.triangles]
            a2 = 2.0 * self.tri_areas  # (T,)
            g = np.empty((self.tri_count, 2, 3))
            # rotated edge vectors over twice the area
            for i in range(3):
                j, k = (i + 1) % 3, (i + 2) % 3
                e = p[:, k] - p[:, j]
                g[:, 0, i] = -e[:, 1] / a2
                g[:, 1, i] = e[:, 0] / a2
            return g
        return self._get("tri_grads", build)

    @property
    def boundary_lengths(self) -> np.ndarray:
        def build():
            d = self.nodes[self.boundary_edges[:, 1]] - self.nodes[self.boundary_edges[:, 0]]
            return np.hypot(d[:, 0], d[:, 1])
        return self._get("boundary_lengths", build)

    @property
    def boundary_nodes(self) -> np.ndarray:
        return self._get("boundary_nodes", lambda: np.unique(self.boundary_edges))

    @property
    def is_boundary_node(self) -> np.ndarray:
        def build():
            m = np.zeros(self.node_count, dtype=bool)
            m[self.boundary_nodes] = True
            return m
        return self._get("is_boundary_node", build)

    @property
    def interior_nodes(self) -> np.ndarray:
        return self._get("interior_nodes",
                         lambda: np.nonzero(~self.is_boundary_node)[0])

    @property
    def unique_edges(self) -> np.ndarray:
        def build():
            t = self.triangles
            e = np.vstack([t[:, [0, 1]], t[:, [1, 2]], t[:, [2, 0]]])
            e.sort(axis=1)
            return np.unique(e, axis=0)
        return self._get("unique_edges", build)

    def min_angle_deg(self) -> float:
        p = self.nodes[self.triangles]
        angs = []
        for i in range(3):
            a = p[:, (i + 1) % 3] - p[:, i]
            b = p[:, (i + 2) % 3] - p[:, i]
            cosv = (a * b).sum(axis=1) / (np.hypot(a[:, 0], a[:, 1]) * np.hypot(b[:, 0], b[:, 1]))
            angs.append(np.degrees(np.arccos(np.clip(cosv, -1.0, 1.0))))
        return float(np.min(angs))

    def scaled(self, t: float) -> "TriangleMesh":
        """Similarity-scaled copy sharing the topology."""
        if t <= 0.0:
            raise ValueError(f"scale factor must be positive, got {t}")
        return TriangleMesh(self.nodes * t, self.triangles, self.boundary_edges, self.boundary_tags)

    # -- validation ----------------------------------------------------------

    def validate(self, poly: Polygon | None = None) -> None:
        """Raise MeshError on any violated structural invariant."""
        if np.any(self.tri_areas <= 0.0):
            bad = int(np.argmin(self.tri_areas))
            raise MeshError(f"triangle {bad} has non-positive area {self.tri_areas[bad]:.3e}")

        t = self.triangles
        e = np.vstack([t[:, [0, 1]], t[:, [1, 2]], t[:, [2, 0]]])
        e.sort(axis=1)
        edges, counts = np.unique(e, axis=0, return_counts=True)
        bset = {tuple(sorted(be)) for be in self.boundary_edges.tolist()}
        for (a, b), c in zip(edges.tolist(), counts.tolist()):
            on_boundary = (a, b) in bset
            if on_boundary and c != 1:
                raise MeshError(f"boundary edge ({a},{b}) belongs to {c} triangles")
            if not on_boundary and c != 2:
                raise MeshError(f"interior edge ({a},{b}) belongs to {c} triangles")

        V, E, F = self.node_count, edges.shape[0], self.tri_count
        if V - E + F != 1:
            raise MeshError(f"Euler relation violated: V-E+F = {V - E + F}")

        # boundary chain must be one closed loop visiting each node once
        succ = {}
        for u, v in self.boundary_edges.tolist():
            if u in succ:
                raise MeshError(f"boundary node {u} has two outgoing boundary edges")
            succ[u] = v
        start = int(self.boundary_edges[0, 0])
        seen = 0
        cur = start
        while True:
            cur = succ.get(cur)
            if cur is None:
                raise MeshError("boundary chain is broken")
            seen += 1
            if cur == start:
                break
            if seen > len(succ):
                raise MeshError("boundary chain does not close into a single loop")
        if seen != len(succ):
            raise MeshError("boundary has more than one loop")

        if poly is not None:
            blen = float(np.sum(self.boundary_lengths))
            if abs(blen - poly.perimeter) > 1e-12 * poly.perimeter:
                raise MeshError(
                    f"boundary length {blen!r} differs from polygon perimeter {poly.perimeter!r}")
            tol = 1e-12 * max(poly.bbox_diagonal, 1e-300)
            for i, vert in enumerate(poly.vertices):
                d = np.hypot(self.nodes[:, 0] - vert[0], self.nodes[:, 1] - vert[1])
                if d.min() > tol:
                    raise MeshError(f"polygon vertex {i} is not a mesh node")


# ---------------------------------------------------------------------------
# triangulation pipeline


def triangulate(poly: Polygon, h_max: float, quality_passes: int = 4) -> TriangleMesh:
    """Triangulate a polygon with boundary edges <= h_max, interior <= 2*h_max."""
    if h_max <= 0.0:
        raise ValueError(f"h_max must be positive, got {h_max}")
    min_feature = float(np.min(poly.edge_lengths))
    if h_max < 1e-6 * min_feature:
        est = int(poly.perimeter / h_max + 2.4 * poly.area / (h_max * h_max))
        raise MeshResourceError(
            f"h_max = {h_max:.3e} is below 1e-6 of the smallest polygon feature "
            f"({min_feature:.3e}); roughly {est} elements would be required")

    builder = _Builder(poly, h_max)
    builder.earclip()
    builder.refine_to_size()
    builder.improve(quality_passes)
    mesh = builder.finish()
    mesh.validate(poly)
    return mesh


class _Builder:
    def __init__(self, poly: Polygon, h_max: float):
        self.poly = poly
        self.h_bound = h_max
        self.h_int = 2.0 * h_max
        self.diag = poly.bbox_diagonal

        # boundary subdivision; node i connects to node i+1 (mod nb)
        pts: list[tuple[float, float]] = []
        tags: list[int] = []
        v = poly.vertices
        for ei in range(v.shape[0]):
            p = v[ei]
            q = v[(ei + 1) % v.shape[0]]
            seg = math.hypot(q[0] - p[0], q[1] - p[1])
            nseg = max(1, int(math.ceil(seg / h_max - 1e-12)))
            for k in range(nseg):
                f = k / nseg
                pts.append((p[0] + f * (q[0] - p[0]), p[1] + f * (q[1] - p[1])))
                tags.append(ei)
        self.nodes: list[tuple[float, float]] = pts
        nb = len(pts)
        self.boundary_next: dict[int, tuple[int, int]] = {
            i: ((i + 1) % nb, tags[i]) for i in range(nb)
        }
        self.boundary_pairs: set[tuple[int, int]] = {
            tuple(sorted((i, (i + 1) % nb))) for i in range(nb)
        }

        self.tris: dict[int, tuple[int, int, int]] = {}
        self.next_tid = 0
        self.edge_tris: dict[tuple[int, int], set[int]] = {}

    # -- basic topology ------------------------------------------------------

    def _add_tri(self, a: int, b: int, c: int) -> int:
        tid = self.next_tid
        self.next_tid += 1
        self.tris[tid] = (a, b, c)
        for e in ((a, b), (b, c), (c, a)):
            key = (e[0], e[1]) if e[0] < e[1] else (e[1], e[0])
            self.edge_tris.setdefault(key, set()).add(tid)
        return tid

    def _remove_tri(self, tid: int) -> None:
        a, b, c = self.tris.pop(tid)
        for e in ((a, b), (b, c), (c, a)):
            key = (e[0], e[1]) if e[0] < e[1] else (e[1], e[0])
            s = self.edge_tris[key]
            s.discard(tid)
            if not s:
                del self.edge_tris[key]

    def _edge_len(self, e: tuple[int, int]) -> float:
        p = self.nodes[e[0]]
        q = self.nodes[e[1]]
        return math.hypot(q[0] - p[0], q[1] - p[1])

    def _longest_edge(self, tid: int) -> tuple[int, int]:
        a, b, c = self.tris[tid]
        best = None
        for e in ((a, b), (b, c), (c, a)):
            key = (e[0], e[1]) if e[0] < e[1] else (e[1], e[0])
            item = (self._edge_len(key), key[0], key[1])
            if best is None or item > best:
                best = item
        return (best[1], best[2])

    # -- ear clipping ----------------------------------------------------------

    def earclip(self) -> None:
        pts = np.asarray(self.nodes, dtype=float)
        idx = list(range(len(self.nodes)))
        tol_area = 1e-12 * self.diag * self.diag

        def min_angle(pa, pb, pc) -> float:
            la = math.hypot(*(pb - pa))
            lb = math.hypot(*(pc - pb))
            lc = math.hypot(*(pa - pc))
            s = sorted((la, lb, lc))
            # smallest angle is opposite the shortest edge
            cosv = (s[1] ** 2 + s[2] ** 2 - s[0] ** 2) / (2.0 * s[1] * s[2])
            return math.acos(max(-1.0, min(1.0, cosv)))

        while len(idx) > 3:
            m = len(idx)
            arr = pts[idx]
            best_pos = -1
            best_q = -1.0
            for pos in range(m):
                pa = arr[pos - 1]
                pb = arr[pos]
                pc = arr[(pos + 1) % m]
                cross = (pb[0] - pa[0]) * (pc[1] - pb[1]) - (pb[1] - pa[1]) * (pc[0] - pb[0])
                if cross <= tol_area:
                    continue  # reflex or collinear corner
                # no other active vertex may lie in (or touch) the ear
                s1 = (pb[0] - pa[0]) * (arr[:, 1] - pa[1]) - (pb[1] - pa[1]) * (arr[:, 0] - pa[0])
                s2 = (pc[0] - pb[0]) * (arr[:, 1] - pb[1]) - (pc[1] - pb[1]) * (arr[:, 0] - pb[0])
                s3 = (pa[0] - pc[0]) * (arr[:, 1] - pc[1]) - (pa[1] - pc[1]) * (arr[:, 0] - pc[0])
                inside = (s1 >= -tol_area) & (s2 >= -tol_area) & (s3 >= -tol_area)
                inside[pos - 1] = inside[pos] = inside[(pos + 1) % m] = False
                if inside.any():
                    continue
                q = min_angle(pa, pb, pc)
                if q > best_q:
                    best_q = q
                    best_pos = pos
                if q >= 0.35:  # ~20 degrees: good enough, stop scanning
                    break
            if best_pos < 0:
                raise MeshError("ear clipping failed: no valid ear (polygon not simple?)")
            a = idx[best_pos - 1]
            b = idx[best_pos]
            c = idx[(best_pos + 1) % len(idx)]
            self._add_tri(a, b, c)
            idx.pop(best_pos)

        a, b, c = idx
        pa, pb, pc = pts[a], pts[b], pts[c]
        cross = (pb[0] - pa[0]) * (pc[1] - pb[1]) - (pb[1] - pa[1]) * (pc[0] - pb[0])
        if cross <= tol_area:
            raise MeshError("ear clipping failed: degenerate final triangle")
        self._add_tri(a, b, c)

    # -- longest-edge (Rivara) refinement ---------------------------------------

    def _limit(self, key: tuple[int, int]) -> float:
        return self.h_bound if key in self.boundary_pairs else self.h_int

    def _bisect(self, key: tuple[int, int]) -> None:
        """Split edge ``key`` at its midpoint; callers guarantee it is the
        longest edge of every adjacent triangle."""
        a, b = key
        pa = self.nodes[a]
        pb = self.nodes[b]
        mid = ((pa[0] + pb[0]) * 0.5, (pa[1] + pb[1]) * 0.5)
        m = len(self.nodes)
        self.nodes.append(mid)

        if key in self.boundary_pairs:
            self.boundary_pairs.discard(key)
            if self.boundary_next.get(a, (None,))[0] == b:
                u, v = a, b
            else:
                u, v = b, a
            tag = self.boundary_next[u][1]
            self.boundary_next[u] = (m, tag)
            self.boundary_next[m] = (v, tag)
            self.boundary_pairs.add(tuple(sorted((u, m))))
            self.boundary_pairs.add(tuple(sorted((m, v))))

        for tid in sorted(self.edge_tris.get(key, ())):
            tri = self.tris[tid]
            # rotate so the split edge comes first
            for r in range(3):
                x, y, z = tri[r], tri[(r + 1) % 3], tri[(r + 2) % 3]
                if {x, y} == {a, b}:
                    break
            self._remove_tri(tid)
            self._add_tri(x, m, z)
            self._add_tri(m, y, z)

    def _refine_edge(self, key: tuple[int, int]) -> None:
        stack = [key]
        in_stack = {key}
        guard = 0
        while stack:
            guard += 1
            if guard > 4_000_000:
                raise MeshError("edge refinement did not terminate")
            e = stack[-1]
            tids = self.edge_tris.get(e)
            if not tids:
                stack.pop()
                in_stack.discard(e)
                continue
            pending = None
            for tid in sorted(tids):
                le = self._longest_edge(tid)
                if le != e:
                    pending = le
                    break
            if pending is None:
                self._bisect(e)
                stack.pop()
                in_stack.discard(e)
            else:
                if pending in in_stack:
                    raise MeshError("edge refinement propagation cycle")
                stack.append(pending)
                in_stack.add(pending)

    def refine_to_size(self) -> None:
        while True:
            oversized = []
            for key in self.edge_tris:
                ln = self._edge_len(key)
                if ln > self._limit(key):
                    oversized.append((-ln, key))
            if not oversized:
                return
            oversized.sort()
            for _, key in oversized:
                if key in self.edge_tris and self._edge_len(key) > self._limit(key):
                    self._refine_edge(key)

    # -- quality improvement -----------------------------------------------------

    def _tri_area(self, a: int, b: int, c: int) -> float:
        pa, pb, pc = self.nodes[a], self.nodes[b], self.nodes[c]
        return 0.5 * ((pb[0] - pa[0]) * (pc[1] - pa[1]) - (pb[1] - pa[1]) * (pc[0] - pa[0]))

    def _tri_min_angle(self, a: int, b: int, c: int) -> float:
        pa, pb, pc = self.nodes[a], self.nodes[b], self.nodes[c]
        la = math.hypot(pb[0] - pa[0], pb[1] - pa[1])
        lb = math.hypot(pc[0] - pb[0], pc[1] - pb[1])
        lc = math.hypot(pa[0] - pc[0], pa[1] - pc[1])
        s = sorted((la, lb, lc))
        if s[1] * s[2] == 0.0:
            return 0.0
        cosv = (s[1] ** 2 + s[2] ** 2 - s[0] ** 2) / (2.0 * s[1] * s[2])
        return math.acos(max(-1.0, min(1.0, cosv)))

    def _flip_pass(self) -> int:
        flips = 0
        for key in sorted(self.edge_tris.keys()):
            if key in self.boundary_pairs:
                continue
            tids = self.edge_tris.get(key)
            if tids is None or len(tids) != 2:
                continue
            t1, t2 = sorted(tids)
            a, b = key
            tri1 = self.tris[t1]
            tri2 = self.tris[t2]
            c = next(x for x in tri1 if x not in key)
            d = next(x for x in tri2 if x not in key)
            new_key = (c, d) if c < d else (d, c)
            if new_key in self.edge_tris:
                continue
            if self._edge_len(new_key) > self.h_int:
                continue
            # orient: tri1 must run a -> b seen from c
            i = tri1.index(c)
            a1, b1 = tri1[(i + 1) % 3], tri1[(i + 2) % 3]
            # candidate triangles after the flip
            if self._tri_area(a1, d, c) <= 0.0 or self._tri_area(d, b1, c) <= 0.0:
                continue
            if not self._delaunay_violated(a1, b1, c, d):
                continue
            self._remove_tri(t1)
            self._remove_tri(t2)
            self._add_tri(a1, d, c)
            self._add_tri(d, b1, c)
            flips += 1
        return flips

    def _delaunay_violated(self, a: int, b: int, c: int, d: int) -> bool:
        """True if d is strictly inside the circumcircle of CCW (a, b, c)."""
        pa, pb, pc, pd = (self.nodes[i] for i in (a, b, c, d))
        ax, ay = pa[0] - pd[0], pa[1] - pd[1]
        bx, by = pb[0] - pd[0], pb[1] - pd[1]
        cx, cy = pc[0] - pd[0], pc[1] - pd[1]
        det = ((ax * ax + ay * ay) * (bx * cy - by * cx)
               - (bx * bx + by * by) * (ax * cy - ay * cx)
               + (cx * cx + cy * cy) * (ax * by - ay * bx))
        return det > 0.0

    def _smooth_pass(self) -> None:
        nbrs: dict[int, set[int]] = {}
        node_tris: dict[int, list[int]] = {}
        for tid, (a, b, c) in self.tris.items():
            for x in (a, b, c):
                node_tris.setdefault(x, []).append(tid)
            for x, y in ((a, b), (b, c), (c, a)):
                nbrs.setdefault(x, set()).add(y)
                nbrs.setdefault(y, set()).add(x)
        boundary = set()
        for u, v in self.boundary_pairs:
            boundary.add(u)
            boundary.add(v)

        for node in range(len(self.nodes)):
            if node in boundary or node not in nbrs:
                continue
            ns = sorted(nbrs[node])
            sx = sum(self.nodes[k][0] for k in ns) / len(ns)
            sy = sum(self.nodes[k][1] for k in ns) / len(ns)
            old = self.nodes[node]
            old_q = min(self._tri_min_angle(*self.tris[t]) for t in node_tris[node])
            self.nodes[node] = (sx, sy)
            ok = True
            for t in node_tris[node]:
                a, b, c = self.tris[t]
                if self._tri_area(a, b, c) <= 0.0:
                    ok = False
                    break
            if ok:
                new_q = min(self._tri_min_angle(*self.tris[t]) for t in node_tris[node])
                if new_q < old_q:
                    ok = False
            if ok:
                for t in node_tris[node]:
                    a, b, c = self.tris[t]
                    for e in ((a, b), (b, c), (c, a)):
                        key = (e[0], e[1]) if e[0] < e[1] else (e[1], e[0])
                        if node in key and self._edge_len(key) > self._limit(key):
                            ok = False
                            break
                    if not ok:
                        break
            if not ok:
                self.nodes[node] = old

    def improve(self, passes: int) -> None:
        for _ in range(passes):
            self._flip_pass()
            self._smooth_pass()
        self._flip_pass()

    # -- output -------------------------------------------------------------------

    def finish(self) -> TriangleMesh:
        nodes = np.asarray(self.nodes, dtype=float)
        tris = np.asarray([self.tris[tid] for tid in sorted(self.tris)], dtype=np.int32)
        # boundary chain in traversal order starting at polygon vertex 0
        chain = []
        cur = 0
        while True:
            nxt, tag = self.boundary_next[cur]
            chain.append((cur, nxt, tag))
            cur = nxt
            if cur == 0:
                break
        bedges = np.asarray([(u, v) for u, v, _ in chain], dtype=np.int32)
        btags = np.asarray([t for _, _, t in chain], dtype=np.int32)
        return TriangleMesh(nodes, tris, bedges, btags)


# ---------------------------------------------------------------------------
# uniform (red) refinement


def uniform_refine(mesh: TriangleMesh) -> TriangleMesh:
    """Split every triangle into four via edge midpoints.

    New nodes are appended in lexicographic edge order, so the node count
    becomes N + E.  Boundary midpoints lie on the original polygon edges
    and inherit their tags.  The returned mesh carries ``parent_edges``,
    an (E, 2) array giving the endpoints that generated each new node.
    """
    edges = mesh.unique_edges
    N = mesh.node_count
    mid_id = {(int(a), int(b)): N + i for i, (a, b) in enumerate(edges)}
    midpoints = 0.5 * (mesh.nodes[edges[:, 0]] + mesh.nodes[edges[:, 1]])
    nodes = np.vstack([mesh.nodes, midpoints])

    def mid(a: int, b: int) -> int:
        return mid_id[(a, b) if a < b else (b, a)]

    tris = []
    for a, b, c in mesh.triangles.tolist():
        ab, bc, ca = mid(a, b), mid(b, c), mid(c, a)
        tris.extend([(a, ab, ca), (ab, b, bc), (ca, bc, c), (ab, bc, ca)])

    bedges = []
    btags = []
    for (u, v), tag in zip(mesh.boundary_edges.tolist(), mesh.boundary_tags.tolist()):
        m = mid(u, v)
        bedges.extend([(u, m), (m, v)])
        btags.extend([tag, tag])

    out = TriangleMesh(nodes, np.asarray(tris, dtype=np.int32),
                       np.asarray(bedges, dtype=np.int32),
                       np.asarray(btags, dtype=np.int32))
    out.parent_edges = edges
    return out


def prolong(values: np.ndarray, fine: TriangleMesh) -> np.ndarray:
    """Interpolate coarse nodal values onto a mesh produced by uniform_refine."""
    edges = getattr(fine, "parent_edges", None)
    if edges is None:
        raise MeshError("fine mesh was not produced by uniform_refine")
    values = np.asarray(values, dtype=float)
    out = np.empty(fine.node_count)
    out[: values.shape[0]] = values
    out[values.shape[0]:] = 0.5 * (values[edges[:, 0]] + values[edges[:, 1]])
    return out


# ---------------------------------------------------------------------------
# text format


def save_mesh(mesh: TriangleMesh, path) -> None:
    """Plain-text format: header 'N T B', then nodes, triangles, tagged
    boundary edges.  Round-trips bit-exactly."""
    lines = [f"{mesh.node_count} {mesh.tri_count} {mesh.boundary_edges.shape[0]}"]
    for x, y in mesh.nodes:
        lines.append(f"{_fmt17(x)} {_fmt17(y)}")
    for a, b, c in mesh.triangles.tolist():
        lines.append(f"{a} {b} {c}")
    for (u, v), tag in zip(mesh.boundary_edges.tolist(), mesh.boundary_tags.tolist()):
        lines.append(f"{u} {v} {tag}")
    Path(path).write_text("\n".join(lines) + "\n")


def load_mesh(path) -> TriangleMesh:
    text = Path(path).read_text().split("\n")
    n, t, b = (int(x) for x in text[0].split())
    nodes = np.array([[float(w) for w in text[1 + i].split()] for i in range(n)])
    tris = np.array([[int(w) for w in text[1 + n + i].split()] for i in range(t)], dtype=np.int32)
    raw = [[int(w) for w in text[1 + n + t + i].split()] for i in range(b)]
    bedges = np.array([[r[0], r[1]] for r in raw], dtype=np.int32)
    btags = np.array([r[2] for r in raw], dtype=np.int32)
    return TriangleMesh(nodes, tris, bedges, btags)


def default_h_max(poly: Polygon) -> float:
    """Reasonable mesh size for a polygon: an eighth of the diagonal,
    capped by three quarters of the smallest boundary feature."""
    return float(min(poly.bbox_diagonal / 8.0, 0.75 * np.min(poly.edge_lengths)))
