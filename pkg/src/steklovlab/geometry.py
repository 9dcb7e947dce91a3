"""Exact planar polygon computations.

Everything in this module is mesh-free: measures (perimeter, area,
isoperimetric ratio), exact circle clipping of the boundary (arc length)
and of the interior (area), a sampled search for the boundary-measure
distortion

    D = sup over centers x and radii r of  |boundary inside B(x,r)| / (2 r),

and generators for the polygon families used in the experiments (spiked
squares and dumbbells).  All functions are pure; polygons are immutable
after validation.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

# Relative tolerance for geometric degeneracy tests, measured against the
# bounding-box diagonal.  Spiked polygons carry features spanning several
# orders of magnitude, so absolute tolerances are never used.
REL_TOL = 1e-12


class PolygonError(ValueError):
    """A vertex list violates the simple-polygon invariants."""


def _fmt17(x: float) -> str:
    """Format a float with 17 significant digits (exact double round-trip)."""
    return format(float(x), ".17g")


class Polygon:
    """Simple closed planar polygon with counterclockwise vertex order.

    Invariants enforced at construction: at least three vertices, strictly
    positive signed area, no two consecutive vertices closer than
    ``1e-12`` of the bounding-box diagonal, and no intersections between
    non-adjacent edges (adjacent edges may meet only at their shared
    vertex).
    """

    __slots__ = ("_vertices", "_perimeter", "_area", "_edge_lengths")

    def __init__(self, vertices, validate: bool = True):
        v = np.ascontiguousarray(np.asarray(vertices, dtype=float))
        if v.ndim != 2 or v.shape[1] != 2:
            raise PolygonError(f"vertices must have shape (n, 2), got {v.shape}")
        if validate:
            _validate_vertices(v)
        v.setflags(write=False)
        self._vertices = v
        self._perimeter = None
        self._area = None
        self._edge_lengths = None

    @property
    def vertices(self) -> np.ndarray:
        return self._vertices

    @property
    def n_vertices(self) -> int:
        return self._vertices.shape[0]

    @property
    def edge_lengths(self) -> np.ndarray:
        if self._edge_lengths is None:
            d = np.roll(self._vertices, -1, axis=0) - self._vertices
            e = np.hypot(d[:, 0], d[:, 1])
            e.setflags(write=False)
            self._edge_lengths = e
        return self._edge_lengths

    @property
    def perimeter(self) -> float:
        if self._perimeter is None:
            self._perimeter = float(np.sum(self.edge_lengths))
        return self._perimeter

    @property
    def area(self) -> float:
        if self._area is None:
            self._area = float(_signed_area(self._vertices))
        return self._area

    @property
    def bbox(self) -> tuple[float, float, float, float]:
        v = self._vertices
        return (v[:, 0].min(), v[:, 0].max(), v[:, 1].min(), v[:, 1].max())

    @property
    def bbox_diagonal(self) -> float:
        x0, x1, y0, y1 = self.bbox
        return math.hypot(x1 - x0, y1 - y0)

    def contains_point(self, point) -> bool:
        """Crossing-number containment test; boundary points count as inside."""
        p = np.asarray(point, dtype=float)
        v = self._vertices
        w = np.roll(v, -1, axis=0)
        tol = REL_TOL * max(self.bbox_diagonal, 1e-300)
        # on-boundary check
        d = w - v
        f = p[None, :] - v
        ll = (d * d).sum(axis=1)
        t = np.clip((f * d).sum(axis=1) / ll, 0.0, 1.0)
        closest = v + t[:, None] * d
        if np.min(np.hypot(*(p[None, :] - closest).T)) <= tol:
            return True
        inside = False
        for (x0, y0), (x1, y1) in zip(v, w):
            if (y0 > p[1]) != (y1 > p[1]):
                xcross = x0 + (p[1] - y0) / (y1 - y0) * (x1 - x0)
                if p[0] < xcross:
                    inside = not inside
        return inside

    def __repr__(self) -> str:
        return f"Polygon(n={self.n_vertices}, perimeter={self.perimeter:.6g}, area={self.area:.6g})"


def _signed_area(v: np.ndarray) -> float:
    x, y = v[:, 0], v[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    return 0.5 * float(np.sum(x * yn - xn * y))


def _validate_vertices(v: np.ndarray) -> None:
    n = v.shape[0]
    if n < 3:
        raise PolygonError(f"polygon needs at least 3 vertices, got {n}")
    if not np.all(np.isfinite(v)):
        raise PolygonError("polygon has non-finite coordinates")
    dx = v[:, 0].max() - v[:, 0].min()
    dy = v[:, 1].max() - v[:, 1].min()
    diag = math.hypot(dx, dy)
    if diag <= 0.0:
        raise PolygonError("all vertices coincide")
    tol = REL_TOL * diag

    d = np.roll(v, -1, axis=0) - v
    lengths = np.hypot(d[:, 0], d[:, 1])
    short = np.nonzero(lengths <= tol)[0]
    if short.size:
        i = int(short[0])
        raise PolygonError(
            f"consecutive vertices {i} and {(i + 1) % n} coincide "
            f"(distance {lengths[i]:.3e} <= tol {tol:.3e})"
        )

    area = _signed_area(v)
    if area <= tol * diag:
        raise PolygonError(
            f"signed area must be strictly positive (got {area:.3e}); "
            "vertices must be in counterclockwise order"
        )

    # Adjacent edges must not fold back onto each other.
    for i in range(n):
        a = d[i]
        b = d[(i + 1) % n]
        cross = a[0] * b[1] - a[1] * b[0]
        if abs(cross) <= tol * lengths[i] * lengths[(i + 1) % n] / diag and np.dot(a, b) < 0.0:
            raise PolygonError(f"edges {i} and {(i + 1) % n} fold back on each other")

    # Non-adjacent edges must be fully disjoint (touching counts as a violation).
    for i in range(n):
        p1, p2 = v[i], v[(i + 1) % n]
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue
            q1, q2 = v[j], v[(j + 1) % n]
            if _segments_touch(p1, p2, q1, q2, tol):
                raise PolygonError(f"polygon is not simple: edges {i} and {j} intersect")


def _segments_touch(p1, p2, q1, q2, tol: float) -> bool:
    """True if the closed segments come within ``tol`` of each other."""
    lo = np.minimum(p1, p2) - tol
    hi = np.maximum(p1, p2) + tol
    if (np.minimum(q1, q2) > hi).any() or (np.maximum(q1, q2) < lo).any():
        return False

    d1 = p2 - p1
    d2 = q2 - q1
    l1 = math.hypot(*d1)
    l2 = math.hypot(*d2)

    # signed distances of each endpoint from the other segment's line
    o1 = (d1[0] * (q1[1] - p1[1]) - d1[1] * (q1[0] - p1[0])) / l1
    o2 = (d1[0] * (q2[1] - p1[1]) - d1[1] * (q2[0] - p1[0])) / l1
    o3 = (d2[0] * (p1[1] - q1[1]) - d2[1] * (p1[0] - q1[0])) / l2
    o4 = (d2[0] * (p2[1] - q1[1]) - d2[1] * (p2[0] - q1[0])) / l2

    if (o1 > tol and o2 > tol) or (o1 < -tol and o2 < -tol):
        return False
    if (o3 > tol and o4 > tol) or (o3 < -tol and o4 < -tol):
        return False
    if max(abs(o1), abs(o2), abs(o3), abs(o4)) > tol:
        # proper crossing
        return True
    # near-collinear: check 1D overlap along the longer direction
    axis = int(abs(d1[0]) < abs(d1[1]))
    a0, a1 = sorted((p1[axis], p2[axis]))
    b0, b1 = sorted((q1[axis], q2[axis]))
    return a0 <= b1 + tol and b0 <= a1 + tol


# ---------------------------------------------------------------------------
# metrics


@dataclass(frozen=True)
class PolygonMetrics:
    perimeter: float
    area: float
    iso_ratio: float


def polygon_metrics(poly: Polygon) -> PolygonMetrics:
    """Perimeter, area, and the scale-invariant ratio perimeter / sqrt(area)."""
    per = poly.perimeter
    area = poly.area
    return PolygonMetrics(perimeter=per, area=area, iso_ratio=per / math.sqrt(area))


# ---------------------------------------------------------------------------
# circle clipping


def _clip_lengths(poly: Polygon, center: np.ndarray, radii: np.ndarray) -> np.ndarray:
    """Boundary arc length inside the disk B(center, r), for every r in ``radii``.

    Per edge the inside portion is the parameter interval where the
    quadratic |P + t d - c|^2 - r^2 is negative, clipped to [0, 1].
    """
    v = poly.vertices
    d = np.roll(v, -1, axis=0) - v  # (E,2)
    f = v - center[None, :]  # (E,2)
    a = (d * d).sum(axis=1)  # (E,)
    b = 2.0 * (f * d).sum(axis=1)
    c0 = (f * f).sum(axis=1)
    ln = np.sqrt(a)

    r2 = np.asarray(radii, dtype=float)[:, None] ** 2  # (R,1)
    disc = b[None, :] ** 2 - 4.0 * a[None, :] * (c0[None, :] - r2)  # (R,E)
    sq = np.sqrt(np.maximum(disc, 0.0))
    t1 = (-b[None, :] - sq) / (2.0 * a[None, :])
    t2 = (-b[None, :] + sq) / (2.0 * a[None, :])
    lo = np.clip(t1, 0.0, 1.0)
    hi = np.clip(t2, 0.0, 1.0)
    frac = np.where(disc > 0.0, hi - lo, 0.0)
    return (frac * ln[None, :]).sum(axis=1)


def clip_boundary_to_disk(poly: Polygon, center, radius: float) -> float:
    """Total boundary length strictly inside the open disk B(center, radius)."""
    if radius <= 0.0:
        raise ValueError(f"radius must be positive, got {radius}")
    c = np.asarray(center, dtype=float)
    return float(_clip_lengths(poly, c, np.array([radius]))[0])


def disk_polygon_area(poly: Polygon, center, radius: float) -> float:
    """Exact area of the intersection of a disk with the polygon interior.

    Sums, over the directed edges relative to the disk center, the signed
    areas of disk-clipped apex triangles (center, P, Q).  Each term is a
    combination of a straight chord piece and circular sectors subtending
    less than pi, so every angle is unambiguous.
    """
    if radius <= 0.0:
        raise ValueError(f"radius must be positive, got {radius}")
    c = np.asarray(center, dtype=float)
    v = poly.vertices - c[None, :]
    w = np.roll(v, -1, axis=0)
    r = float(radius)
    r2 = r * r

    total = 0.0
    for (px, py), (qx, qy) in zip(v, w):
        cross_pq = px * qy - py * qx
        if cross_pq == 0.0:
            continue
        p_in = px * px + py * py <= r2
        q_in = qx * qx + qy * qy <= r2
        if p_in and q_in:
            total += 0.5 * cross_pq
            continue
        sign = 1.0 if cross_pq > 0.0 else -1.0
        dx, dy = qx - px, qy - py
        a = dx * dx + dy * dy
        b = 2.0 * (px * dx + py * dy)
        cc = px * px + py * py - r2
        disc = b * b - 4.0 * a * cc
        tlo = thi = None
        if disc > 0.0:
            sq = math.sqrt(disc)
            t1 = (-b - sq) / (2.0 * a)
            t2 = (-b + sq) / (2.0 * a)
            tlo, thi = max(t1, 0.0), min(t2, 1.0)
        if tlo is None or tlo >= thi:
            # chord misses [0,1]: pure sector between the two rays
            ang = math.atan2(abs(cross_pq), px * qx + py * qy)
            total += sign * 0.5 * r2 * ang
            continue
        ax, ay = px + tlo * dx, py + tlo * dy
        bx, by = px + thi * dx, py + thi * dy
        if tlo > 0.0:
            ang = math.atan2(abs(px * ay - py * ax), px * ax + py * ay)
            total += sign * 0.5 * r2 * ang
        total += 0.5 * (ax * by - ay * bx)
        if thi < 1.0:
            ang = math.atan2(abs(bx * qy - by * qx), bx * qx + by * qy)
            total += sign * 0.5 * r2 * ang
    return total


# ---------------------------------------------------------------------------
# distortion search


@dataclass(frozen=True)
class DistortionResult:
    """Certified lower bound for the boundary-measure distortion.

    Every reported value is an exactly evaluated ratio clip(x, r) / (2 r),
    hence never exceeds the true supremum.
    """

    value: float
    center: tuple[float, float]
    radius: float


# fixed radius ladder, as fractions of the bounding-box diagonal
_RADIUS_FRACTIONS = np.geomspace(5e-4, 1.0, 18)


def distortion(poly: Polygon, grid_density: int = 16, refine_rounds: int = 3) -> DistortionResult:
    """Sampled maximization of clip(x, r)/(2r) over centers and radii.

    Candidate centers are the polygon vertices, edge midpoints, and a
    ``(grid_density+1)^2`` lattice over the bounding box; candidate radii
    per center are the exact center-to-vertex distances (ratio maxima sit
    where the circle passes through vertices) plus a fixed geometric
    ladder.  The best sample is polished by a compass search in
    (x, y, log r).
    """
    if grid_density < 1 or refine_rounds < 0:
        raise ValueError("grid_density must be >= 1 and refine_rounds >= 0")
    v = poly.vertices
    x0, x1, y0, y1 = poly.bbox
    diag = poly.bbox_diagonal

    mids = 0.5 * (v + np.roll(v, -1, axis=0))
    gx = np.linspace(x0, x1, grid_density + 1)
    gy = np.linspace(y0, y1, grid_density + 1)
    grid = np.array([(x, y) for x in gx for y in gy])
    centers = np.vstack([v, mids, grid])

    sweep = diag * _RADIUS_FRACTIONS
    best_val = -1.0
    best_center = centers[0]
    best_r = sweep[-1]
    for c in centers:
        dist_v = np.hypot(v[:, 0] - c[0], v[:, 1] - c[1])
        radii = np.concatenate([dist_v[dist_v > diag * 1e-9], sweep])
        clips = _clip_lengths(poly, c, radii)
        ratios = clips / (2.0 * radii)
        i = int(np.argmax(ratios))
        if ratios[i] > best_val:
            best_val = float(ratios[i])
            best_center = c.copy()
            best_r = float(radii[i])

    # compass-search refinement around the best sample
    cx, cy, r = best_center[0], best_center[1], best_r

    def ratio_at(x, y, rr):
        if rr <= 0.0:
            return -1.0
        return float(_clip_lengths(poly, np.array([x, y]), np.array([rr]))[0]) / (2.0 * rr)

    step = 0.02 * diag
    logstep = 0.15
    for _ in range(refine_rounds):
        for _ in range(25):
            moved = False
            cands = [
                (cx + step, cy, r), (cx - step, cy, r),
                (cx, cy + step, r), (cx, cy - step, r),
                (cx, cy, r * math.exp(logstep)), (cx, cy, r * math.exp(-logstep)),
            ]
            for (nx, ny, nr) in cands:
                val = ratio_at(nx, ny, nr)
                if val > best_val:
                    best_val, cx, cy, r = val, nx, ny, nr
                    moved = True
            if not moved:
                break
        step *= 0.25
        logstep *= 0.25

    return DistortionResult(value=best_val, center=(float(cx), float(cy)), radius=float(r))


# ---------------------------------------------------------------------------
# generators


@dataclass(frozen=True)
class SpikedSquare:
    """Square of side 1/j carrying a sawtooth top face.

    ``tooth_count`` grows like ``j**(beta-1)`` and the tooth height is
    ``j**(-alpha)`` with ``alpha = beta - 1``, so the boundary measure
    concentrates along the toothed face as j grows while the total
    perimeter stays bounded.
    """

    polygon: Polygon
    j: int
    beta: float
    alpha: float
    tooth_count: int
    side: float
    tooth_base: float
    tooth_height: float

    # alias used in reports
    @property
    def m(self) -> int:
        return self.tooth_count


def preset_beta(p: float) -> float:
    """Sawtooth exponent matched to the Rayleigh exponent p (plane case)."""
    if p <= 2.0:
        raise ValueError(f"preset beta undefined for p <= n (= 2); got p = {p}")
    return (3.0 * p - 4.0) / (p - 2.0)


def make_spiked_square(j: int, p: float | None = None, beta: float | None = None) -> SpikedSquare:
    """Build the spiked square for index j.

    Exactly one of ``p`` (which selects beta = (3p-4)/(p-2)) or an explicit
    ``beta > 2`` must be given.  The polygon is the square (0, 1/j)^2 whose
    top edge carries ``floor(j**(beta-1)) + 1`` isoceles teeth of base
    ``1/(j*m)`` and height ``j**(-alpha)``.
    """
    if j < 1 or int(j) != j:
        raise ValueError(f"j must be a positive integer, got {j}")
    j = int(j)
    if (p is None) == (beta is None):
        raise ValueError("give exactly one of p or beta")
    if p is not None:
        beta = preset_beta(float(p))
    else:
        beta = float(beta)
        if beta <= 2.0:
            raise ValueError(f"beta must exceed n (= 2); got {beta}")
    alpha = beta - 1.0

    t = float(j) ** (beta - 1.0)
    m = int(math.floor(t + 1e-9)) + 1  # integer part, guarded against float dust
    side = 1.0 / j
    base = 1.0 / (j * m)
    height = float(j) ** (-alpha)

    verts = [(0.0, 0.0), (side, 0.0), (side, side)]
    for i in range(m - 1, -1, -1):
        apex_x = (i + 0.5) * base
        verts.append((apex_x, side + height))
        verts.append((i * base, side))
    poly = Polygon(np.array(verts))
    return SpikedSquare(
        polygon=poly, j=j, beta=beta, alpha=alpha, tooth_count=m,
        side=side, tooth_base=base, tooth_height=height,
    )


def make_dumbbell(eps: float, length: float) -> Polygon:
    """Two unit squares joined by a channel of length ``length``, width ``eps``.

    The channel is centered on the facing sides; the result is a simple
    12-vertex polygon with area 2 + length*eps and perimeter
    8 - 2*eps + 2*length.
    """
    if not (0.0 < eps < 1.0):
        raise ValueError(f"eps must lie in (0, 1), got {eps}")
    if length <= 0.0:
        raise ValueError(f"length must be positive, got {length}")
    hl = 0.5 * length
    he = 0.5 * eps
    verts = np.array([
        (-1.0 - hl, -0.5), (-hl, -0.5), (-hl, -he), (hl, -he),
        (hl, -0.5), (1.0 + hl, -0.5), (1.0 + hl, 0.5), (hl, 0.5),
        (hl, he), (-hl, he), (-hl, 0.5), (-1.0 - hl, 0.5),
    ])
    return Polygon(verts)


def make_regular_polygon(sides: int, radius: float = 1.0) -> Polygon:
    """Regular polygon inscribed in a circle of the given circumradius."""
    if sides < 3:
        raise ValueError(f"need at least 3 sides, got {sides}")
    if radius <= 0.0:
        raise ValueError(f"radius must be positive, got {radius}")
    ang = 2.0 * math.pi * np.arange(sides) / sides
    return Polygon(np.column_stack([radius * np.cos(ang), radius * np.sin(ang)]))


def make_square(side: float = 1.0) -> Polygon:
    if side <= 0.0:
        raise ValueError(f"side must be positive, got {side}")
    return Polygon(np.array([(0.0, 0.0), (side, 0.0), (side, side), (0.0, side)]))


def scale_polygon(poly: Polygon, t: float) -> Polygon:
    """Similarity-scale every vertex by t > 0."""
    if t <= 0.0:
        raise ValueError(f"scale factor must be positive, got {t}")
    return Polygon(poly.vertices * t, validate=False)


# ---------------------------------------------------------------------------
# file format


def polygon_to_json(poly: Polygon) -> str:
    """Serialize as {"vertices": [[x, y], ...]} with 17 significant digits."""
    rows = ",\n".join(
        f"    [{_fmt17(x)}, {_fmt17(y)}]" for x, y in poly.vertices
    )
    return '{\n  "vertices": [\n' + rows + "\n  ]\n}\n"


def save_polygon(poly: Polygon, path) -> None:
    Path(path).write_text(polygon_to_json(poly))


def load_polygon(path) -> Polygon:
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict) or "vertices" not in data:
        raise PolygonError(f"{path}: expected a JSON object with a 'vertices' key")
    return Polygon(np.asarray(data["vertices"], dtype=float))
