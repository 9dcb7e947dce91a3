"""P1 finite-element evaluation of the p-Dirichlet energy and boundary norms.

For piecewise-linear fields the gradient is constant per triangle, so the
volume integral of |grad u|^p is exact; boundary integrals of |u|^p use
per-edge Gauss-Legendre quadrature (exact for even integer p up to
2*order - 1 on linear traces).  The Rayleigh quotient

    R_p(u) = integral of |grad u|^p over the domain
             / integral of |u|^p over the boundary

is 0-homogeneous in u; its gradient with respect to the nodal values is
assembled exactly and vanishes at discrete eigenpairs.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .mesh import TriangleMesh

# regularization of |grad u|^2 inside gradient assembly for 1 < p < 2,
# where |grad u|^(p-2) is singular at vanishing gradients
GRAD_EPS = 1e-12

_gauss_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gauss01(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre points and weights on [0, 1]."""
    if order not in _gauss_cache:
        x, w = np.polynomial.legendre.leggauss(order)
        _gauss_cache[order] = (0.5 * (x + 1.0), 0.5 * w)
    return _gauss_cache[order]


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre point count per boundary edge."""

    order: int = 4

    def __post_init__(self):
        if self.order < 2:
            raise ValueError(f"quadrature order must be >= 2, got {self.order}")

    @property
    def points(self) -> np.ndarray:
        return _gauss01(self.order)[0]

    @property
    def weights(self) -> np.ndarray:
        return _gauss01(self.order)[1]


DEFAULT_QUAD = QuadratureRule(4)


@dataclass
class NodalField:
    """One scalar per mesh node: a P1 discrete function."""

    mesh: TriangleMesh
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.ascontiguousarray(np.asarray(self.values, dtype=float))
        if v.shape != (self.mesh.node_count,):
            raise ValueError(
                f"field has {v.shape} values for a mesh with {self.mesh.node_count} nodes")
        if not np.all(np.isfinite(v)):
            raise ValueError("field values must be finite")
        self.values = v


def _check_p(p: float) -> float:
    if p <= 1.0:
        raise ValueError(f"exponent p must exceed 1, got {p}")
    return float(p)


def _tri_grad_sq(mesh: TriangleMesh, values: np.ndarray) -> np.ndarray:
    g = np.einsum("tij,tj->ti", mesh.tri_grads, values[mesh.triangles])
    return g[:, 0] ** 2 + g[:, 1] ** 2


def p_dirichlet_energy(u: NodalField, p: float) -> float:
    """Integral of |grad u|^p over the domain (exact for P1)."""
    p = _check_p(p)
    gsq = _tri_grad_sq(u.mesh, u.values)
    return float(np.sum(u.mesh.tri_areas * gsq ** (0.5 * p)))


def _edge_trace(u: NodalField, quad: QuadratureRule) -> tuple[np.ndarray, np.ndarray]:
    """Field values at boundary quadrature points: (B, Q) array plus edge lengths."""
    be = u.mesh.boundary_edges
    xi = quad.points
    v0 = u.values[be[:, 0]][:, None]
    v1 = u.values[be[:, 1]][:, None]
    return v0 + (v1 - v0) * xi[None, :], u.mesh.boundary_lengths


def boundary_p_norm(u: NodalField, p: float, quad: QuadratureRule = DEFAULT_QUAD) -> float:
    """Integral of |u|^p over the boundary (p-th power, not the root)."""
    p = _check_p(p)
    vals, lengths = _edge_trace(u, quad)
    per_edge = (np.abs(vals) ** p) @ quad.weights
    return float(np.sum(per_edge * lengths))


VANISHING_TRACE = 1e-300


def rayleigh_quotient(u: NodalField, p: float, quad: QuadratureRule = DEFAULT_QUAD) -> float:
    """R_p(u); raises if the boundary trace vanishes."""
    p = _check_p(p)
    den = boundary_p_norm(u, p, quad)
    if den < VANISHING_TRACE:
        raise ValueError("vanishing boundary trace: Rayleigh quotient undefined")
    return p_dirichlet_energy(u, p) / den


def rayleigh_gradient(u: NodalField, p: float, quad: QuadratureRule = DEFAULT_QUAD) -> NodalField:
    """Exact gradient of the discrete Rayleigh quotient in the nodal values.

    grad R = (grad N - R * grad D) / D with N the p-Dirichlet energy and D
    the boundary p-norm.  For 1 < p < 2 the energy integrand is smoothed as
    (|grad u|^2 + eps)^{p/2} inside this gradient only; reported values stay
    unregularized.
    """
    p = _check_p(p)
    mesh = u.mesh
    values = u.values
    N = mesh.node_count

    den = boundary_p_norm(u, p, quad)
    if den < VANISHING_TRACE:
        raise ValueError("vanishing boundary trace: Rayleigh quotient undefined")
    num = p_dirichlet_energy(u, p)
    R = num / den

    # volume term: sum_T A_T * p * |g|^{p-2} * (G^T g)
    g = np.einsum("tij,tj->ti", mesh.tri_grads, values[mesh.triangles])
    gsq = g[:, 0] ** 2 + g[:, 1] ** 2
    if p < 2.0:
        gsq = gsq + GRAD_EPS
    w = mesh.tri_areas * p * gsq ** (0.5 * p - 1.0)
    contrib = np.einsum("t,tij,ti->tj", w, mesh.tri_grads, g)  # (T,3)
    dnum = np.bincount(mesh.triangles.ravel(), weights=contrib.ravel(), minlength=N)

    # boundary term: per edge quadrature of p |u|^{p-2} u phi_k
    vals, lengths = _edge_trace(u, quad)
    xi = quad.points
    wq = quad.weights
    s = p * np.sign(vals) * np.abs(vals) ** (p - 1.0)  # (B,Q)
    c0 = (s * (1.0 - xi)[None, :]) @ wq * lengths
    c1 = (s * xi[None, :]) @ wq * lengths
    be = u.mesh.boundary_edges
    dden = (np.bincount(be[:, 0], weights=c0, minlength=N)
            + np.bincount(be[:, 1], weights=c1, minlength=N))

    grad = (dnum - R * dden) / den
    return NodalField(mesh, grad)
