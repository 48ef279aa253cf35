"""Embedded-sphere numerics: points, tangent projection, finite differences.

The unit sphere S^{2n+1} sits inside R^{2n+2}, which we identify with
C^{n+1} by interleaving real and imaginary parts:

    coords = (Re z_0, Im z_0, Re z_1, Im z_1, ...)

Vector fields given on the sphere are extended to a punctured
neighborhood by radial projection, X~(x) := X(x/|x|).  That extension
is tangent to every concentric sphere, so Lie brackets of extensions
restrict to Lie brackets on the sphere; all finite differences below
use it.  Central differences have truncation error O(h^2), which with
the default step 1e-5 lands near the rounding floor of doubles.

Tolerance tiers used throughout the package: 1e-10 for closed
formulas, 1e-6 for single-level finite differences, 1e-5 for nested
ones (Nijenhuis-type expressions).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DimensionMismatch, NonTangentField, ZeroVector

ZERO_NORM_TOL = 1e-12
TANGENCY_TOL = 1e-10


def mult_i(v: np.ndarray) -> np.ndarray:
    """Multiply by the imaginary unit in interleaved coordinates."""
    v = np.asarray(v, dtype=float)
    if v.shape[-1] % 2 != 0:
        raise DimensionMismatch(f"interleaved complex vector needs even length, got {v.shape[-1]}")
    w = np.empty_like(v)
    w[..., 0::2] = -v[..., 1::2]
    w[..., 1::2] = v[..., 0::2]
    return w


@dataclass
class AmbientPoint:
    """A point of S^{2n+1} in ambient coordinates of C^{n+1}."""

    coords: np.ndarray

    def __post_init__(self):
        self.coords = np.asarray(self.coords, dtype=float)
        d = self.coords.shape[-1]
        if self.coords.ndim != 1 or d < 2 or d % 2 != 0:
            raise DimensionMismatch(f"ambient coordinates must be a 1-d even-length vector, got shape {self.coords.shape}")

    @property
    def n(self) -> int:
        """Complex dimension n of the ambient C^{n+1}, minus one for the sphere S^{2n+1}."""
        return self.coords.shape[-1] // 2 - 1

    @property
    def ambient_dim(self) -> int:
        return self.coords.shape[-1]

    def norm(self) -> float:
        return float(np.linalg.norm(self.coords))


@dataclass
class TangentVector:
    """A tangent vector to the sphere, stored in ambient coordinates."""

    base: AmbientPoint
    comps: np.ndarray

    def __post_init__(self):
        self.comps = np.asarray(self.comps, dtype=float)
        if self.comps.shape != self.base.coords.shape:
            raise DimensionMismatch("tangent components must match the base point dimension")
        defect = abs(float(self.comps @ self.base.coords))
        scale = max(1.0, float(np.linalg.norm(self.comps)))
        if defect > TANGENCY_TOL * scale:
            raise NonTangentField(f"vector is not tangent: <v, p> = {defect:.3e}")

    def norm(self) -> float:
        return float(np.linalg.norm(self.comps))

    def __add__(self, other: "TangentVector") -> "TangentVector":
        return TangentVector(self.base, self.comps + other.comps)

    def __sub__(self, other: "TangentVector") -> "TangentVector":
        return TangentVector(self.base, self.comps - other.comps)

    def __rmul__(self, c: float) -> "TangentVector":
        return TangentVector(self.base, float(c) * self.comps)

    def __neg__(self) -> "TangentVector":
        return TangentVector(self.base, -self.comps)


@dataclass
class VectorField:
    """A tangent vector field, given by a pointwise evaluator."""

    evaluator: Callable[[AmbientPoint], "TangentVector | np.ndarray"]
    label: str = "field"

    def at(self, p: AmbientPoint) -> TangentVector:
        value = self.evaluator(p)
        if isinstance(value, TangentVector):
            return value
        try:
            return TangentVector(p, np.asarray(value, dtype=float))
        except NonTangentField as exc:
            raise NonTangentField(f"field '{self.label}' violates tangency at {p.coords}: {exc}") from exc


@dataclass
class CovectorField:
    """A 1-form, evaluated as an ambient covector acting by the dot product."""

    evaluator: Callable[[AmbientPoint], np.ndarray]
    label: str = "one-form"

    def value(self, p: AmbientPoint, v: np.ndarray) -> float:
        return float(np.asarray(self.evaluator(p), dtype=float) @ np.asarray(v, dtype=float))


@dataclass(frozen=True)
class SampleConfig:
    """Deterministic sampling and finite-difference parameters."""

    seed: int
    count: int = 1
    fd_step: float = 1e-5
    tol: float = 1e-10

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if not (1e-8 <= self.fd_step <= 1e-2):
            raise ValueError("fd_step must lie in [1e-8, 1e-2]")
        if self.tol <= 0:
            raise ValueError("tol must be positive")

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


def project_point(x: np.ndarray) -> AmbientPoint:
    """Radially project a raw ambient vector onto the unit sphere.

    Idempotent; raises ZeroVector when the input is numerically zero.
    """
    x = np.asarray(x, dtype=float)
    norm = float(np.linalg.norm(x))
    if norm <= ZERO_NORM_TOL:
        raise ZeroVector(f"cannot project a vector of norm {norm:.3e}")
    return AmbientPoint(x / norm)


def tangent_project(p: AmbientPoint, v: np.ndarray) -> TangentVector:
    """Orthogonal projection of an ambient vector onto T_p S.

    Realizes v - <v,p> p; fixed points are exactly the tangent vectors.
    """
    v = np.asarray(v, dtype=float)
    if v.shape != p.coords.shape:
        raise DimensionMismatch(f"vector of shape {v.shape} at point of shape {p.coords.shape}")
    return TangentVector(p, v - (v @ p.coords) * p.coords)


def _extended(field: VectorField, x: np.ndarray) -> np.ndarray:
    # degree-zero radial extension, evaluated off the sphere
    return field.at(project_point(x)).comps


def directional_derivative(field: VectorField, p: AmbientPoint, direction: np.ndarray, h: float) -> np.ndarray:
    """Central-difference derivative of the radial extension of ``field`` along ``direction``."""
    d = np.asarray(direction, dtype=float)
    plus = _extended(field, p.coords + h * d)
    minus = _extended(field, p.coords - h * d)
    return (plus - minus) / (2.0 * h)


def lie_bracket(X: VectorField, Y: VectorField, p: AmbientPoint, cfg: SampleConfig) -> TangentVector:
    """Finite-difference Lie bracket [X, Y] at p.

    Computed as D_X Y - D_Y X on the radial extensions and projected back
    to the tangent space; the truncation error is O(fd_step^2).
    """
    Xp = X.at(p)
    Yp = Y.at(p)
    h = cfg.fd_step
    dxy = directional_derivative(Y, p, Xp.comps, h)
    dyx = directional_derivative(X, p, Yp.comps, h)
    return tangent_project(p, dxy - dyx)


def exterior_derivative_2form(
    alpha: CovectorField, p: AmbientPoint, X: VectorField, Y: VectorField, cfg: SampleConfig
) -> float:
    """Evaluate d(alpha)(X, Y) at p by finite differences.

    Convention without the 1/2 factor:
        d(alpha)(X, Y) = X alpha(Y) - Y alpha(X) - alpha([X, Y]).
    """
    h = cfg.fd_step
    Xp, Yp = X.at(p), Y.at(p)

    def along(direction, other):
        q_plus = project_point(p.coords + h * direction)
        q_minus = project_point(p.coords - h * direction)
        f_plus = alpha.value(q_plus, other.at(q_plus).comps)
        f_minus = alpha.value(q_minus, other.at(q_minus).comps)
        return (f_plus - f_minus) / (2.0 * h)

    bracket = lie_bracket(X, Y, p, cfg)
    return along(Xp.comps, Y) - along(Yp.comps, X) - alpha.value(p, bracket.comps)


def random_points(n: int, ambient_dim: int, cfg: SampleConfig) -> list[AmbientPoint]:
    """Deterministic uniform samples on the sphere: Gaussian draws, normalized."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if ambient_dim < 2 or ambient_dim % 2 != 0:
        raise DimensionMismatch("ambient dimension must be even and >= 2")
    rng = cfg.rng()
    out = []
    for _ in range(n):
        out.append(project_point(rng.standard_normal(ambient_dim)))
    return out


def random_tangent(p: AmbientPoint, rng: np.random.Generator) -> TangentVector:
    """A Gaussian ambient draw projected to T_p S."""
    return tangent_project(p, rng.standard_normal(p.ambient_dim))


def constant_extension_field(v: np.ndarray, label: str = "const") -> VectorField:
    """The field q -> tangent projection of a fixed ambient vector."""
    v = np.asarray(v, dtype=float)
    return VectorField(lambda q: tangent_project(q, v), label=label)


def rotation_field(A: np.ndarray, label: str = "rotation") -> VectorField:
    """The linear field q -> A q for a skew-symmetric generator A."""
    A = np.asarray(A, dtype=float)
    if not np.allclose(A, -A.T, atol=1e-12):
        raise ValueError("rotation generator must be skew-symmetric")
    return VectorField(lambda q: TangentVector(q, A @ q.coords), label=label)


# --- finite differences in a flat ambient chart ---------------------------
#
# The open cone over the sphere is a punctured vector space in its ambient
# chart, so forms there can be differentiated against constant (commuting)
# directions with no projection step.


def ambient_d1(one_form, x: np.ndarray, u: np.ndarray, v: np.ndarray, h: float) -> float:
    """d(one_form)(u, v) at x for constant directions u, v in a flat chart."""

    def du(direction, against):
        return (one_form(x + h * direction, against) - one_form(x - h * direction, against)) / (2.0 * h)

    return du(u, v) - du(v, u)


def ambient_d2(two_form, x: np.ndarray, u: np.ndarray, v: np.ndarray, w: np.ndarray, h: float) -> float:
    """d(two_form)(u, v, w) at x for constant directions in a flat chart."""

    def d_along(direction, a, b):
        return (two_form(x + h * direction, a, b) - two_form(x - h * direction, a, b)) / (2.0 * h)

    return d_along(u, v, w) - d_along(v, u, w) + d_along(w, u, v)
