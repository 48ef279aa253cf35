"""The round Sasakian structure on odd spheres.

On S^{2n+1} in C^{n+1} the structure tensors have closed forms:

    xi_p    = i p                      (Reeb field)
    eta_p X = <X, i p>                 (contact form)
    phi_p X = pr_T (i X)               (transverse rotation)
    g       = ambient dot product      (round metric)

and the Reeb flow is the scalar rotation p -> e^{i s} p.

The differential of the contact form is fixed once and for all as

    d eta (X, Y) = DETA_COEFFICIENT * g(phi X, Y)

with our d-convention (no 1/2 factor).  The sign and magnitude of the
coefficient are calibrated against the finite-difference exterior
derivative in the test suite and must not be edited independently:
with this choice d eta(X, phi X) = 2 |X|^2 >= 0 on transverse vectors,
so transverse (1,1)-positivity statements read d eta(X, J X) >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OffManifold
from .geometry import (
    AmbientPoint,
    TangentVector,
    mult_i,
    random_points,
    SampleConfig,
    tangent_project,
)

# Frozen by the finite-difference calibration test; see test_sphere.py.
DETA_COEFFICIENT = 2.0

ON_SPHERE_TOL = 1e-10


@dataclass
class SasakianSample:
    """The structure tensors of the round sphere evaluated at one point."""

    point: AmbientPoint
    xi: TangentVector
    eta: np.ndarray  # covector, acting by the dot product
    phi: np.ndarray  # square matrix; restriction to the tangent space is the structure tensor

    def eta_of(self, X: np.ndarray | TangentVector) -> float:
        comps = X.comps if isinstance(X, TangentVector) else np.asarray(X, dtype=float)
        return float(self.eta @ comps)

    def apply_phi(self, X: np.ndarray | TangentVector) -> TangentVector:
        comps = X.comps if isinstance(X, TangentVector) else np.asarray(X, dtype=float)
        return TangentVector(self.point, self.phi @ comps)

    @staticmethod
    def metric(X: TangentVector, Y: TangentVector) -> float:
        return float(X.comps @ Y.comps)


class SasakianSphere:
    """S^{2n+1} subset C^{n+1} with its canonical Sasakian structure.

    The methods below form the structure contract other models would have
    to satisfy: sample, xi/eta/phi/metric evaluation, reeb_flow, d_eta.
    """

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("n must be nonnegative")
        self.n = n

    @property
    def dim(self) -> int:
        return 2 * self.n + 1

    @property
    def ambient_dim(self) -> int:
        return 2 * self.n + 2

    def __repr__(self):
        return f"SasakianSphere(n={self.n})"

    def _check_on_sphere(self, p: AmbientPoint):
        if p.ambient_dim != self.ambient_dim:
            raise OffManifold(f"point of ambient dimension {p.ambient_dim} on {self!r}")
        if abs(p.norm() - 1.0) > ON_SPHERE_TOL:
            raise OffManifold(f"|p| = {p.norm()!r} is not 1 within {ON_SPHERE_TOL}")

    def xi(self, p: AmbientPoint) -> TangentVector:
        return TangentVector(p, mult_i(p.coords))

    def eta(self, p: AmbientPoint, X: TangentVector | np.ndarray) -> float:
        comps = X.comps if isinstance(X, TangentVector) else np.asarray(X, dtype=float)
        return float(comps @ mult_i(p.coords))

    def phi(self, p: AmbientPoint, X: TangentVector | np.ndarray) -> TangentVector:
        comps = X.comps if isinstance(X, TangentVector) else np.asarray(X, dtype=float)
        return tangent_project(p, mult_i(comps))

    @staticmethod
    def metric(X: TangentVector, Y: TangentVector) -> float:
        return float(X.comps @ Y.comps)

    def sample(self, p: AmbientPoint) -> SasakianSample:
        """Evaluate all structure tensors at p; raises OffManifold for bad points."""
        self._check_on_sphere(p)
        d = self.ambient_dim
        proj = np.eye(d) - np.outer(p.coords, p.coords)
        j_mat = np.zeros((d, d))
        for k in range(0, d, 2):
            j_mat[k, k + 1] = -1.0
            j_mat[k + 1, k] = 1.0
        return SasakianSample(
            point=p,
            xi=self.xi(p),
            eta=mult_i(p.coords),
            phi=proj @ j_mat @ proj,
        )

    def reeb_flow(self, p: AmbientPoint, s: float) -> AmbientPoint:
        """Flow of the Reeb field for time s: scalar rotation e^{i s} p."""
        c, sn = np.cos(s), np.sin(s)
        return AmbientPoint(c * p.coords + sn * mult_i(p.coords))

    def reeb_flow_tangent(self, X: TangentVector, s: float) -> TangentVector:
        """Differential of the Reeb flow (the same scalar rotation)."""
        c, sn = np.cos(s), np.sin(s)
        base = self.reeb_flow(X.base, s)
        return TangentVector(base, c * X.comps + sn * mult_i(X.comps))

    def d_eta(self, p: AmbientPoint, X: TangentVector | np.ndarray, Y: TangentVector | np.ndarray) -> float:
        """Closed form of d eta, cross-checked against finite differences."""
        y = Y.comps if isinstance(Y, TangentVector) else np.asarray(Y, dtype=float)
        return DETA_COEFFICIENT * float(self.phi(p, X).comps @ y)

    def random_points(self, count: int, cfg: SampleConfig) -> list[AmbientPoint]:
        return random_points(count, self.ambient_dim, cfg)
