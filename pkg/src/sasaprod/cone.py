"""The metric cone over a Sasakian sphere and its Kahler structure.

The cone S x R^{>0} carries the metric dt (x) dt + t^2 g.  Its complex
structure is stored in the radial/spherical splitting

    J (X, r) = (phi X + (r/t) xi,  -t eta(X))

so that J R = xi and J xi = -R for the Euler field R = t d/dt.  The
identification (p, t) -> t p with the punctured ambient space turns the
cone metric into the flat one and J into multiplication by i; that chart
is kept alongside as an oracle for every structural formula.

The fundamental 2-form is defined as omega(U, V) = g(J U, V), not via
the radial potential; the potential statement stays a test.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveLambda, NonPositiveRadius
from .geometry import AmbientPoint, TangentVector, mult_i, project_point, tangent_project
from .sphere import SasakianSphere


@dataclass
class ConePoint:
    """A point (base, t) of the open cone, t > 0."""

    base: AmbientPoint
    t: float

    def __post_init__(self):
        self.t = float(self.t)
        if self.t <= 0:
            raise NonPositiveRadius(f"cone radius must be positive, got {self.t}")


@dataclass
class ConeTangent:
    """Tangent vector split as (spherical part, coefficient of d/dt)."""

    base_part: TangentVector
    radial: float

    def __post_init__(self):
        self.radial = float(self.radial)

    def __add__(self, other: "ConeTangent") -> "ConeTangent":
        return ConeTangent(self.base_part + other.base_part, self.radial + other.radial)

    def __rmul__(self, c: float) -> "ConeTangent":
        return ConeTangent(float(c) * self.base_part, float(c) * self.radial)

    def __neg__(self) -> "ConeTangent":
        return ConeTangent(-self.base_part, -self.radial)


class KahlerCone:
    """Cone-level operations bound to one Sasakian sphere."""

    def __init__(self, sphere: SasakianSphere):
        self.sphere = sphere

    # -- fields -----------------------------------------------------------

    def euler_field(self, cp: ConePoint) -> ConeTangent:
        """R = t d/dt."""
        return ConeTangent(TangentVector(cp.base, np.zeros(cp.base.ambient_dim)), cp.t)

    def reeb_tangent(self, cp: ConePoint) -> ConeTangent:
        """xi = J R, which restricts to the spherical Reeb field on level sets."""
        return ConeTangent(self.sphere.xi(cp.base), 0.0)

    # -- structure --------------------------------------------------------

    def metric(self, cp: ConePoint, U: ConeTangent, V: ConeTangent) -> float:
        """dt (x) dt + t^2 g."""
        spherical = self.sphere.metric(U.base_part, V.base_part)
        return U.radial * V.radial + cp.t ** 2 * spherical

    def complex_structure(self, cp: ConePoint, U: ConeTangent) -> ConeTangent:
        """Structural J: phi on the transverse part, J R = xi, J xi = -R."""
        sph = self.sphere
        eta_u = sph.eta(cp.base, U.base_part)
        base = sph.phi(cp.base, U.base_part) + (U.radial / cp.t) * sph.xi(cp.base)
        return ConeTangent(base, -cp.t * eta_u)

    def complex_structure_ambient(self, cp: ConePoint, U: ConeTangent) -> ConeTangent:
        """Chart oracle: push to the punctured ambient space, multiply by i, pull back."""
        z = self.to_ambient(cp)
        w = self.tangent_to_ambient(cp, U)
        return self.tangent_from_ambient(z, mult_i(w))

    def kahler_form(self, cp: ConePoint, U: ConeTangent, V: ConeTangent) -> float:
        """omega(U, V) = g(J U, V); satisfies i_R omega = t^2 eta."""
        return self.metric(cp, self.complex_structure(cp, U), V)

    def eta(self, cp: ConePoint, U: ConeTangent) -> float:
        """The contact form lifted to the cone: (1/t^2) i_R omega."""
        return self.sphere.eta(cp.base, U.base_part)

    # -- homotheties -------------------------------------------------------

    def homothety(self, cp: ConePoint, lam: float) -> ConePoint:
        """(base, t) -> (base, lam t); pulls omega back to lam^2 omega."""
        if lam <= 0:
            raise NonPositiveLambda(f"homothety factor must be positive, got {lam}")
        return ConePoint(cp.base, lam * cp.t)

    def homothety_pushforward(self, U: ConeTangent, lam: float) -> ConeTangent:
        if lam <= 0:
            raise NonPositiveLambda(f"homothety factor must be positive, got {lam}")
        return ConeTangent(U.base_part, lam * U.radial)

    # -- ambient chart ------------------------------------------------------

    def to_ambient(self, cp: ConePoint) -> np.ndarray:
        return cp.t * cp.base.coords

    def point_from_ambient(self, z: np.ndarray) -> ConePoint:
        z = np.asarray(z, dtype=float)
        t = float(np.linalg.norm(z))
        if t <= 0:
            raise NonPositiveRadius("ambient chart point must be nonzero")
        return ConePoint(project_point(z), t)

    def tangent_to_ambient(self, cp: ConePoint, U: ConeTangent) -> np.ndarray:
        # d/ds (t(s) p(s)) = t X + r p
        return cp.t * U.base_part.comps + U.radial * cp.base.coords

    def tangent_from_ambient(self, z: np.ndarray, w: np.ndarray) -> ConeTangent:
        cp = self.point_from_ambient(z)
        radial = float(np.asarray(w, dtype=float) @ cp.base.coords)
        spherical = (np.asarray(w, dtype=float) - radial * cp.base.coords) / cp.t
        return ConeTangent(tangent_project(cp.base, spherical), radial)

    def eta_ambient(self, z: np.ndarray, w: np.ndarray) -> float:
        """The lifted contact form in chart coordinates: <w, i z> / |z|^2."""
        z = np.asarray(z, dtype=float)
        return float(np.asarray(w, dtype=float) @ mult_i(z)) / float(z @ z)

    def kahler_form_ambient(self, z: np.ndarray, u: np.ndarray, v: np.ndarray) -> float:
        """omega in chart coordinates, via pullback of the structural formula."""
        cp = self.point_from_ambient(z)
        return self.kahler_form(cp, self.tangent_from_ambient(z, u), self.tangent_from_ambient(z, v))
