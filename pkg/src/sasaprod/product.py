"""Products of Sasakian spheres and the complex structures they carry.

Fix a complex parameter alpha with Im(alpha) != 0.  The additive group C
acts on the product of the two cones by combined radial/Reeb flows,
diagonally as (v, alpha v); the quotient is the product of the spheres.
In the ambient chart the action of v is plain scalar multiplication by
e^v on the first factor and e^{alpha v} on the second, so holomorphy is
manifest and that chart doubles as an oracle.

Writing a = Re(alpha), b = Im(alpha), the normalizing group element that
moves a point of the product of cones back to the unit level set is

    v(t1, t2) = -log t1 + (i/b) (-a log t1 + log t2)

and the differential of the quotient map fixes the induced structure:
tangent vectors of either sphere map to themselves while

    d pi(R1) = -(1/b) (a xi1 + (a^2+b^2) xi2)
    d pi(R2) =  (1/b) (xi1 + a xi2).

On the span of the two Reeb fields the induced structure is therefore
the matrix (1/b) [[a, -1], [a^2+b^2, -a]]; transversally it is phi on
each factor.  The closed forms below implement exactly that, and the
lift-and-push finite-difference path is kept as an independent oracle.

The two-parameter family j_cem / metric_cem is the classical
Calabi-Eckmann-Morimoto construction on the same product; its Reeb
block is minus the transpose of the induced one at (a, b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cone import ConePoint, ConeTangent, KahlerCone
from .errors import NonPositiveRadius, OffManifold
from .geometry import AmbientPoint, TangentVector, mult_i, project_point, tangent_project
from .sphere import SasakianSphere

LEVEL_SET_TOL = 1e-9


def parse_complex(text: str) -> complex:
    """Parse 'a+bi', 'a-bi', 'bi', 'a' (also bare 'i', '-i') into a complex number."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty complex literal")
    if s[-1] in "iI":
        body = s[:-1]
        split = None
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] not in "eE":
                split = k
                break
        re_str, im_str = (body[:split], body[split:]) if split is not None else ("", body)
        if im_str in ("", "+"):
            im = 1.0
        elif im_str == "-":
            im = -1.0
        else:
            im = float(im_str)
        re = float(re_str) if re_str else 0.0
        return complex(re, im)
    return complex(float(s), 0.0)


@dataclass(frozen=True)
class AlphaParam:
    """The quotient parameter alpha = a + b i, b != 0."""

    a: float
    b: float

    def __post_init__(self):
        if abs(self.b) <= 1e-12:
            raise ValueError("alpha must have nonzero imaginary part")

    @classmethod
    def parse(cls, text: str) -> "AlphaParam":
        z = parse_complex(text)
        return cls(z.real, z.imag)

    @property
    def value(self) -> complex:
        return complex(self.a, self.b)


@dataclass(frozen=True)
class CemParam:
    """The Calabi-Eckmann-Morimoto parameter pair (a, b), b != 0."""

    a: float
    b: float

    def __post_init__(self):
        if abs(self.b) <= 1e-12:
            raise ValueError("the parameter b must be nonzero")


@dataclass
class ProductConePoint:
    cp1: ConePoint
    cp2: ConePoint


@dataclass
class ProductConeTangent:
    u1: ConeTangent
    u2: ConeTangent


@dataclass
class ProductPoint:
    p1: AmbientPoint
    p2: AmbientPoint


@dataclass
class ProductTangent:
    """Tangent vector of the product, one component per factor sphere."""

    x1: TangentVector
    x2: TangentVector

    def norm(self) -> float:
        return math.hypot(self.x1.norm(), self.x2.norm())

    def __add__(self, other: "ProductTangent") -> "ProductTangent":
        return ProductTangent(self.x1 + other.x1, self.x2 + other.x2)

    def __sub__(self, other: "ProductTangent") -> "ProductTangent":
        return ProductTangent(self.x1 - other.x1, self.x2 - other.x2)

    def __rmul__(self, c: float) -> "ProductTangent":
        return ProductTangent(float(c) * self.x1, float(c) * self.x2)

    def __neg__(self) -> "ProductTangent":
        return ProductTangent(-self.x1, -self.x2)


def reeb_block_alpha(alpha: AlphaParam) -> np.ndarray:
    """Matrix of the induced structure on span(xi1, xi2), columns = images of xi1, xi2."""
    a, b = alpha.a, alpha.b
    return np.array([[a / b, -1.0 / b], [(a * a + b * b) / b, -a / b]])


def reeb_block_cem(ab: CemParam) -> np.ndarray:
    """Matrix of the CEM structure on span(xi1, xi2)."""
    a, b = ab.a, ab.b
    return np.array([[-a / b, -(a * a + b * b) / b], [1.0 / b, a / b]])


class SasakianProduct:
    """All product-level constructions for a fixed pair of spheres."""

    def __init__(self, s1: SasakianSphere, s2: SasakianSphere):
        self.s1 = s1
        self.s2 = s2
        self.cone1 = KahlerCone(s1)
        self.cone2 = KahlerCone(s2)

    def __repr__(self):
        return f"SasakianProduct(S^{self.s1.dim} x S^{self.s2.dim})"

    # -- sampling ---------------------------------------------------------

    def random_point(self, rng: np.random.Generator) -> ProductPoint:
        return ProductPoint(
            project_point(rng.standard_normal(self.s1.ambient_dim)),
            project_point(rng.standard_normal(self.s2.ambient_dim)),
        )

    def random_tangent(self, m: ProductPoint, rng: np.random.Generator) -> ProductTangent:
        return ProductTangent(
            tangent_project(m.p1, rng.standard_normal(self.s1.ambient_dim)),
            tangent_project(m.p2, rng.standard_normal(self.s2.ambient_dim)),
        )

    def zero_tangent(self, m: ProductPoint) -> ProductTangent:
        return ProductTangent(
            TangentVector(m.p1, np.zeros(self.s1.ambient_dim)),
            TangentVector(m.p2, np.zeros(self.s2.ambient_dim)),
        )

    def xi1(self, m: ProductPoint) -> ProductTangent:
        out = self.zero_tangent(m)
        return ProductTangent(self.s1.xi(m.p1), out.x2)

    def xi2(self, m: ProductPoint) -> ProductTangent:
        out = self.zero_tangent(m)
        return ProductTangent(out.x1, self.s2.xi(m.p2))

    def level_set_point(self, m: ProductPoint) -> ProductConePoint:
        return ProductConePoint(ConePoint(m.p1, 1.0), ConePoint(m.p2, 1.0))

    # -- group action and quotient map --------------------------------------

    def group_action(self, v: complex, x: ProductConePoint, alpha: AlphaParam) -> ProductConePoint:
        """Act by v on the first cone and by alpha*v on the second."""
        w1 = complex(v)
        w2 = alpha.value * complex(v)

        def act(w: complex, cp: ConePoint, sphere: SasakianSphere) -> ConePoint:
            return ConePoint(sphere.reeb_flow(cp.base, w.imag), cp.t * math.exp(w.real))

        return ProductConePoint(act(w1, x.cp1, self.s1), act(w2, x.cp2, self.s2))

    def group_action_ambient(self, v: complex, x: ProductConePoint, alpha: AlphaParam) -> ProductConePoint:
        """Chart oracle: multiply the ambient images by e^v and e^{alpha v}."""

        def act(w: complex, cone: KahlerCone, cp: ConePoint) -> ConePoint:
            c = np.exp(w)
            z = cone.to_ambient(cp)
            return cone.point_from_ambient(c.real * z + c.imag * mult_i(z))

        return ProductConePoint(
            act(complex(v), self.cone1, x.cp1),
            act(alpha.value * complex(v), self.cone2, x.cp2),
        )

    def normalize_v(self, t1: float, t2: float, alpha: AlphaParam) -> complex:
        """The unique group element bringing both radii to 1."""
        if t1 <= 0 or t2 <= 0:
            raise NonPositiveRadius(f"cone radii must be positive, got ({t1}, {t2})")
        a, b = alpha.a, alpha.b
        return complex(-math.log(t1), (-a * math.log(t1) + math.log(t2)) / b)

    def projection(self, x: ProductConePoint, alpha: AlphaParam) -> ProductPoint:
        """The quotient map onto the product of spheres; constant on orbits."""
        v = self.normalize_v(x.cp1.t, x.cp2.t, alpha)
        av = alpha.value * v
        return ProductPoint(
            self.s1.reeb_flow(x.cp1.base, v.imag),
            self.s2.reeb_flow(x.cp2.base, av.imag),
        )

    # -- differential of the quotient map ------------------------------------

    def _check_level_set(self, x: ProductConePoint):
        if abs(x.cp1.t - 1.0) > LEVEL_SET_TOL or abs(x.cp2.t - 1.0) > LEVEL_SET_TOL:
            raise OffManifold(
                f"closed-form pushforward needs the unit level set, got radii ({x.cp1.t}, {x.cp2.t})"
            )

    def pushforward(self, x: ProductConePoint, U: ProductConeTangent, alpha: AlphaParam) -> ProductTangent:
        """Closed-form differential of the quotient map on the unit level set.

        Spherical parts map to themselves; the radial directions go to the
        Reeb combinations displayed in the module docstring.
        """
        self._check_level_set(x)
        a, b = alpha.a, alpha.b
        r1, r2 = U.u1.radial, U.u2.radial
        xi1 = self.s1.xi(x.cp1.base)
        xi2 = self.s2.xi(x.cp2.base)
        out1 = U.u1.base_part + (-r1 * a / b + r2 / b) * xi1
        out2 = U.u2.base_part + (-r1 * (a * a + b * b) / b + r2 * a / b) * xi2
        return ProductTangent(out1, out2)

    def pushforward_fd(
        self, x: ProductConePoint, U: ProductConeTangent, alpha: AlphaParam, h: float = 1e-5
    ) -> ProductTangent:
        """Finite-difference differential of the quotient map, valid anywhere."""

        def curve(s: float) -> ProductConePoint:
            def factor(cp: ConePoint, u: ConeTangent) -> ConePoint:
                base = project_point(cp.base.coords + s * u.base_part.comps)
                return ConePoint(base, cp.t * math.exp(s * u.radial / cp.t))

            return ProductConePoint(factor(x.cp1, U.u1), factor(x.cp2, U.u2))

        m0 = self.projection(x, alpha)
        plus = self.projection(curve(h), alpha)
        minus = self.projection(curve(-h), alpha)
        d1 = (plus.p1.coords - minus.p1.coords) / (2.0 * h)
        d2 = (plus.p2.coords - minus.p2.coords) / (2.0 * h)
        return ProductTangent(tangent_project(m0.p1, d1), tangent_project(m0.p2, d2))

    def cone_complex_structure(self, x: ProductConePoint, U: ProductConeTangent) -> ProductConeTangent:
        """The product Kahler-cone structure, factorwise."""
        return ProductConeTangent(
            self.cone1.complex_structure(x.cp1, U.u1),
            self.cone2.complex_structure(x.cp2, U.u2),
        )

    # -- induced and CEM structures -------------------------------------------

    def j_alpha(self, m: ProductPoint, X: ProductTangent, alpha: AlphaParam) -> ProductTangent:
        """The complex structure induced by the quotient map (closed form)."""
        a, b = alpha.a, alpha.b
        c1 = self.s1.eta(m.p1, X.x1)
        c2 = self.s2.eta(m.p2, X.x2)
        out1 = self.s1.phi(m.p1, X.x1) + ((a * c1 - c2) / b) * self.s1.xi(m.p1)
        out2 = self.s2.phi(m.p2, X.x2) + (((a * a + b * b) * c1 - a * c2) / b) * self.s2.xi(m.p2)
        return ProductTangent(out1, out2)

    def j_alpha_via_lift(
        self, m: ProductPoint, X: ProductTangent, alpha: AlphaParam, h: float = 1e-5
    ) -> ProductTangent:
        """Oracle for j_alpha: lift to the level set, apply the cone structure, push down."""
        x = self.level_set_point(m)
        lift = ProductConeTangent(ConeTangent(X.x1, 0.0), ConeTangent(X.x2, 0.0))
        return self.pushforward_fd(x, self.cone_complex_structure(x, lift), alpha, h=h)

    def j_cem(self, m: ProductPoint, X: ProductTangent, ab: CemParam) -> ProductTangent:
        """The Calabi-Eckmann-Morimoto structure for the parameter pair (a, b)."""
        a, b = ab.a, ab.b
        c1 = self.s1.eta(m.p1, X.x1)
        c2 = self.s2.eta(m.p2, X.x2)
        out1 = self.s1.phi(m.p1, X.x1) - ((a / b) * c1 + ((a * a + b * b) / b) * c2) * self.s1.xi(m.p1)
        out2 = self.s2.phi(m.p2, X.x2) + ((1.0 / b) * c1 + (a / b) * c2) * self.s2.xi(m.p2)
        return ProductTangent(out1, out2)

    # -- metrics ----------------------------------------------------------------

    def metric_product(self, m: ProductPoint, X: ProductTangent, Y: ProductTangent) -> float:
        return self.s1.metric(X.x1, Y.x1) + self.s2.metric(X.x2, Y.x2)

    def metric_cem(self, m: ProductPoint, X: ProductTangent, Y: ProductTangent, ab: CemParam) -> float:
        """The Hermitian metric paired with j_cem."""
        a, b = ab.a, ab.b
        e1x = self.s1.eta(m.p1, X.x1)
        e1y = self.s1.eta(m.p1, Y.x1)
        e2x = self.s2.eta(m.p2, X.x2)
        e2y = self.s2.eta(m.p2, Y.x2)
        return (
            self.s1.metric(X.x1, Y.x1)
            + a * (e1x * e2y + e1y * e2x)
            + (a * a + b * b - 1.0) * e2x * e2y
            + self.s2.metric(X.x2, Y.x2)
        )

    def metric_alpha(self, m: ProductPoint, X: ProductTangent, Y: ProductTangent, alpha: AlphaParam) -> float:
        """A metric Hermitian for j_alpha, with both Reeb fields Killing."""
        a, b = alpha.a, alpha.b
        e1x = self.s1.eta(m.p1, X.x1)
        e1y = self.s1.eta(m.p1, Y.x1)
        e2x = self.s2.eta(m.p2, X.x2)
        e2y = self.s2.eta(m.p2, Y.x2)
        return (
            self.s1.metric(X.x1, Y.x1)
            + self.s2.metric(X.x2, Y.x2)
            - (a / (b * b)) * (e1x * e2y + e2x * e1y)
            + ((a * a + b * b) / (b * b) - 1.0) * e1x * e1y
            + (1.0 / (b * b) - 1.0) * e2x * e2y
        )

    # -- pulled-back contact forms ------------------------------------------------

    def eta1(self, m: ProductPoint, X: ProductTangent) -> float:
        return self.s1.eta(m.p1, X.x1)

    def eta2(self, m: ProductPoint, X: ProductTangent) -> float:
        return self.s2.eta(m.p2, X.x2)

    def d_eta1(self, m: ProductPoint, X: ProductTangent, Y: ProductTangent) -> float:
        """d of the contact form pulled back from the first factor."""
        return self.s1.d_eta(m.p1, X.x1, Y.x1)

    def d_eta2(self, m: ProductPoint, X: ProductTangent, Y: ProductTangent) -> float:
        return self.s2.d_eta(m.p2, X.x2, Y.x2)

    def d_eta_sum(self, m: ProductPoint, X: ProductTangent, Y: ProductTangent) -> float:
        return self.d_eta1(m, X, Y) + self.d_eta2(m, X, Y)

    # -- finite differences on the product ------------------------------------------

    def move(self, m: ProductPoint, s: float, X: ProductTangent) -> ProductPoint:
        """Retract m + s X back onto the product of spheres, factorwise."""
        return ProductPoint(
            project_point(m.p1.coords + s * X.x1.comps),
            project_point(m.p2.coords + s * X.x2.comps),
        )

    def tangent_at(self, m: ProductPoint, c1: np.ndarray, c2: np.ndarray) -> ProductTangent:
        return ProductTangent(tangent_project(m.p1, c1), tangent_project(m.p2, c2))

    def constant_extension(self, X: ProductTangent):
        """Extend a tangent vector to the field q -> projection of its ambient components."""
        c1, c2 = X.x1.comps.copy(), X.x2.comps.copy()
        return lambda q: self.tangent_at(q, c1, c2)

    def lie_bracket_fd(self, F, G, m: ProductPoint, h: float) -> ProductTangent:
        """[F, G] at m by central differences of the factorwise radial extensions."""

        def derivative(field, along: ProductTangent):
            plus = field(self.move(m, h, along))
            minus = field(self.move(m, -h, along))
            return (
                (plus.x1.comps - minus.x1.comps) / (2.0 * h),
                (plus.x2.comps - minus.x2.comps) / (2.0 * h),
            )

        dg1, dg2 = derivative(G, F(m))
        df1, df2 = derivative(F, G(m))
        return self.tangent_at(m, dg1 - df1, dg2 - df2)
