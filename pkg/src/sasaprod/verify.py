"""Property verification: integrability, Hermitianity, positivity, witnesses.

Each suite draws a deterministic sample set, evaluates a defect (or
searches for a witness), and returns a VerificationReport.  Defect-style
suites pass when the worst defect stays below the tolerance; witness
suites pass when the search finds a value above the threshold, and their
reported "defect" is the shortfall below it.  A verifier that cannot
fail is untrustworthy, so deliberately corrupted structures ship
alongside the genuine ones.

Finite-difference brackets on the product use constant ambient
extensions projected factorwise, with step 1e-4: that balances the
truncation error of the nested differences against rounding noise and
keeps Nijenhuis defects of genuine complex structures below 1e-4.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import NotComplexSubspace
from .geometry import (
    CovectorField,
    SampleConfig,
    VectorField,
    lie_bracket,
    mult_i,
    project_point,
    random_tangent,
    tangent_project,
)
from .cone import ConePoint, ConeTangent, KahlerCone
from .product import (
    AlphaParam,
    CemParam,
    ProductConePoint,
    ProductConeTangent,
    ProductPoint,
    ProductTangent,
    SasakianProduct,
    reeb_block_alpha,
    reeb_block_cem,
)
from .sphere import SasakianSphere

NESTED_FD_STEP = 1e-4

# The bracket form of the contact integrability condition, frozen against
# the finite-difference calibration in the test suite: with our
# d-convention (no 1/2 factor),
#   phi^2[X,Y] - phi[phi X, Y] - phi[X, phi Y] + [phi X, phi Y]
# equals NIJENHUIS_CONTACT_FACTOR * d eta(X, Y) * xi.
NIJENHUIS_CONTACT_FACTOR = -1.0


@dataclass
class VerificationReport:
    """Outcome of one verification suite."""

    suite: str
    samples: int
    max_defect: float
    tol: float
    passed: bool
    witnesses: list = field(default_factory=list)
    value: float | None = None  # witness-style suites report the found value here

    def __post_init__(self):
        if self.passed != (self.max_defect <= self.tol):
            raise ValueError("passed must agree with max_defect <= tol")
        if not self.passed and not self.witnesses:
            raise ValueError("a failed report must carry witnesses")

    def to_dict(self) -> dict:
        out = {
            "name": self.suite,
            "samples": self.samples,
            "tol": self.tol,
            "passed": self.passed,
            "witnesses": self.witnesses,
        }
        if self.value is not None:
            out["value"] = self.value
        else:
            out["max_defect"] = self.max_defect
        return out


def _report(suite, samples, max_defect, tol, witnesses, value=None) -> VerificationReport:
    return VerificationReport(
        suite=suite,
        samples=samples,
        max_defect=max_defect,
        tol=tol,
        passed=max_defect <= tol,
        witnesses=witnesses if max_defect > tol else witnesses[:1],
        value=value,
    )


# --- pointwise checks ---------------------------------------------------------


def nijenhuis_defect(
    prod: SasakianProduct,
    J: Callable[[ProductPoint, ProductTangent], ProductTangent],
    m: ProductPoint,
    X: ProductTangent,
    Y: ProductTangent,
    h: float = NESTED_FD_STEP,
) -> float:
    """|N_J(X, Y)| with N_J = [X,Y] + J[JX,Y] + J[X,JY] - [JX,JY]."""
    Xf = prod.constant_extension(X)
    Yf = prod.constant_extension(Y)
    JXf = lambda q: J(q, Xf(q))
    JYf = lambda q: J(q, Yf(q))
    b0 = prod.lie_bracket_fd(Xf, Yf, m, h)
    b1 = prod.lie_bracket_fd(JXf, Yf, m, h)
    b2 = prod.lie_bracket_fd(Xf, JYf, m, h)
    b3 = prod.lie_bracket_fd(JXf, JYf, m, h)
    n = b0 + J(m, b1) + J(m, b2) - b3
    return n.norm()


def hermitian_defect(
    g: Callable[[ProductPoint, ProductTangent, ProductTangent], float],
    J: Callable[[ProductPoint, ProductTangent], ProductTangent],
    m: ProductPoint,
    X: ProductTangent,
    Y: ProductTangent,
) -> float:
    """|g(JX, JY) - g(X, Y)|."""
    return abs(g(m, J(m, X), J(m, Y)) - g(m, X, Y))


def semipositivity_value(prod: SasakianProduct, m: ProductPoint, X: ProductTangent, alpha: AlphaParam) -> float:
    """d eta_1(X, J X) for the induced structure; nonnegative for genuine ones."""
    return prod.d_eta1(m, X, prod.j_alpha(m, X, alpha))


def one_one_defect(
    prod: SasakianProduct, m: ProductPoint, X: ProductTangent, Y: ProductTangent, alpha: AlphaParam
) -> float:
    """|d eta_1(JX, JY) - d eta_1(X, Y)|: the defect of d eta_1 being (1,1)."""
    jx = prod.j_alpha(m, X, alpha)
    jy = prod.j_alpha(m, Y, alpha)
    return abs(prod.d_eta1(m, jx, jy) - prod.d_eta1(m, X, Y))


def fundamental_form_d(
    prod: SasakianProduct,
    g: Callable[[ProductPoint, ProductTangent, ProductTangent], float],
    J: Callable[[ProductPoint, ProductTangent], ProductTangent],
    m: ProductPoint,
    X: ProductTangent,
    Y: ProductTangent,
    Z: ProductTangent,
    h: float = NESTED_FD_STEP,
) -> float:
    """d(Omega)(X, Y, Z) by finite differences, for Omega = g(J., .)."""

    def omega(q: ProductPoint, U: ProductTangent, V: ProductTangent) -> float:
        return g(q, J(q, U), V)

    fields = [prod.constant_extension(W) for W in (X, Y, Z)]

    def scalar_derivative(i, j, k):
        def f(q):
            return omega(q, fields[j](q), fields[k](q))

        along = fields[i](m)
        return (f(prod.move(m, h, along)) - f(prod.move(m, -h, along))) / (2.0 * h)

    term_d = scalar_derivative(0, 1, 2) - scalar_derivative(1, 0, 2) + scalar_derivative(2, 0, 1)
    b01 = prod.lie_bracket_fd(fields[0], fields[1], m, h)
    b02 = prod.lie_bracket_fd(fields[0], fields[2], m, h)
    b12 = prod.lie_bracket_fd(fields[1], fields[2], m, h)
    term_b = -omega(m, b01, fields[2](m)) + omega(m, b02, fields[1](m)) - omega(m, b12, fields[0](m))
    return term_d + term_b


def nonkahler_witness(
    prod: SasakianProduct,
    g,
    J,
    m: ProductPoint,
    X: ProductTangent,
    Y: ProductTangent,
    Z: ProductTangent,
    h: float = NESTED_FD_STEP,
) -> float:
    """|d Omega(X, Y, Z)|; a value above threshold certifies non-closedness."""
    return abs(fundamental_form_d(prod, g, J, m, X, Y, Z, h))


def tangency_check(
    prod: SasakianProduct,
    m: ProductPoint,
    basis: list[ProductTangent],
    alpha: AlphaParam,
    tol: float = 1e-8,
) -> bool:
    """Does the span of ``basis`` lie inside ker(d eta_1 + d eta_2)?

    The span must be invariant under the induced complex structure;
    otherwise NotComplexSubspace is raised.  Kernel membership is probed
    against a spanning set of tangent vectors.
    """
    if not basis:
        return True
    cols = [np.concatenate([v.x1.comps, v.x2.comps]) for v in basis]
    B = np.stack(cols, axis=1)
    for v in basis:
        jv = prod.j_alpha(m, v, alpha)
        target = np.concatenate([jv.x1.comps, jv.x2.comps])
        coeffs, *_ = np.linalg.lstsq(B, target, rcond=None)
        residual = float(np.linalg.norm(B @ coeffs - target))
        if residual > tol * max(1.0, float(np.linalg.norm(target))):
            raise NotComplexSubspace(f"J-image leaves the span by {residual:.3e}")

    probes = []
    d1, d2 = prod.s1.ambient_dim, prod.s2.ambient_dim
    for k in range(d1):
        e = np.zeros(d1)
        e[k] = 1.0
        probes.append(ProductTangent(tangent_project(m.p1, e), prod.zero_tangent(m).x2))
    for k in range(d2):
        e = np.zeros(d2)
        e[k] = 1.0
        probes.append(ProductTangent(prod.zero_tangent(m).x1, tangent_project(m.p2, e)))

    for v in basis:
        for w in probes:
            if abs(prod.d_eta_sum(m, v, w)) > tol:
                return False
    return True


def corrupted_cem(prod: SasakianProduct, ab: CemParam):
    """Negative control: the CEM structure with the sign of its action on xi_2 flipped."""
    a, b = ab.a, ab.b

    def J(m: ProductPoint, X: ProductTangent) -> ProductTangent:
        c1 = prod.s1.eta(m.p1, X.x1)
        c2 = prod.s2.eta(m.p2, X.x2)
        out1 = prod.s1.phi(m.p1, X.x1) - ((a / b) * c1 - ((a * a + b * b) / b) * c2) * prod.s1.xi(m.p1)
        out2 = prod.s2.phi(m.p2, X.x2) + ((1.0 / b) * c1 - (a / b) * c2) * prod.s2.xi(m.p2)
        return ProductTangent(out1, out2)

    return J


# --- sphere-level suites ---------------------------------------------------------


def sasakian_axiom_suite(sphere: SasakianSphere, samples: int, seed: int, tol: float = 1e-10) -> VerificationReport:
    """All algebraic contact-metric identities at random points."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    witness = None
    for _ in range(samples):
        p = project_point(rng.standard_normal(sphere.ambient_dim))
        x = random_tangent(p, rng)
        y = random_tangent(p, rng)
        xi = sphere.xi(p)
        eta_x = sphere.eta(p, x)
        eta_y = sphere.eta(p, y)
        phix = sphere.phi(p, x)
        phiy = sphere.phi(p, y)
        defects = (
            abs(sphere.eta(p, xi) - 1.0),
            abs(sphere.eta(p, phix)),
            float(np.linalg.norm(sphere.phi(p, phix).comps + x.comps - eta_x * xi.comps)),
            abs(sphere.metric(phix, phiy) - sphere.metric(x, y) + eta_x * eta_y),
            sphere.phi(p, xi).norm(),
        )
        d = max(defects)
        if d > worst:
            worst = d
            witness = {"point": p.coords.tolist(), "vectors": [x.comps.tolist(), y.comps.tolist()], "defect": d}
    return _report(f"sasakian-axioms-s{sphere.dim}", samples, worst, tol, [witness] if witness else [])


def contact_bracket_condition_suite(
    sphere: SasakianSphere, samples: int, seed: int, tol: float = 1e-5
) -> VerificationReport:
    """The bracket form of contact integrability, with finite-difference brackets."""
    rng = np.random.default_rng(seed)
    cfg = SampleConfig(seed=seed, count=samples, fd_step=NESTED_FD_STEP, tol=tol)
    worst = 0.0
    witness = None
    for _ in range(samples):
        p = project_point(rng.standard_normal(sphere.ambient_dim))
        xv = random_tangent(p, rng)
        yv = random_tangent(p, rng)
        Xf = VectorField(lambda q, v=xv.comps.copy(): tangent_project(q, v), label="X")
        Yf = VectorField(lambda q, v=yv.comps.copy(): tangent_project(q, v), label="Y")
        phiX = VectorField(lambda q: sphere.phi(q, Xf.at(q)), label="phiX")
        phiY = VectorField(lambda q: sphere.phi(q, Yf.at(q)), label="phiY")
        b_xy = lie_bracket(Xf, Yf, p, cfg)
        b_px_y = lie_bracket(phiX, Yf, p, cfg)
        b_x_py = lie_bracket(Xf, phiY, p, cfg)
        b_px_py = lie_bracket(phiX, phiY, p, cfg)
        lhs = (
            sphere.phi(p, sphere.phi(p, b_xy)).comps
            - sphere.phi(p, b_px_y).comps
            - sphere.phi(p, b_x_py).comps
            + b_px_py.comps
        )
        rhs = NIJENHUIS_CONTACT_FACTOR * sphere.d_eta(p, xv, yv) * sphere.xi(p).comps
        d = float(np.linalg.norm(lhs - rhs))
        if d > worst:
            worst = d
            witness = {"point": p.coords.tolist(), "vectors": [xv.comps.tolist(), yv.comps.tolist()], "defect": d}
    return _report(f"contact-bracket-condition-s{sphere.dim}", samples, worst, tol, [witness] if witness else [])


def reeb_isometry_suite(sphere: SasakianSphere, samples: int, seed: int, tol: float = 1e-8) -> VerificationReport:
    """Reeb flow preserves chord distances and the contact form."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    witness = None
    for _ in range(samples):
        p = project_point(rng.standard_normal(sphere.ambient_dim))
        q = project_point(rng.standard_normal(sphere.ambient_dim))
        x = random_tangent(p, rng)
        s = float(rng.uniform(-3.0, 3.0))
        dist_defect = abs(
            float(np.linalg.norm(sphere.reeb_flow(p, s).coords - sphere.reeb_flow(q, s).coords))
            - float(np.linalg.norm(p.coords - q.coords))
        )
        pushed = sphere.reeb_flow_tangent(x, s)
        eta_defect = abs(sphere.eta(pushed.base, pushed) - sphere.eta(p, x))
        d = max(dist_defect, eta_defect)
        if d > worst:
            worst = d
            witness = {"point": p.coords.tolist(), "vectors": [x.comps.tolist()], "defect": d}
    return _report(f"reeb-isometry-s{sphere.dim}", samples, worst, tol, [witness] if witness else [])


# --- cone suite -------------------------------------------------------------------


def cone_suite(sphere: SasakianSphere, samples: int, seed: int) -> list[VerificationReport]:
    """Complex-structure, compatibility, homothety, and closedness checks on the cone."""
    cone = KahlerCone(sphere)
    rng = np.random.default_rng(seed)

    def rand_point() -> ConePoint:
        return ConePoint(project_point(rng.standard_normal(sphere.ambient_dim)), float(rng.uniform(0.3, 3.0)))

    def rand_tangent(cp: ConePoint) -> ConeTangent:
        return ConeTangent(random_tangent(cp.base, rng), float(rng.standard_normal()))

    worst = {
        "cone-square": 0.0,
        "cone-hermitian": 0.0,
        "cone-j-agreement": 0.0,
        "cone-form-invariance": 0.0,
        "cone-homothety-scaling": 0.0,
        "cone-potential-contraction": 0.0,
    }
    witnesses = {k: None for k in worst}

    for _ in range(samples):
        cp = rand_point()
        u = rand_tangent(cp)
        v = rand_tangent(cp)
        ju = cone.complex_structure(cp, u)
        jv = cone.complex_structure(cp, v)
        jju = cone.complex_structure(cp, ju)
        checks = {
            "cone-square": float(
                np.linalg.norm(jju.base_part.comps + u.base_part.comps) + abs(jju.radial + u.radial)
            ),
            "cone-hermitian": abs(cone.metric(cp, ju, jv) - cone.metric(cp, u, v)),
            "cone-j-agreement": _cone_tangent_gap(ju, cone.complex_structure_ambient(cp, u)),
            "cone-form-invariance": abs(cone.kahler_form(cp, ju, jv) - cone.kahler_form(cp, u, v)),
            "cone-potential-contraction": abs(
                cone.kahler_form(cp, cone.euler_field(cp), u) - cp.t ** 2 * cone.eta(cp, u)
            ),
        }
        for lam in (0.5, 2.0, 7.0):
            hcp = cone.homothety(cp, lam)
            pulled = cone.kahler_form(hcp, cone.homothety_pushforward(u, lam), cone.homothety_pushforward(v, lam))
            scale = max(1.0, abs(cone.kahler_form(cp, u, v)))
            checks["cone-homothety-scaling"] = max(
                checks.get("cone-homothety-scaling", 0.0),
                abs(pulled - lam ** 2 * cone.kahler_form(cp, u, v)) / scale,
            )
        for key, d in checks.items():
            if d > worst[key]:
                worst[key] = d
                witnesses[key] = {
                    "point": cp.base.coords.tolist(),
                    "t": cp.t,
                    "vectors": [u.base_part.comps.tolist(), v.base_part.comps.tolist()],
                    "defect": d,
                }

    # closedness of the fundamental form and the kernel of the lifted contact form,
    # in the flat ambient chart (constant directions commute there)
    d_omega_worst, d_omega_witness = 0.0, None
    kernel_worst, kernel_witness = 0.0, None
    h = 1e-5
    for _ in range(max(8, samples // 8)):
        cp = rand_point()
        z = cone.to_ambient(cp)
        dirs = [rng.standard_normal(sphere.ambient_dim) for _ in range(3)]
        from .geometry import ambient_d1, ambient_d2

        d = abs(ambient_d2(cone.kahler_form_ambient, z, *dirs, h=h))
        if d > d_omega_worst:
            d_omega_worst, d_omega_witness = d, {"point": z.tolist(), "defect": d}
        for special in (cone.euler_field(cp), cone.reeb_tangent(cp)):
            w = cone.tangent_to_ambient(cp, special)
            dk = abs(ambient_d1(cone.eta_ambient, z, w, dirs[0], h=h))
            if dk > kernel_worst:
                kernel_worst, kernel_witness = dk, {"point": z.tolist(), "defect": dk}

    reports = [
        _report("cone-square", samples, worst["cone-square"], 1e-9, [witnesses["cone-square"]]),
        _report("cone-hermitian", samples, worst["cone-hermitian"], 1e-9, [witnesses["cone-hermitian"]]),
        _report("cone-j-agreement", samples, worst["cone-j-agreement"], 1e-10, [witnesses["cone-j-agreement"]]),
        _report(
            "cone-form-invariance", samples, worst["cone-form-invariance"], 1e-9, [witnesses["cone-form-invariance"]]
        ),
        _report(
            "cone-homothety-scaling",
            samples,
            worst["cone-homothety-scaling"],
            1e-9,
            [witnesses["cone-homothety-scaling"]],
        ),
        _report(
            "cone-potential-contraction",
            samples,
            worst["cone-potential-contraction"],
            1e-9,
            [witnesses["cone-potential-contraction"]],
        ),
        _report("cone-form-closed", max(8, samples // 8), d_omega_worst, 1e-5, [d_omega_witness]),
        _report("cone-contact-kernel", max(8, samples // 8), kernel_worst, 1e-6, [kernel_witness]),
    ]
    return reports


def _cone_tangent_gap(u: ConeTangent, v: ConeTangent) -> float:
    return float(np.linalg.norm(u.base_part.comps - v.base_part.comps)) + abs(u.radial - v.radial)


# --- quotient suite -------------------------------------------------------------------


def quotient_suite(prod: SasakianProduct, alpha: AlphaParam, samples: int, seed: int) -> list[VerificationReport]:
    """Normalization, orbit invariance, holomorphy, and pushforward agreement."""
    rng = np.random.default_rng(seed)

    def rand_cone_point() -> ProductConePoint:
        return ProductConePoint(
            ConePoint(project_point(rng.standard_normal(prod.s1.ambient_dim)), float(rng.uniform(0.3, 3.0))),
            ConePoint(project_point(rng.standard_normal(prod.s2.ambient_dim)), float(rng.uniform(0.3, 3.0))),
        )

    worst = {
        "quotient-radii": 0.0,
        "quotient-orbit-invariance": 0.0,
        "group-action-law": 0.0,
        "group-action-chart-agreement": 0.0,
    }
    witnesses = {k: None for k in worst}

    for _ in range(samples):
        x = rand_cone_point()
        v = prod.normalize_v(x.cp1.t, x.cp2.t, alpha)
        moved = prod.group_action(v, x, alpha)
        d_radii = max(abs(moved.cp1.t - 1.0), abs(moved.cp2.t - 1.0))

        w = complex(rng.standard_normal(), rng.standard_normal())
        u = complex(rng.standard_normal(), rng.standard_normal())
        pi_x = prod.projection(x, alpha)
        pi_wx = prod.projection(prod.group_action(w, x, alpha), alpha)
        d_orbit = max(
            float(np.linalg.norm(pi_x.p1.coords - pi_wx.p1.coords)),
            float(np.linalg.norm(pi_x.p2.coords - pi_wx.p2.coords)),
        )

        one = prod.group_action(w + u, x, alpha)
        two = prod.group_action(w, prod.group_action(u, x, alpha), alpha)
        d_law = max(
            float(np.linalg.norm(one.cp1.base.coords - two.cp1.base.coords)),
            float(np.linalg.norm(one.cp2.base.coords - two.cp2.base.coords)),
            abs(one.cp1.t - two.cp1.t),
            abs(one.cp2.t - two.cp2.t),
        )

        chart = prod.group_action_ambient(w, x, alpha)
        flows = prod.group_action(w, x, alpha)
        d_chart = max(
            float(np.linalg.norm(chart.cp1.base.coords - flows.cp1.base.coords)),
            float(np.linalg.norm(chart.cp2.base.coords - flows.cp2.base.coords)),
            abs(chart.cp1.t - flows.cp1.t),
            abs(chart.cp2.t - flows.cp2.t),
        )

        for key, d in (
            ("quotient-radii", d_radii),
            ("quotient-orbit-invariance", d_orbit),
            ("group-action-law", d_law),
            ("group-action-chart-agreement", d_chart),
        ):
            if d > worst[key]:
                worst[key] = d
                witnesses[key] = {
                    "point": [x.cp1.base.coords.tolist(), x.cp2.base.coords.tolist()],
                    "radii": [x.cp1.t, x.cp2.t],
                    "defect": d,
                }

    # differential checks on the unit level set
    d_push, push_witness = 0.0, None
    d_holo, holo_witness = 0.0, None
    for _ in range(max(8, samples // 4)):
        m = prod.random_point(rng)
        x = prod.level_set_point(m)
        U = ProductConeTangent(
            ConeTangent(random_tangent(m.p1, rng), float(rng.standard_normal())),
            ConeTangent(random_tangent(m.p2, rng), float(rng.standard_normal())),
        )
        closed = prod.pushforward(x, U, alpha)
        fd = prod.pushforward_fd(x, U, alpha)
        d1 = (closed - fd).norm()
        if d1 > d_push:
            d_push, push_witness = d1, {"point": [m.p1.coords.tolist(), m.p2.coords.tolist()], "defect": d1}

        ju = prod.cone_complex_structure(x, U)
        lhs = prod.pushforward_fd(x, ju, alpha)
        rhs = prod.j_alpha(m, prod.pushforward_fd(x, U, alpha), alpha)
        d2 = (lhs - rhs).norm()
        if d2 > d_holo:
            d_holo, holo_witness = d2, {"point": [m.p1.coords.tolist(), m.p2.coords.tolist()], "defect": d2}

    return [
        _report("quotient-radii", samples, worst["quotient-radii"], 1e-12, [witnesses["quotient-radii"]]),
        _report(
            "quotient-orbit-invariance",
            samples,
            worst["quotient-orbit-invariance"],
            1e-10,
            [witnesses["quotient-orbit-invariance"]],
        ),
        _report("group-action-law", samples, worst["group-action-law"], 1e-10, [witnesses["group-action-law"]]),
        _report(
            "group-action-chart-agreement",
            samples,
            worst["group-action-chart-agreement"],
            1e-10,
            [witnesses["group-action-chart-agreement"]],
        ),
        _report("quotient-pushforward-agreement", max(8, samples // 4), d_push, 1e-6, [push_witness]),
        _report("quotient-holomorphy", max(8, samples // 4), d_holo, 1e-6, [holo_witness]),
    ]


# --- product structure suites ---------------------------------------------------------


def integrability_suite(
    prod: SasakianProduct,
    J,
    name: str,
    samples: int,
    seed: int,
    tol: float = 1e-4,
) -> VerificationReport:
    rng = np.random.default_rng(seed)
    worst = 0.0
    witness = None
    for _ in range(samples):
        m = prod.random_point(rng)
        X = prod.random_tangent(m, rng)
        Y = prod.random_tangent(m, rng)
        d = nijenhuis_defect(prod, J, m, X, Y)
        if d > worst:
            worst = d
            witness = {
                "point": [m.p1.coords.tolist(), m.p2.coords.tolist()],
                "vectors": [X.x1.comps.tolist(), X.x2.comps.tolist(), Y.x1.comps.tolist(), Y.x2.comps.tolist()],
                "defect": d,
            }
    return _report(name, samples, worst, tol, [witness] if witness else [])


def negative_control_suite(prod: SasakianProduct, ab: CemParam, samples: int, seed: int) -> VerificationReport:
    """The corrupted structure must trip the integrability check: value above 1e-2."""
    rng = np.random.default_rng(seed)
    J = corrupted_cem(prod, ab)
    best = 0.0
    witness = None
    for _ in range(samples):
        m = prod.random_point(rng)
        X = prod.random_tangent(m, rng)
        Y = prod.random_tangent(m, rng)
        d = nijenhuis_defect(prod, J, m, X, Y)
        if d > best:
            best = d
            witness = {"point": [m.p1.coords.tolist(), m.p2.coords.tolist()], "defect": d}
    threshold = 1e-2
    shortfall = max(0.0, threshold - best)
    return VerificationReport(
        suite="integrability-negative-control",
        samples=samples,
        max_defect=shortfall,
        tol=0.0,
        passed=shortfall <= 0.0,
        witnesses=[witness] if witness else [{"defect": 0.0}],
        value=best,
    )


def hermitian_suite(prod: SasakianProduct, alpha: AlphaParam, samples: int, seed: int) -> list[VerificationReport]:
    """Hermitian compatibility and positive definiteness for both metric pairs."""
    rng = np.random.default_rng(seed)
    ab = CemParam(alpha.a, alpha.b)
    pairs = {
        "hermitian-cem": (
            lambda m, X, Y: prod.metric_cem(m, X, Y, ab),
            lambda m, X: prod.j_cem(m, X, ab),
        ),
        "hermitian-quotient": (
            lambda m, X, Y: prod.metric_alpha(m, X, Y, alpha),
            lambda m, X: prod.j_alpha(m, X, alpha),
        ),
    }
    reports = []
    for name, (g, J) in pairs.items():
        worst, witness = 0.0, None
        min_eig = float("inf")
        for _ in range(samples):
            m = prod.random_point(rng)
            X = prod.random_tangent(m, rng)
            Y = prod.random_tangent(m, rng)
            d = hermitian_defect(g, J, m, X, Y)
            if d > worst:
                worst = d
                witness = {"point": [m.p1.coords.tolist(), m.p2.coords.tolist()], "defect": d}
            min_eig = min(min_eig, _min_gram_eigenvalue(prod, g, m, rng))
        reports.append(_report(name, samples, worst, 1e-10, [witness]))
        eig_defect = max(0.0, -min_eig + 1e-12)
        reports.append(
            VerificationReport(
                suite=name.replace("hermitian", "metric-positive"),
                samples=samples,
                max_defect=eig_defect,
                tol=0.0,
                passed=eig_defect <= 0.0,
                witnesses=[{"min_eigenvalue": min_eig}],
                value=min_eig,
            )
        )
    return reports


def _min_gram_eigenvalue(prod: SasakianProduct, g, m: ProductPoint, rng) -> float:
    basis = []
    d1, d2 = prod.s1.ambient_dim, prod.s2.ambient_dim
    for k in range(d1):
        e = np.zeros(d1)
        e[k] = 1.0
        basis.append(ProductTangent(tangent_project(m.p1, e), prod.zero_tangent(m).x2))
    for k in range(d2):
        e = np.zeros(d2)
        e[k] = 1.0
        basis.append(ProductTangent(prod.zero_tangent(m).x1, tangent_project(m.p2, e)))
    # the projected coordinate vectors overspan; keep an orthonormal tangent frame
    mat = np.stack([np.concatenate([v.x1.comps, v.x2.comps]) for v in basis], axis=1)
    q, r = np.linalg.qr(mat)
    keep = [i for i in range(r.shape[0]) if abs(r[i, i]) > 1e-9]
    frame = []
    for i in keep:
        col = q[:, i]
        frame.append(ProductTangent(tangent_project(m.p1, col[:d1]), tangent_project(m.p2, col[d1:])))
    gram = np.array([[g(m, u, v) for v in frame] for u in frame])
    return float(np.linalg.eigvalsh(gram).min())


def semipositivity_suite(prod: SasakianProduct, alpha: AlphaParam, samples: int, seed: int) -> list[VerificationReport]:
    """The pulled-back contact differential is a semipositive (1,1)-form."""
    rng = np.random.default_rng(seed)
    min_value = float("inf")
    min_witness = None
    worst_11, witness_11 = 0.0, None
    worst_reeb, witness_reeb = 0.0, None
    for _ in range(samples):
        m = prod.random_point(rng)
        X = prod.random_tangent(m, rng)
        Y = prod.random_tangent(m, rng)
        val = semipositivity_value(prod, m, X, alpha)
        if val < min_value:
            min_value = val
            min_witness = {"point": [m.p1.coords.tolist(), m.p2.coords.tolist()], "value": val}
        d11 = one_one_defect(prod, m, X, Y, alpha)
        if d11 > worst_11:
            worst_11, witness_11 = d11, {"point": [m.p1.coords.tolist(), m.p2.coords.tolist()], "defect": d11}
        for v in (prod.xi1(m), prod.xi2(m)):
            dr = abs(semipositivity_value(prod, m, v, alpha))
            if dr > worst_reeb:
                worst_reeb, witness_reeb = dr, {"point": [m.p1.coords.tolist(), m.p2.coords.tolist()], "defect": dr}
    neg = max(0.0, -min_value)
    return [
        _report("semipositivity-value", samples, neg, 1e-8, [min_witness], value=min_value),
        _report("semipositivity-one-one", samples, worst_11, 1e-8, [witness_11]),
        _report("semipositivity-reeb-kernel", samples, worst_reeb, 1e-10, [witness_reeb]),
    ]


def nonkahler_suite(
    prod: SasakianProduct,
    g,
    J,
    name: str,
    samples: int,
    seed: int,
    threshold: float = 1e-3,
) -> VerificationReport:
    """Search for a triple certifying that the fundamental form is not closed."""
    rng = np.random.default_rng(seed)
    best = 0.0
    witness = None

    def consider(m, X, Y, Z, tag):
        nonlocal best, witness
        d = nonkahler_witness(prod, g, J, m, X, Y, Z)
        if d > best:
            best = d
            witness = {"point": [m.p1.coords.tolist(), m.p2.coords.tolist()], "kind": tag, "value": d}

    for _ in range(samples):
        m = prod.random_point(rng)
        # structured triples: a Reeb direction against a transverse pair
        x1 = prod.random_tangent(m, rng)
        transverse = ProductTangent(
            x1.x1 - prod.s1.eta(m.p1, x1.x1) * prod.s1.xi(m.p1),
            x1.x2 - prod.s2.eta(m.p2, x1.x2) * prod.s2.xi(m.p2),
        )
        consider(m, prod.xi1(m), transverse, J(m, transverse), "reeb1-transverse")
        consider(m, prod.xi2(m), transverse, J(m, transverse), "reeb2-transverse")
        consider(m, prod.random_tangent(m, rng), prod.random_tangent(m, rng), prod.random_tangent(m, rng), "random")

    shortfall = max(0.0, threshold - best)
    return VerificationReport(
        suite=name,
        samples=samples,
        max_defect=shortfall,
        tol=0.0,
        passed=shortfall <= 0.0,
        witnesses=[witness] if witness else [{"value": 0.0}],
        value=best,
    )


def reeb_block_transpose_suite(samples: int, seed: int) -> VerificationReport:
    """The induced structure's Reeb block equals minus the transpose of the CEM one."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    witness = None
    for _ in range(samples):
        a = float(rng.uniform(-3.0, 3.0))
        b = float(rng.uniform(0.1, 3.0)) * (1.0 if rng.uniform() < 0.5 else -1.0)
        gap = float(np.max(np.abs(reeb_block_alpha(AlphaParam(a, b)) + reeb_block_cem(CemParam(a, b)).T)))
        if gap > worst:
            worst = gap
            witness = {"alpha": [a, b], "defect": gap}
    return _report("reeb-block-transpose", samples, worst, 0.0, [witness] if witness else [])
