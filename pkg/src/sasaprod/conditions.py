"""Closed-form parameter arithmetic for the special-metric conditions.

Everything here is exact case analysis on the factor dimensions
(2 n1 + 1, 2 n2 + 1) and the structure parameters (a, b):

  * the classification of the Calabi-Eckmann-Morimoto pairs into the
    balanced / LCK / SKT / k-Gauduchon / astheno classes,
  * the compatibility test deciding for which quotient parameters alpha
    the induced structure belongs to the CEM family at all.

The matching test solves the coefficient system obtained by comparing
the two structures on the span of the Reeb fields.  The system reduces
to the quartic

    Im(a)^4 + (2 Re(a)^2 - 1) Im(a)^2 + Re(a)^4 = 0

equivalently |alpha|^2 = |Im(alpha)|, which forces |Im(alpha)| <= 1 and
Re(alpha)^2 <= 1/4; the solver returns the candidate pair only when
every equation of the system checks out numerically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import KOutOfRange
from .product import AlphaParam, CemParam, reeb_block_alpha, reeb_block_cem

MATCH_TOL = 1e-10
# classification treats |a| below this as a = 0
A_ZERO_TOL = 1e-12


@dataclass(frozen=True)
class DimPair:
    """Transverse complex dimensions of the two factors (real dims 2 n_i + 1)."""

    n1: int
    n2: int

    def __post_init__(self):
        if self.n1 < 0 or self.n2 < 0:
            raise ValueError("factor dimensions must be nonnegative")


@dataclass
class SpecialMetricVerdict:
    """Which special-metric classes the CEM pair lands in.

    Booleans record what the classification determines; k_gauduchon holds
    only the orders the case analysis covers (k = 1 needs n1 + n2 >= 2,
    higher k needs n1 + n2 >= 3).
    """

    balanced: bool
    lck: bool
    vaisman_if_lck: bool
    skt: bool
    astheno: bool
    k_gauduchon: dict[int, bool] = field(default_factory=dict)
    polynomial: float = 0.0


def gauduchon_polynomial(d: DimPair, ab: CemParam) -> float:
    """n1(n1-1) + 2 a n1 n2 + n2(n2-1)(a^2 + b^2)."""
    a, b = ab.a, ab.b
    return d.n1 * (d.n1 - 1) + 2.0 * a * d.n1 * d.n2 + d.n2 * (d.n2 - 1) * (a * a + b * b)


def classify_special_metrics(d: DimPair, ab: CemParam, kmax: int = 1) -> SpecialMetricVerdict:
    """Exact case analysis of the special-metric classification.

    Orders k run from 1 to kmax, which must not exceed n1 + n2 (the
    admissible Gauduchon range on a complex (n1 + n2 + 1)-fold).
    """
    n1, n2 = d.n1, d.n2
    if kmax < 1 or kmax > max(n1 + n2, 1):
        raise KOutOfRange(f"kmax = {kmax} outside 1..{max(n1 + n2, 1)} for factors ({n1}, {n2})")

    a_is_zero = abs(ab.a) < A_ZERO_TOL
    poly = gauduchon_polynomial(d, ab)

    balanced = (n1 + n2) < 1
    lck = (n1 == 0 and n2 >= 1) or (n2 == 0 and n1 >= 1)
    skt = (n1 == 1 and n2 == 0) or (n1 == 0 and n2 == 1) or (a_is_zero and n1 == 1 and n2 == 1)

    k_gauduchon: dict[int, bool] = {}
    if n1 + n2 >= 2:
        k_gauduchon[1] = poly == 0.0
    if n1 + n2 >= 3:
        for k in range(2, kmax + 1):
            k_gauduchon[k] = (n1 + n2 - k) * poly == 0.0

    astheno = n1 + n2 >= 2 and poly == 0.0

    return SpecialMetricVerdict(
        balanced=balanced,
        lck=lck,
        vaisman_if_lck=lck,
        skt=skt,
        astheno=astheno,
        k_gauduchon=k_gauduchon,
        polynomial=poly,
    )


def cem_match_residual(alpha: AlphaParam) -> float:
    """The quartic obstruction to the induced structure being a CEM structure."""
    a, b = alpha.a, alpha.b
    return b ** 4 + (2.0 * a * a - 1.0) * b * b + a ** 4


def cem_match_bounds(alpha: AlphaParam) -> tuple[bool, bool]:
    """The necessary conditions |Im| <= 1 and Re^2 <= 1/4 for a match."""
    return abs(alpha.b) <= 1.0, alpha.a ** 2 <= 0.25


def cem_match_equations(alpha: AlphaParam, ab: CemParam) -> list[float]:
    """Residuals of the four matching equations (one of them repeated)."""
    a, b = ab.a, ab.b
    ra, rb = alpha.a, alpha.b
    return [
        ra * b + a * rb,
        b * ra * ra + rb * rb - rb,
        (a * a + b * b) * rb - b,
        ra * b + a * rb,
    ]


def cem_match_solve(alpha: AlphaParam) -> CemParam | None:
    """Solve the Reeb-block matching system, or report that none exists.

    The candidate pair b = Im(alpha)/|alpha|^2, a = -Re(alpha) b/Im(alpha)
    always equalizes the Reeb blocks; it is returned only when the full
    four-equation system holds within MATCH_TOL, which happens exactly on
    the |alpha|^2 = Im(alpha) branch of the quartic.
    """
    ra, rb = alpha.a, alpha.b
    norm2 = ra * ra + rb * rb
    b = rb / norm2
    a = -ra * b / rb
    if abs(b) <= 1e-12:
        return None
    candidate = CemParam(a, b)

    if any(abs(r) > MATCH_TOL for r in cem_match_equations(alpha, candidate)):
        return None

    block_gap = abs(reeb_block_alpha(alpha) - reeb_block_cem(candidate)).max()
    if block_gap > MATCH_TOL:
        return None
    return candidate
