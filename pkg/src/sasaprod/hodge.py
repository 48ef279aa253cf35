"""Dolbeault cohomology of products of Sasakian spheres, as finite linear algebra.

A regular Sasakian sphere has transverse (basic) cohomology equal to that
of complex projective space, a bigraded ring with one generator in each
(p, p) on which the Lefschetz operator acts by multiplication.  For a
product, the basic cohomology is the bigraded tensor product, with
Lefschetz operator L = L1 (x) Id + Id (x) L2.

Adjoining the anti-holomorphic half of the total contact form enlarges
each column to

    A^{p,q} = H_bas^{p,q} (+) H_bas^{p,q-1}

with L acting blockwise.  The Dolbeault cohomology of the product sits in
a long exact sequence whose connecting map is L, giving the dimension
formula used below:

    h^{p,q} = dim coker(L: A^{p-1,q-1} -> A^{p,q})
            + dim ker (L: A^{p-1,q}   -> A^{p,q+1})

All ranks are computed exactly over the rationals; no tolerances appear
anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import ModelFormatError, ModelMismatch

Matrix = list[list[Fraction]]


def _rank(mat: Matrix) -> int:
    """Rank over Q by fraction-exact Gaussian elimination."""
    if not mat or not mat[0]:
        return 0
    m = [row[:] for row in mat]
    rows, cols = len(m), len(m[0])
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = m[rank][col]
        m[rank] = [x / inv for x in m[rank]]
        for r in range(rows):
            if r != rank and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def _zero_matrix(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


@dataclass
class TransverseModel:
    """A finite bigraded ring with Lefschetz maps: the basic cohomology model.

    ``dims[(p, q)]`` is the dimension of the (p, q) summand and
    ``lefschetz[(p, q)]`` the matrix of wedging with the transverse
    Kahler class, mapping (p, q) to (p+1, q+1); absent keys mean zero.
    """

    dims: dict[tuple[int, int], int]
    lefschetz: dict[tuple[int, int], Matrix]
    n_transverse: int
    name: str = "model"

    def dim(self, p: int, q: int) -> int:
        return self.dims.get((p, q), 0)

    def lef(self, p: int, q: int) -> Matrix:
        mat = self.lefschetz.get((p, q))
        if mat is None:
            return _zero_matrix(self.dim(p + 1, q + 1), self.dim(p, q))
        return mat

    def validate(self):
        """Shape checks plus the hard-Lefschetz injectivity/surjectivity pattern."""
        for (p, q), d in self.dims.items():
            if d < 0:
                raise ModelMismatch(f"negative dimension at {(p, q)}")
            if d > 0 and not (0 <= p <= self.n_transverse and 0 <= q <= self.n_transverse):
                raise ModelMismatch(f"support at {(p, q)} outside 0..{self.n_transverse}")
        for (p, q), mat in self.lefschetz.items():
            rows, cols = self.dim(p + 1, q + 1), self.dim(p, q)
            if len(mat) != rows or any(len(r) != cols for r in mat):
                raise ModelMismatch(f"Lefschetz block at {(p, q)} has wrong shape")
        for (p, q), d in self.dims.items():
            if d == 0:
                continue
            r = _rank(self.lef(p, q))
            if p + q < self.n_transverse and r < d:
                raise ModelMismatch(f"Lefschetz not injective on degree {(p, q)}")
            if p + q + 2 > self.n_transverse and r < self.dim(p + 1, q + 1):
                raise ModelMismatch(f"Lefschetz not surjective onto degree {(p + 1, q + 1)}")
        return self

    def total_dim(self, k: int) -> int:
        return sum(d for (p, q), d in self.dims.items() if p + q == k)


def cpn_model(n: int) -> TransverseModel:
    """The transverse model of the regular sphere S^{2n+1}: the cohomology of CP^n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    dims = {(p, p): 1 for p in range(n + 1)}
    lefschetz = {(p, p): [[Fraction(1)]] for p in range(n)}
    return TransverseModel(dims, lefschetz, n, name=f"cp{n}").validate()


def tensor_model(m1: TransverseModel, m2: TransverseModel) -> TransverseModel:
    """Bigraded tensor product with L = L1 (x) Id + Id (x) L2."""
    n = m1.n_transverse + m2.n_transverse
    dims: dict[tuple[int, int], int] = {}
    for (p1, q1), d1 in m1.dims.items():
        for (p2, q2), d2 in m2.dims.items():
            if d1 and d2:
                key = (p1 + p2, q1 + q2)
                dims[key] = dims.get(key, 0) + d1 * d2

    def blocks(p, q):
        """Ordered decomposition of the (p, q) summand into factor blocks."""
        out = []
        offset = 0
        for (p1, q1) in sorted(m1.dims):
            d1 = m1.dim(p1, q1)
            d2 = m2.dim(p - p1, q - q1)
            if d1 and d2:
                out.append((p1, q1, d1, d2, offset))
                offset += d1 * d2
        return out

    lefschetz: dict[tuple[int, int], Matrix] = {}
    for (p, q), d in dims.items():
        rows = dims.get((p + 1, q + 1), 0)
        if rows == 0:
            continue
        mat = _zero_matrix(rows, d)
        target_offsets = {(p1, q1): off for (p1, q1, _, _, off) in blocks(p + 1, q + 1)}
        target_blocks = {(p1, q1): (d1, d2) for (p1, q1, d1, d2, _) in blocks(p + 1, q + 1)}
        for (p1, q1, d1, d2, src_off) in blocks(p, q):
            lef1 = m1.lef(p1, q1)
            if (p1 + 1, q1 + 1) in target_offsets and lef1:
                t_off = target_offsets[(p1 + 1, q1 + 1)]
                for r1 in range(len(lef1)):
                    for i1 in range(d1):
                        if lef1[r1][i1] != 0:
                            for i2 in range(d2):
                                mat[t_off + r1 * d2 + i2][src_off + i1 * d2 + i2] += lef1[r1][i1]
            lef2 = m2.lef(p - p1, q - q1)
            if (p1, q1) in target_offsets and lef2:
                t_off = target_offsets[(p1, q1)]
                _, d2_target = target_blocks[(p1, q1)]
                for r2 in range(len(lef2)):
                    for i2 in range(d2):
                        if lef2[r2][i2] != 0:
                            for i1 in range(d1):
                                mat[t_off + i1 * d2_target + r2][src_off + i1 * d2 + i2] += lef2[r2][i2]
        lefschetz[(p, q)] = mat
    return TransverseModel(dims, lefschetz, n, name=f"{m1.name}*{m2.name}").validate()


@dataclass
class EtaComplexDims:
    """Column dimensions A^{p,q} = h^{p,q} + h^{p,q-1} and the blockwise Lefschetz maps."""

    model: TransverseModel
    a_dims: dict[tuple[int, int], int] = field(default_factory=dict)

    def a_dim(self, p: int, q: int) -> int:
        return self.model.dim(p, q) + self.model.dim(p, q - 1)

    def lef(self, p: int, q: int) -> Matrix:
        """Block diagonal: the pure part and the shifted copy never mix."""
        top = self.model.lef(p, q)
        bottom = self.model.lef(p, q - 1)
        rows = self.a_dim(p + 1, q + 1)
        cols = self.a_dim(p, q)
        mat = _zero_matrix(rows, cols)
        r0, c0 = len(top), self.model.dim(p, q)
        for r in range(len(top)):
            for c in range(len(top[r])):
                mat[r][c] = top[r][c]
        for r in range(len(bottom)):
            for c in range(len(bottom[r])):
                mat[r0 + r][c0 + c] = bottom[r][c]
        return mat


def eta_complex_cohomology(model: TransverseModel) -> EtaComplexDims:
    """Extend the basic model by the closed (0,1) contact generator."""
    out = EtaComplexDims(model=model)
    for p in range(model.n_transverse + 1):
        for q in range(model.n_transverse + 2):
            d = out.a_dim(p, q)
            if d:
                out.a_dims[(p, q)] = d
    return out


@dataclass
class HodgeDiamond:
    """The table of Dolbeault dimensions of a compact complex n-fold."""

    n: int
    h: dict[tuple[int, int], int]

    def entry(self, p: int, q: int) -> int:
        return self.h.get((p, q), 0)

    def euler(self) -> int:
        return sum((-1) ** (p + q) * v for (p, q), v in self.h.items())

    def total(self, k: int) -> int:
        return sum(v for (p, q), v in self.h.items() if p + q == k)

    def serre_violations(self) -> list[tuple[int, int]]:
        bad = []
        for p in range(self.n + 1):
            for q in range(self.n + 1):
                if self.entry(p, q) != self.entry(self.n - p, self.n - q):
                    bad.append((p, q))
        return bad

    def to_entries(self) -> list[dict]:
        return [
            {"p": p, "q": q, "h": self.entry(p, q)}
            for p in range(self.n + 1)
            for q in range(self.n + 1)
        ]

    def render_text(self) -> str:
        width = max(2, max((len(str(v)) for v in self.h.values()), default=1) + 1)
        lines = ["h^{p,q}  (rows q = " + f"{self.n}..0, columns p = 0..{self.n})"]
        header = "q\\p |" + "".join(f"{p:>{width}}" for p in range(self.n + 1))
        lines.append(header)
        lines.append("-" * len(header))
        for q in range(self.n, -1, -1):
            lines.append(f"{q:>3} |" + "".join(f"{self.entry(p, q):>{width}}" for p in range(self.n + 1)))
        return "\n".join(lines)


def dolbeault_hodge_numbers(model: TransverseModel, dim_c: int) -> HodgeDiamond:
    """Hodge numbers of the product via the long-exact-sequence rank formula."""
    if dim_c != model.n_transverse + 1:
        raise ModelMismatch(
            f"complex dimension {dim_c} does not match transverse degree {model.n_transverse} + 1"
        )
    eta = eta_complex_cohomology(model)
    h: dict[tuple[int, int], int] = {}
    for p in range(dim_c + 1):
        for q in range(dim_c + 1):
            into_rank = _rank(eta.lef(p - 1, q - 1)) if p >= 1 else 0
            coker = eta.a_dim(p, q) - into_rank
            out_rank = _rank(eta.lef(p - 1, q)) if p >= 1 else 0
            kernel = (eta.a_dim(p - 1, q) - out_rank) if p >= 1 else 0
            value = coker + kernel
            if value:
                h[(p, q)] = value
    return HodgeDiamond(dim_c, h)


@dataclass
class BettiTable:
    """Partial Betti numbers of one Sasakian factor.

    Degrees n and n+1 are not determined by the implemented comparison
    theorem and are listed separately.
    """

    dim: int
    determined: dict[int, int]
    undetermined: tuple[int, ...]


def sasakian_betti(model: TransverseModel, n: int) -> BettiTable:
    """Betti numbers below the middle degree, from the basic model.

    b_k = dim coker(L: H_bas^{k-2} -> H_bas^k) for k < n, extended by
    Poincare duality to degrees above n + 1.
    """
    if n != model.n_transverse:
        raise ModelMismatch(f"n = {n} does not match the model's transverse degree {model.n_transverse}")
    determined: dict[int, int] = {}
    for k in range(n):
        rank_in = sum(_rank(model.lef(p, q)) for (p, q) in model.dims if p + q == k - 2)
        bk = model.total_dim(k) - rank_in
        determined[k] = bk
        determined[2 * n + 1 - k] = bk
    return BettiTable(dim=2 * n + 1, determined=determined, undetermined=(n, n + 1))


def kunneth_betti(n1: int, n2: int) -> list[int]:
    """Betti numbers of the product of spheres S^{2 n1 + 1} x S^{2 n2 + 1}."""
    b1 = [1] + [0] * (2 * n1) + [1]
    b2 = [1] + [0] * (2 * n2) + [1]
    out = [0] * (len(b1) + len(b2) - 1)
    for i, x in enumerate(b1):
        for j, y in enumerate(b2):
            out[i + j] += x * y
    return out


def diamond_consistency(diamond: HodgeDiamond, betti: list[int]):
    """Check Euler characteristic, Serre symmetry, and the Froelicher bounds.

    Returns a VerificationReport whose witnesses name each violated
    invariant; the Betti input must list degrees 0 .. 2 dim_C.
    """
    from .verify import VerificationReport

    if len(betti) != 2 * diamond.n + 1:
        raise ModelMismatch(f"need {2 * diamond.n + 1} Betti numbers, got {len(betti)}")
    violations = []
    if diamond.euler() != 0:
        violations.append({"invariant": "euler-characteristic", "value": diamond.euler()})
    for (p, q) in diamond.serre_violations():
        violations.append({"invariant": f"serre-symmetry({p},{q})", "value": diamond.entry(p, q)})
    for k, bk in enumerate(betti):
        if bk > diamond.total(k):
            violations.append({"invariant": f"froelicher(k={k})", "value": bk - diamond.total(k)})
    return VerificationReport(
        suite="diamond-consistency",
        samples=len(betti),
        max_defect=float(len(violations)),
        tol=0.0,
        passed=not violations,
        witnesses=violations,
    )


# --- model files --------------------------------------------------------------

MODEL_HEADER = "transverse-model v1"


def save_transverse_model(model: TransverseModel, path: str | Path):
    lines = [MODEL_HEADER, f"n {model.n_transverse}", "dims"]
    for (p, q) in sorted(model.dims):
        if model.dims[(p, q)]:
            lines.append(f"{p} {q} {model.dims[(p, q)]}")
    for (p, q) in sorted(model.lefschetz):
        mat = model.lefschetz[(p, q)]
        if not mat or not mat[0]:
            continue
        lines.append(f"lefschetz {p} {q}")
        for row in mat:
            lines.append(" ".join(str(x) for x in row))
    lines.append("end")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_transverse_model(path: str | Path) -> TransverseModel:
    """Parse the escape-hatch model file format written by save_transverse_model."""
    text = Path(path).read_text(encoding="utf-8")
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines or lines[0] != MODEL_HEADER:
        raise ModelFormatError(f"expected header '{MODEL_HEADER}'")
    if len(lines) < 2 or not lines[1].startswith("n "):
        raise ModelFormatError("expected 'n <transverse degree>' after the header")
    try:
        n = int(lines[1].split()[1])
    except (IndexError, ValueError) as exc:
        raise ModelFormatError("bad transverse degree") from exc

    dims: dict[tuple[int, int], int] = {}
    lefschetz: dict[tuple[int, int], Matrix] = {}
    i = 2
    if i >= len(lines) or lines[i] != "dims":
        raise ModelFormatError("expected a 'dims' section")
    i += 1
    while i < len(lines) and not lines[i].startswith(("lefschetz", "end")):
        parts = lines[i].split()
        if len(parts) != 3:
            raise ModelFormatError(f"bad dims row: {lines[i]!r}")
        p, q, d = int(parts[0]), int(parts[1]), int(parts[2])
        dims[(p, q)] = d
        i += 1
    while i < len(lines) and lines[i] != "end":
        parts = lines[i].split()
        if parts[0] != "lefschetz" or len(parts) != 3:
            raise ModelFormatError(f"expected 'lefschetz p q', got {lines[i]!r}")
        p, q = int(parts[1]), int(parts[2])
        rows = dims.get((p + 1, q + 1), 0)
        i += 1
        mat: Matrix = []
        for _ in range(rows):
            if i >= len(lines):
                raise ModelFormatError(f"truncated lefschetz block at ({p}, {q})")
            mat.append([Fraction(tok) for tok in lines[i].split()])
            i += 1
        lefschetz[(p, q)] = mat
    if i >= len(lines) or lines[i] != "end":
        raise ModelFormatError("missing 'end' terminator")
    model = TransverseModel(dims, lefschetz, n, name=str(path))
    return model.validate()
