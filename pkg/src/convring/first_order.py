"""First-order representations (K, L, M) of convolutional codes.

A triple represents the code {v : exists x, (zK + L) x + M v = 0}; the state
vector x has delta entries and the triple has delta + n - k rows.  It is
minimal when K is injective, (K | M) is surjective and the pencil
(zK + L | M) is surjective over R[z].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .code import ConvCode, make_code
from .errors import (
    DimensionMismatch,
    Inconclusive,
    NotColumnReduced,
    ShapeMismatch,
    ZeroColumnDegree,
)
from .poly import PairKernelBasis, PolyMatrix, is_column_reduced, is_surjective_polymatrix, kernel_pair
from .ring import (
    RingSpec,
    RMatrix,
    glue,
    is_injective_const,
    is_invertible,
    is_surjective_const,
    project,
    same_ring,
)

EQUIVALENCE_SEARCH_CAP = 10**6


@dataclass(frozen=True)
class FirstOrderRep:
    ring: RingSpec
    n: int
    k: int
    delta: int
    K: RMatrix
    L: RMatrix
    M: RMatrix

    def __post_init__(self):
        rows = self.delta + self.n - self.k
        for name, mat, cols in (("K", self.K, self.delta), ("L", self.L, self.delta),
                                ("M", self.M, self.n)):
            if mat.shape != (rows, cols):
                raise ShapeMismatch(f"{name} has shape {mat.shape}, expected {(rows, cols)}")
            same_ring(self.ring, mat.ring)

    @classmethod
    def from_matrices(cls, K: RMatrix, L: RMatrix, M: RMatrix) -> "FirstOrderRep":
        """Infer (n, k, delta) from the shapes of K and M."""
        rows, delta = K.shape
        n = M.ncols
        return cls(K.ring, n, delta + n - rows, delta, K, L, M)

    @property
    def pencil(self) -> PolyMatrix:
        return PolyMatrix.pencil(self.K, self.L)

    def project(self, j: int) -> "FirstOrderRep":
        return FirstOrderRep(self.ring.component(j), self.n, self.k, self.delta,
                             project(self.K, j), project(self.L, j), project(self.M, j))

    def kernel(self) -> PairKernelBasis:
        return kernel_pair(self.pencil, PolyMatrix.from_const(self.M), degree_cap=self.delta)


def build_for_field(G: PolyMatrix) -> FirstOrderRep:
    """Shift realisation of a column-reduced encoder over a prime field.

    State (j, i), i = 1..nu_j, stands for z^(i-1) u_j.  Rows are the chain
    equations z x_(j,i) - x_(j,i+1) = 0 followed by one row per code
    coordinate r expressing v_r = sum_j G_rj(z) u_j in the states.
    """
    ring = G.ring
    n, k = G.shape
    nus = G.column_degrees()
    if any(nu <= 0 for nu in nus):
        raise ZeroColumnDegree(f"column degrees {nus}")
    if not is_column_reduced(G):
        raise NotColumnReduced("leading column coefficient matrix is rank deficient")
    delta = sum(nus)
    offset = [sum(nus[:j]) for j in range(k)]
    rows = delta + n - k
    K = [[0] * delta for _ in range(rows)]
    L = [[0] * delta for _ in range(rows)]
    M = [[0] * n for _ in range(rows)]
    r = 0
    for j in range(k):
        for i in range(nus[j] - 1):
            K[r][offset[j] + i] = 1
            L[r][offset[j] + i + 1] = -1
            r += 1
    for row in range(n):
        for j in range(k):
            g = G.entries[row][j]
            for i in range(nus[j]):
                L[r][offset[j] + i] += g.coeff(i)
            K[r][offset[j] + nus[j] - 1] += g.coeff(nus[j])
        M[r][row] = -1
        r += 1
    return FirstOrderRep(ring, n, k, delta, RMatrix.from_rows(ring, K, delta),
                         RMatrix.from_rows(ring, L, delta), RMatrix.from_rows(ring, M, n))


def glue_for(components: Sequence[FirstOrderRep], ring: RingSpec) -> FirstOrderRep:
    """K = sum_j e_j K_j and likewise for L and M."""
    dims = {(c.n, c.k, c.delta) for c in components}
    if len(dims) != 1:
        raise DimensionMismatch(f"component dimensions (n, k, delta) differ: {sorted(dims)}")
    n, k, delta = dims.pop()
    return FirstOrderRep(ring, n, k, delta,
                         glue([c.K for c in components], ring),
                         glue([c.L for c in components], ring),
                         glue([c.M for c in components], ring))


def for_code(code: ConvCode) -> FirstOrderRep:
    """Minimal first-order representation of a code, built per component and glued."""
    parts = [build_for_field(G) for G in code.component_encoders]
    return glue_for(parts, code.ring)


def code_of(rep: FirstOrderRep) -> ConvCode:
    """The code Ker(zK + L | M), recovered as a validated encoder."""
    return make_code(rep.ring, rep.kernel().basis)


@dataclass(frozen=True)
class MinimalityReport:
    k_injective: bool
    km_surjective: bool
    pencil_surjective: bool

    @property
    def minimal(self) -> bool:
        return self.k_injective and self.km_surjective and self.pencil_surjective


def check_minimality(rep: FirstOrderRep) -> MinimalityReport:
    k_inj = is_injective_const(rep.K)
    km_surj = is_surjective_const(RMatrix.hstack(rep.K, rep.M))
    pencil = PolyMatrix.hstack(rep.pencil, PolyMatrix.from_const(rep.M))
    pencil_surj = all(is_surjective_polymatrix(pencil.project(j)) for j in range(rep.ring.t))
    return MinimalityReport(k_inj, km_surj, pencil_surj)


def _equivalence_field(a: FirstOrderRep, b: FirstOrderRep, cap: int):
    """Search (T, S) over one prime field with K_b S = T K_a, L_b S = T L_a, M_b = T M_a."""
    p = a.ring.modulus
    N, d, n = a.delta + a.n - a.k, a.delta, a.n
    nT = N * N
    nvar = nT + d * d

    def t_var(i, j):
        return i * N + j

    def s_var(i, j):
        return nT + i * d + j

    rows, rhs = [], []
    for Xa, Xb in ((a.K, b.K), (a.L, b.L)):
        for i in range(N):
            for j in range(d):
                row = [0] * nvar
                for t in range(d):
                    row[s_var(t, j)] += Xb[i, t]
                for t in range(N):
                    row[t_var(i, t)] -= Xa[t, j]
                rows.append(row)
                rhs.append(0)
    for i in range(N):
        for j in range(n):
            row = [0] * nvar
            for t in range(N):
                row[t_var(i, t)] += a.M[t, j]
            rows.append(row)
            rhs.append(b.M[i, j])
    x0 = linalg.solve(rows, rhs, p, nvar)
    if x0 is None:
        return None
    null = linalg.nullspace(rows, p, nvar)
    if p ** len(null) > cap:
        raise Inconclusive(f"{p}^{len(null)} candidates exceed the search cap {cap}")
    for combo in itertools.product(range(p), repeat=len(null)):
        x = list(x0)
        for c, vec in zip(combo, null):
            if c:
                x = [(xi + c * vi) % p for xi, vi in zip(x, vec)]
        T = RMatrix.from_rows(a.ring, [x[i * N:(i + 1) * N] for i in range(N)], N)
        S = RMatrix.from_rows(a.ring, [x[nT + i * d:nT + (i + 1) * d] for i in range(d)], d)
        if is_invertible(T) and is_invertible(S):
            return T, S
    return None


def representations_equivalent(a: FirstOrderRep, b: FirstOrderRep, *,
                               cap: int = EQUIVALENCE_SEARCH_CAP) -> tuple[RMatrix, RMatrix] | None:
    """Invertible (T, S) with (K_b, L_b, M_b) = (T K_a S^-1, T L_a S^-1, T M_a), or None.

    Raises Inconclusive when a component's affine solution space has more
    than ``cap`` points.
    """
    ring = same_ring(a.ring, b.ring)
    if (a.n, a.k, a.delta) != (b.n, b.k, b.delta):
        raise DimensionMismatch(f"{(a.n, a.k, a.delta)} vs {(b.n, b.k, b.delta)}")
    Ts, Ss = [], []
    for j in range(ring.t):
        found = _equivalence_field(a.project(j), b.project(j), cap)
        if found is None:
            return None
        Ts.append(found[0])
        Ss.append(found[1])
    T, S = glue(Ts, ring), glue(Ss, ring)
    assert b.K @ S == T @ a.K and b.L @ S == T @ a.L and b.M == T @ a.M
    return T, S
