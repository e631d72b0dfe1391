"""Input/state/output systems (A, B, C, D) and their link to first-order triples.

The canonical triple of a system is

    K = [-I; 0],  L = [A; C],  M = [[0, B], [-I, D]]

acting on codewords ordered as v = (y, u): the first n - k coordinates are
outputs and the last k are inputs.  ``permutation`` records how those
coordinates sit inside the original code: system coordinate i is original
coordinate ``permutation[i]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from . import linalg
from .code import ConvCode, make_code
from .errors import DimensionMismatch, NoCommonSplit, NotMinimal, NotReachable, ShapeMismatch
from .first_order import FirstOrderRep, check_minimality
from .poly import Poly, PolyMatrix, PolyVector, kernel_pair
from .ring import (
    RIdeal,
    RingSpec,
    RMatrix,
    glue,
    is_injective_const,
    is_surjective_const,
    minors_ideal,
    project,
    same_ring,
)


@dataclass(frozen=True)
class StateSpaceSystem:
    A: RMatrix
    B: RMatrix
    C: RMatrix
    D: RMatrix
    permutation: tuple[int, ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        same_ring(self.A.ring, self.B.ring, self.C.ring, self.D.ring)
        d, k, q = self.A.nrows, self.B.ncols, self.C.nrows
        expected = {"A": (d, d), "B": (d, k), "C": (q, d), "D": (q, k)}
        for name, shape in expected.items():
            if getattr(self, name).shape != shape:
                raise ShapeMismatch(f"{name} has shape {getattr(self, name).shape}, expected {shape}")
        if self.permutation is None:
            object.__setattr__(self, "permutation", tuple(range(q + k)))
        if sorted(self.permutation) != list(range(q + k)):
            raise ValueError(f"{self.permutation} is not a permutation of 0..{q + k - 1}")

    @property
    def ring(self) -> RingSpec:
        return self.A.ring

    @property
    def delta(self) -> int:
        return self.A.nrows

    @property
    def k(self) -> int:
        return self.B.ncols

    @property
    def outputs(self) -> int:
        return self.C.nrows

    @property
    def n(self) -> int:
        return self.outputs + self.k

    def matrices(self) -> tuple[RMatrix, RMatrix, RMatrix, RMatrix]:
        return self.A, self.B, self.C, self.D


def iso_to_for(sys: StateSpaceSystem) -> FirstOrderRep:
    """Canonical first-order triple of a system, in system coordinates (y, u)."""
    ring, d, q, k = sys.ring, sys.delta, sys.outputs, sys.k
    K = RMatrix.vstack(-RMatrix.identity(ring, d), RMatrix.zeros(ring, q, d))
    L = RMatrix.vstack(sys.A, sys.C)
    M = RMatrix.vstack(RMatrix.hstack(RMatrix.zeros(ring, d, q), sys.B),
                       RMatrix.hstack(-RMatrix.identity(ring, q), sys.D))
    return FirstOrderRep(ring, q + k, k, d, K, L, M)


@dataclass(frozen=True)
class IsoExtraction:
    system: StateSpaceSystem
    W: RMatrix


def _component_transform(K: RMatrix, M: RMatrix, delta: int):
    """W1 with W1 K = [-I; 0] over one prime field, together with W1 M."""
    p = K.ring.modulus
    _, pivots, E = linalg.rref(K.entries, p, K.ncols)
    assert pivots == list(range(delta))
    E = [[-x for x in row] if i < delta else row for i, row in enumerate(E)]
    W1 = RMatrix.from_rows(K.ring, E, K.nrows)
    return W1, W1 @ M


def extract_iso(rep: FirstOrderRep) -> IsoExtraction:
    """Bring a minimal triple to canonical block shape and read off (A, B, C, D).

    Per component: row-reduce K to [-I; 0]; pick the lexicographically first
    set S of n - k code coordinates whose bottom block of M is invertible in
    every component; scale that block to -I and clear the top rows of the S
    columns.  The component row operations are glued into W.
    """
    report = check_minimality(rep)
    if not report.minimal:
        raise NotMinimal(str(report))
    ring, n, k, d = rep.ring, rep.n, rep.k, rep.delta
    q = n - k
    N = d + q
    stage1 = []
    for j in range(ring.t):
        comp = rep.project(j)
        stage1.append(_component_transform(comp.K, comp.M, d))

    chosen = None
    for S in itertools.combinations(range(n), q):
        if all(linalg.det([[M1[i, c] for c in S] for i in range(d, N)], p) != 0
               for (_, M1), p in zip(stage1, ring.primes)):
            chosen = S
            break
    if chosen is None:
        raise NoCommonSplit("no output coordinate set is invertible in every component")
    rest = [c for c in range(n) if c not in chosen]
    perm = tuple(chosen) + tuple(rest)

    Ws = []
    for (W1, M1), p in zip(stage1, ring.primes):
        F = W1.ring
        bottom = [[M1[i, c] for c in chosen] for i in range(d, N)]
        binv = linalg.inverse(bottom, p)
        W2 = [[int(i == j) for j in range(N)] for i in range(N)]
        for i in range(q):
            for j in range(q):
                W2[d + i][d + j] = -binv[i][j]
        W2m = RMatrix.from_rows(F, W2, N)
        M2 = W2m @ M1
        # bottom S block is now -I; adding top_S times the bottom rows clears top_S
        W3 = [[int(i == j) for j in range(N)] for i in range(N)]
        for i in range(d):
            for jj, c in enumerate(chosen):
                W3[i][d + jj] = M2[i, c]
        Ws.append(RMatrix.from_rows(F, W3, N) @ W2m @ W1)
    W = glue(Ws, ring)

    Kc, Lc, Mc = W @ rep.K, W @ rep.L, W @ rep.M
    Mp = Mc.submatrix(range(N), perm)
    neg_eye = -RMatrix.identity(ring, d)
    assert Kc == RMatrix.vstack(neg_eye, RMatrix.zeros(ring, q, d))
    assert Mp.submatrix(range(d), range(q)).is_zero()
    assert Mp.submatrix(range(d, N), range(q)) == -RMatrix.identity(ring, q)
    sys = StateSpaceSystem(
        A=Lc.submatrix(range(d), range(d)),
        B=Mp.submatrix(range(d), range(q, n)),
        C=Lc.submatrix(range(d, N), range(d)),
        D=Mp.submatrix(range(d, N), range(q, n)),
        permutation=perm,
    )
    return IsoExtraction(sys, W)


def for_to_iso(rep: FirstOrderRep) -> StateSpaceSystem:
    return extract_iso(rep).system


def controllability_matrix(sys: StateSpaceSystem) -> RMatrix:
    """(B, AB, ..., A^(delta-1) B)."""
    blocks, X = [], sys.B
    for _ in range(sys.delta):
        blocks.append(X)
        X = sys.A @ X
    if not blocks:
        return RMatrix.zeros(sys.ring, 0, 0)
    return RMatrix.hstack(*blocks)


def controllability_ideal(sys: StateSpaceSystem) -> RIdeal:
    """U_delta of the controllability matrix; the whole ring iff reachable."""
    Phi = controllability_matrix(sys)
    if sys.delta == 0:
        return RIdeal(sys.ring, 1)
    if Phi.ncols < sys.delta:
        return RIdeal(sys.ring, 0)
    return minors_ideal(Phi, sys.delta)


def is_reachable(sys: StateSpaceSystem) -> bool:
    Phi = controllability_matrix(sys)
    if Phi.nrows > Phi.ncols:
        return False
    return is_surjective_const(Phi)


def observability_matrix(sys: StateSpaceSystem) -> RMatrix:
    """C, CA, ..., C A^(delta-1) stacked vertically."""
    blocks, X = [], sys.C
    for _ in range(sys.delta):
        blocks.append(X)
        X = X @ sys.A
    if not blocks:
        return RMatrix.zeros(sys.ring, 0, 0)
    return RMatrix.vstack(*blocks)


def is_observable_system(sys: StateSpaceSystem) -> bool:
    Omega = observability_matrix(sys)
    if Omega.nrows < Omega.ncols:
        return False
    return is_injective_const(Omega)


def project_system(sys: StateSpaceSystem, j: int) -> StateSpaceSystem:
    return StateSpaceSystem(*(project(X, j) for X in sys.matrices()), permutation=sys.permutation)


def glue_systems(components: Sequence[StateSpaceSystem], ring: RingSpec) -> StateSpaceSystem:
    dims = {(c.delta, c.k, c.outputs) for c in components}
    if len(dims) != 1:
        raise DimensionMismatch(f"component dimensions (delta, k, n-k) differ: {sorted(dims)}")
    perms = {c.permutation for c in components}
    if len(perms) != 1:
        raise DimensionMismatch("components use different coordinate permutations")
    mats = [glue([c.matrices()[i] for c in components], ring) for i in range(4)]
    return StateSpaceSystem(*mats, permutation=perms.pop())


@dataclass(frozen=True)
class Trajectory:
    """A run of x_(t+1) = A x_t + B u_t, y_t = C x_t + D u_t from x_0 = 0.

    ``states`` holds x_0 .. x_T for T inputs; ``returned`` is set when x_T = 0.
    """

    ring: RingSpec
    states: tuple[tuple[int, ...], ...]
    inputs: tuple[tuple[int, ...], ...]
    outputs: tuple[tuple[int, ...], ...]
    permutation: tuple[int, ...]

    @property
    def returned(self) -> bool:
        return not any(self.states[-1])

    @property
    def symbols(self) -> tuple[tuple[int, ...], ...]:
        """v_t = (y_t, u_t) for t = 0 .. T-1."""
        return tuple(y + u for y, u in zip(self.outputs, self.inputs))

    def codeword(self) -> PolyVector:
        """v(z) = sum_t v_t z^(T-1-t), in system coordinates.

        Time runs towards the constant term: the relation z x(z) = A x(z) + B u(z)
        read off the canonical triple matches the forward recursion exactly
        when x_t sits at z^(T-1-t).
        """
        T = len(self.symbols)
        n = len(self.permutation)
        return tuple(Poly.of(self.ring, [self.symbols[T - 1 - s][i] for s in range(T)])
                     for i in range(n))

    def original_codeword(self) -> PolyVector:
        """The codeword with the coordinate permutation undone."""
        v = self.codeword()
        out: list[Poly] = [Poly.zero(self.ring)] * len(v)
        for i, orig in enumerate(self.permutation):
            out[orig] = v[i]
        return tuple(out)


def simulate(sys: StateSpaceSystem, inputs: Sequence[Sequence[int]]) -> Trajectory:
    ring = sys.ring
    m = ring.modulus
    x = (0,) * sys.delta
    states, us, ys = [x], [], []
    for u in inputs:
        if len(u) != sys.k:
            raise ShapeMismatch(f"input of length {len(u)} for k = {sys.k}")
        u = tuple(int(c) % m for c in u)
        y = tuple((sum(sys.C[i, t] * x[t] for t in range(sys.delta))
                   + sum(sys.D[i, t] * u[t] for t in range(sys.k))) % m for i in range(sys.outputs))
        x = tuple((sum(sys.A[i, t] * x[t] for t in range(sys.delta))
                   + sum(sys.B[i, t] * u[t] for t in range(sys.k))) % m for i in range(sys.delta))
        us.append(u)
        ys.append(y)
        states.append(x)
    return Trajectory(ring, tuple(states), tuple(us), tuple(ys), sys.permutation)


def system_to_code(sys: StateSpaceSystem) -> ConvCode:
    """Code of a reachable system, with rows in the original coordinate order."""
    if not is_reachable(sys):
        raise NotReachable("controllability matrix is not surjective")
    rep = iso_to_for(sys)
    basis = kernel_pair(rep.pencil, PolyMatrix.from_const(rep.M), degree_cap=rep.delta).basis
    inv = [0] * sys.n
    for i, orig in enumerate(sys.permutation):
        inv[orig] = i
    return make_code(sys.ring, basis.permute_rows(inv))
