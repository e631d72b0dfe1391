"""(n, k) families of convolutional codes over Z/mZ.

A code is stored through an injective n x k encoder over (Z/mZ)[z] together
with a column-reduced encoder for each residue field.  The degree must be
the same in every component.  Flatness of R[z]^n / C over R holds
automatically because every module over a finite product of fields is flat,
so construction checks only injectivity and constant degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import (
    NonConstantDegree,
    NotInjective,
    NotObservable,
    RingMismatch,
    ShapeError,
    ShapeMismatch,
    ZeroColumnDegree,
)
from .poly import (
    Poly,
    PolyMatrix,
    PolyVector,
    column_reduce,
    full_size_minors,
    kernel_pair,
    minors_gcd,
    poly_rank,
    project_vector,
    solve_polylinear,
    vector_degree,
)
from .ring import RingSpec, same_ring


@dataclass(frozen=True)
class ConvCode:
    ring: RingSpec
    n: int
    k: int
    delta: int
    encoder: PolyMatrix
    component_encoders: tuple[PolyMatrix, ...]

    @property
    def component_column_degrees(self) -> tuple[tuple[int, ...], ...]:
        return tuple(G.column_degrees() for G in self.component_encoders)

    def project(self, j: int) -> "ConvCode":
        """The restricted code over the j-th residue field."""
        return make_code(self.ring.component(j), self.encoder.project(j))


def make_code(ring: RingSpec, G: PolyMatrix, *, allow_zero_degree: bool = False) -> ConvCode:
    """Validate an encoder and build the code it generates.

    Raises NotInjective when some component encoder has rank below k,
    NonConstantDegree when the component degrees differ and ZeroColumnDegree
    when a reduced component encoder has a constant column (unless
    ``allow_zero_degree``; such codes have no first-order construction here).
    """
    same_ring(ring, G.ring)
    n, k = G.shape
    if k > n:
        raise ShapeError(f"encoder must be n x k with k <= n, got {G.shape}")
    reduced = []
    degrees = []
    for j in range(ring.t):
        Gj = G.project(j)
        if poly_rank(Gj) < k:
            raise NotInjective(f"component F_{ring.primes[j]} has rank < {k}")
        Rj, _ = column_reduce(Gj)
        nus = Rj.column_degrees()
        if not allow_zero_degree and any(nu == 0 for nu in nus):
            raise ZeroColumnDegree(f"component F_{ring.primes[j]} has column degrees {nus}")
        delta_j = sum(nus)
        minor_deg = max(f.degree for f in full_size_minors(Gj)) if k else 0
        assert minor_deg == delta_j, (minor_deg, delta_j)
        reduced.append(Rj)
        degrees.append(delta_j)
    if len(set(degrees)) > 1:
        raise NonConstantDegree(f"component degrees {degrees}")
    return ConvCode(ring, n, k, degrees[0], G, tuple(reduced))


def code_degree(code: ConvCode) -> int:
    for G in code.component_encoders:
        assert sum(G.column_degrees()) == code.delta
        if code.k:
            assert max(f.degree for f in full_size_minors(G)) == code.delta
    return code.delta


@lru_cache(maxsize=256)
def is_observable_code(code: ConvCode) -> bool:
    """Observable iff every component encoder's full-size minors are coprime."""
    return all(minors_gcd(G).degree == 0 for G in code.component_encoders)


@lru_cache(maxsize=256)
def syndrome_former(code: ConvCode) -> PolyMatrix:
    """A glued (n-k) x n matrix H with H G = 0 and each component H_j surjective.

    Each H_j is a minimal basis of the left kernel of the component encoder.
    """
    ring, n, k = code.ring, code.n, code.k
    if not is_observable_code(code):
        raise NotObservable("the code has a component with non-coprime full-size minors")
    if k == n:
        return PolyMatrix.zeros(ring, 0, n)
    parts = []
    for G in code.component_encoders:
        empty = PolyMatrix.zeros(G.ring, k, 0)
        basis = kernel_pair(empty, G.T).basis
        parts.append(basis.T)
    H = PolyMatrix.glue(parts, ring)
    assert (H @ code.encoder).is_zero()
    return H


def encode(code: ConvCode, u: Sequence[Poly]) -> PolyVector:
    if len(u) != code.k:
        raise ShapeMismatch(f"message of length {len(u)} for k = {code.k}")
    return code.encoder.apply(u)


def is_codeword(code: ConvCode, v: Sequence[Poly]) -> bool:
    """Membership in Im G, decided per component with degree bound deg v + delta."""
    if len(v) != code.n:
        raise ShapeMismatch(f"vector of length {len(v)} for n = {code.n}")
    bound = max(vector_degree(v), 0) + code.delta
    found = all(solve_polylinear(G, project_vector(v, j), bound) is not None
                for j, G in enumerate(code.component_encoders))
    if code.k < code.n and is_observable_code(code):
        H = syndrome_former(code)
        assert found == all(x.is_zero() for x in H.apply(v))
    return found


def codes_equal(a: ConvCode, b: ConvCode) -> bool:
    if a.ring != b.ring:
        raise RingMismatch(f"Z/{a.ring.modulus} vs Z/{b.ring.modulus}")
    if (a.n, a.k) != (b.n, b.k):
        return False
    return (all(is_codeword(b, c) for c in a.encoder.columns())
            and all(is_codeword(a, c) for c in b.encoder.columns()))
