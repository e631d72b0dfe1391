"""Exact arithmetic in a finite product of prime fields.

The ring F_{p_1} x ... x F_{p_t} is realised as Z/mZ with m = p_1 ... p_t
squarefree.  Matrices carry their ring and store canonical residues; the
CRT split into components goes through the structural idempotents e_j
(e_j = 1 mod p_j, 0 mod the other primes).

Ideals of Z/mZ are principal and are stored by their divisor generator,
with the zero ideal written as generator 0.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import linalg
from .errors import (
    ComponentCountMismatch,
    IndexOutOfRange,
    NotSquarefree,
    RingMismatch,
    ShapeError,
    ShapeMismatch,
    SizeOutOfRange,
)

# Above this many i x i minors, ideal generators come from component ranks.
MINOR_ENUMERATION_LIMIT = 20_000


def _factor_squarefree(m: int) -> tuple[int, ...]:
    primes = []
    n, d = m, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                raise NotSquarefree(f"{d}^2 divides {m}")
            primes.append(d)
        d += 1 if d == 2 else 2
    if n > 1:
        primes.append(n)
    return tuple(primes)


@dataclass(frozen=True)
class RingSpec:
    """Z/mZ for squarefree m, with its prime factors and CRT idempotents."""

    modulus: int
    primes: tuple[int, ...]
    idempotents: tuple[int, ...]

    def __post_init__(self):
        m = self.modulus
        if math.prod(self.primes) != m or list(self.primes) != sorted(set(self.primes)):
            raise ValueError(f"primes {self.primes} do not factor {m}")
        es = self.idempotents
        if len(es) != len(self.primes):
            raise ValueError("one idempotent per prime is required")
        if sum(es) % m != 1 % m:
            raise ValueError("idempotents must sum to 1")
        for i, (ei, pi) in enumerate(zip(es, self.primes)):
            if ei * ei % m != ei or ei % pi != 1 % pi:
                raise ValueError(f"e_{i} is not the structural idempotent")
            for j, ej in enumerate(es):
                if i != j and ei * ej % m:
                    raise ValueError("idempotents must be orthogonal")

    @property
    def t(self) -> int:
        """Number of components."""
        return len(self.primes)

    @property
    def is_field(self) -> bool:
        return self.t == 1

    def component(self, j: int) -> "RingSpec":
        """The j-th residue field as a one-component ring (j is 0-based)."""
        self._check_index(j)
        return make_ring(self.primes[j])

    def _check_index(self, j: int) -> None:
        if not 0 <= j < self.t:
            raise IndexOutOfRange(f"component {j} not in 0..{self.t - 1}")

    def crt(self, residues: Sequence[int]) -> int:
        """Glue one residue per component into an element of Z/mZ."""
        if len(residues) != self.t:
            raise ComponentCountMismatch(f"expected {self.t} residues, got {len(residues)}")
        return sum(r * e for r, e in zip(residues, self.idempotents)) % self.modulus

    def element(self, value: int) -> "RElem":
        return RElem(self, value % self.modulus)

    def __repr__(self) -> str:
        return f"RingSpec(Z/{self.modulus}, primes={self.primes}, idempotents={self.idempotents})"


def make_ring(m: int) -> RingSpec:
    """Build the ring Z/mZ, which must be a product of distinct prime fields."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    primes = _factor_squarefree(m)
    idempotents = tuple(
        (m // p) * pow(m // p, -1, p) % m for p in primes
    )
    return RingSpec(m, primes, idempotents)


def same_ring(*rings: RingSpec) -> RingSpec:
    first = rings[0]
    for r in rings[1:]:
        if r != first:
            raise RingMismatch(f"Z/{first.modulus} vs Z/{r.modulus}")
    return first


@dataclass(frozen=True)
class RElem:
    ring: RingSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.ring.modulus:
            raise ValueError("RElem value must be a canonical residue")


@dataclass(frozen=True)
class RIdeal:
    """Principal ideal <generator> of Z/mZ; generator divides m, 0 is the zero ideal."""

    ring: RingSpec
    generator: int

    def __post_init__(self):
        m = self.ring.modulus
        if not 0 <= self.generator < m or (self.generator and m % self.generator):
            raise ValueError(f"{self.generator} is not a canonical divisor generator mod {m}")

    @classmethod
    def generated_by(cls, ring: RingSpec, values: Iterable[int]) -> "RIdeal":
        g = ring.modulus
        for v in values:
            g = math.gcd(g, v)
            if g == 1:
                break
        return cls(ring, g % ring.modulus)

    @property
    def is_unit_ideal(self) -> bool:
        return self.generator == 1

    @property
    def is_zero(self) -> bool:
        return self.generator == 0

    def reduce(self, j: int) -> int:
        """Image in F_{p_j}: 1 for the whole field, 0 for the zero ideal."""
        return int(self.generator % self.ring.primes[j] != 0)

    def __str__(self) -> str:
        return f"<{self.generator}>"


def annihilator(ideal: RIdeal) -> RIdeal:
    m = ideal.ring.modulus
    return RIdeal(ideal.ring, (m // math.gcd(m, ideal.generator)) % m)


def is_unit(a: RElem) -> bool:
    return math.gcd(a.value, a.ring.modulus) == 1


def is_zero_divisor(a: RElem) -> bool:
    # Over Z/mZ every non-unit (0 included) kills a nonzero element.
    return not is_unit(a)


@dataclass(frozen=True)
class RMatrix:
    """Immutable matrix over Z/mZ.  ``ncols`` is stored so 0-row matrices keep a shape."""

    ring: RingSpec
    entries: tuple[tuple[int, ...], ...]
    ncols: int

    def __post_init__(self):
        m = self.ring.modulus
        for row in self.entries:
            if len(row) != self.ncols:
                raise ShapeMismatch("ragged matrix rows")
            if any(not 0 <= x < m for x in row):
                raise ValueError("entries must be canonical residues")

    # construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, ring: RingSpec, rows: Sequence[Sequence[int]],
                  ncols: int | None = None) -> "RMatrix":
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        m = ring.modulus
        return cls(ring, tuple(tuple(int(x) % m for x in r) for r in rows), ncols)

    @classmethod
    def zeros(cls, ring: RingSpec, nrows: int, ncols: int) -> "RMatrix":
        return cls(ring, tuple((0,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, ring: RingSpec, n: int) -> "RMatrix":
        return cls.from_rows(ring, [[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def hstack(cls, *blocks: "RMatrix") -> "RMatrix":
        ring = same_ring(*(b.ring for b in blocks))
        nrows = blocks[0].nrows
        if any(b.nrows != nrows for b in blocks):
            raise ShapeMismatch("hstack needs equal row counts")
        rows = [sum((list(b.entries[i]) for b in blocks), []) for i in range(nrows)]
        return cls.from_rows(ring, rows, sum(b.ncols for b in blocks))

    @classmethod
    def vstack(cls, *blocks: "RMatrix") -> "RMatrix":
        ring = same_ring(*(b.ring for b in blocks))
        ncols = blocks[0].ncols
        if any(b.ncols != ncols for b in blocks):
            raise ShapeMismatch("vstack needs equal column counts")
        return cls.from_rows(ring, [r for b in blocks for r in b.entries], ncols)

    # shape and access ---------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    @property
    def T(self) -> "RMatrix":
        return RMatrix.from_rows(
            self.ring, [[self.entries[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.nrows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RMatrix":
        return RMatrix.from_rows(self.ring, [[self.entries[i][j] for j in cols] for i in rows], len(cols))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    # arithmetic ---------------------------------------------------------

    def _check_compatible(self, other: "RMatrix") -> None:
        same_ring(self.ring, other.ring)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: "RMatrix") -> "RMatrix":
        self._check_compatible(other)
        return RMatrix.from_rows(self.ring, [[a + b for a, b in zip(r, s)]
                                             for r, s in zip(self.entries, other.entries)], self.ncols)

    def __sub__(self, other: "RMatrix") -> "RMatrix":
        return self + (-other)

    def __neg__(self) -> "RMatrix":
        return RMatrix.from_rows(self.ring, [[-x for x in r] for r in self.entries], self.ncols)

    def scale(self, c: int) -> "RMatrix":
        return RMatrix.from_rows(self.ring, [[c * x for x in r] for r in self.entries], self.ncols)

    def __matmul__(self, other: "RMatrix") -> "RMatrix":
        same_ring(self.ring, other.ring)
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.entries)) if other.nrows else [()] * other.ncols
        return RMatrix.from_rows(
            self.ring, [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.entries],
            other.ncols)

    def __pow__(self, e: int) -> "RMatrix":
        if self.nrows != self.ncols:
            raise ShapeError("power of a non-square matrix")
        out = RMatrix.identity(self.ring, self.nrows)
        for _ in range(e):
            out = out @ self
        return out

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.entries) or "[]"

    # component view -----------------------------------------------------

    @cached_property
    def component_ranks(self) -> tuple[int, ...]:
        return tuple(linalg.rank(self.entries, p) if self.nrows and self.ncols else 0
                     for p in self.ring.primes)


def project(A: RMatrix, j: int) -> RMatrix:
    """Reduce ``A`` modulo the j-th prime (0-based) into a matrix over F_{p_j}."""
    A.ring._check_index(j)
    return RMatrix.from_rows(A.ring.component(j), A.entries, A.ncols)


def glue(components: Sequence[RMatrix], ring: RingSpec) -> RMatrix:
    """Inverse of the tuple of projections: the matrix sum_j e_j * components[j]."""
    if len(components) != ring.t:
        raise ComponentCountMismatch(f"expected {ring.t} components, got {len(components)}")
    shape = components[0].shape
    for j, (C, p) in enumerate(zip(components, ring.primes)):
        if C.shape != shape:
            raise ShapeMismatch(f"component {j} has shape {C.shape}, expected {shape}")
        if C.ring.modulus != p:
            raise RingMismatch(f"component {j} lives over Z/{C.ring.modulus}, expected F_{p}")
    rows = [[ring.crt([C.entries[i][c] for C in components]) for c in range(shape[1])]
            for i in range(shape[0])]
    return RMatrix.from_rows(ring, rows, shape[1])


def det(A: RMatrix) -> int:
    """Determinant mod m, computed per component and glued."""
    if A.nrows != A.ncols:
        raise ShapeError("determinant of a non-square matrix")
    if A.nrows == 0:
        return 1 % A.ring.modulus
    return A.ring.crt([linalg.det(A.entries, p) for p in A.ring.primes])


def inverse(A: RMatrix) -> RMatrix | None:
    """Inverse over Z/mZ, or None when some component is singular."""
    if A.nrows != A.ncols:
        raise ShapeError("inverse of a non-square matrix")
    parts = []
    for j, p in enumerate(A.ring.primes):
        inv = linalg.inverse(A.entries, p) if A.nrows else []
        if inv is None:
            return None
        parts.append(RMatrix.from_rows(A.ring.component(j), inv, A.nrows))
    return glue(parts, A.ring)


def minors_ideal(A: RMatrix, i: int) -> RIdeal:
    """Ideal generated by the i x i minors of ``A``."""
    r = min(A.shape)
    if not 1 <= i <= r:
        raise SizeOutOfRange(f"minor size {i} not in 1..{r}")
    count = math.comb(A.nrows, i) * math.comb(A.ncols, i)
    if count > MINOR_ENUMERATION_LIMIT:
        # The minors of size i generate R in component j iff rank_j >= i.
        g = math.prod(p for p, rk in zip(A.ring.primes, A.component_ranks) if rk < i)
        return RIdeal(A.ring, g % A.ring.modulus)

    def minors():
        for rows in itertools.combinations(range(A.nrows), i):
            for cols in itertools.combinations(range(A.ncols), i):
                yield det(A.submatrix(rows, cols))

    return RIdeal.generated_by(A.ring, minors())


def determinantal_rank(A: RMatrix, *, check: bool = True) -> int:
    """max{i : Ann(U_i(A)) = 0}, cross-checked against the component ranks."""
    rk = 0
    for i in range(1, min(A.shape) + 1):
        if not annihilator(minors_ideal(A, i)).is_zero:
            break
        rk = i
    if check:
        expected = min(A.component_ranks) if A.nrows and A.ncols else 0
        assert rk == expected, f"determinantal rank {rk} != min component rank {expected}"
    return rk


def is_injective_const(A: RMatrix) -> bool:
    if A.nrows < A.ncols:
        raise ShapeError(f"injectivity needs rows >= cols, got {A.shape}")
    return A.ncols == 0 or determinantal_rank(A) == A.ncols


def is_surjective_const(A: RMatrix) -> bool:
    if A.nrows > A.ncols:
        raise ShapeError(f"surjectivity needs rows <= cols, got {A.shape}")
    if A.nrows == 0:
        return True
    ok = minors_ideal(A, A.nrows).is_unit_ideal
    assert ok == all(rk == A.nrows for rk in A.component_ranks)
    return ok


def is_invertible(A: RMatrix) -> bool:
    if A.nrows != A.ncols:
        return False
    return A.nrows == 0 or determinantal_rank(A) == A.nrows
