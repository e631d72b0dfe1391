"""Polynomials and polynomial matrices over (Z/mZ)[z].

Coefficient lists are ascending in degree.  The zero polynomial has no
coefficients and degree -1.  Algorithms that need division (gcd, column
reduction, kernels, membership) run over a single prime field; callers over
a product ring project to the components, work there and glue back.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import linalg
from .errors import (
    ComponentCountMismatch,
    DegreeCapExceeded,
    MixedRings,
    RankDeficient,
    ShapeError,
    ShapeMismatch,
)
from .ring import RingSpec, RMatrix, same_ring


@dataclass(frozen=True)
class Poly:
    ring: RingSpec
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        m = self.ring.modulus
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient; use Poly.of")
        if any(not 0 <= c < m for c in self.coeffs):
            raise ValueError("coefficients must be canonical residues")

    @classmethod
    def of(cls, ring: RingSpec, coeffs: Iterable[int]) -> "Poly":
        cs = [int(c) % ring.modulus for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(ring, tuple(cs))

    @classmethod
    def zero(cls, ring: RingSpec) -> "Poly":
        return cls(ring, ())

    @classmethod
    def constant(cls, ring: RingSpec, c: int) -> "Poly":
        return cls.of(ring, [c])

    @classmethod
    def monomial(cls, ring: RingSpec, e: int, c: int = 1) -> "Poly":
        return cls.of(ring, [0] * e + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "Poly") -> "Poly":
        same_ring(self.ring, other.ring)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly.of(self.ring, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly.of(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            return Poly.of(self.ring, [c * other for c in self.coeffs])
        same_ring(self.ring, other.ring)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.ring)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly.of(self.ring, out)

    __rmul__ = __mul__

    def shift(self, e: int) -> "Poly":
        """Multiply by z**e."""
        if self.is_zero():
            return self
        return Poly(self.ring, (0,) * e + self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc % self.ring.modulus

    def project(self, j: int) -> "Poly":
        return Poly.of(self.ring.component(j), self.coeffs)

    # field-only operations

    def _field(self) -> int:
        if not self.ring.is_field:
            raise MixedRings(f"division needs a prime field, not Z/{self.ring.modulus}")
        return self.ring.modulus

    def monic(self) -> "Poly":
        p = self._field()
        if self.is_zero():
            return self
        return self * pow(self.lead, -1, p)

    def __divmod__(self, other: "Poly"):
        p = self._field()
        same_ring(self.ring, other.ring)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        inv = pow(other.lead, -1, p)
        d = other.degree
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] * inv % p
            if c:
                q[i - d] = c
                for k, b in enumerate(other.coeffs):
                    rem[i - d + k] = (rem[i - d + k] - c * b) % p
        return Poly.of(self.ring, q), Poly.of(self.ring, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)


PolyVector = tuple[Poly, ...]


def poly_vector(ring: RingSpec, coeff_lists: Sequence[Sequence[int]]) -> PolyVector:
    return tuple(Poly.of(ring, cs) for cs in coeff_lists)


def vector_degree(v: Sequence[Poly]) -> int:
    return max((p.degree for p in v), default=-1)


def project_vector(v: Sequence[Poly], j: int) -> PolyVector:
    return tuple(p.project(j) for p in v)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over a prime field; gcd(0, 0) = 0."""
    if f.ring != g.ring:
        raise MixedRings(f"Z/{f.ring.modulus} vs Z/{g.ring.modulus}")
    f._field()
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def glue_polys(parts: Sequence[Poly], ring: RingSpec) -> Poly:
    if len(parts) != ring.t:
        raise ComponentCountMismatch(f"expected {ring.t} components, got {len(parts)}")
    n = max((len(p.coeffs) for p in parts), default=0)
    return Poly.of(ring, [ring.crt([p.coeff(i) for p in parts]) for i in range(n)])


@dataclass(frozen=True)
class PolyMatrix:
    """Immutable matrix of polynomials; ``ncols`` is kept so empty shapes survive."""

    ring: RingSpec
    entries: tuple[tuple[Poly, ...], ...]
    ncols: int

    def __post_init__(self):
        for row in self.entries:
            if len(row) != self.ncols:
                raise ShapeMismatch("ragged polynomial matrix")
            for p in row:
                if p.ring != self.ring:
                    raise MixedRings("entry over a different ring")

    # construction -------------------------------------------------------

    @classmethod
    def from_coeffs(cls, ring: RingSpec, rows: Sequence[Sequence[Sequence[int]]],
                    ncols: int | None = None) -> "PolyMatrix":
        """Build from nested ascending coefficient lists, one list per entry."""
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(ring, tuple(tuple(Poly.of(ring, cs) for cs in r) for r in rows), ncols)

    @classmethod
    def from_polys(cls, ring: RingSpec, rows: Sequence[Sequence[Poly]],
                   ncols: int | None = None) -> "PolyMatrix":
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(ring, tuple(tuple(r) for r in rows), ncols)

    @classmethod
    def from_columns(cls, ring: RingSpec, cols: Sequence[Sequence[Poly]], nrows: int) -> "PolyMatrix":
        for c in cols:
            if len(c) != nrows:
                raise ShapeMismatch(f"column of length {len(c)}, expected {nrows}")
        return cls(ring, tuple(tuple(c[i] for c in cols) for i in range(nrows)), len(cols))

    @classmethod
    def from_const(cls, A: RMatrix) -> "PolyMatrix":
        return cls.from_coeffs(A.ring, [[[x] for x in r] for r in A.entries], A.ncols)

    @classmethod
    def from_coefficient_matrices(cls, mats: Sequence[RMatrix]) -> "PolyMatrix":
        """sum_i mats[i] * z**i."""
        A0 = mats[0]
        ring = same_ring(*(M.ring for M in mats))
        if any(M.shape != A0.shape for M in mats):
            raise ShapeMismatch("coefficient matrices differ in shape")
        return cls.from_coeffs(ring, [[[M.entries[i][j] for M in mats] for j in range(A0.ncols)]
                                      for i in range(A0.nrows)], A0.ncols)

    @classmethod
    def pencil(cls, K: RMatrix, L: RMatrix) -> "PolyMatrix":
        """zK + L."""
        return cls.from_coefficient_matrices([L, K])

    @classmethod
    def zeros(cls, ring: RingSpec, nrows: int, ncols: int) -> "PolyMatrix":
        z = Poly.zero(ring)
        return cls(ring, tuple((z,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, ring: RingSpec, n: int) -> "PolyMatrix":
        return cls.from_const(RMatrix.identity(ring, n))

    @classmethod
    def hstack(cls, *blocks: "PolyMatrix") -> "PolyMatrix":
        ring = same_ring(*(b.ring for b in blocks))
        nrows = blocks[0].nrows
        if any(b.nrows != nrows for b in blocks):
            raise ShapeMismatch("hstack needs equal row counts")
        return cls(ring, tuple(sum((b.entries[i] for b in blocks), ()) for i in range(nrows)),
                   sum(b.ncols for b in blocks))

    # shape and access ---------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        return self.entries[ij[0]][ij[1]]

    def column(self, j: int) -> PolyVector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[PolyVector]:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> "PolyMatrix":
        return PolyMatrix.from_columns(self.ring, list(self.entries), self.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(self.ring, tuple(tuple(self.entries[i][j] for j in cols) for i in rows),
                          len(cols))

    def permute_rows(self, perm: Sequence[int]) -> "PolyMatrix":
        """Row i of the result is row perm[i] of self."""
        return PolyMatrix(self.ring, tuple(self.entries[i] for i in perm), self.ncols)

    def to_coeffs(self) -> list[list[list[int]]]:
        return [[list(p.coeffs) for p in r] for r in self.entries]

    def is_zero(self) -> bool:
        return all(p.is_zero() for r in self.entries for p in r)

    @property
    def degree(self) -> int:
        return max((p.degree for r in self.entries for p in r), default=-1)

    def column_degrees(self) -> tuple[int, ...]:
        return tuple(vector_degree(c) for c in self.columns())

    def coefficient(self, i: int) -> RMatrix:
        """Constant matrix of z**i coefficients."""
        return RMatrix.from_rows(self.ring, [[p.coeff(i) for p in r] for r in self.entries], self.ncols)

    def leading_column_matrix(self) -> RMatrix:
        """Column j holds the z**nu_j coefficients, nu_j the column degree."""
        degs = self.column_degrees()
        return RMatrix.from_rows(self.ring, [[p.coeff(degs[j]) if degs[j] >= 0 else 0
                                              for j, p in enumerate(r)] for r in self.entries],
                                 self.ncols)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        same_ring(self.ring, other.ring)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")
        return PolyMatrix(self.ring, tuple(tuple(a + b for a, b in zip(r, s))
                                           for r, s in zip(self.entries, other.entries)), self.ncols)

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix(self.ring, tuple(tuple(-a for a in r) for r in self.entries), self.ncols)

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + (-other)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        same_ring(self.ring, other.ring)
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        zero = Poly.zero(self.ring)
        rows = []
        for r in self.entries:
            row = []
            for j in range(other.ncols):
                acc = zero
                for t, a in enumerate(r):
                    if not a.is_zero():
                        acc = acc + a * other.entries[t][j]
                row.append(acc)
            rows.append(tuple(row))
        return PolyMatrix(self.ring, tuple(rows), other.ncols)

    def apply(self, u: Sequence[Poly]) -> PolyVector:
        """Matrix-vector product self . u."""
        if len(u) != self.ncols:
            raise ShapeMismatch(f"vector of length {len(u)} for {self.ncols} columns")
        zero = Poly.zero(self.ring)
        out = []
        for r in self.entries:
            acc = zero
            for a, b in zip(r, u):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def scale(self, c: int) -> "PolyMatrix":
        return PolyMatrix(self.ring, tuple(tuple(a * c for a in r) for r in self.entries), self.ncols)

    # components ---------------------------------------------------------

    def project(self, j: int) -> "PolyMatrix":
        comp = self.ring.component(j)
        return PolyMatrix(comp, tuple(tuple(Poly.of(comp, p.coeffs) for p in r) for r in self.entries),
                          self.ncols)

    def components(self) -> list["PolyMatrix"]:
        return [self.project(j) for j in range(self.ring.t)]

    @classmethod
    def glue(cls, parts: Sequence["PolyMatrix"], ring: RingSpec) -> "PolyMatrix":
        if len(parts) != ring.t:
            raise ComponentCountMismatch(f"expected {ring.t} components, got {len(parts)}")
        shape = parts[0].shape
        for j, P in enumerate(parts):
            if P.shape != shape:
                raise ShapeMismatch(f"component {j} has shape {P.shape}, expected {shape}")
            if P.ring.modulus != ring.primes[j]:
                raise MixedRings(f"component {j} is over Z/{P.ring.modulus}")
        return cls(ring, tuple(tuple(glue_polys([P.entries[i][c] for P in parts], ring)
                                     for c in range(shape[1])) for i in range(shape[0])), shape[1])

    def __str__(self) -> str:
        return "\n".join("[ " + ", ".join(str(p) for p in r) + " ]" for r in self.entries) or "[]"


def glue_vectors(parts: Sequence[Sequence[Poly]], ring: RingSpec) -> PolyVector:
    return tuple(glue_polys([v[i] for v in parts], ring) for i in range(len(parts[0])))


# ---------------------------------------------------------------------------
# minors


def poly_det(A: PolyMatrix) -> Poly:
    """Determinant by Laplace expansion over column subsets (no division)."""
    if A.nrows != A.ncols:
        raise ShapeError("determinant of a non-square matrix")
    n = A.nrows
    one = Poly.constant(A.ring, 1)
    if n == 0:
        return one
    # minors[S] = det of the first |S| rows restricted to the columns in bitmask S
    minors: dict[int, Poly] = {0: one}
    for i in range(n):
        nxt: dict[int, Poly] = {}
        for S, d in minors.items():
            if d.is_zero():
                continue
            for c in range(n):
                if S >> c & 1:
                    continue
                a = A.entries[i][c]
                if a.is_zero():
                    continue
                # sign: number of chosen columns to the right of c
                sign = -1 if bin(S >> (c + 1)).count("1") % 2 else 1
                T = S | 1 << c
                term = d * a * sign
                nxt[T] = nxt[T] + term if T in nxt else term
        minors = nxt
    return minors.get((1 << n) - 1, Poly.zero(A.ring))


def minors(G: PolyMatrix, i: int) -> list[Poly]:
    """All i x i minors, ordered by (row subset, column subset)."""
    return [poly_det(G.submatrix(rows, cols))
            for rows in itertools.combinations(range(G.nrows), i)
            for cols in itertools.combinations(range(G.ncols), i)]


def full_size_minors(G: PolyMatrix) -> list[Poly]:
    return minors(G, min(G.shape))


def minors_gcd(G: PolyMatrix) -> Poly:
    """Monic gcd of the full-size minors of a matrix over a prime field."""
    g = Poly.zero(G.ring)
    for f in full_size_minors(G):
        g = poly_gcd(g, f)
        if g.degree == 0:
            break
    return g


# ---------------------------------------------------------------------------
# single-field algorithms


def _require_field(G: PolyMatrix) -> int:
    if not G.ring.is_field:
        raise MixedRings(f"expected a matrix over a prime field, got Z/{G.ring.modulus}")
    return G.ring.modulus


def poly_rank(G: PolyMatrix) -> int:
    """Rank over the rational function field F_p(z)."""
    _require_field(G)
    rows = [list(r) for r in G.entries]
    rank = 0
    for c in range(G.ncols):
        piv = next((i for i in range(rank, len(rows)) if not rows[i][c].is_zero()), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(rank + 1, len(rows)):
            a = rows[i][c]
            if a.is_zero():
                continue
            new = [x * pr[c] - y * a for x, y in zip(rows[i], pr)]
            g = Poly.zero(G.ring)
            for x in new:
                g = poly_gcd(g, x)
            if g.degree > 0:
                new = [x // g for x in new]
            rows[i] = new
        rank += 1
    return rank


def is_surjective_polymatrix(G: PolyMatrix) -> bool:
    """True iff the full-size minors have a nonzero constant gcd."""
    _require_field(G)
    if G.nrows > G.ncols:
        raise ShapeError(f"surjectivity needs rows <= cols, got {G.shape}")
    if G.nrows == 0:
        return True
    return minors_gcd(G).degree == 0


def column_reduce(G: PolyMatrix) -> tuple[PolyMatrix, PolyMatrix]:
    """Return ``(G', U)`` with G' = G U column reduced and U unimodular.

    Each step takes a dependency c among the leading column coefficients and
    replaces the highest-degree column it involves (last index on ties) by
    sum_j c_j z^(nu_* - nu_j) g_j, which strictly lowers that column degree.
    """
    p = _require_field(G)
    ring = G.ring
    cols = [list(c) for c in G.columns()]
    ucols = [list(c) for c in PolyMatrix.identity(ring, G.ncols).columns()]
    while True:
        degs = [vector_degree(c) for c in cols]
        if any(d < 0 for d in degs):
            raise RankDeficient("a column vanished during column reduction")
        Gc = PolyMatrix.from_columns(ring, cols, G.nrows)
        lc = Gc.leading_column_matrix()
        ns = linalg.nullspace(lc.entries, p, G.ncols)
        if not ns:
            break
        c = ns[0]
        star = max((j for j in range(G.ncols) if c[j]), key=lambda j: (degs[j], j))
        inv = pow(c[star], -1, p)
        c = [x * inv % p for x in c]

        def combine(vectors):
            out = [Poly.zero(ring)] * len(vectors[0])
            for j, cj in enumerate(c):
                if cj:
                    shift = degs[star] - degs[j]
                    out = [o + x.shift(shift) * cj for o, x in zip(out, vectors[j])]
            return out

        cols[star] = combine(cols)
        ucols[star] = combine(ucols)
    return (PolyMatrix.from_columns(ring, cols, G.nrows),
            PolyMatrix.from_columns(ring, ucols, G.ncols))


def is_column_reduced(G: PolyMatrix) -> bool:
    p = _require_field(G)
    if any(d < 0 for d in G.column_degrees()):
        return False
    return linalg.rank(G.leading_column_matrix().entries, p) == G.ncols if G.ncols else True


def _convolution_matrix(F: PolyMatrix, d: int, nrows_out: int) -> list[list[int]]:
    """Matrix of w -> F w on coefficient stacks (w_0, ..., w_d), output degrees < nrows_out."""
    r, c = F.shape
    coeffs = [F.coefficient(i).entries for i in range(max(F.degree, 0) + 1)]
    rows = []
    for e in range(nrows_out):
        for i in range(r):
            row = [0] * (c * (d + 1))
            for s in range(d + 1):
                k = e - s
                if 0 <= k < len(coeffs):
                    row[s * c:(s + 1) * c] = coeffs[k][i]
            rows.append(row)
    return rows


def _stack(v: Sequence[Poly], d: int) -> list[int]:
    return [v[i].coeff(s) for s in range(d + 1) for i in range(len(v))]


def _unstack(ring: RingSpec, x: Sequence[int], n: int) -> PolyVector:
    d = len(x) // n if n else 0
    return tuple(Poly.of(ring, [x[s * n + i] for s in range(d)]) for i in range(n))


def solve_polylinear(G: PolyMatrix, v: Sequence[Poly], degree_bound: int) -> PolyVector | None:
    """Find u with G u = v and deg u <= degree_bound, or None."""
    p = _require_field(G)
    if len(v) != G.nrows:
        raise ShapeMismatch(f"vector of length {len(v)} for {G.nrows} rows")
    if degree_bound < 0:
        return tuple(Poly.zero(G.ring) for _ in range(G.ncols)) if all(x.is_zero() for x in v) else None
    out_len = max(degree_bound + max(G.degree, 0), vector_degree(v)) + 1
    A = _convolution_matrix(G, degree_bound, out_len)
    b = _stack(v, out_len - 1)
    x = linalg.solve(A, b, p, G.ncols * (degree_bound + 1))
    if x is None:
        return None
    u = _unstack(G.ring, x, G.ncols)
    assert G.apply(u) == tuple(v)
    return u


def _normalize_column(v: PolyVector) -> PolyVector:
    """Scale so the first entry attaining the column degree is monic."""
    d = vector_degree(v)
    if d < 0:
        return v
    lead = next(x.lead for x in v if x.degree == d)
    inv = pow(lead, -1, v[0].ring.modulus)
    return tuple(x * inv for x in v)


@dataclass(frozen=True)
class PairKernelBasis:
    """Generators of Ker(F1 | F2) = {v : exists x, F1 x + F2 v = 0}."""

    basis: PolyMatrix
    component_bases: tuple[PolyMatrix, ...] = field(default=())

    @property
    def rank(self) -> int:
        return self.basis.ncols


def _kernel_pair_field(F1: PolyMatrix, F2: PolyMatrix, degree_cap: int) -> PolyMatrix:
    p = _require_field(F2)
    ring = F2.ring
    c1, c2 = F1.ncols, F2.ncols
    F = PolyMatrix.hstack(F1, F2)
    target = c2 - (poly_rank(F) - poly_rank(F1))
    basis: list[PolyVector] = []
    if target == 0:
        return PolyMatrix.zeros(ring, c2, 0)
    for d in range(degree_cap + 1):
        dx = d + degree_cap
        out_len = max(dx + max(F1.degree, 0), d + max(F2.degree, 0)) + 1
        A1 = _convolution_matrix(F1, dx, out_len) if c1 else [[] for _ in range(F.nrows * out_len)]
        A2 = _convolution_matrix(F2, d, out_len)
        A = [r1 + r2 for r1, r2 in zip(A1, A2)]
        nx = c1 * (dx + 1)
        sols = [s[nx:] for s in linalg.nullspace(A, p, nx + c2 * (d + 1))]
        # span of z-shifts of the generators already found, at degree <= d
        span = [_stack(tuple(x.shift(e) for x in b), d)
                for b in basis for e in range(d - vector_degree(b) + 1)]
        rk = linalg.rank(span, p) if span else 0
        for s in sols:
            trial = span + [s]
            r2 = linalg.rank(trial, p)
            if r2 > rk:
                span, rk = trial, r2
                basis.append(_unstack(ring, s, c2))
                if len(basis) == target:
                    break
        if len(basis) == target:
            break
    else:
        raise DegreeCapExceeded(f"found {len(basis)} of {target} generators within degree {degree_cap}")
    B = PolyMatrix.from_columns(ring, [_normalize_column(b) for b in basis], c2)
    B, _ = column_reduce(B)
    cols = sorted((_normalize_column(c) for c in B.columns()), key=vector_degree)
    return PolyMatrix.from_columns(ring, cols, c2)


def default_degree_cap(F1: PolyMatrix, F2: PolyMatrix) -> int:
    """Sum of the column degrees of [F1 | F2]; bounds every minimal generator degree."""
    return sum(max(d, 0) for d in PolyMatrix.hstack(F1, F2).column_degrees())


def kernel_pair(F1: PolyMatrix, F2: PolyMatrix, degree_cap: int | None = None) -> PairKernelBasis:
    """Minimal generators of {v : exists x, F1 x + F2 v = 0}, glued across components.

    For each prime field the kernel is swept by degree: at degree d the
    coefficient nullspace of [F1 | F2] is projected onto v, and solutions not
    already spanned by z-shifts of earlier generators become new generators.
    Components with fewer generators are padded with zero columns before
    gluing so the glued image is sum_j e_j Ker_j.
    """
    ring = same_ring(F1.ring, F2.ring)
    if F1.nrows != F2.nrows:
        raise ShapeMismatch(f"F1 has {F1.nrows} rows, F2 has {F2.nrows}")
    cap = default_degree_cap(F1, F2) if degree_cap is None else degree_cap
    parts = [_kernel_pair_field(F1.project(j), F2.project(j), cap) for j in range(ring.t)]
    width = max(P.ncols for P in parts)
    padded = [PolyMatrix.hstack(P, PolyMatrix.zeros(P.ring, P.nrows, width - P.ncols))
              if P.ncols < width else P for P in parts]
    return PairKernelBasis(PolyMatrix.glue(padded, ring), tuple(parts))


def kernel_witness(F1: PolyMatrix, F2: PolyMatrix, v: Sequence[Poly], degree_bound: int) -> PolyVector | None:
    """An x with F1 x + F2 v = 0 and deg x <= degree_bound, per component and glued."""
    ring = same_ring(F1.ring, F2.ring)
    rhs = tuple(-x for x in F2.apply(v))
    parts = []
    for j in range(ring.t):
        x = solve_polylinear(F1.project(j), project_vector(rhs, j), degree_bound)
        if x is None:
            return None
        parts.append(x)
    if F1.ncols == 0:
        return ()
    return glue_vectors(parts, ring)
