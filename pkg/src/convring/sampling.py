"""Random codes, encoders and invertible matrices for property checks."""

from __future__ import annotations

import random

from . import linalg
from .code import ConvCode, make_code
from .poly import PolyMatrix
from .ring import RingSpec, RMatrix, glue, make_ring


def random_composition(rng: random.Random, total: int, parts: int) -> tuple[int, ...]:
    """Uniform composition of ``total`` into ``parts`` positive integers."""
    cuts = sorted(rng.sample(range(1, total), parts - 1))
    bounds = [0, *cuts, total]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def random_reduced_encoder(rng: random.Random, p: int, n: int, nus: tuple[int, ...]) -> PolyMatrix:
    """n x k encoder over F_p with exact column degrees ``nus`` and a full-rank
    leading column coefficient matrix (hence column reduced and injective)."""
    k = len(nus)
    ring = make_ring(p)
    while True:
        lead = [[rng.randrange(p) for _ in range(k)] for _ in range(n)]
        if linalg.rank(lead, p) == k:
            break
    rows = []
    for i in range(n):
        row = []
        for j, nu in enumerate(nus):
            row.append([rng.randrange(p) for _ in range(nu)] + [lead[i][j]])
        rows.append(row)
    return PolyMatrix.from_coeffs(ring, rows, k)


def random_code(rng: random.Random, m: int, n: int, k: int, delta: int) -> ConvCode:
    """A valid (n, k) code of degree ``delta`` over Z/m, glued from random
    column-reduced component encoders (column degree profiles may differ)."""
    ring = make_ring(m)
    parts = []
    for p in ring.primes:
        nus = random_composition(rng, delta, k)
        G = random_reduced_encoder(rng, p, n, nus)
        parts.append(G)
    return make_code(ring, PolyMatrix.glue(parts, ring))


def random_code_params(rng: random.Random, *, max_n: int = 4, max_k: int = 2, max_delta: int = 4,
                       moduli: tuple[int, ...] = (2, 3, 6)) -> tuple[int, int, int, int]:
    m = rng.choice(moduli)
    n = rng.randint(2, max_n)
    k = rng.randint(1, min(max_k, n - 1))
    delta = rng.randint(k, max_delta)
    return m, n, k, delta


def random_invertible(rng: random.Random, ring: RingSpec, n: int) -> RMatrix:
    parts = []
    for j, p in enumerate(ring.primes):
        while True:
            rows = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
            if linalg.det(rows, p):
                break
        parts.append(RMatrix.from_rows(ring.component(j), rows, n))
    return glue(parts, ring)


def random_matrix(rng: random.Random, ring: RingSpec, nrows: int, ncols: int) -> RMatrix:
    return RMatrix.from_rows(ring, [[rng.randrange(ring.modulus) for _ in range(ncols)]
                                    for _ in range(nrows)], ncols)
