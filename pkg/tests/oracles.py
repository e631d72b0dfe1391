"""Independent reference computations used by the tests.

Nothing here imports the package's algebra: polynomials are plain coefficient
lists (or bitmasks over F_2), ranks and determinants come from sympy, and
existence questions are settled by exhaustive enumeration.
"""

from __future__ import annotations

import itertools
from math import gcd

from sympy import GF, Matrix
from sympy.polys.matrices import DomainMatrix


# --- integers mod m ---------------------------------------------------------

def crt_idempotents(m: int, primes) -> list[int]:
    """e_j by brute force over all residues."""
    out = []
    for p in primes:
        e = next(x for x in range(m) if all((x - (1 if q == p else 0)) % q == 0 for q in primes))
        out.append(e)
    return out


def int_det_mod(rows, m: int) -> int:
    if not rows:
        return 1 % m
    return int(Matrix(rows).det()) % m


def rank_mod_p(rows, p: int, ncols: int | None = None) -> int:
    if not rows:
        return 0
    ncols = len(rows[0]) if ncols is None else ncols
    if ncols == 0:
        return 0
    return DomainMatrix([[GF(p)(x) for x in r] for r in rows], (len(rows), ncols), GF(p)).rank()


def minors_ideal_generator(rows, i: int, m: int) -> int:
    g = m
    nr, nc = len(rows), len(rows[0])
    for rs in itertools.combinations(range(nr), i):
        for cs in itertools.combinations(range(nc), i):
            g = gcd(g, int_det_mod([[rows[r][c] for c in cs] for r in rs], m))
    return g % m


def has_nonzero_kernel_vector(rows, m: int) -> bool:
    """Exhaustive search for X != 0 with A X = 0 over Z/m."""
    n = len(rows[0])
    for x in itertools.product(range(m), repeat=n):
        if any(x) and all(sum(a * b for a, b in zip(r, x)) % m == 0 for r in rows):
            return True
    return False


def annihilator_generator(d: int, m: int) -> int:
    """Generator of {x : x d = 0 mod m} by scanning all residues."""
    ann = [x for x in range(m) if (x * d) % m == 0]
    g = m
    for x in ann:
        g = gcd(g, x)
    return g % m


# --- polynomials as ascending coefficient lists over F_p ---------------------

def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def padd(f, g, p):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p for i in range(n)])


def pmul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return trim(out)


def pmod(f, g, p):
    f = trim(f)
    inv = pow(g[-1], -1, p)
    while len(f) >= len(g):
        c = f[-1] * inv % p
        s = len(f) - len(g)
        f = trim([(f[i] - c * g[i - s]) % p if i >= s else f[i] for i in range(len(f))])
    return f


def all_polys(p: int, max_degree: int):
    """Every polynomial of degree <= max_degree, zero included."""
    for cs in itertools.product(range(p), repeat=max_degree + 1):
        yield trim(cs)


def divides(g, f, p) -> bool:
    if not g:
        return not trim(f)
    return not pmod(f, g, p)


def pdet(rows, p):
    """Leibniz determinant of a square matrix of coefficient lists."""
    n = len(rows)
    total = []
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = [1]
        for i in range(n):
            term = pmul(term, [c % p for c in rows[i][perm[i]]], p)
        total = padd(total, [sign * c % p for c in term], p)
    return total


def proper_output_sets(G, p: int, delta: int) -> list[tuple[int, ...]]:
    """Output coordinate sets S, in lexicographic order, for which the
    complementary rows of the encoder give a k x k minor of full degree delta;
    exactly the splits with a proper input/output transfer function."""
    n, k = len(G), len(G[0])
    out = []
    for S in itertools.combinations(range(n), n - k):
        U = [i for i in range(n) if i not in S]
        if len(trim(pdet([G[i] for i in U], p))) - 1 == delta:
            out.append(S)
    return out


# --- F_2 polynomials as bitmasks -------------------------------------------

def clmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def to_mask(coeffs) -> int:
    return sum((c & 1) << i for i, c in enumerate(coeffs))


def from_mask(x: int) -> list[int]:
    return [(x >> i) & 1 for i in range(x.bit_length())]


def f2_matvec(G, u):
    """G: rows of bitmask entries; u: bitmask vector."""
    out = []
    for row in G:
        acc = 0
        for g, x in zip(row, u):
            acc ^= clmul(g, x)
        out.append(acc)
    return tuple(out)


def f2_codewords(G, k: int, message_degree: int, max_degree: int) -> set[tuple[int, ...]]:
    """All G u with deg u_j <= message_degree whose degree is <= max_degree."""
    limit = 1 << (max_degree + 1)
    out = set()
    for u in itertools.product(range(1 << (message_degree + 1)), repeat=k):
        v = f2_matvec(G, u)
        if all(x < limit for x in v):
            out.add(v)
    return out


def f2_pencil_image(K, L, x_degree: int) -> set[tuple[int, ...]]:
    """{(zK + L) x : deg x <= x_degree} with K, L given as 0/1 rows."""
    rows = [[(K[i][j] << 1) | L[i][j] for j in range(len(K[0]))] for i in range(len(K))]
    d = len(K[0])
    return {f2_matvec(rows, x) for x in itertools.product(range(1 << (x_degree + 1)), repeat=d)}


def f2_const_apply(M, v):
    out = []
    for row in M:
        acc = 0
        for c, x in zip(row, v):
            if c & 1:
                acc ^= x
        out.append(acc)
    return tuple(out)


def all_vectors(n: int, max_degree: int, p: int = 2):
    """Every length-n vector over F_p[z] of degree <= max_degree (as coefficient lists)."""
    polys = list(all_polys(p, max_degree))
    return itertools.product(polys, repeat=n)
