"""Small constructors and hypothesis strategies shared by the test modules."""

import random

from hypothesis import strategies as st

from convring.first_order import FirstOrderRep
from convring.poly import Poly, PolyMatrix
from convring.ring import RMatrix, make_ring
from convring.sampling import random_code, random_code_params
from convring.state_space import StateSpaceSystem


def const(ring, rows):
    return RMatrix.from_rows(ring, rows, len(rows[0]) if rows else 0)


def poly(ring, rows):
    return PolyMatrix.from_coeffs(ring, rows, len(rows[0]))


def triple(ring, K, L, M):
    return FirstOrderRep.from_matrices(const(ring, K), const(ring, L), const(ring, M))


def system(ring, A, B, C, D):
    return StateSpaceSystem(const(ring, A), const(ring, B), const(ring, C), const(ring, D))


def to_lists(v):
    """Poly vector -> list of coefficient lists."""
    return [list(f.coeffs) for f in v]


def vec(ring, coeff_lists):
    return tuple(Poly.of(ring, c) for c in coeff_lists)


# observable (3, 2) component codes of degree 3 over F_2 and F_3; coprimality of
# their full-size minors is re-checked with sympy in test_code
OBSERVABLE_REFS = {2: [[[], [0, 1]], [[0, 0, 1], [1, 1]], [[1, 1], [1, 1]]],
                   3: [[[2, 2, 2], [0, 1]], [[1, 0, 2], [2, 1]], [[0, 0, 2], [0, 2]]]}

moduli = st.sampled_from([2, 3, 5, 6, 10, 15, 30])
small_moduli = st.sampled_from([2, 3, 6])


@st.composite
def rmatrices(draw, m=None, rows=None, cols=None, max_dim=4):
    m = draw(moduli) if m is None else m
    r = draw(st.integers(1, max_dim)) if rows is None else rows
    c = draw(st.integers(1, max_dim)) if cols is None else cols
    entries = draw(st.lists(st.lists(st.integers(0, m - 1), min_size=c, max_size=c),
                            min_size=r, max_size=r))
    return RMatrix.from_rows(make_ring(m), entries, c)


@st.composite
def polys(draw, p, max_degree=3):
    return Poly.of(make_ring(p) if isinstance(p, int) else p,
                   draw(st.lists(st.integers(0, 50), max_size=max_degree + 1)))


@st.composite
def polymatrices(draw, m, rows, cols, max_degree=2):
    ring = make_ring(m)
    entries = [[draw(st.lists(st.integers(0, m - 1), max_size=max_degree + 1)) for _ in range(cols)]
               for _ in range(rows)]
    return PolyMatrix.from_coeffs(ring, entries, cols)


@st.composite
def codes(draw, moduli=(2, 3, 6), max_n=4, max_k=2, max_delta=4):
    """A valid random code, driven by a hypothesis-chosen seed."""
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    m, n, k, delta = random_code_params(rng, max_n=max_n, max_k=max_k, max_delta=max_delta,
                                        moduli=moduli)
    return random_code(rng, m, n, k, delta)


seeds = st.integers(0, 2**32 - 1)
