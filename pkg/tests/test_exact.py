import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from prefix_spectra.exact import (
    ExactMatrix,
    bareiss_det,
    bareiss_rank,
    exact_kernel_vector,
    exact_nullity,
    is_kernel_vector,
    modular_kernel_vector,
    random_primes,
    rational_reconstruction,
)

entries = st.integers(-5, 5)


@st.composite
def int_matrices(draw, max_dim=6, square=False):
    r = draw(st.integers(1, max_dim))
    c = r if square else draw(st.integers(1, max_dim))
    return [draw(st.lists(entries, min_size=c, max_size=c)) for _ in range(r)]


@st.composite
def low_rank(draw, max_dim=7, square=False):
    # product of thin factors, so a kernel usually exists
    r = draw(st.integers(2, max_dim))
    c = r if square else draw(st.integers(2, max_dim))
    k = draw(st.integers(1, min(r, c)))
    A = [draw(st.lists(entries, min_size=k, max_size=k)) for _ in range(r)]
    B = [draw(st.lists(entries, min_size=c, max_size=c)) for _ in range(k)]
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(c)] for i in range(r)]


@given(int_matrices(square=True))
def test_det_matches_sympy(rows):
    assert bareiss_det(rows) == sympy.Matrix(rows).det()


@given(int_matrices())
def test_rank_matches_sympy(rows):
    assert bareiss_rank(rows) == sympy.Matrix(rows).rank()


@given(low_rank())
def test_kernel_vector_is_exact(rows):
    nullity, v = exact_kernel_vector(rows)
    assert nullity == len(rows[0]) - sympy.Matrix(rows).rank()
    if nullity:
        assert is_kernel_vector(rows, v)
    else:
        assert v is None


@given(low_rank(square=True))
def test_modular_path_agrees(rows):
    nullity, v = exact_nullity(ExactMatrix(rows), exact_limit=0, seed=3)
    assert nullity == len(rows[0]) - sympy.Matrix(rows).rank()
    if nullity:
        assert is_kernel_vector(rows, v)


def test_modular_kernel_large_entries():
    # kernel vector with big coordinates, forcing CRT plus reconstruction
    a, b = 123456789, 987654321
    rows = [[a, -b, 0], [2 * a, -2 * b, 0], [0, 0, 1]]
    nullity, v = modular_kernel_vector(rows, random_primes(3, seed=1))
    assert nullity == 1
    assert is_kernel_vector(rows, v)
    g = math.gcd(a, b)
    assert sorted(abs(x) for x in v) == [0, a // g, b // g]


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_rational_reconstruction_round_trip(num, den):
    p = random_primes(2, seed=7)
    modulus = p[0] * p[1]
    q = Fraction(num, den)
    residue = q.numerator * pow(q.denominator, -1, modulus) % modulus
    assert rational_reconstruction(residue, modulus) == q


def test_random_primes_are_prime_and_seeded():
    ps = random_primes(4, seed=11)
    assert ps == random_primes(4, seed=11)
    assert len(set(ps)) == 4
    assert all(sympy.isprime(p) and p.bit_length() == 62 for p in ps)


def test_matrix_algebra():
    A = ExactMatrix([[1, 2], [3, 4]])
    B = ExactMatrix.identity(2)
    assert A @ B == A
    assert (A + A) == A.scale(2)
    assert (A - A) == ExactMatrix.zeros(2)
    assert A.T.tolist() == [[1, 3], [2, 4]]
    assert A.shift_diagonal(5) == ExactMatrix([[4, -2], [-3, 1]])
    assert A.trace() == 5 and A.row_sums() == [3, 7] and A.col_sums() == [4, 6]
    assert A.matvec([1, -1]) == [-1, -1]
    assert not A.is_symmetric()
    assert ExactMatrix([[0, 1], [1, 0]]).is_permutation_matrix()


def test_csv_round_trip():
    A = ExactMatrix([[0, -1, 2], [3, 0, 0]])
    text = A.to_csv()
    assert text == "0,-1,2\n3,0,0\n"
    assert ExactMatrix.from_csv(text) == A


def test_shape_mismatch():
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2]]) + ExactMatrix([[1], [2]])
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2], [3]])
