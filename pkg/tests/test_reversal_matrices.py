import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from prefix_spectra import colored_group as cg
from prefix_spectra.circulant import CirculantMatrix, silvester_block_det
from prefix_spectra.colored_group import PrefixReversal, Sign
from prefix_spectra.exact import ExactMatrix, bareiss_det
from prefix_spectra.reversal_matrices import (
    EntryIndex,
    block_of,
    build_closed_form,
    build_sum,
    classical_sum,
    closed_form_blocks,
    entry_at,
    entry_position,
    perm_matrix,
)

small = st.tuples(st.integers(1, 5), st.integers(1, 5))


def perm_from_element(r, m, n):
    g = cg.generator_element(r, m, n)
    rows = [[0] * (m * n) for _ in range(m * n)]
    for j in range(1, n + 1):
        for k in range(m):
            s, c = g(j, k)
            rows[(j - 1) * m + k][(s - 1) * m + c] = 1
    return ExactMatrix(rows)


@given(small, st.data())
def test_perm_matrix_matches_group_element(mn, data):
    m, n = mn
    r = PrefixReversal(data.draw(st.integers(1, n)), data.draw(st.sampled_from(list(Sign))))
    P = perm_matrix(r, m, n)
    assert P.is_permutation_matrix()
    assert P == perm_from_element(r, m, n)
    assert P.T == perm_matrix(r.inverse(), m, n)


@given(small)
def test_sums_are_regular(mn):
    m, n = mn
    M = build_sum(m, n, "both")
    assert set(M.row_sums()) == {2 * n} and set(M.col_sums()) == {2 * n}
    assert M.is_symmetric()
    Mp = build_sum(m, n, "flips_only")
    assert set(Mp.row_sums()) == {n} and set(Mp.col_sums()) == {n}


def test_entry_order():
    labels = [entry_at(p, 3) for p in range(6)]
    assert labels == [EntryIndex(1, 0), EntryIndex(1, 1), EntryIndex(1, 2), EntryIndex(2, 0), EntryIndex(2, 1), EntryIndex(2, 2)]
    assert all(entry_position(e, 3) == p for p, e in enumerate(labels))
    with pytest.raises(ValueError):
        entry_position(EntryIndex(1, 3), 3)


def test_golden_perm_matrices(golden):
    assert perm_matrix(PrefixReversal(2, Sign.FLIP), 3, 2).to_csv() == golden("P_r2plus_m3_n2.csv")
    assert perm_matrix(PrefixReversal(2, Sign.FLOP), 3, 2).to_csv() == golden("P_r2minus_m3_n2.csv")


def test_golden_sum(golden):
    assert build_sum(4, 3, "both").to_csv() == golden("Mpm_m4_n3.csv")


def test_off_diagonal_blocks_are_shifts():
    P = perm_matrix(PrefixReversal(2, Sign.FLIP), 3, 2)
    up = CirculantMatrix((0, 1, 0)).to_matrix()
    assert block_of(P, 1, 2, 3) == up == block_of(P, 2, 1, 3)
    Q = perm_matrix(PrefixReversal(2, Sign.FLOP), 3, 2)
    assert block_of(Q, 1, 2, 3) == CirculantMatrix((0, 0, 1)).to_matrix()


@pytest.mark.parametrize("variant", ["both", "flips_only"])
@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_closed_form(m, n, variant):
    assert build_sum(m, n, variant) == build_closed_form(m, n, variant)


@pytest.mark.parametrize("m,n,variant", [(3, 2, "both"), (4, 2, "flips_only"), (3, 3, "both"), (2, 3, "flips_only")])
def test_characteristic_polynomial_by_blocks(m, n, variant):
    M = build_sum(m, n, variant)
    for lam in range(-3, 2 * n + 2):
        assert silvester_block_det(closed_form_blocks(m, n, lam, variant)) == bareiss_det(M.shift_diagonal(lam))


def test_sum_m3_n2_charpoly():
    x = sympy.symbols("x")
    p = sympy.Matrix(build_sum(3, 2).tolist()).charpoly(x).as_expr()
    assert sympy.expand(p - x * (x - 4) * (x**2 - x - 3) ** 2) == 0


def test_classical_sums():
    assert set(classical_sum(1, 4).row_sums()) == {3}
    assert set(classical_sum(2, 4).row_sums()) == {4}
    with pytest.raises(ValueError):
        classical_sum(3, 2)


def test_invalid_generator():
    with pytest.raises(ValueError):
        perm_matrix(PrefixReversal(3), 2, 2)
    with pytest.raises(ValueError):
        build_sum(2, 2, "sideways")
