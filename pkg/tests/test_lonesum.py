import random
from collections import defaultdict

import pytest

from orientcount.combinum import poly_bernoulli_neg
from orientcount.formulas import count_complete_bipartite
from orientcount.graphcore import Orientation, complete_bipartite, is_acyclic
from orientcount.lonesum import (
    BinaryMatrix,
    count_lonesum_bruteforce,
    find_forbidden_submatrix,
    has_directed_4cycle,
    is_lonesum,
    matrix_to_orientation,
    orientation_to_matrix,
)


def has_forbidden_pattern(m):
    """Entry-level quadruple loop over row and column pairs (oracle)."""
    for i in range(m.rows):
        for i2 in range(i + 1, m.rows):
            for j in range(m.cols):
                for j2 in range(j + 1, m.cols):
                    a, b = m.entry(i, j), m.entry(i, j2)
                    c, d = m.entry(i2, j), m.entry(i2, j2)
                    if (a, b, c, d) in ((1, 0, 0, 1), (0, 1, 1, 0)):
                        return True
    return False


def all_matrices(rows, cols):
    for bits in range(1 << (rows * cols)):
        yield BinaryMatrix(rows, cols, bits)


# ---------------------------------------------------------------------------
# BinaryMatrix basics


def test_matrix_construction_and_access():
    m = BinaryMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
    assert (m.rows, m.cols) == (2, 3)
    assert m.entry(0, 0) == 1
    assert m.entry(1, 0) == 0
    assert m.row_mask(0) == 0b101
    assert m.row_mask(1) == 0b110


def test_matrix_text_roundtrip():
    text = "101\n011"
    m = BinaryMatrix.from_text(text)
    assert m.to_text() == text
    assert BinaryMatrix.from_text("") == BinaryMatrix(0, 0, 0)
    # Blank line terminates; trailing garbage after it is ignored.
    assert BinaryMatrix.from_text("11\n\n??") == BinaryMatrix.from_text("11")


def test_matrix_rejects_bad_input():
    with pytest.raises(ValueError):
        BinaryMatrix.from_text("10\n011")
    with pytest.raises(ValueError):
        BinaryMatrix.from_text("1x")
    with pytest.raises(ValueError):
        BinaryMatrix.from_rows([[0, 2]])
    with pytest.raises(ValueError):
        BinaryMatrix(2, 2, 16)


# ---------------------------------------------------------------------------
# Lonesum tests


def test_lonesum_trivial_cases():
    assert is_lonesum(BinaryMatrix(3, 4, 0))  # all zero
    assert not is_lonesum(BinaryMatrix.from_rows([[1, 0], [0, 1]]))
    assert not is_lonesum(BinaryMatrix.from_rows([[0, 1], [1, 0]]))
    for n in range(7):
        for m in all_matrices(1, n):
            assert is_lonesum(m)


def test_lonesum_staircase_equals_forbidden_pattern_exhaustive():
    shapes = [
        (a, b) for a in range(5) for b in range(5) if a * b <= 16
    ] + [(1, 8), (8, 1), (2, 8), (8, 2)]
    for a, b in shapes:
        for m in all_matrices(a, b):
            expected = not has_forbidden_pattern(m)
            assert is_lonesum(m) == expected, (a, b, m.bits)
            assert (find_forbidden_submatrix(m) is None) == expected


def test_lonesum_staircase_equals_forbidden_pattern_random():
    rng = random.Random(20240817)
    for _ in range(10_000):
        rows = rng.randint(5, 9)
        cols = rng.randint(5, 9)
        bits = rng.getrandbits(rows * cols)
        m = BinaryMatrix(rows, cols, bits)
        assert is_lonesum(m) == (not has_forbidden_pattern(m))


def test_forbidden_witness_is_valid():
    cases = [
        BinaryMatrix.from_rows([[1, 0], [0, 1]]),
        BinaryMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]]),
        BinaryMatrix.from_rows([[0, 0, 1], [1, 1, 1], [1, 1, 0]]),
    ]
    for m in cases:
        (i, i2), (j, j2) = find_forbidden_submatrix(m)
        assert i < i2 and j < j2
        sub = (m.entry(i, j), m.entry(i, j2), m.entry(i2, j), m.entry(i2, j2))
        assert sub in ((1, 0, 0, 1), (0, 1, 1, 0))
    assert find_forbidden_submatrix(BinaryMatrix.from_rows([[1, 0], [0, 1]])) == (
        (0, 1),
        (0, 1),
    )


def test_count_small_shapes():
    # Of the 16 2x2 matrices only the two permutation matrices fail.
    naive = sum(1 for m in all_matrices(2, 2) if not has_forbidden_pattern(m))
    assert naive == 14
    assert count_lonesum_bruteforce(2, 2) == 14
    for n in range(9):
        assert count_lonesum_bruteforce(1, n) == 2**n
    assert count_lonesum_bruteforce(3, 4) == 1066


def test_count_matches_poly_bernoulli_and_formula():
    for a in range(5):
        for b in range(5):
            got = count_lonesum_bruteforce(a, b)
            assert got == poly_bernoulli_neg(a, b)
            assert got == count_complete_bipartite(a, b)


def test_count_cap():
    with pytest.raises(ValueError):
        count_lonesum_bruteforce(5, 5)


def test_row_column_sum_uniqueness_characterization():
    # Directly from the definition: a matrix is lonesum iff it is the only
    # matrix with its row-sum and column-sum vectors.
    for a in range(1, 4):
        for b in range(1, 4):
            buckets = defaultdict(list)
            for m in all_matrices(a, b):
                row_sums = tuple(m.row_mask(i).bit_count() for i in range(a))
                col_sums = tuple(
                    sum(m.entry(i, j) for i in range(a)) for j in range(b)
                )
                buckets[(row_sums, col_sums)].append(m)
            for group in buckets.values():
                for m in group:
                    assert is_lonesum(m) == (len(group) == 1), (a, b, m.bits)


# ---------------------------------------------------------------------------
# Orientation correspondence


def test_orientation_to_matrix_extremes():
    g = complete_bipartite(2, 3)
    all_forward = Orientation(g, (1 << 6) - 1)
    assert orientation_to_matrix(all_forward, 2, 3).bits == (1 << 6) - 1
    all_backward = Orientation(g, 0)
    assert orientation_to_matrix(all_backward, 2, 3).bits == 0


def test_orientation_to_matrix_shape_mismatch():
    g = complete_bipartite(2, 3)
    with pytest.raises(ValueError):
        orientation_to_matrix(Orientation(g, 0), 3, 2)


def test_cyclic_orientation_is_permutation_matrix():
    g = complete_bipartite(2, 2)
    cyclic = Orientation(g, 0b1001)  # 0->2->1->3->0
    m = orientation_to_matrix(cyclic, 2, 2)
    assert [[m.entry(i, j) for j in range(2)] for i in range(2)] in (
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
    )
    assert not is_lonesum(m)
    assert matrix_to_orientation(BinaryMatrix.from_rows([[1, 0], [0, 1]])) == cyclic


def test_roundtrip_exhaustive():
    for a in range(1, 4):
        for b in range(1, 4):
            g = complete_bipartite(a, b)
            for bits in range(1 << (a * b)):
                o = Orientation(g, bits)
                m = orientation_to_matrix(o, a, b)
                assert matrix_to_orientation(m) == o
            for m in all_matrices(a, b):
                assert orientation_to_matrix(matrix_to_orientation(m), a, b) == m


def test_acyclic_iff_lonesum_exhaustive():
    for a in range(1, 4):
        for b in range(1, 4):
            g = complete_bipartite(a, b)
            for bits in range(1 << (a * b)):
                o = Orientation(g, bits)
                assert is_acyclic(o) == is_lonesum(orientation_to_matrix(o, a, b))


def test_4cycle_detection_matches_acyclicity():
    g22 = complete_bipartite(2, 2)
    assert not has_directed_4cycle(Orientation(g22, (1 << 4) - 1))
    cyclic_orientations = [
        o for bits in range(16) if has_directed_4cycle(o := Orientation(g22, bits))
    ]
    assert len(cyclic_orientations) == 2
    for a in range(1, 4):
        for b in range(1, 4):
            g = complete_bipartite(a, b)
            for bits in range(1 << (a * b)):
                o = Orientation(g, bits)
                assert has_directed_4cycle(o) == (not is_acyclic(o)), (a, b, bits)
