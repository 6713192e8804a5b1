import math
from fractions import Fraction

import pytest

import staircase_lab as sl


def test_counts():
    assert sl.count_tableaux([4, 3, 2, 1], shifted=True) == 12
    assert sl.count_tableaux([3, 2, 1]) == 16
    # big enough to overflow 64 bits
    assert sl.count_tableaux([12] * 12) > 2**64
    assert len(sl.all_tableaux([4, 3, 2, 1], shifted=True)) == 12


def test_round_trip():
    for rows in sl.all_tableaux([4, 3, 2, 1], shifted=True):
        word = sl.eg_inverse(rows)
        assert sl.is_sorting_network(word, 5)
        assert sl.is_132_network(word, 5)
        assert sl.eg_forward(word, 5) == rows


def test_worked_trajectory():
    word = [1, 2, 1, 3, 2, 1]
    assert sl.apply_prefix(word, 4, 6) == [4, 3, 2, 1]
    positions = sl.trajectory(word, 4, 3)
    assert positions[0] == 3 and positions[-1] == 2


def test_sampling_is_reproducible():
    a = sl.sample_staircase(8, seed=3, index=2)
    assert a == sl.sample_staircase(8, seed=3, index=2)
    assert sorted(x for row in a for x in row) == list(range(1, 29))
    t = sl.sample_tableau([3, 2], False, 9)
    assert [len(r) for r in t] == [3, 2]


def test_promotion_inverse():
    rows = sl.sample_staircase(6, seed=1)
    for k in range(1, 16):
        forward = sl.partial_promotion(rows, k)
        assert sl.inverse_partial_promotion(forward, k) == rows
    for row, col, way, label in sl.adjacencies(rows):
        assert way in ("h", "v") and 1 <= label < 15


def test_limit_values():
    assert sl.entropy(0.5) == pytest.approx(math.log(2))
    assert sl.g_tilde(0.5, 0.0) == pytest.approx(math.sqrt(2) / 2)
    assert sl.first_row_limit(1.0) == pytest.approx(0.5)
    assert sl.surface_L(0.0, 0.6) == pytest.approx(sl.first_row_limit(0.6))
    assert sl.first_element_limit_trajectory(0.25) == pytest.approx(math.sqrt(0.75))
    assert sl.conjectured_adjacency_profile(0.5) == pytest.approx(0.5)
    gap = sl.limit_energy(0.3) + sl.entropy(0.3) - math.log(2)
    assert -1e-3 <= gap <= 5e-3


def test_verify():
    reports = sl.verify(4)
    assert reports and all(r["holds"] for r in reports)
    assert all(isinstance(r["lhs"], (int, Fraction)) for r in reports)
    with pytest.raises(sl.StaircaseError):
        sl.verify(40)


def test_experiments():
    s = sl.surface(12, 4, seed=5, threads=2)
    assert len(s["cells"]) == len(s["limit"]) == 12 * 11 // 2
    assert len(s["sample_max"]) == 4
    t = sl.experiment_table("trajectories", 6, 2, seed=1, grid=5)
    assert t["rows"] and set(t["rows"][0]) == set(t["columns"])
    m = sl.experiment_table("matrices", 8, 1, alphas=[0.5])
    assert m["rows"]
    with pytest.raises(sl.StaircaseError):
        sl.experiment_table("nope", 5, 1)
