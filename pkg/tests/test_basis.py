from math import comb

import numpy as np
import pytest

from spinchaos import ParameterError, build_sector, site_bit


def test_half_filled_twelve_site_sector_has_924_states():
    assert build_sector(12, 6).dimension == 924


def test_two_site_single_excitation_states():
    basis = build_sector(2, 1)
    assert basis.dimension == 2
    assert list(basis.states) == [0b01, 0b10]


def test_four_site_two_excitation_dimension_matches_enumeration():
    expected = sorted(w for w in range(2**4) if bin(w).count("1") == 2)
    basis = build_sector(4, 2)
    assert basis.dimension == 6
    assert list(basis.states) == expected


@pytest.mark.parametrize("length,n_up", [(1, 0), (5, 2), (8, 4), (10, 7)])
def test_states_sorted_with_correct_popcount(length, n_up):
    basis = build_sector(length, n_up)
    words = basis.states
    assert basis.dimension == comb(length, n_up)
    assert np.all(np.diff(words) > 0)
    assert all(bin(int(w)).count("1") == n_up for w in words)


def test_popcount_sum_identity():
    length, n_up = 9, 4
    basis = build_sector(length, n_up)
    total = sum(bin(int(w)).count("1") for w in basis.states)
    assert total == n_up * comb(length, n_up)


def test_sector_sizes_cover_full_space():
    length = 6
    assert sum(build_sector(length, k).dimension for k in range(length + 1)) == 2**length


def test_index_round_trip():
    basis = build_sector(7, 3)
    for i, word in enumerate(basis.states):
        assert basis.index_of(int(word)) == i


def test_index_of_rejects_foreign_word():
    basis = build_sector(4, 2)
    with pytest.raises(ParameterError):
        basis.index_of(0b0001)


@pytest.mark.parametrize(
    "length,n_up",
    [(0, 0), (-3, 0), (4, 5), (4, -1), (25, 12)],
)
def test_out_of_range_arguments_rejected(length, n_up):
    with pytest.raises(ParameterError) as excinfo:
        build_sector(length, n_up)
    message = str(excinfo.value)
    assert str(length) in message or str(n_up) in message


def test_site_bit_convention():
    # site 1 is the least significant bit; 1 means spin up
    assert site_bit(0b1, 1, 12) == 1
    assert site_bit(0b1, 2, 12) == 0
    assert site_bit((1 << 12) - 1, 7, 12) == 1


def test_site_bit_rejects_bad_site():
    with pytest.raises(ParameterError):
        site_bit(0b1, 0, 4)
    with pytest.raises(ParameterError):
        site_bit(0b1, 5, 4)


def test_states_are_immutable():
    basis = build_sector(5, 2)
    with pytest.raises(ValueError):
        basis.states[0] = 3
