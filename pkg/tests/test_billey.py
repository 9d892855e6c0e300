"""Localization evaluations: dynamic program vs. explicit subword oracle."""

import pytest

from peterschub.billey import (
    LocalizationValue,
    billey_eval_bruteforce,
    billey_eval_dp,
    earliest_sound_window,
    inversion_heights,
)
from peterschub.errors import Rejected
from peterschub.rootsys import build_root_system
from peterschub.weyl import element_words, longest_element_word, reduced_words


def test_value_str():
    assert str(LocalizationValue(3, 0)) == "3"
    assert str(LocalizationValue(2, 1)) == "2*t"
    assert str(LocalizationValue(12, 6)) == "12*t^6"


def test_inversion_heights_values():
    a2 = build_root_system("A2")
    assert inversion_heights(a2, (1, 2, 1)) == [1, 2, 1]
    a3 = build_root_system("A3")
    assert inversion_heights(a3, (1, 2, 1, 3, 2, 1)) == [1, 2, 1, 3, 2, 1]
    b2 = build_root_system("B2")
    assert inversion_heights(b2, (1, 2, 1, 2)) == [1, 2, 3, 1]


def test_hand_values_a2():
    rs = build_root_system("A2")
    w0 = (1, 2, 1)
    assert billey_eval_dp(rs, (), w0) == LocalizationValue(1, 0)
    assert billey_eval_dp(rs, (1,), w0) == LocalizationValue(2, 1)
    assert billey_eval_dp(rs, (2,), w0) == LocalizationValue(2, 1)
    assert billey_eval_dp(rs, (1, 2), w0) == LocalizationValue(2, 2)
    assert billey_eval_dp(rs, (2, 1), w0) == LocalizationValue(2, 2)
    # At v = w0 only the full index subset matches; value is the product
    # of all inversion heights.
    assert billey_eval_dp(rs, w0, w0) == LocalizationValue(2, 3)
    assert billey_eval_dp(rs, (2, 1, 2), w0) == LocalizationValue(2, 3)


def test_zero_value_keeps_degree():
    rs = build_root_system("A2")
    val = billey_eval_dp(rs, (2,), (1,))
    assert val == LocalizationValue(0, 1)
    val = billey_eval_dp(rs, (1, 2, 1), (1, 2))
    assert val == LocalizationValue(0, 3)


def test_rejects_non_reduced_inputs():
    rs = build_root_system("A2")
    with pytest.raises(Rejected):
        billey_eval_dp(rs, (1, 1), (1, 2, 1))
    with pytest.raises(Rejected):
        billey_eval_dp(rs, (1,), (2, 2))
    with pytest.raises(Rejected):
        billey_eval_bruteforce(rs, (1, 1), (1, 2, 1))


def test_dp_matches_backtrack_exhaustive_b2():
    rs = build_root_system("B2")
    words = element_words(rs)
    for w in words:
        for v in words:
            assert billey_eval_dp(rs, v, w) == billey_eval_bruteforce(rs, v, w)


def test_dp_matches_subset_scan_a3():
    rs = build_root_system("A3")
    w0 = longest_element_word(rs, (1, 2, 3))
    for v in element_words(rs, max_length=3):
        dp = billey_eval_dp(rs, v, w0)
        scan = billey_eval_bruteforce(rs, v, w0, full_subset_scan=True)
        assert dp == scan


def test_dp_matches_backtrack_g2():
    rs = build_root_system("G2")
    words = element_words(rs)
    for w in words:
        for v in words:
            assert billey_eval_dp(rs, v, w) == billey_eval_bruteforce(rs, v, w)


def test_word_independence_across_reduced_words():
    rs = build_root_system("A3")
    w0 = (1, 2, 1, 3, 2, 1)
    values = {
        u: billey_eval_dp(rs, (2, 1), u) for u in reduced_words(rs, w0)
    }
    assert len(set(values.values())) == 1


def test_earliest_sound_window():
    rs = build_root_system("A2")
    assert earliest_sound_window(rs, (1, 2), (1, 2, 1)) == 2
    # Pattern set {(1,2,1), (2,1,2)} has final letters 1 and 2; the last
    # position carrying letter 2 is 2, the last carrying 1 is 3.
    assert earliest_sound_window(rs, (1, 2, 1), (1, 2, 1)) == 3
    a3 = build_root_system("A3")
    w0 = (1, 2, 1, 3, 2, 1)
    assert earliest_sound_window(a3, (3,), w0) == 4


def test_window_validation():
    rs = build_root_system("A3")
    w0 = (1, 2, 1, 3, 2, 1)
    full = billey_eval_dp(rs, (1, 2), w0)
    sound = earliest_sound_window(rs, (1, 2), w0)
    assert billey_eval_bruteforce(rs, (1, 2), w0, window=sound) == full
    with pytest.raises(Rejected) as exc:
        billey_eval_bruteforce(rs, (1, 2), w0, window=sound - 1)
    assert str(sound) in str(exc.value)
    with pytest.raises(Rejected):
        billey_eval_bruteforce(rs, (1, 2), w0, window=7)


def test_window_narrowing_is_exact_when_sound():
    # A sound window must not change any value.
    rs = build_root_system("B2")
    w0 = (1, 2, 1, 2)
    for v in element_words(rs):
        full = billey_eval_bruteforce(rs, v, w0)
        sound = earliest_sound_window(rs, v, w0)
        assert billey_eval_bruteforce(rs, v, w0, window=sound) == full


def test_degree_is_class_length():
    rs = build_root_system("B3")
    w0 = longest_element_word(rs, (1, 2, 3))
    for v in ((), (2,), (1, 2), (2, 3, 2)):
        assert billey_eval_dp(rs, v, w0).degree == len(v)


def test_giambelli_instance_e6_dual_route():
    rs = build_root_system("E6")
    vk = (1, 2, 3, 4, 5, 6)
    w0 = longest_element_word(rs, range(1, 7))
    dp = billey_eval_dp(rs, vk, w0)
    assert dp == billey_eval_bruteforce(rs, vk, w0)
    assert dp.degree == 6 and dp.coeff > 0
