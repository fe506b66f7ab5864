import re
from math import comb

import pytest

from weylres.checks import complexes_suite, valid_kl
from weylres.complexes import (ComplexParameterError, build_complex, content_profiles, family_shapes,
                               homology_character, homology_profile, kernel_image_binomial_check,
                               predicted_ranks, twist_character_check)
from weylres.symfunc import SymPolyInt, elementary_e, power_substitute


def test_k_4_1_example():
    c = build_complex("K", 4, 1, 2, 2)
    assert c.shapes == [(4, 0), (3, 1), (2, 2)]
    assert c.term_dims() == [5, 3, 1]
    prof = homology_profile(c)
    assert prof.dims == [3, 0, 0] and prof.euler == 5 - 3 + 1


def test_l_4_1_example():
    c = build_complex("L", 4, 1, 3, 2)
    assert c.shapes == [(4, 0), (3, 1), (2, 2)]
    prof = homology_profile(c)
    assert prof.dims == [0, 0, 3] and prof.concentrated_in(2)
    assert homology_character(c, 2) == power_substitute(elementary_e(2, 3), 2)


def test_n_7_example():
    c = build_complex("N", 7, 2, 2, 2)
    assert c.shapes == [(6, 1), (4, 3)] and c.length == 1


def test_m_5_example():
    c = build_complex("M", 5, 2, 2, 2)
    assert c.shapes == [(5, 0), (3, 2)]


@pytest.mark.parametrize("args", [("K", 6, 2, 2, 3), ("K", 12, 4, 2, 5)])
def test_congruence_violations_are_rejected(args):
    # 6 - 2 + 1 = 5 and 12 - 4 + 1 = 9 miss the congruence: the raising maps do not descend
    with pytest.raises(ComplexParameterError):
        build_complex(*args)


def test_k_7_2_p3():
    c = build_complex("K", 7, 2, 2, 3)
    assert c.shapes == [(7, 0), (5, 2), (4, 3)]
    assert homology_profile(c).concentrated_in(0)
    assert kernel_image_binomial_check(c)


@pytest.mark.parametrize("args", [("K", 4, 1, 2, 2), ("K", 13, 4, 2, 5), ("K", 7, 2, 2, 3)])
def test_binomial_rank_examples(args):
    assert kernel_image_binomial_check(build_complex(*args))


def test_h0_characters():
    c = build_complex("K", 4, 1, 2, 2)
    assert homology_character(c, 0) == SymPolyInt(2, {(4, 0): 1, (2, 2): 1, (0, 4): 1})
    c = build_complex("K", 2, 1, 1, 2)
    assert homology_character(c, 0) == SymPolyInt(1, {(2,): 1})
    assert twist_character_check(c)


@pytest.mark.parametrize("bad, needle", [
    (("K", 5, 1, 2, 2), "r - d + 1 = 5 is not 0 mod 2"),
    (("K", 4, 0, 2, 2), "0 < d < p"),
    (("K", 4, 1, 2, 4), "prime"),
    (("M", 7, 2, 2, 2), "1 mod 4"),
    (("N", 5, 2, 2, 2), "3 mod 4"),
    (("M", 5, 2, 2, 3), "p = 2"),
    (("N", 7, 1, 2, 2), "d = 2"),
    (("X", 4, 1, 2, 2), "family"),
])
def test_parameter_contract(bad, needle):
    with pytest.raises(ValueError, match=re.escape(needle)):
        build_complex(*bad)


def test_parameter_error_type():
    with pytest.raises(ComplexParameterError):
        family_shapes("K", -1, 1, 2)


def test_length_is_floor_r_over_p():
    for p in (2, 3, 5):
        for r, d in valid_kl(p, 25):
            assert len(family_shapes("K", r, d, p)) - 1 == r // p


def _all_params(rmax, nmax):
    for p in (2, 3, 5):
        for r, d in valid_kl(p, rmax):
            for n in range(1, nmax + 1):
                yield "K", r, d, n, p
                yield "L", r, d, n, p
    for r in range(1, rmax + 1, 2):
        yield ("M" if r % 4 == 1 else "N"), r, 2, 2, 2


@pytest.mark.parametrize("args", list(_all_params(16, 4)))
def test_d_squared_and_euler(args):
    c = build_complex(*args, check=False)
    c.check()
    prof = homology_profile(c)
    summed = [sum(v[i] for v in content_profiles(c).values()) for i in range(c.length + 1)]
    assert summed == prof.dims


@pytest.mark.parametrize("p", [3, 5])
def test_n2_predicted_ranks_cover_every_differential(p):
    c = build_complex("K", 3 * p - 2, p - 1, 2, p)
    assert c.length == 2
    assert [i for i, _, _ in predicted_ranks(c)] == list(range(1, c.length + 1))


def test_binomial_check_needs_n2():
    with pytest.raises(ValueError):
        predicted_ranks(build_complex("K", 4, 1, 3, 2))


def test_n3_p3_is_not_always_concentrated():
    # reported only: the concentration statement covers p = 2 or n = 2
    profiles = [homology_profile(build_complex("K", r, d, 3, 3)).dims for r, d in valid_kl(3, 8)]
    assert any(sum(x for x in dims[1:]) for dims in profiles)


def test_schur_sum_identity_independently():
    for n in range(13):
        for k in range(n + 1):
            lhs = 2 * sum((-1) ** j * comb(n, k + j) * comb(n, k - j) for j in range(k + 1))
            assert lhs == comb(n, k) + comb(n, k) ** 2


def test_complexes_sweep_passes():
    claims = complexes_suite()
    assert [c.statement_id for c in claims if not c.passed] == []
