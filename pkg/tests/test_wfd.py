from fractions import Fraction

import pytest

from weylres.complexes import build_complex
from weylres.linalg import FpMatrix
from weylres.checks import wfd_suite
from weylres.complexes import ChainComplexRec
from weylres.modules import build_module
from weylres.wfd import (weyl_factor_check, lower_bound_witness, simple_module_bound, upper_bound_simple,
                         upper_bound_twist, wfd_report, wfd_value, witness_params)


def test_wfd_value_examples():
    assert wfd_value(2, 10) == 5
    assert wfd_value(2, 11) == 2
    assert wfd_value(3, 11) == 3
    assert [wfd_value(2, r) for r in range(13)] == [0, 0, 1, 0, 2, 1, 3, 1, 4, 2, 5, 2, 6]
    assert [wfd_value(3, r) for r in range(10)] == [0, 0, 0, 1, 1, 1, 2, 2, 2, 3]
    assert wfd_value(5, 7) == 1


def test_wfd_value_contract():
    with pytest.raises(ValueError):
        wfd_value(4, 3)
    with pytest.raises(ValueError):
        wfd_value(2, -1)


def test_upper_bound_twist():
    assert upper_bound_twist(2, 3, 1) == 3
    assert upper_bound_twist(3, 2, 2) == 6
    assert upper_bound_twist(7, 0, 4) == 0


def digit_bound_oracle(p, r):
    # enumerate c = a - b directly and sum digit contributions with exact fractions
    best = 0
    for b in range(r // 2 + 1):
        c = r - 2 * b
        total = Fraction(0)
        k, i = c, 0
        while k:
            k, x = divmod(k, p)
            if p == 2 and r % 2:
                if x and i >= 1:
                    total += Fraction(2 ** i, 4) if i >= 2 else 0
            elif i >= 1:
                total += x * p ** (i - 1)
            i += 1
        best = max(best, int(total))
    return best


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_upper_bound_against_oracle(p):
    for r in range(41):
        assert upper_bound_simple(p, r) == digit_bound_oracle(p, r)


def test_upper_bound_examples():
    assert upper_bound_simple(3, 11) == 3
    assert upper_bound_simple(2, 10) == 5
    assert upper_bound_simple(2, 11) == 2


def test_fractional_digit_cases_are_reported():
    sb = simple_module_bound(2, 7, 2)
    assert sb.c == 3 and sb.bound == 0 and sb.exact == Fraction(1, 2)


def test_witness_examples():
    w = lower_bound_witness(2, 10)
    assert (w.family, w.r, w.d, w.length) == ("K", 10, 1, 5) and w.factor_holds and w.concentrated
    w = lower_bound_witness(2, 13)
    assert (w.family, w.length) == ("M", 3)
    w = lower_bound_witness(5, 12)
    assert (w.family, w.r, w.d, w.shift, w.length) == ("K", 10, 1, 1, 2)
    assert witness_params(2, 7) == ("N", 7, 2, 0)
    assert witness_params(3, 5) == ("K", 3, 1, 1)
    assert witness_params(3, 4) == ("K", 4, 2, 0)


def test_factor_check_examples():
    assert weyl_factor_check(build_complex("K", 4, 1, 2, 2))
    for r in range(1, 22, 2):
        assert weyl_factor_check(build_complex("M" if r % 4 == 1 else "N", r, 2, 2, 2))


def test_factor_check_negative_control():
    m = build_module("divided", (3, 1), 2, 2)
    fake = ChainComplexRec("K", {"r": 4, "d": 1, "n": 2, "p": 2}, [m, m],
                           [FpMatrix.zeros(0, m.dim, 2), FpMatrix.zeros(m.dim, m.dim, 2)],
                           [(3, 1), (3, 1)], [0, 0])
    assert not weyl_factor_check(fake)


def test_report_as_dict():
    d = wfd_report(3, 7).as_dict()
    assert d["agree"] and d["theorem_value"] == d["witness_length"] == d["upper_bound"] == 2


def test_wfd_sweep_passes():
    claims = wfd_suite()
    assert [c.statement_id for c in claims if not c.passed] == []
