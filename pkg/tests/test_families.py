import math

import pytest

from cyclecount.engine import cycle_polynomial
from cyclecount.errors import ParameterError
from cyclecount.families import (
    broder_recurrence_table,
    closed_form_coefficient,
    closed_form_polynomial,
    composite_identity_polynomial,
    consecutive_cycle_recurrence,
    kaplansky_circular,
    path_restricted_expanded,
    path_restricted_recurrence,
    tadpole_coefficient_expansion,
    totals_claim,
)
from cyclecount.graph import family
from cyclecount.oracle import brute_force_polynomial
from cyclecount.poly import Poly, path_fib, rising_factorial


def test_coefficient_examples():
    assert closed_form_coefficient("path", 5, 3, 2) == 1
    assert closed_form_coefficient("cycle", 4, 2, 2) == 1
    assert brute_force_polynomial(family("cycle:4", r=2))[2] == 1
    assert closed_form_coefficient("complete", 4, 3, 1) == 6


def test_cycle_r1_dispatches_to_unrestricted_formula():
    assert [closed_form_coefficient("cycle", 6, k, 1) for k in range(1, 7)] == [2, 0, 2, 9, 6, 1]


def test_out_of_domain():
    with pytest.raises(ParameterError):
        closed_form_coefficient("cycle", 2, 1, 1)
    with pytest.raises(ParameterError):
        closed_form_coefficient("nope", 4, 1, 1)
    with pytest.raises(ParameterError):
        closed_form_polynomial("nope", 4, 1)
    with pytest.raises(ParameterError):
        totals_claim("nope", 4, 1)
    with pytest.raises(ParameterError):
        composite_identity_polynomial("tadpole", 3)
    with pytest.raises(ParameterError):
        closed_form_polynomial("complement_path", 4, 1, "sideways")


def test_polynomial_examples():
    p3c = closed_form_polynomial("complement_path", 3, 1, "corrected")
    assert p3c == Poly([0, 0, 1, 1]) == cycle_polynomial(family("complement_path:3", r=1))
    assert closed_form_polynomial("star", 4, 1) == Poly([0, 0, 0, 3, 1])
    assert closed_form_polynomial("cycle_consecutive", 6, 2) == Poly([0, 0, 0, 0, 3, 4, 1])


def test_composite_examples():
    truth = brute_force_polynomial(family("tadpole:3,1"))
    assert composite_identity_polynomial("tadpole", 3, 1, variant="full") == truth == Poly([0, 0, 3, 4, 1])
    assert composite_identity_polynomial("tadpole", 3, 1, variant="matching") == Poly([0, 0, 1, 4, 1])
    assert composite_identity_polynomial("barbell", 2) == Poly([0, 0, 1, 3, 1]) == path_fib(4)
    assert composite_identity_polynomial("lollipop", 3, 1) == Poly([0, 0, 3, 4, 1]) == truth


def test_totals_examples():
    assert totals_claim("complete", 5, 2) == 60 == math.factorial(5) // math.factorial(2)
    assert totals_claim("path", 5, 2) == 3
    assert cycle_polynomial(family("path:5", r=2))(1) == 5
    assert totals_claim("path", 5, 2, "corrected") == 5
    assert totals_claim("star", 5, 1) == 5 == cycle_polynomial(family("star:5", r=1))(1)
    assert totals_claim("cycle", 4, 1) == 8 and totals_claim("cycle", 4, 1, "corrected") == 9


def test_broder_examples():
    assert broder_recurrence_table(4, 1)[4][2] == 11
    assert broder_recurrence_table(4, 2)[4][3] == 5
    for r in range(1, 5):
        assert broder_recurrence_table(r, r)[r][r] == 1


@pytest.mark.parametrize("r", range(1, 5))
def test_broder_equals_rising_factorial(r):
    table = broder_recurrence_table(20, r)
    for n in range(r, 21):
        assert Poly(table[n]) == rising_factorial(r, n)


def test_consecutive_closed_form_satisfies_its_recurrence():
    for r in range(2, 5):
        for n in range(r + 2, 16):
            lhs = closed_form_polynomial("cycle_consecutive", n, r)
            rhs = (closed_form_polynomial("cycle_consecutive", n - 1, r)
                   + closed_form_polynomial("cycle_consecutive", n - 2, r)).shift(1)
            assert lhs == rhs


def test_consecutive_initial_conditions():
    for r in range(2, 5):
        assert closed_form_polynomial("cycle_consecutive", r, r) == Poly.monomial(r)
        # the stated second initial value x^{r+1} + 2x^r is the true count,
        # while the closed form gives x^{r+1} + x^r there
        stated = Poly.monomial(r + 1) + Poly.monomial(r, 2)
        assert consecutive_cycle_recurrence(r + 1, r) == stated
        assert cycle_polynomial(family(f"cycle:{r + 1}", r=r)) == stated
        assert closed_form_polynomial("cycle_consecutive", r + 1, r) == Poly.monomial(r + 1) + Poly.monomial(r)


def test_path_restricted_forms_agree():
    for r in range(1, 4):
        for n in range(r, 13):
            truth = cycle_polynomial(family(f"path:{n}", r=r))
            assert path_restricted_expanded(n, r) == truth
            assert path_restricted_recurrence(n, r) == truth


def test_kaplansky_counts_matchings():
    assert [kaplansky_circular(6, m) for m in range(4)] == [1, 6, 9, 2]


def test_tadpole_expansion_matches_matching_variant():
    for n in range(3, 7):
        for m in range(1, 5):
            expansion = Poly(tadpole_coefficient_expansion(n, m, k) for k in range(n + m + 1))
            assert expansion == composite_identity_polynomial("tadpole", n, m, variant="matching")


def test_double_star_star_factors():
    # each star factor counts centre-restricted partitions of its own star
    k, m = 4, 3
    no_bridge = (cycle_polynomial(family(f"star:{k}", r=2)) * cycle_polynomial(family(f"star:{m}", r=1)))
    stated = composite_identity_polynomial("double_star", k, m, 2, 1)
    assert stated - no_bridge == Poly([0, 0, 0, 0, 1, 2, 1])
    # both centres restricted: the centre edge can never be a block
    assert cycle_polynomial(family(f"double_star:{k},{m}", r=3)) == no_bridge
