import pytest

from cyclecount.errors import ParameterError, ResourceGuardError
from cyclecount.graph import family
from cyclecount.oracle import brute_force_polynomial, count_directed_ham_cycles
from cyclecount.poly import Poly, rising_factorial

from conftest import seeded_graph


def test_block_weights():
    k4 = family("complete:4")
    assert count_directed_ham_cycles(k4, [1, 2, 3, 4]) == 6
    assert count_directed_ham_cycles(k4, [1, 2, 3]) == 2
    assert count_directed_ham_cycles(family("cycle:5"), range(1, 6)) == 2
    assert count_directed_ham_cycles(family("path:4"), [1, 2, 3, 4]) == 0
    assert count_directed_ham_cycles(family("path:4"), [1, 2]) == 1
    assert count_directed_ham_cycles(family("path:4"), [1, 3]) == 0
    assert count_directed_ham_cycles(family("path:4"), [3]) == 1
    with pytest.raises(ParameterError):
        count_directed_ham_cycles(k4, [])
    with pytest.raises(ParameterError):
        count_directed_ham_cycles(k4, [5])


def test_restricted_path():
    p = brute_force_polynomial(family("path:5", r=2))
    assert p.dense(6) == [0, 0, 0, 1, 3, 1] and p(1) == 5


def test_wheel_w4():
    assert brute_force_polynomial(family("wheel:4")).dense() == [0, 8, 18, 18, 8, 1]


def test_complete_matches_rising_factorial():
    for n in range(1, 8):
        assert brute_force_polynomial(family(f"complete:{n}")) == rising_factorial(1, n)


def test_empty_and_zero_vertex_graphs():
    assert brute_force_polynomial(family("empty:0")) == Poly.one()
    assert brute_force_polynomial(family("empty:4")) == Poly.monomial(4)


@pytest.mark.parametrize("name", ["path:6", "cycle:6", "wheel:5", "complete:5", "tadpole:4,2"])
def test_r0_equals_r1(name):
    assert brute_force_polynomial(family(name, r=0)) == brute_force_polynomial(family(name, r=1))


def test_guard():
    with pytest.raises(ResourceGuardError):
        brute_force_polynomial(family("path:12"))
    assert brute_force_polynomial(family("path:12"), max_n=12)(1) == 233


def test_workers_give_identical_results():
    for seed in range(3):
        g = seeded_graph(seed, 6, 8)
        for r in (0, 2):
            h = g.with_r(min(r, g.n))
            assert brute_force_polynomial(h, workers=2) == brute_force_polynomial(h)
