import threading

import pytest
import sympy

from oracles import from_sympy, sympy_x_coeff, t, x
from u21poincare.poly import LaurentPoly, SeriesX, T
from u21poincare.symprod import SymProdQuery, binom, macdonald_euler_check, macdonald_poincare


def enumerated(m, g):
    # x^m coefficient as a sum over splits a + b + c = m of the three factors
    terms = {}
    for a in range(min(m, 2 * g) + 1):
        for c in range(m - a + 1):
            e = a + 2 * c
            terms[e] = terms.get(e, 0) + binom(2 * g, a)
    return LaurentPoly.from_dict(terms)


def test_examples():
    assert macdonald_poincare(0, 3) == LaurentPoly.one()
    assert macdonald_poincare(0, 7) == LaurentPoly.one()
    for g in range(2, 7):
        assert macdonald_poincare(1, g) == LaurentPoly(0, [1, 2 * g, 1])
    assert macdonald_poincare(2, 2) == LaurentPoly(0, [1, 4, 7, 4, 1])


def test_query_object():
    assert macdonald_poincare(SymProdQuery(2, 2)) == macdonald_poincare(2, 2)
    with pytest.raises(ValueError):
        SymProdQuery(-1, 2)
    with pytest.raises(ValueError):
        SymProdQuery(0, 1)


@pytest.mark.parametrize("g", range(2, 7))
def test_matches_enumeration(g):
    for m in range(21):
        assert macdonald_poincare(m, g) == enumerated(m, g)


@pytest.mark.parametrize("g,m", [(2, 3), (3, 5), (4, 2)])
def test_matches_sympy(g, m):
    gen = (1 + x * t) ** (2 * g) / ((1 - x) * (1 - x * t**2))
    assert macdonald_poincare(m, g) == from_sympy(sympy_x_coeff(gen, m))


@pytest.mark.parametrize("g", range(2, 7))
def test_series_consistency(g):
    for m in (0, 1, 5, 4 * g - 4):
        s = SeriesX.binom_power(T, 2 * g, m) * SeriesX.geometric(LaurentPoly.one(), m) * SeriesX.geometric(T**2, m)
        assert macdonald_poincare(m, g) == s.coeff(m)


@pytest.mark.parametrize("g", range(2, 7))
def test_palindromic_of_degree_2m(g):
    for m in range(max(4 * g - 4, 20) + 1):
        p = macdonald_poincare(m, g)
        assert p.min_exp == 0 and p.max_exp == 2 * m
        assert p.is_palindromic()
        assert all(c > 0 for c in p.coeffs)


def test_binom():
    assert binom(2, 2) == 1
    assert binom(2, 3) == 0
    assert binom(4, 2) == 6
    assert binom(4, -1) == 0
    assert binom(-2, 1) == 0


def test_euler_check_examples():
    assert macdonald_poincare(2, 2).eval_int(-1) == 1
    assert macdonald_euler_check(2, 2)
    assert macdonald_poincare(3, 2).eval_int(-1) == 0
    assert macdonald_euler_check(3, 2)
    assert macdonald_euler_check(0, 5)


def test_euler_check_sweep():
    for g in range(2, 7):
        for m in range(21):
            assert macdonald_euler_check(m, g), (m, g)


def test_euler_check_against_sympy_at_minus_one():
    # the generating function at t = -1 is (1 - x)^(2g-2) exactly
    for g in range(2, 5):
        gen = (1 - x) ** (2 * g) / ((1 - x) * (1 - x))
        for m in range(8):
            assert macdonald_poincare(m, g).eval_int(-1) == sympy_x_coeff(sympy.cancel(gen), m)


def test_thread_safe_memo():
    results = {}

    def work(g):
        results[g] = [macdonald_poincare(m, g) for m in range(30, -1, -1)]

    threads = [threading.Thread(target=work, args=(g,)) for g in range(7, 12)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    for g, polys in results.items():
        assert polys[::-1] == [enumerated(m, g) for m in range(31)]
