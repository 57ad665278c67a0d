from fractions import Fraction
import random
import pytest

from genuspoly.err import PreconditionError, InvalidInputError
from genuspoly.polynomial import (Polynomial, is_log_concave, has_internal_zeros, multiply,
                                  square_free_decomposition, sturm_chain, real_root_count,
                                  is_real_rooted)

def P(*coeffs):
    return Polynomial(coeffs)

def test_trim_and_degree():
    p = P(1, 2, 0, 0)
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert P().degree == -1
    assert P(0, 0).is_zero()

def test_fraction_coefficients_normalize():
    p = Polynomial([Fraction(4, 2), Fraction(1, 3)])
    assert p.coeffs == (2, Fraction(1, 3))
    assert isinstance(p.coeffs[0], int)

def test_display():
    assert P(2, 84, 2074, 23536, 39840).display() == '39840x^4+23536x^3+2074x^2+84x+2'
    assert P(2, 14).display() == '14x+2'
    assert P(0, 1).display() == 'x'
    assert P(-1, 0, -1).display() == '-x^2-1'
    assert P(1, 0, 0, 1).display() == 'x^3+1'
    assert P().display() == '0'
    assert P(Fraction(1, 2), Fraction(3, 2)).display() == '(3/2)x+1/2'

def test_parse_coeffs():
    assert Polynomial.parse_coeffs('1,2,1') == P(1, 2, 1)
    assert Polynomial.parse_coeffs(' 2, 14 ') == P(2, 14)
    assert Polynomial.parse_coeffs('1/2,1').coeffs == (Fraction(1, 2), 1)
    with pytest.raises(InvalidInputError):
        Polynomial.parse_coeffs('1,x')

def test_evaluate():
    assert P(1, 2, 1)(3) == 16
    assert P(1, 2, 1)(Fraction(-1)) == 0

def test_log_concave():
    assert is_log_concave(P(1, 2, 1)) == (True, None)
    assert is_log_concave(P(2, 84, 2074, 23536, 39840)) == (True, None)
    assert is_log_concave(P(1, 1, 4)) == (False, 1)
    assert is_log_concave(P(1, 0, 1)) == (False, 1)
    assert is_log_concave(P(1, 3, 3, 5, 1)) == (False, 2)
    assert is_log_concave(P(7)) == (True, None)

def test_internal_zeros():
    assert has_internal_zeros(P(1, 0, 1))
    assert not has_internal_zeros(P(0, 0, 1, 2))
    assert not has_internal_zeros(P(1, 2, 3))
    assert not has_internal_zeros(P())

def test_multiply():
    assert multiply(P(1, 1), P(1, 1)) == P(1, 2, 1)
    assert P(2, 14) * P(1, 0, 1) == P(2, 14, 2, 14)
    assert multiply(P(), P(1, 2)).is_zero()

def _random_lc(rng):
    """ positive sequence with non-increasing ratios, hence log-concave """
    n = rng.randint(0, 6)
    ratios = sorted((Fraction(rng.randint(1, 40), rng.randint(1, 40)) for _ in range(n)), reverse=True)
    a = [Fraction(rng.randint(1, 30))]
    for r in ratios:
        a.append(a[-1] * r)
    return Polynomial(a)

def test_product_of_log_concave_is_log_concave():
    rng = random.Random(20240611)
    for _ in range(10000):
        a = _random_lc(rng)
        b = _random_lc(rng)
        assert is_log_concave(a)[0] and is_log_concave(b)[0]
        assert is_log_concave(multiply(a, b))[0]

def test_square_free_decomposition():
    # 2 (x+1)^2 (x-3)
    p = P(1, 2, 1) * P(-3, 1) * P(2)
    content, factors = square_free_decomposition(p)
    assert content == 2
    assert sorted((q.coeffs, i) for q, i in factors) == [((-3, 1), 1), ((1, 1), 2)]

def test_square_free_decomposition_fractions():
    p = Polynomial([Fraction(1, 2), 1, Fraction(1, 2)])
    content, factors = square_free_decomposition(p)
    assert content == Fraction(1, 2)
    assert [(q.coeffs, i) for q, i in factors] == [((1, 1), 2)]

def test_square_free_decomposition_zero():
    with pytest.raises(PreconditionError):
        square_free_decomposition(P())

def test_sturm_chain():
    chain = sturm_chain(P(-2, 0, 1))
    assert [q.all_coeffs() for q in chain] == [[1, 0, -2], [2, 0], [1]]
    chain = sturm_chain(P(1, 0, 1))
    assert [q.all_coeffs() for q in chain] == [[1, 0, 1], [2, 0], [-1]]

def test_real_root_count():
    assert real_root_count(P(-2, 0, 1)) == 2
    assert real_root_count(P(1, 0, 1)) == 0
    assert real_root_count(P(1, 2, 1) * P(-3, 1)) == 2
    assert real_root_count(P(5)) == 0
    assert real_root_count(P(0, -1, 0, 1)) == 3
    assert real_root_count(P(2, 84, 2074, 23536, 39840)) == 2

def test_is_real_rooted():
    assert is_real_rooted(P(2, 14))
    assert is_real_rooted(P(1, 2, 1))
    assert is_real_rooted(P(1, 2, 1) * P(1, 2, 1) * P(0, 1))
    assert not is_real_rooted(P(1, 0, 1))
    assert not is_real_rooted(P(2, 84, 2074, 23536, 39840))
    assert is_real_rooted(P(3))
