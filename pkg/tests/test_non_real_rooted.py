import math
import pytest

from genuspoly.polynomial import Polynomial
from genuspoly.analysis import analyze
from genuspoly.catalog import named_graph
from genuspoly.embedding import genus_distribution
from genuspoly.roots import CONE_VIOLATION, REAL, quadratic_is_log_concave

# graph, coefficients, complex root (re, im), |Im|/sqrt(3), quadratic factor (b, c)
CASES = [
    ('G(8,2)', (2, 84, 2074, 23536, 39840),
     (-0.01999390944, 0.03710524561), 0.02142272354, (0.03998781888, 0.001776555666)),
    ('G18', (2, 94, 2480, 39472, 165824, 54272),
     (-0.01496753672, 0.038599441), 0.022285398, (0.02993507344, 0.001713944001)),
    ('G(10,2)', (2, 100, 2494, 47540, 411400, 587040),
     (-0.00896278346, 0.04522812336), 0.0261124692, (0.01792556692, 0.00212591463)),
    ('G20', (2, 104, 2964, 56602, 431656, 557248),
     (-0.011539073495, 0.0389911954), 0.0225115771616, (0.023078147, 0.001653463536)),
    ('G22', (2, 114, 3550, 76726, 851384, 2570304, 692224),
     (-0.0085736029, 0.03859372887), 0.02228209975, (0.0171472058, 0.001562982575)),
    ('G(12,2)', (2, 120, 3508, 75088, 1144338, 7244496, 8309664),
     (-0.002315938876, 0.04585954927), 0.02647702312, (0.004631877752, 0.002108461832)),
]

@pytest.mark.parametrize('name,coeffs,pair,gap,quad', CASES)
def test_polynomial_analysis(name, coeffs, pair, gap, quad):

    p = Polynomial(coeffs)
    assert sum(coeffs) == 2 ** (len(named_graph(name).edges) * 2 // 3)
    assert coeffs[0] == 2

    r = analyze(p)
    assert r.log_concave
    assert not r.internal_zeros
    assert not r.real_rooted
    assert r.real_root_count == p.degree - 2

    pairs = [z for z in r.roots if not z.is_real()]
    assert len(pairs) == 1
    z = pairs[0]
    assert z.re == pytest.approx(pair[0], abs=1e-8)
    assert z.im == pytest.approx(pair[1], abs=1e-8)
    assert z.cone_gap() == pytest.approx(gap, abs=1e-8)
    assert abs(z.re) < z.im / math.sqrt(3)

    assert r.cone_violations == [z]
    assert all(c == REAL for x, c in zip(r.roots, r.root_classes) if x.is_real())
    assert all(x.re < 0 for x in r.roots)

    assert len(r.non_lc_quadratics) == 1
    b, c = r.non_lc_quadratics[0]
    assert b == pytest.approx(quad[0], abs=1e-8)
    assert c == pytest.approx(quad[1], abs=1e-8)
    assert not quadratic_is_log_concave(b, c)

    expanded = r.factorization.expand()
    for got, want in zip(expanded, coeffs):
        assert got == pytest.approx(want, rel=1e-8)

def test_gp_8_2_real_roots():
    r = analyze(Polynomial(CASES[0][1]))
    reals = [z.re for z in r.roots if z.is_real()]
    assert reals == [pytest.approx(-0.0572570083, abs=1e-8), pytest.approx(-0.4935182253, abs=1e-8)]

@pytest.mark.parametrize('name,coeffs', [(t[0], t[1]) for t in CASES[:4]])
def test_enumerated_polynomials(name, coeffs):
    assert genus_distribution(named_graph(name)) == coeffs

@pytest.mark.slow
@pytest.mark.parametrize('name,coeffs', [(t[0], t[1]) for t in CASES[4:]])
def test_enumerated_polynomials_large(name, coeffs):
    assert genus_distribution(named_graph(name), workers=2) == coeffs
