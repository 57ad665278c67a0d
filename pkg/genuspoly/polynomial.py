"""
The MIT License

Copyright (c) 2026 the genuspoly authors

Permission is hereby granted, free of charge, to any person obtaining
a copy of this software and associated documentation files (the
"Software"), to deal in the Software without restriction, including
without limitation the rights to use, copy, modify, merge, publish,
distribute, sublicense, and/or sell copies of the Software, and to
permit persons to whom the Software is furnished to do so, subject to
the following conditions:

The above copyright notice and this permission notice shall be
included in all copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS
BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN
ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN
CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.

Exact polynomial arithmetic. Everything here works on integers and
fractions; floating point enters only in roots.py.

"""

from fractions import Fraction
import sympy
from .err import *

x = sympy.Symbol('x')

def _exact(c):
    if isinstance(c, bool):
        raise InvalidInputError('boolean is not a coefficient: %r' % c)
    if isinstance(c, int):
        return c
    f = Fraction(str(c)) if not isinstance(c, (Fraction, float)) else Fraction(c)
    return f.numerator if f.denominator == 1 else f

class Polynomial():

    """ coefficients constant term first, trailing zeros trimmed """

    def __init__(self, coeffs=()):
        cs = [_exact(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def parse_coeffs(cls, text):
        """ "1,2,1" -> 1 + 2x + x^2 """
        try:
            return cls([Fraction(t.strip()) for t in text.split(',') if t.strip()])
        except ValueError:
            raise InvalidInputError('cannot read coefficients from %r' % text)

    @property
    def degree(self):
        """ -1 for the zero polynomial """
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return self.coeffs == Polynomial(other).coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __mul__(self, other):
        return multiply(self, other)

    def __call__(self, z):
        v = 0
        for c in reversed(self.coeffs):
            v = v * z + c
        return v

    def __repr__(self):
        return '<Polynomial %s>' % self.display()

    def display(self):

        if not self.coeffs:
            return '0'

        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = '-' if c < 0 else '+'
            a = abs(c)
            if isinstance(a, Fraction):
                mag = '(%s)' % a if k else str(a)
            elif a == 1 and k:
                mag = ''
            else:
                mag = str(a)
            power = '' if k == 0 else 'x' if k == 1 else 'x^%d' % k
            terms.append(sign + mag + power)

        s = ''.join(terms)
        return s[1:] if s.startswith('+') else s

    def to_sympy(self):
        return sympy.Poly([sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c
                           for c in reversed(self.coeffs)] or [0], x, domain='QQ')

    @classmethod
    def from_sympy(cls, poly):
        return cls([_exact(c) for c in reversed(poly.all_coeffs())])

def _to_zz(p):
    """ primitive integer multiple of p as a sympy Poly over ZZ """
    _, P = p.to_sympy().clear_denoms(convert=True)
    return P

def is_log_concave(p):

    """ (True, None) when a_k^2 >= a_(k-1) a_(k+1) for all inner k, else (False, first failing k) """

    a = p.coeffs
    for k in range(1, len(a) - 1):
        if a[k] * a[k] < a[k-1] * a[k+1]:
            return False, k
    return True, None

def has_internal_zeros(p):

    nz = [k for k, c in enumerate(p.coeffs) if c != 0]
    if not nz:
        return False
    return any(p.coeffs[k] == 0 for k in range(nz[0], nz[-1] + 1))

def multiply(a, b):

    if a.is_zero() or b.is_zero():
        return Polynomial()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coeffs):
            out[i+j] += ca * cb
    return Polynomial(out)

def square_free_decomposition(p):

    """ (content, [(q_i, i)]) with p = content * prod q_i^i, q_i square-free and coprime """

    if p.is_zero():
        raise PreconditionError('the zero polynomial has no square-free decomposition')

    den, P = p.to_sympy().clear_denoms(convert=True)
    c, factors = P.sqf_list()
    content = _exact(Fraction(str(c)) / Fraction(str(den)))
    return content, [(Polynomial.from_sympy(q), i) for q, i in factors]

def sturm_chain(p):

    """ Sturm chain of the square-free part of p over the integers

    Each remainder is an integer pseudo-remainder, sign corrected so it
    agrees with the true negated remainder, and divided by its content.
    """

    if p.is_zero():
        raise PreconditionError('the zero polynomial has no Sturm chain')

    P = _to_zz(p).sqf_part()
    if P.degree() <= 0:
        return [P]

    chain = [P, P.diff(x)]
    while True:
        a, b = chain[-2], chain[-1]
        r = -a.prem(b)
        if r.is_zero:
            break
        delta = a.degree() - b.degree() + 1
        if b.LC() < 0 and delta % 2 == 1:
            r = -r
        c = abs(r.content())
        if c != 1:
            r = r.exquo_ground(c)
        chain.append(r)
    return chain

def _sign_changes(signs):

    signs = [s for s in signs if s != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)

def real_root_count(p):

    """ number of distinct real roots """

    chain = sturm_chain(p)
    at_pos_inf = [sympy.sign(q.LC()) for q in chain]
    at_neg_inf = [sympy.sign(q.LC()) * (-1) ** q.degree() for q in chain]
    return _sign_changes(at_neg_inf) - _sign_changes(at_pos_inf)

def is_real_rooted(p):

    _, factors = square_free_decomposition(p)
    return all(real_root_count(q) == q.degree for q, _ in factors)
