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

Numerical roots of exact polynomials, their cone classes and the real
factorization into linear and irreducible quadratic factors.

"""

import math
import numpy as np
from .err import *
from .polynomial import square_free_decomposition

REAL = 'real'
IN_CONE = 'in_cone'
CONE_VIOLATION = 'cone_violation'
POSITIVE_REAL_PART = 'positive_real_part'

SQRT3 = math.sqrt(3.0)
EPS = np.finfo(float).eps

class ComplexRoot():

    """ a root, or the upper member of a conjugate pair (im > 0) """

    def __init__(self, re, im=0.0, residual=0.0, multiplicity=1):
        self.re = float(re)
        self.im = float(im)
        self.residual = float(residual)
        self.multiplicity = multiplicity

    @property
    def value(self):
        return complex(self.re, self.im)

    def is_real(self):
        return self.im == 0.0

    def cone_gap(self):
        """ |Im|/sqrt(3), the least |Re| a pair needs to sit in the cone """
        return abs(self.im) / SQRT3

    def __repr__(self):
        if self.is_real():
            return '<ComplexRoot %.10g x%d>' % (self.re, self.multiplicity)
        return '<ComplexRoot %.10g+-%.10gi x%d>' % (self.re, self.im, self.multiplicity)

    def format(self):
        if self.is_real():
            return '%.10g' % self.re
        return '%.10g+-%.10gi' % (self.re, self.im)

def _aberth(c, max_sweeps):

    """ all roots of the float polynomial c (highest power first) """

    n = len(c) - 1
    if n == 1:
        return np.array([complex(-c[1] / c[0])])

    monic = c / c[0]
    R = 1.0 + np.max(np.abs(monic[1:]))
    z = R * np.exp(1j * (2 * np.pi * np.arange(n) / n + 0.4))
    dc = np.polyder(c)
    active = np.ones(n, dtype=bool)

    for _ in range(max_sweeps):
        pz = np.polyval(c, z)
        dz = np.polyval(dc, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        s = np.sum(1.0 / diff, axis=1)
        with np.errstate(divide='ignore', invalid='ignore'):
            w = pz / (dz - pz * s)
        stuck = ~np.isfinite(w) & active
        w = np.where(stuck, 0.0, w)
        w[~active] = 0.0
        z = z - w
        ## nudge points sitting on a pole of the correction
        z[stuck] *= 1.0 + 1e-3j
        active &= (np.abs(w) > 4 * EPS * np.abs(z)) | stuck
        if not active.any():
            break
    return z

def _relative_residuals(c, z):
    return np.abs(np.polyval(c, z)) / np.maximum(np.polyval(np.abs(c), np.abs(z)), np.finfo(float).tiny)

def _pair_conjugates(z, real_threshold):

    reals = []
    upper = []
    lower = []
    for r in z:
        if abs(r.imag) <= real_threshold * max(1.0, abs(r)):
            reals.append(r.real)
        elif r.imag > 0:
            upper.append(r)
        else:
            lower.append(r)
    if len(upper) != len(lower):
        raise RootConvergenceError('%d roots above the real axis but %d below' % (len(upper), len(lower)))

    pairs = []
    for u in sorted(upper, key=lambda r: (r.real, r.imag)):
        j = min(range(len(lower)), key=lambda j: abs(lower[j] - u.conjugate()))
        l = lower.pop(j)
        re = (u.real + l.real) / 2
        im = (u.imag - l.imag) / 2
        if abs(re) <= 8 * EPS * im:
            re = 0.0
        pairs.append(complex(re, im))
    return reals, pairs

def find_roots(p, tol=1e-12, max_sweeps=1000, real_threshold=1e-9):

    """ roots of p with multiplicities, real roots descending then pairs by (re, im)

    Each exact square-free factor is solved on its own, so a repeated root
    comes back once with its exact multiplicity.
    """

    _, factors = square_free_decomposition(p)

    real_roots = []
    pair_roots = []
    for q, mult in factors:
        coeffs = list(q.coeffs)
        if coeffs[0] == 0:
            ## square-free, so x divides q exactly once
            real_roots.append(ComplexRoot(0.0, 0.0, 0.0, mult))
            coeffs = coeffs[1:]
        if len(coeffs) < 2:
            continue

        c = np.array([float(a) for a in reversed(coeffs)])
        z = _aberth(c, max_sweeps)
        res = _relative_residuals(c, z)
        if (res > tol).any() or not np.isfinite(z).all():
            raise RootConvergenceError('root iteration on a degree %d factor stopped at relative residual %.3g'
                                       % (len(coeffs) - 1, np.nanmax(res)), res)

        reals, pairs = _pair_conjugates(z, real_threshold)
        for r in reals:
            real_roots.append(ComplexRoot(r, 0.0, _relative_residuals(c, np.array([r]))[0], mult))
        for r in pairs:
            pair_roots.append(ComplexRoot(r.real, r.imag, _relative_residuals(c, np.array([r]))[0], mult))

    real_roots.sort(key=lambda r: -r.re)
    pair_roots.sort(key=lambda r: (r.re, r.im))
    return real_roots + pair_roots

def _is_real(z, real_threshold):
    return abs(z.imag) <= real_threshold * max(1.0, abs(z))

def on_cone_boundary(z, tol=1e-9, real_threshold=1e-9):

    z = z.value if isinstance(z, ComplexRoot) else complex(z)
    if _is_real(z, real_threshold) or z.real > 0:
        return False
    return abs(abs(z.real) - abs(z.imag) / SQRT3) <= tol

def cone_classify(z, tol=1e-9, real_threshold=1e-9):

    """ REAL, IN_CONE (closed, boundary within tol included), CONE_VIOLATION or POSITIVE_REAL_PART

    A value with |Im z| <= real_threshold * max(1, |z|) counts as real.
    """

    z = z.value if isinstance(z, ComplexRoot) else complex(z)
    if _is_real(z, real_threshold):
        return REAL
    if z.real > 0:
        return POSITIVE_REAL_PART
    if abs(z.real) >= abs(z.imag) / SQRT3 or on_cone_boundary(z, tol, real_threshold):
        return IN_CONE
    return CONE_VIOLATION

def quadratic_is_log_concave(b, c):

    """ is the coefficient sequence (c, b, 1) of x^2 + bx + c log-concave """

    if not (b >= 0 and c > 0 and b*b - 4*c < 0):
        raise PreconditionError('x^2+%gx+%g is not an irreducible quadratic with b >= 0, c > 0' % (b, c))
    return b*b >= c

class RealFactorization():

    """ leading * prod (x - r) * prod (x^2 + bx + c) """

    def __init__(self, leading, linear_roots, quadratics):
        self.leading = leading
        self.linear_roots = list(linear_roots)
        self.quadratics = list(quadratics)

    @property
    def degree(self):
        return len(self.linear_roots) + 2 * len(self.quadratics)

    def expand(self):
        """ float coefficients, constant term first """
        e = np.array([float(self.leading)])
        for r in self.linear_roots:
            e = np.convolve(e, [1.0, -r])
        for b, c in self.quadratics:
            e = np.convolve(e, [1.0, b, c])
        return e[::-1]

    def non_log_concave(self):
        return [(b, c) for b, c in self.quadratics if b >= 0 and b*b < c]

def real_factorization(p, roots=None, tol=1e-8):

    if roots is None:
        roots = find_roots(p)

    linear = []
    quadratics = []
    for r in roots:
        for _ in range(r.multiplicity):
            if r.is_real():
                linear.append(r.re)
            else:
                quadratics.append((-2 * r.re, r.re * r.re + r.im * r.im))

    f = RealFactorization(p.leading, linear, quadratics)
    if f.degree != p.degree:
        raise FactorizationError('factors have degree %d, polynomial has degree %d' % (f.degree, p.degree))

    ## each coefficient against its own size, zero coefficients against the largest
    expanded = f.expand()
    target = np.array([float(a) for a in p.coeffs])
    scale = np.where(target != 0, np.abs(target), np.max(np.abs(target)))
    errs = np.abs(expanded - target) / scale
    k = int(np.argmax(errs))
    err = float(errs[k])
    if err > tol:
        raise FactorizationError('factorization reproduces coefficient %d to relative error %.3g' % (k, err), err)
    return f
