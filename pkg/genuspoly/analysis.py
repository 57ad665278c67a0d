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

"""

import json
from .err import *
from .polynomial import Polynomial, is_log_concave, has_internal_zeros, is_real_rooted, real_root_count
from .roots import (find_roots, cone_classify, on_cone_boundary, real_factorization,
                    quadratic_is_log_concave, CONE_VIOLATION)
from .catalog import graph_from_args
from .embedding import genus_distribution
from .config import read_config, enumeration_options, root_options

def _yn(b):
    return 'true' if b else 'false'

class AnalysisReport():

    def __init__(self, polynomial, log_concave, lc_witness, internal_zeros, real_rooted,
                 real_root_count, roots, root_classes, boundary, factorization):
        self.polynomial = polynomial
        self.log_concave = log_concave
        self.lc_witness = lc_witness
        self.internal_zeros = internal_zeros
        self.real_rooted = real_rooted
        self.real_root_count = real_root_count
        self.roots = roots
        self.root_classes = root_classes
        self.boundary = boundary
        self.factorization = factorization

    @property
    def cone_violations(self):
        return [r for r, c in zip(self.roots, self.root_classes) if c == CONE_VIOLATION]

    @property
    def non_lc_quadratics(self):
        return self.factorization.non_log_concave()

    def to_dict(self):
        return {
            'polynomial': self.polynomial.display(),
            'coefficients': [str(c) for c in self.polynomial.coeffs],
            'log_concave': self.log_concave,
            'lc_witness': self.lc_witness,
            'internal_zeros': self.internal_zeros,
            'real_rooted': self.real_rooted,
            'real_root_count': self.real_root_count,
            'roots': [{'re': r.re, 'im': r.im, 'multiplicity': r.multiplicity,
                       'residual': r.residual, 'class': c, 'on_cone_boundary': b}
                      for r, c, b in zip(self.roots, self.root_classes, self.boundary)],
            'factorization': {
                'leading': str(self.factorization.leading),
                'linear_roots': self.factorization.linear_roots,
                'quadratics': [[b, c] for b, c in self.factorization.quadratics],
            },
            'cone_violations': len(self.cone_violations),
            'non_lc_quadratics': [[b, c] for b, c in self.non_lc_quadratics],
        }

    def format(self):

        lines = ['polynomial\t%s' % self.polynomial.display(),
                 'coefficients\t%s' % ','.join(map(str, self.polynomial.coeffs))]
        if self.log_concave:
            lines.append('log_concave\ttrue')
        else:
            lines.append('log_concave\tfalse\tfails at k=%d' % self.lc_witness)
        lines.append('internal_zeros\t%s' % _yn(self.internal_zeros))
        lines.append('real_rooted\t%s' % _yn(self.real_rooted))
        lines.append('real_root_count\t%d' % self.real_root_count)

        for r, c, b in zip(self.roots, self.root_classes, self.boundary):
            fields = ['root', r.format(), c]
            if not r.is_real():
                fields.append('|Im|/sqrt3=%.10g' % r.cone_gap())
            if r.multiplicity > 1:
                fields.append('multiplicity=%d' % r.multiplicity)
            if b:
                fields.append('on_cone_boundary')
            lines.append('\t'.join(fields))

        for r in self.factorization.linear_roots:
            lines.append('factor\tx%+.10g\tlinear' % (0.0 - r))
        for b, c in self.factorization.quadratics:
            if b >= 0:
                verdict = 'log_concave' if quadratic_is_log_concave(b, c) else 'not_log_concave'
            else:
                verdict = 'negative_middle'
            lines.append('factor\tx^2%+.10gx%+.10g\t%s' % (b, c, verdict))
        return '\n'.join(lines)

def analyze(p, tol=1e-12, max_sweeps=1000, real_threshold=1e-9,
            cone_tol=1e-9, factor_tol=1e-8):

    if p.is_zero():
        raise PreconditionError('cannot analyze the zero polynomial')

    lc, witness = is_log_concave(p)
    real_rooted = is_real_rooted(p)
    roots = find_roots(p, tol, max_sweeps, real_threshold)
    classes = [cone_classify(r, cone_tol, real_threshold) for r in roots]

    numeric_real = all(r.is_real() for r in roots)
    if numeric_real != real_rooted:
        err_warn('exact test says real_rooted=%s, numerical roots disagree; keeping the exact answer'
                 % _yn(real_rooted))

    return AnalysisReport(p, lc, witness, has_internal_zeros(p), real_rooted,
                          real_root_count(p), roots, classes,
                          [on_cone_boundary(r, cone_tol, real_threshold) for r in roots],
                          real_factorization(p, roots, factor_tol))

def main_analyze(args):

    config = read_config()
    if args.coeffs:
        p = Polynomial.parse_coeffs(args.coeffs)
    else:
        g = graph_from_args(args)
        p = genus_distribution(g, **enumeration_options(args, config)).polynomial()

    report = analyze(p, **root_options(args, config))
    if args.format == 'json':
        print(json.dumps(report.to_dict()))
    else:
        print(report.format())
