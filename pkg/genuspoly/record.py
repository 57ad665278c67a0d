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

Per-graph survey records, per-order summaries and the report formats.

"""

import csv
import io
import json
from .err import *

FORMATS = ('csv', 'json')

columns = ['graph6', 'n', 'coefficients', 'log_concave', 'real_rooted',
           'cone_violation', 'non_lc_quadratic']

def _yn(b):
    return 'true' if b else 'false'

def print_header(fmt, timings=False):
    """ header line of a report, empty for json-lines """
    if fmt != 'csv':
        return ''
    return ','.join(columns + (['compute_millis'] if timings else [])) + '\n'

class SurveyRecord():

    def __init__(self, graph6, n, distribution, log_concave, real_rooted,
                 cone_violation, non_lc_quadratic, compute_millis=None):

        self.graph6 = graph6
        self.n = n
        self.distribution = distribution
        self.log_concave = log_concave
        self.real_rooted = real_rooted
        self.cone_violation = cone_violation
        self.non_lc_quadratic = non_lc_quadratic
        self.compute_millis = compute_millis

    def __repr__(self):
        return '<SurveyRecord %s n=%d %s>' % (self.graph6, self.n, self.distribution)

    def format_csv(self, timings=False):

        row = [self.graph6, str(self.n), ';'.join(map(str, self.distribution.counts)),
               _yn(self.log_concave), _yn(self.real_rooted),
               _yn(self.cone_violation), _yn(self.non_lc_quadratic)]
        if timings:
            row.append('%d' % self.compute_millis)
        buf = io.StringIO()
        csv.writer(buf, lineterminator='\n').writerow(row)
        return buf.getvalue()

    def format_json(self, timings=False):

        d = {'graph6': self.graph6,
             'n': self.n,
             'coefficients': [str(c) for c in self.distribution.counts],
             'log_concave': self.log_concave,
             'real_rooted': self.real_rooted,
             'cone_violation': self.cone_violation,
             'non_lc_quadratic': self.non_lc_quadratic}
        if timings:
            d['compute_millis'] = self.compute_millis
        return json.dumps(d) + '\n'

    def formats(self, fmt, timings=False):
        if fmt == 'csv':
            return self.format_csv(timings)
        if fmt == 'json':
            return self.format_json(timings)
        raise InvalidInputError('unknown report format %s, choose from %s' % (fmt, ', '.join(FORMATS)))

class OrderCounts():

    def __init__(self, total=0, non_real=0, cone_violation=0, non_log_concave=0):
        self.total = total
        self.non_real = non_real
        self.cone_violation = cone_violation
        self.non_log_concave = non_log_concave

    def as_tuple(self):
        return (self.total, self.non_real, self.cone_violation, self.non_log_concave)

    def __eq__(self, other):
        return self.as_tuple() == other.as_tuple()

    def __repr__(self):
        return '<OrderCounts %d/%d cone=%d nonlc=%d>' % (self.non_real, self.total,
                                                         self.cone_violation, self.non_log_concave)

class SurveySummary():

    """ counts per graph order """

    def __init__(self):
        self.orders = {}

    def add(self, r):

        c = self.orders.setdefault(r.n, OrderCounts())
        c.total += 1
        if not r.real_rooted:
            c.non_real += 1
        if r.cone_violation:
            c.cone_violation += 1
        if not r.log_concave:
            c.non_log_concave += 1
        if c.non_real > c.total or c.cone_violation > c.non_real:
            raise InvariantViolationError('inconsistent counts for order %d: %r' % (r.n, c))

    def __getitem__(self, n):
        return self.orders[n]

    def __iter__(self):
        return iter(sorted(self.orders))

    @property
    def total(self):
        return sum(c.total for c in self.orders.values())

    @property
    def non_log_concave(self):
        return sum(c.non_log_concave for c in self.orders.values())

    @property
    def cone_violation(self):
        return sum(c.cone_violation for c in self.orders.values())

    def format(self):

        """ one "order: non-real / total" line per order, then the flags """

        lines = ['%d: %d / %d' % (n, self.orders[n].non_real, self.orders[n].total) for n in self]
        lines.append('cone_violations\t%d' % self.cone_violation)
        lines.append('non_log_concave\t%d' % self.non_log_concave)
        if self.non_log_concave:
            lines.append('WARNING\t%d genus polynomials are not log-concave' % self.non_log_concave)
        return '\n'.join(lines)

def emit_report(records, fmt, stream, timings=False, header=True):

    if fmt not in FORMATS:
        raise InvalidInputError('unknown report format %s, choose from %s' % (fmt, ', '.join(FORMATS)))
    if header:
        stream.write(print_header(fmt, timings))
    for r in records:
        stream.write(r.formats(fmt, timings))
