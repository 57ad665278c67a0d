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

import re
from .err import *
from .graph import Graph
from .graph6 import parse_graph6

def generalized_petersen(n, k):

    """ G(n,k): outer cycle u_i = i, spokes to v_i = n+i, inner v_i ~ v_(i+k) """

    if n < 3:
        raise ParameterDomainError('G(n,k) needs n >= 3, got n=%d' % n)
    if not (1 <= k and 2*k < n):
        raise ParameterDomainError('G(n,k) needs 1 <= k < n/2, got n=%d k=%d' % (n, k))

    edges = [(i, (i+1) % n) for i in range(n)]
    edges += [(i, n+i) for i in range(n)]
    edges += [(n+i, n+(i+k) % n) for i in range(n)]
    return Graph(2*n, edges, name='G(%d,%d)' % (n, k))

## edge lists of the cubic graphs drawn without a closed form
_EDGES = {
    'G18': (18, '0-1 1-4 4-3 3-2 2-0 4-5 5-6 6-7 7-3 2-8 8-9 9-7 6-11 11-10 10-9 '
                '8-12 12-10 14-13 13-1 0-14 14-17 17-12 17-16 16-11 16-15 15-5 15-13'),
    ## drawn with labels 17..21 in place of 15..19
    'G20': (20, '0-1 1-3 3-4 4-2 2-0 2-5 5-7 7-6 6-4 3-8 8-9 9-6 1-10 10-11 11-8 '
                '11-12 12-13 13-9 10-14 14-12 15-0 5-16 17-14 17-15 15-16 7-18 '
                '16-18 17-19 19-13 19-18'),
    'G22': (22, '0-1 1-3 3-4 4-2 2-0 2-5 5-7 7-6 6-4 3-8 8-9 9-6 1-10 10-11 11-8 '
                '11-12 12-13 13-9 10-14 14-12 15-0 15-16 16-5 17-15 16-18 19-14 '
                '19-17 17-18 7-20 18-20 19-21 21-13 21-20'),
    'FIG1A': (10, '1-0 0-4 4-3 3-2 2-1 1-6 6-5 5-0 5-9 9-4 9-8 8-3 8-7 7-2 7-6'),
    'FIG1B': (16, '2-0 0-1 1-7 7-6 6-5 5-4 4-3 3-2 0-8 8-15 15-2 14-15 14-3 14-13 '
                  '13-4 12-13 12-5 12-11 11-6 11-10 10-7 10-9 9-1 9-8'),
    'K4': (4, '0-1 0-2 0-3 1-2 1-3 2-3'),
}

_ALIASES = {
    'PETERSEN': (5, 2),
    'CUBE': (4, 1),
}

## older spellings of the two 10 and 16 vertex graphs
_RENAMED = {
    'H10': 'FIG1A',
    'H16': 'FIG1B',
}

_gp_pattern = re.compile(r'^GP?\(\s*(\d+)\s*,\s*(\d+)\s*\)$')

def _from_edge_string(name, n, s):

    edges = [tuple(int(x) for x in e.split('-')) for e in s.split()]
    g = Graph(n, edges, name=name)
    if not g.is_regular(3):
        raise InvariantViolationError('catalog graph %s is not 3-regular' % name)
    return g

def named_graph(name):

    key = name.strip().upper()
    key = _RENAMED.get(key, key)
    m = _gp_pattern.match(key.replace(' ', ''))
    if m:
        return generalized_petersen(int(m.group(1)), int(m.group(2)))
    if key in _ALIASES:
        g = generalized_petersen(*_ALIASES[key])
        g.name = key
        return g
    if key in _EDGES:
        n, s = _EDGES[key]
        return _from_edge_string(key, n, s)

    raise UnknownGraphError('unknown graph %s, choose from %s or G(n,k)'
                            % (name, ', '.join(named_graphs())))

def named_graphs():
    return sorted(_EDGES) + sorted(_ALIASES)

## the six graphs whose genus polynomials are worked out in full
NON_REAL_ROOTED = ['G(8,2)', 'G18', 'G(10,2)', 'G20', 'G22', 'G(12,2)']

def graph_from_args(args):

    """ the graph named by --g6, --gp or --named """

    if getattr(args, 'g6', None):
        return parse_graph6(args.g6)
    if getattr(args, 'gp', None):
        return generalized_petersen(*args.gp)
    if getattr(args, 'named', None):
        return named_graph(args.named)
    raise InvalidInputError('give a graph with --g6, --gp or --named')

def main_generate(args):

    if args.all_named:
        graphs = [named_graph(name) for name in named_graphs()]
    else:
        graphs = [graph_from_args(args)]

    lines = [g.to_graph6() for g in graphs]
    for line in lines:
        print(line)
