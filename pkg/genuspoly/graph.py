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

Dart-based connected multigraphs and the rotation systems on them.

Edge e owns darts 2e and 2e+1; the twin of dart d is d^1. Each vertex
keeps its darts in the reference rotation, ascending by the neighbor at
the far end, parallel edges and loops broken by dart id.

"""

import math
import networkx as nx
from .err import *

class Dart():

    def __init__(self, id, vertex, twin):
        self.id = id
        self.vertex = vertex
        self.twin = twin

    def __repr__(self):
        return '<Dart %d: vertex %d, twin %d>' % (self.id, self.vertex, self.twin)

    def __eq__(self, other):
        return (self.id == other.id and
                self.vertex == other.vertex and
                self.twin == other.twin)

    def __hash__(self):
        return hash((self.id, self.vertex, self.twin))

class Graph():

    """ connected multigraph, immutable once constructed """

    def __init__(self, n, edges, name=None):

        if n < 1:
            raise InvalidInputError('graph needs at least one vertex, got %d' % n)

        self.n = n
        self.name = name
        self.edges = []
        self.darts = []
        for e, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError('edge %d (%d,%d) has an endpoint outside 0..%d' % (e, u, v, n-1))
            self.edges.append((u, v))
            self.darts.append(Dart(2*e, u, 2*e+1))
            self.darts.append(Dart(2*e+1, v, 2*e))

        self.twins = [d.twin for d in self.darts]
        self.owners = [d.vertex for d in self.darts]

        incident = [[] for _ in range(n)]
        for d in self.darts:
            incident[d.vertex].append((self.owners[d.twin], d.id))
        self.vertex_darts = [tuple(d for _, d in sorted(inc)) for inc in incident]

        self._check()

    @property
    def E(self):
        return len(self.edges)

    def __repr__(self):
        if self.name:
            return '<Graph %s: %d vertices, %d edges>' % (self.name, self.n, self.E)
        return '<Graph: %d vertices, %d edges>' % (self.n, self.E)

    def degree(self, v):
        return len(self.vertex_darts[v])

    def degrees(self):
        return [len(ds) for ds in self.vertex_darts]

    def neighbor(self, d):
        """ vertex at the far end of dart d """
        return self.owners[self.twins[d]]

    def is_regular(self, k):
        return all(len(ds) == k for ds in self.vertex_darts)

    def is_simple(self):
        seen = set()
        for u, v in self.edges:
            if u == v:
                return False
            key = (min(u, v), max(u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def to_networkx(self):
        G = nx.MultiGraph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges)
        return G

    def to_graph6(self):
        from .graph6 import write_graph6
        return write_graph6(self)

    def _check(self):

        for d in self.darts:
            t = self.twins[d.id]
            if t == d.id or self.twins[t] != d.id:
                raise InvariantViolationError('twin of dart %d is not a fixed-point-free involution' % d.id)

        if sum(self.degrees()) != 2 * self.E:
            raise InvariantViolationError('degree sum %d differs from 2E = %d'
                                          % (sum(self.degrees()), 2 * self.E))

        if self.n > 1:
            for v, ds in enumerate(self.vertex_darts):
                if not ds:
                    raise DisconnectedGraphError('vertex %d is isolated' % v)
            if not nx.is_connected(self.to_networkx()):
                raise DisconnectedGraphError('graph with %d vertices is not connected' % self.n)

def cycle_graph(n):
    return Graph(n, [(i, (i+1) % n) for i in range(n)], name='C%d' % n)

class RotationSystem():

    """ one cyclic order of darts per vertex, kept as a successor map """

    def __init__(self, graph, orders):

        if len(orders) != graph.n:
            raise InvalidInputError('rotation has %d vertex orders, graph has %d vertices'
                                    % (len(orders), graph.n))
        self.graph = graph
        self.orders = []
        self.succ = [None] * len(graph.darts)
        for v, order in enumerate(orders):
            order = tuple(order)
            ref = graph.vertex_darts[v]
            if sorted(order) != sorted(ref):
                raise InvalidInputError('order %s at vertex %d does not cover its darts %s'
                                        % (order, v, ref))
            if order:
                i = order.index(ref[0])
                order = order[i:] + order[:i]
            self.orders.append(order)
            for i, d in enumerate(order):
                self.succ[d] = order[(i+1) % len(order)]

    def next(self, d):
        return self.succ[d]

    def mirror(self):
        """ the rotation with every vertex order reversed """
        return RotationSystem(self.graph, [o[:1] + tuple(reversed(o[1:])) for o in self.orders])

    def __eq__(self, other):
        return self.succ == other.succ

    def __hash__(self):
        return hash(tuple(self.succ))

    def __repr__(self):
        return '<RotationSystem %s>' % ' '.join('(%s)' % ','.join(map(str, o)) for o in self.orders)

def rotation_radices(g):
    return [math.factorial(max(k-1, 0)) for k in g.degrees()]

def rotation_count(g):
    return math.prod(rotation_radices(g))

def _unrank(items, rank):
    """ lexicographic unranking; rank 0 is items in their given order """
    items = list(items)
    out = []
    for i in range(len(items), 0, -1):
        j, rank = divmod(rank, math.factorial(i-1))
        out.append(items.pop(j))
    return tuple(out)

def _rank(perm, items):
    items = list(items)
    rank = 0
    for d in perm:
        j = items.index(d)
        rank += j * math.factorial(len(items)-1)
        items.pop(j)
    return rank

def vertex_orders(g, v):
    """ every cyclic order of vertex v in digit order """
    ds = g.vertex_darts[v]
    if not ds:
        return [()]
    return [ds[:1] + _unrank(ds[1:], r) for r in range(math.factorial(len(ds)-1))]

def decode_rotation(g, idx):

    total = rotation_count(g)
    if not 0 <= idx < total:
        raise RotationIndexError('rotation index %d outside [0, %d)' % (idx, total))

    orders = []
    for v, r in enumerate(rotation_radices(g)):
        idx, digit = divmod(idx, r)
        ds = g.vertex_darts[v]
        orders.append(ds[:1] + _unrank(ds[1:], digit) if ds else ())
    return RotationSystem(g, orders)

def encode_rotation(g, rot):

    idx = 0
    scale = 1
    for v, r in enumerate(rotation_radices(g)):
        ds = g.vertex_darts[v]
        if ds:
            idx += _rank(rot.orders[v][1:], ds[1:]) * scale
        scale *= r
    return idx
