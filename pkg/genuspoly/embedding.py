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

Face tracing, the genus of one rotation system, and exhaustive genus
distributions over all rotation systems of a graph.

"""

from concurrent.futures import ProcessPoolExecutor, as_completed
import json
import numpy as np
from tqdm import tqdm
from .err import *
from .graph import rotation_count, rotation_radices, decode_rotation, vertex_orders
from .polynomial import Polynomial
from .catalog import graph_from_args
from .config import read_config, enumeration_options

## the numpy engine keeps rotation indices in int64
PYTHON_LIMIT = 2**62

ENGINES = ('numpy', 'python')

class FaceCollection():

    """ face boundary walks; each face starts at its smallest dart """

    def __init__(self, faces, F=None):
        self.faces = sorted(faces, key=min)
        self.F = len(self.faces) if F is None else F

    def __len__(self):
        return self.F

    def __iter__(self):
        return iter(self.faces)

    def lengths(self):
        return [len(f) for f in self.faces]

    def walk(self, g, i):
        """ vertices visited by face i """
        return tuple(g.owners[d] for d in self.faces[i])

class GenusDistribution():

    def __init__(self, counts=()):
        counts = [int(c) for c in counts]
        while counts and counts[-1] == 0:
            counts.pop()
        self.counts = tuple(counts)

    @property
    def total(self):
        return sum(self.counts)

    @property
    def min_genus(self):
        for k, c in enumerate(self.counts):
            if c:
                return k
        return None

    @property
    def max_genus(self):
        return len(self.counts) - 1 if self.counts else None

    def __getitem__(self, k):
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    def __len__(self):
        return len(self.counts)

    def __add__(self, other):
        m = max(len(self.counts), len(other.counts))
        return GenusDistribution([self[k] + other[k] for k in range(m)])

    def __eq__(self, other):
        if isinstance(other, GenusDistribution):
            return self.counts == other.counts
        return self.counts == tuple(other)

    def __hash__(self):
        return hash(self.counts)

    def __repr__(self):
        return '<GenusDistribution %s>' % ','.join(map(str, self.counts))

    def is_even(self):
        return all(c % 2 == 0 for c in self.counts)

    def polynomial(self):
        return Polynomial(self.counts)

def trace_faces(g, rot):

    nd = 2 * g.E
    seen = [False] * nd
    faces = []
    for d0 in range(nd):
        if seen[d0]:
            continue
        face = []
        d = d0
        while not seen[d]:
            seen[d] = True
            face.append(d)
            d = rot.succ[g.twins[d]]
        if d != d0:
            raise InvariantViolationError('face walk from dart %d closed at dart %d' % (d0, d))
        faces.append(tuple(face))

    ## a lone vertex without edges sits in one face of the sphere
    return FaceCollection(faces, F=1 if nd == 0 else None)

def _genus(V, E, F):

    num = 2 - V + E - F
    if num % 2 or num < 0:
        raise InvariantViolationError('V=%d E=%d F=%d gives Euler numerator %d' % (V, E, F, num))
    return num // 2

def genus_of(g, rot, faces=None):
    if faces is None:
        faces = trace_faces(g, rot)
    return _genus(g.n, g.E, faces.F)

def max_possible_genus(g):
    return (g.E - g.n + 1) // 2

class BatchTables():

    """ per-vertex successor tables indexed by rotation digit """

    def __init__(self, g):
        self.V = g.n
        self.E = g.E
        self.nd = 2 * g.E
        self.twin = np.array(g.twins, dtype=np.int64)
        self.vertices = []
        scale = 1
        for v, r in enumerate(rotation_radices(g)):
            darts = g.vertex_darts[v]
            if r > 1:
                table = np.empty((r, len(darts)), dtype=np.int64)
                for digit, order in enumerate(vertex_orders(g, v)):
                    succ = {order[i]: order[(i+1) % len(order)] for i in range(len(order))}
                    table[digit] = [succ[d] for d in darts]
                self.vertices.append((np.array(darts, dtype=np.int64), table, scale, r))
            elif darts:
                ## a single fixed order: degree 1 or 2
                order = vertex_orders(g, v)[0]
                succ = [order[(i+1) % len(order)] for i in range(len(order))]
                self.vertices.append((np.array(order, dtype=np.int64),
                                      np.array([succ], dtype=np.int64), scale, 1))
            scale *= r
        self.steps = max(1, (self.nd - 1).bit_length())
        self.arange = np.arange(self.nd, dtype=np.int64)

    def face_counts(self, idx):

        B = len(idx)
        nxt = np.empty((B, self.nd), dtype=np.int64)
        for darts, table, scale, r in self.vertices:
            if r == 1 or scale >= PYTHON_LIMIT:
                nxt[:, darts] = table[0]
            else:
                digits = (idx // scale) % r
                nxt[:, darts] = table[digits]

        ## cycles of phi = next . twin, each labelled by its smallest dart
        p = nxt[:, self.twin]
        label = np.broadcast_to(self.arange, (B, self.nd)).copy()
        for _ in range(self.steps):
            label = np.minimum(label, np.take_along_axis(label, p, axis=1))
            p = np.take_along_axis(p, p, axis=1)
        return (label == self.arange).sum(axis=1)

    def genus_counts(self, lo, hi, chunk, progress=None):

        counts = np.zeros(self.E + 2, dtype=np.int64)
        for start in range(lo, hi, chunk):
            stop = min(start + chunk, hi)
            F = self.face_counts(np.arange(start, stop, dtype=np.int64))
            num = 2 - self.V + self.E - F
            if (num % 2).any() or (num < 0).any():
                bad = int(np.argmax((num % 2 != 0) | (num < 0)))
                raise InvariantViolationError('rotation %d: V=%d E=%d F=%d'
                                              % (start + bad, self.V, self.E, int(F[bad])))
            binned = np.bincount(num // 2, minlength=len(counts))
            if len(binned) > len(counts):
                raise InvariantViolationError('genus %d above E=%d' % (len(binned) - 1, self.E))
            counts += binned
            if progress is not None:
                progress(stop - start)
        return [int(c) for c in counts]

def _partial_python(g, lo, hi, progress=None):

    counts = [0] * (max_possible_genus(g) + 1)
    step = 0
    for idx in range(lo, hi):
        k = genus_of(g, decode_rotation(g, idx))
        counts[k] += 1
        step += 1
        if progress is not None and step == 4096:
            progress(step)
            step = 0
    if progress is not None and step:
        progress(step)
    return counts

def distribution_partial(g, lo, hi, engine='numpy', chunk=16384, progress=None):

    """ genus distribution restricted to rotation indices [lo, hi) """

    total = rotation_count(g)
    if not 0 <= lo <= hi <= total:
        raise RotationIndexError('range [%d, %d) outside [0, %d]' % (lo, hi, total))
    if engine not in ENGINES:
        raise InvalidInputError('unknown engine %s, choose from %s' % (engine, ', '.join(ENGINES)))
    if lo == hi:
        return GenusDistribution()

    if g.E == 0:
        return GenusDistribution([hi - lo])

    if engine == 'python' or hi > PYTHON_LIMIT:
        return GenusDistribution(_partial_python(g, lo, hi, progress))
    return GenusDistribution(BatchTables(g).genus_counts(lo, hi, chunk, progress))

def _split(total, pieces, chunk):

    size = max(chunk, -(-total // pieces))
    size = -(-size // chunk) * chunk
    return [(lo, min(lo + size, total)) for lo in range(0, total, size)]

def genus_distribution(g, workers=1, budget=None, force=False, engine='numpy',
                       chunk=16384, parallel_threshold=2**20, quiet=True):

    total = rotation_count(g)
    if budget is not None and total > budget and not force:
        raise BudgetExceededError(total, budget)

    with tqdm(total=total, unit='rot', unit_scale=True, disable=quiet,
              desc=g.name or 'rotations') as bar:

        if workers <= 1 or total < parallel_threshold:
            dist = distribution_partial(g, 0, total, engine, chunk, bar.update)
        else:
            ranges = _split(total, workers * 8, chunk)
            parts = {}
            with ProcessPoolExecutor(max_workers=workers) as executor:
                futures = {executor.submit(distribution_partial, g, lo, hi, engine, chunk): (lo, hi)
                           for lo, hi in ranges}
                for fut in as_completed(futures):
                    lo, hi = futures[fut]
                    parts[lo] = fut.result()
                    bar.update(hi - lo)

            dist = GenusDistribution()
            for lo in sorted(parts):
                dist = dist + parts[lo]

    if dist.total != total:
        raise InvariantViolationError('distribution sums to %d, expected %d' % (dist.total, total))
    return dist

def format_distribution(g, dist, fmt=None):

    if fmt == 'json':
        name = g.name or (g.to_graph6() if g.is_simple() else None)
        return json.dumps({'graph': name,
                           'n': g.n,
                           'edges': g.E,
                           'coefficients': [str(c) for c in dist.counts],
                           'polynomial': dist.polynomial().display(),
                           'total': str(dist.total)})
    return '\n'.join(['coefficients\t%s' % ','.join(map(str, dist.counts)),
                      'polynomial\t%s' % dist.polynomial().display(),
                      'total\t%d' % dist.total])

def main_genus(args):

    config = read_config()
    g = graph_from_args(args)
    dist = genus_distribution(g, **enumeration_options(args, config))
    print(format_distribution(g, dist, args.format))

def main_faces(args):

    g = graph_from_args(args)
    rot = decode_rotation(g, args.index)
    faces = trace_faces(g, rot)
    k = genus_of(g, rot, faces)

    lines = []
    for i, f in enumerate(faces):
        lines.append('face %d\t%s\t%s' % (i, ','.join(map(str, f)),
                                          ','.join(map(str, faces.walk(g, i)))))
    lines.append('%d %d %d %d' % (g.n, g.E, faces.F, k))
    print('\n'.join(lines))
