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

graph6 reading and writing.

"""

import networkx as nx
from .err import *
from .graph import Graph

HEADER = '>>graph6<<'

def _byte(text, i, offset):

    c = ord(text[i])
    if not 63 <= c <= 126:
        raise Graph6ParseError('character %r outside the graph6 range' % text[i], offset + i)
    return c - 63

def parse_graph6(text, name=None):

    """ parse one graph6 string into a Graph

    Vertex order follows the file. Edges are inserted column by column of
    the upper triangle, the order the bits are stored in.
    """

    text = text.rstrip('\r\n')
    offset = 0
    if text.startswith(HEADER):
        text = text[len(HEADER):]
        offset = len(HEADER)

    if not text:
        raise Graph6ParseError('empty graph6 string', offset)

    if text[0] == '~':
        if len(text) > 1 and text[1] == '~':
            raise Graph6ParseError('8-byte vertex count is not supported', offset)
        if len(text) < 4:
            raise Graph6ParseError('truncated 4-byte vertex count', offset + len(text))
        n = 0
        for i in range(1, 4):
            n = (n << 6) | _byte(text, i, offset)
        pos = 4
    else:
        n = _byte(text, 0, offset)
        pos = 1

    if n == 0:
        raise Graph6ParseError('graph has no vertices', offset)

    nbits = n * (n-1) // 2
    nbytes = (nbits + 5) // 6
    body = text[pos:]
    if len(body) != nbytes:
        raise Graph6ParseError('expected %d adjacency bytes for %d vertices, found %d'
                               % (nbytes, n, len(body)), offset + pos + min(len(body), nbytes))

    bits = []
    for i in range(nbytes):
        b = _byte(body, i, offset + pos)
        bits.extend((b >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6ParseError('nonzero padding bits', offset + pos + nbytes - 1)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1

    return Graph(n, edges, name=name)

def write_graph6(g):

    if not g.is_simple():
        raise InvalidInputError('graph6 holds simple graphs only, %r has loops or parallel edges' % g)
    G = nx.Graph(g.to_networkx())
    return nx.to_graph6_bytes(G, header=False).decode('ascii').strip()

def list_parse_graph6(stream):

    """ yield (lineno, line, graph or exception) for every non-blank line """

    for lineno, line in enumerate(stream, 1):
        line = line.strip()
        if not line:
            continue
        try:
            g = parse_graph6(line)
        except InvalidInputError as e:
            yield lineno, line, e
            continue

        yield lineno, line, g
