import random
import pytest

from genuspoly.err import RotationIndexError, DisconnectedGraphError, InvalidInputError
from genuspoly.graph import (Graph, RotationSystem, cycle_graph, rotation_count,
                             decode_rotation, encode_rotation, vertex_orders)
from genuspoly.graph6 import parse_graph6
from genuspoly.catalog import generalized_petersen, named_graph

def test_darts_and_twins():
    g = parse_graph6('C~')
    assert len(g.darts) == 12
    for d in g.darts:
        assert g.twins[d.id] == d.id ^ 1
        assert g.darts[d.twin].twin == d.id
    assert sum(g.degrees()) == 2 * g.E

def test_reference_rotation_ascending_neighbors():
    g = parse_graph6('C~')
    for v, ds in enumerate(g.vertex_darts):
        assert [g.neighbor(d) for d in ds] == sorted(u for u in range(4) if u != v)

def test_parallel_edges_keep_insertion_order():
    theta = Graph(2, [(0, 1), (0, 1), (0, 1)])
    assert theta.vertex_darts[0] == (0, 2, 4)
    assert theta.vertex_darts[1] == (1, 3, 5)

def test_loop_contributes_two_darts():
    g = Graph(1, [(0, 0)])
    assert g.vertex_darts[0] == (0, 1)
    assert g.degree(0) == 2

def test_disconnected_rejected():
    with pytest.raises(DisconnectedGraphError):
        Graph(4, [(0, 1), (2, 3)])

def test_isolated_vertex_rejected():
    with pytest.raises(DisconnectedGraphError):
        Graph(2, [])

def test_bad_endpoint():
    with pytest.raises(InvalidInputError):
        Graph(2, [(0, 2)])

def test_rotation_counts():
    assert rotation_count(generalized_petersen(8, 2)) == 65536
    assert rotation_count(cycle_graph(5)) == 1
    assert rotation_count(parse_graph6('C~')) == 16
    assert rotation_count(parse_graph6('@')) == 1
    assert rotation_count(named_graph('G(12,2)')) == 2**24

def test_rotation_count_higher_degree():
    k5 = Graph(5, [(i, j) for i in range(5) for j in range(i+1, 5)])
    assert rotation_count(k5) == 6**5

def test_decode_zero_is_reference():
    g = generalized_petersen(8, 2)
    rot = decode_rotation(g, 0)
    assert rot.orders == list(g.vertex_darts)

def test_decode_last_reverses_everything():
    g = generalized_petersen(8, 2)
    rot = decode_rotation(g, 2**16 - 1)
    for v, ds in enumerate(g.vertex_darts):
        assert rot.orders[v] == (ds[0], ds[2], ds[1])

def test_vertex_zero_is_least_significant():
    g = parse_graph6('C~')
    rot = decode_rotation(g, 1)
    ds = g.vertex_darts
    assert rot.orders[0] == (ds[0][0], ds[0][2], ds[0][1])
    assert rot.orders[1:] == list(ds[1:])

def test_decode_is_bijection():
    g = parse_graph6('C~')
    rots = [decode_rotation(g, i) for i in range(16)]
    assert len(set(rots)) == 16
    for i, rot in enumerate(rots):
        assert encode_rotation(g, rot) == i

def test_decode_bijection_degree_four():
    k5 = Graph(5, [(i, j) for i in range(5) for j in range(i+1, 5)])
    for i in [0, 1, 5, 6, 37, 1000, 7775]:
        assert encode_rotation(k5, decode_rotation(k5, i)) == i
    assert len(set(vertex_orders(k5, 0))) == 6

def test_encode_decode_random_rotations():
    rng = random.Random(2024)
    graphs = [Graph(6, [(i, j) for i in range(6) for j in range(i+1, 6)]),
              Graph(3, [(0, 1), (1, 2), (2, 0), (0, 0), (1, 1), (0, 1)]),
              generalized_petersen(8, 2)]
    for _ in range(1000):
        g = rng.choice(graphs)
        orders = []
        for ds in g.vertex_darts:
            ds = list(ds)
            rng.shuffle(ds)
            orders.append(ds)
        rot = RotationSystem(g, orders)
        idx = encode_rotation(g, rot)
        assert 0 <= idx < rotation_count(g)
        assert decode_rotation(g, idx) == rot

def test_decode_out_of_range():
    g = parse_graph6('C~')
    with pytest.raises(RotationIndexError):
        decode_rotation(g, 16)
    with pytest.raises(RotationIndexError):
        decode_rotation(g, -1)

def test_successor_map():
    g = parse_graph6('C~')
    rot = decode_rotation(g, 5)
    for order in rot.orders:
        for i, d in enumerate(order):
            assert rot.next(d) == order[(i+1) % len(order)]

def test_orders_start_at_reference_dart():
    g = parse_graph6('C~')
    ds = g.vertex_darts
    rot = RotationSystem(g, [ds[0][1:] + ds[0][:1]] + list(ds[1:]))
    assert rot == decode_rotation(g, 0)

def test_rotation_must_cover_darts():
    g = parse_graph6('C~')
    with pytest.raises(InvalidInputError):
        RotationSystem(g, [(0, 2)] + list(g.vertex_darts[1:]))

def test_mirror_is_involution():
    g = generalized_petersen(5, 2)
    for i in [0, 3, 77, 1023]:
        rot = decode_rotation(g, i)
        assert rot.mirror().mirror() == rot
    assert decode_rotation(g, 0).mirror() == decode_rotation(g, 1023)
