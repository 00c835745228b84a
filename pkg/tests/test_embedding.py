import pytest
from hypothesis import given, settings, strategies as st

from builders import Gadget
from planar_dicolor.embedding import (
    PlanarEmbedding,
    build_embedding,
    classify_triangle,
    face_sizes,
    from_drawing,
)
from planar_dicolor.errors import EmbeddingError
from planar_dicolor.gen import GenSpec, golden, random_plane_graph


def cycle_embedding(k):
    return build_embedding({i: ((i - 1) % k, (i + 1) % k) for i in range(k)})


def test_octahedron_counts():
    emb = golden("octahedron")
    assert (len(emb.vertices), emb.num_edges, len(emb.faces)) == (6, 12, 8)
    assert face_sizes(emb) == [3] * 8


def test_five_cycle_has_two_pentagons():
    assert face_sizes(cycle_embedding(5)) == [5, 5]


def test_cube_and_icosahedron_face_sizes():
    assert face_sizes(golden("cube")) == [4] * 6
    assert face_sizes(golden("icosahedron")) == [3] * 20


def test_one_sided_adjacency_rejected():
    with pytest.raises(EmbeddingError, match="omits"):
        build_embedding({0: (1, 2), 1: (2,), 2: (0, 1)})


def test_undeclared_neighbour_rejected():
    with pytest.raises(EmbeddingError, match="undeclared"):
        build_embedding({0: (1,), 1: (0, 7)})


def test_loops_and_multi_edges_rejected():
    with pytest.raises(EmbeddingError, match="loop"):
        build_embedding({0: (0,)})
    with pytest.raises(EmbeddingError, match="twice"):
        build_embedding({0: (1, 1), 1: (0, 0)})


def test_disconnected_rejected():
    with pytest.raises(EmbeddingError, match="disconnected"):
        build_embedding({0: (1,), 1: (0,), 2: (3,), 3: (2,)})


def test_toroidal_rotation_fails_euler():
    # K4 with every rotation in increasing order lives on the torus
    with pytest.raises(EmbeddingError, match="Euler"):
        build_embedding({0: (1, 2, 3), 1: (0, 2, 3), 2: (0, 1, 3), 3: (0, 1, 2)})


def test_lone_vertex_and_single_edge():
    assert face_sizes(build_embedding({0: ()})) == [0]
    assert face_sizes(build_embedding({0: (1,), 1: (0,)})) == [2]


def test_face_successor_convention():
    emb = golden("octahedron")
    u, v = 0, 1
    w = emb.next_dart((u, v))[1]
    rot = emb.rotation(v)
    assert rot[(rot.index(u) + 1) % len(rot)] == w


def test_from_drawing_square_with_diagonal():
    pos = {0: (0, 0), 1: (1, 0), 2: (1, 1), 3: (0, 1)}
    emb = from_drawing(pos, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert face_sizes(emb) == [3, 3, 4]


def test_classify_octahedron_face():
    emb = golden("octahedron")
    t = classify_triangle(emb, emb.faces[0])
    assert t.degrees == (4, 4, 4) and not t.bad and t.major_faces == 0


def test_classify_544_all_major_not_bad():
    g = Gadget((5, 4, 4), (5, 5, 5))
    t = classify_triangle(g.emb, g.triangle)
    assert t.degrees == (5, 4, 4) and t.major_faces == 3 and not t.bad


def test_classify_544_two_quads_bad():
    g = Gadget((5, 4, 4), ("quad", "quad", 5))
    t = classify_triangle(g.emb, g.triangle)
    assert t.degrees == (5, 4, 4) and t.major_faces == 1 and t.bad


def test_classify_rejects_non_triangle():
    emb = golden("cube")
    with pytest.raises(EmbeddingError):
        classify_triangle(emb, emb.faces[0])


def test_without_edge_and_equality():
    emb = golden("octahedron")
    smaller = emb.without_edge(0, 1)
    assert smaller.num_edges == 11 and len(smaller.faces) == 7
    assert golden("octahedron") == emb and hash(golden("octahedron")) == hash(emb)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(3, 25), md=st.integers(0, 4), seed=st.integers(0, 2**32))
def test_face_tracing_invariants(n, md, seed):
    if md == 4 and n < 6 or md >= n:
        return
    emb = random_plane_graph(GenSpec(n=n, min_degree=md, seed=seed))
    darts = emb.darts()
    owner = {}
    for f in emb.faces:
        for d in f.darts:
            assert d not in owner
            owner[d] = f.index
    assert set(owner) == set(darts)
    assert sum(face_sizes(emb)) == 2 * emb.num_edges
    assert len(emb.vertices) - emb.num_edges + len(emb.faces) == 2
    for d in darts:
        assert emb.face_of(d).index == owner[d]
