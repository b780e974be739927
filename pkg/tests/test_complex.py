from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagcx.complex import (
    Complex,
    DisjointnessError,
    MalformedFaceError,
    NotAFaceError,
    antistar,
    closed_star,
    cone,
    f_from_h,
    facet_free_reduction,
    generate,
    h_polynomial_product,
    h_vector,
    induced,
    is_pure,
    join,
    link,
)
from flagcx.homology import betti_vector

SQUARE = generate([{1, 2}, {2, 3}, {3, 4}, {1, 4}])

faces_st = st.lists(st.sets(st.integers(0, 7), max_size=4), min_size=1, max_size=6)


def test_generate_examples():
    assert generate([{1, 2, 3}]).f_vector() == (1, 3, 3, 1)
    assert generate([set()]).f_vector() == (1,)
    assert SQUARE.f_vector() == (1, 4, 4)


def test_void_and_malformed():
    with pytest.raises(ValueError):
        Complex([])
    with pytest.raises(MalformedFaceError):
        Complex([[1, 1, 2]])


def test_facets_and_order():
    c = Complex([[1, 2], [2, 3, 4], [3]])
    assert sorted(map(sorted, c.facets)) == [[1, 2], [2, 3, 4]]
    assert c.faces_of_dim(0) == tuple(frozenset([v]) for v in (1, 2, 3, 4))
    assert c.dim == 2 and c.vertices == [1, 2, 3, 4]


def test_h_vector_examples():
    assert h_vector((1, 4, 4)) == (1, 2, 1)
    assert h_vector((1, 4, 6, 4, 1)) == (1, 0, 0, 0, 0)


def test_link_antistar_induced():
    assert link(SQUARE, {1}) == Complex([[2], [4]])
    assert antistar(generate([{1, 2, 3}]), {1}) == Complex([[2, 3]])
    assert induced(SQUARE, {1, 2}) == Complex([[1, 2]])
    with pytest.raises(NotAFaceError):
        link(SQUARE, {1, 3})


def test_join_and_cone():
    two = lambda a, b: Complex([[a], [b]])  # noqa: E731
    assert join(two(1, 3), two(2, 4)) == SQUARE
    octa = join(join(two(1, 2), two(3, 4)), two(5, 6))
    assert octa.f_vector() == (1, 6, 12, 8)
    assert set(betti_vector(cone(SQUARE, 9))) == {0}
    with pytest.raises(DisjointnessError):
        join(SQUARE, two(1, 9))


def test_facet_free_reduction_examples():
    assert facet_free_reduction(Complex([[1, 2], [3]]), {0}) == Complex([[1, 2]])
    simplex = generate([{1, 2, 3}])
    assert facet_free_reduction(simplex, {0, 1}) == simplex
    hollow = Complex([[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4], [4, 5]])
    reduced = facet_free_reduction(hollow, {1})
    assert betti_vector(reduced)[2] == betti_vector(hollow)[2] == 1
    assert frozenset({4, 5}) not in reduced


def test_is_pure():
    assert is_pure(generate([{1, 2, 3}]))
    assert not is_pure(Complex([[1, 2], [3]]))


@given(faces_st)
def test_downward_closed(faces):
    c = Complex(faces)
    for F in c.faces:
        for v in F:
            assert F - {v} in c


@given(st.integers(0, 7))
def test_simplex_f_vector(k):
    c = generate([range(k + 1)])
    assert c.f_vector() == tuple(comb(k + 1, i) for i in range(k + 2))


@given(faces_st)
def test_h_roundtrip(faces):
    f = Complex(faces).f_vector()
    assert f_from_h(h_vector(f)) == f


@settings(max_examples=50)
@given(faces_st, faces_st)
def test_join_h_multiplicative(fa, fb):
    a = Complex(fa)
    b = Complex([[v + 100 for v in F] for F in fb])
    assert h_vector(join(a, b).f_vector()) == h_polynomial_product(h_vector(a.f_vector()), h_vector(b.f_vector()))


@given(faces_st, st.data())
def test_link_is_antistar_meet_star(faces, data):
    c = Complex(faces)
    F = data.draw(st.sampled_from(sorted(c.faces, key=sorted)))
    lk = link(c, F)
    assert lk.faces == antistar(c, F).faces & closed_star(c, F).faces


@given(faces_st, st.sets(st.integers(0, 3)))
def test_facet_free_reduction_props(faces, dims):
    c = Complex(faces)
    red = facet_free_reduction(c, dims)
    assert all(F and len(F) - 1 not in dims for F in red.facets) or red.faces == {frozenset()}
    for k in range(-1, c.dim + 1):
        if k not in dims:
            assert red.faces_of_dim(k) == c.faces_of_dim(k)


def test_all_subsets_of_faces_listed():
    c = Complex([[1, 2, 3, 4]])
    assert len(c) == 16
    assert all(frozenset(s) in c for r in range(5) for s in combinations([1, 2, 3, 4], r))
