import random
from itertools import combinations, islice

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagcx.canon import betti_bound, shift_down_value
from flagcx.colored import (
    ColoredComplex,
    ColoredGround,
    InvalidFVectorError,
    NotColorShiftedError,
    build_sigma,
    ffk_check,
    ffk_conditions,
    first_rainbow_sets,
    hat_complex,
    is_color_shifted,
    is_revlex,
    rainbow_sets_revlex,
    recolor,
    revlex_compare,
    revlex_complex_fvec,
    revlex_complex_top,
    shifted_betti_top,
)
from flagcx.complex import Complex, cone, is_pure
from flagcx.corpus import random_color_shifted
from flagcx.graph import Graph, clique_complex, turan_complex
from flagcx.homology import betti_vector
from flagcx.turan import turan_coeff


def colored_turan(n: int, d: int) -> ColoredComplex:
    """Delta(T_d(n)) on vertices 1..n of Pi_d, classes = colors."""
    edges = [(u, v) for u, v in combinations(range(n), 2) if u % d != v % d]
    return ColoredComplex(clique_complex(Graph.from_edges(n, edges), list(range(1, n + 1))), d)


def test_ground_encoding():
    g = ColoredGround(3, (2, 1, 2))
    assert g.vertex(2, 1) == 2 and g.vertex(1, 2) == 4
    assert [g.name(v) for v in g.vertices()] == ["1.1", "2.1", "3.1", "1.2", "3.2"]
    assert all(g.parse(g.name(v)) == v for v in g.vertices())
    with pytest.raises(ValueError):
        g.vertex(2, 2)
    assert recolor(ColoredGround(2).vertex(2, 3), 2, 3) == ColoredGround(3).vertex(2, 3)


def test_rainbow_faces_enforced():
    with pytest.raises(ValueError):
        ColoredComplex(Complex([[1, 3]]), 2)


def test_color_shifted_examples():
    assert is_color_shifted(colored_turan(7, 3))
    assert not is_color_shifted(ColoredComplex(Complex([[3, 2], [1]]), 2))
    for N in range(1, 12):
        assert is_color_shifted(revlex_complex_top(N, 3))


def test_revlex_compare_examples():
    assert revlex_compare({1, 2}, {2, 3}) == -1
    assert revlex_compare({1, 4}, {3, 4}) == -1
    assert revlex_compare({5, 2}, {2, 5}) == 0
    with pytest.raises(ValueError):
        revlex_compare({1}, {1, 2})


def test_revlex_top_examples():
    assert revlex_complex_top(1, 2).complex == Complex([[1, 2]])
    square = revlex_complex_top(4, 2).complex
    assert square == Complex([[1, 2], [2, 3], [1, 4], [3, 4]])
    assert betti_vector(square)[1] == 1
    for d in range(1, 5):
        tops = first_rainbow_sets(2 ** d, d, d)
        avoiding = [i for i, t in enumerate(tops) if min(t) > d]
        assert avoiding == [2 ** d - 1]


@pytest.mark.parametrize("d", range(1, 5))
@pytest.mark.parametrize("k", range(1, 5))
def test_revlex_order(k, d):
    if k > d:
        assert list(rainbow_sets_revlex(k, d)) == []
        return
    seq = list(islice(rainbow_sets_revlex(k, d), 200))
    assert all(revlex_compare(a, b) == -1 for a, b in zip(seq, seq[1:]))
    # first binom(m,k)_d sets are exactly the rainbow k-subsets of [m]
    for m in range(k, 12):
        n = turan_coeff(m, k, d)
        if n > len(seq):
            break
        expect = {c for c in combinations(range(1, m + 1), k) if len({(v - 1) % d for v in c}) == k}
        assert set(seq[:n]) == expect


def test_fvec_examples():
    assert revlex_complex_fvec((1, 4, 4), 2).complex == revlex_complex_top(4, 2).complex
    cc = revlex_complex_fvec((1, 5, 6), 2)
    assert betti_vector(cc.complex)[1] == 2 == shifted_betti_top(cc)
    assert revlex_complex_fvec((1, 3, 3, 1), 3).complex == Complex([[1, 2, 3]])
    with pytest.raises(InvalidFVectorError):
        revlex_complex_fvec((1, 3, 4), 2)


def test_ffk_examples():
    assert ffk_conditions((1, 4, 4), 2) == (True, True)
    assert ffk_conditions((1, 3, 4), 2) == (False, False)
    assert all(ffk_check((1, n), r) for n in range(1, 20) for r in range(1, 5))


def test_hat_examples():
    hat = hat_complex(colored_turan(4, 2))
    assert hat == Complex([[3, 4]])
    assert hat_complex(ColoredComplex(Complex([[1, 2, 3]]), 3)) == Complex([[]])
    assert len(hat_complex(colored_turan(6, 3)).faces_of_dim(2)) == 1
    with pytest.raises(NotColorShiftedError):
        hat_complex(ColoredComplex(Complex([[3, 2], [1]]), 2))


@pytest.mark.parametrize("d", range(1, 5))
def test_shifted_betti_top_turan(d):
    for n in range(d, 12):
        assert shifted_betti_top(colored_turan(n, d)) == turan_coeff(n - d, d, d)


def test_shifted_betti_top_cone():
    base = revlex_complex_top(5, 2)
    lifted = Complex.from_closed(frozenset(recolor(v, 2, 3) for v in F) for F in base.complex.faces)
    assert shifted_betti_top(ColoredComplex(cone(lifted, 3), 3)) == 0


@pytest.mark.parametrize("d", range(1, 5))
def test_revlex_top_betti_is_shift_down(d):
    for N in range(1, 60):
        cc = revlex_complex_top(N, d)
        assert shifted_betti_top(cc) == shift_down_value(N, d, d) == betti_bound(N, d, d)


def test_sigma_examples():
    octa = turan_complex(6, 3)
    res = build_sigma(octa)
    assert res.sigma.complex.f_vector()[3] == 8
    b = betti_vector(res.sigma.complex)
    assert b[2] >= 1
    assert b[2] == sum(betti_vector(p.complex)[1] for p in res.parts[1:])
    tent = cone(Complex([[1, 2], [2, 3]]), 0)
    res = build_sigma(tent)
    assert res.order == [] and betti_vector(res.sigma.complex)[2] == 0
    with pytest.raises(ValueError):
        build_sigma(Complex([[1, 2], [2, 3], [1, 3]]))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_shifted_corpus(seed):
    cc = random_color_shifted(random.Random(seed))
    assert is_color_shifted(cc) and cc.is_balanced
    bv = betti_vector(cc.complex)
    assert shifted_betti_top(cc) == bv[cc.d - 1]
    if is_pure(cc.complex):
        assert all(bv[i] == 0 for i in range(-1, cc.d - 1))
    # adding or dropping lower faces leaves the top Betti number alone
    top = Complex(cc.complex.faces_of_dim(cc.d - 1))
    assert betti_vector(top)[cc.d - 1] == bv[cc.d - 1]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda d: st.tuples(st.just(d), st.integers(1, 40))))
def test_revlex_fvec_roundtrip(dN):
    d, N = dN
    f = revlex_complex_top(N, d).complex.f_vector()
    cc = revlex_complex_fvec(f, d)
    assert cc.complex.f_vector() == f
    assert is_color_shifted(cc) and is_revlex(cc)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_sigma_chain_on_random_flag(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 8)
    g = Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < 0.55])
    delta = clique_complex(g)
    if delta.dim < 1:
        return
    d = delta.dim
    res = build_sigma(delta)
    assert all(res.a[0] >= x for x in res.a)
    sb = betti_vector(res.sigma.complex)
    assert res.sigma.complex.f_vector()[d + 1] == delta.f_vector()[d + 1]
    assert sb[d] == sum(betti_vector(p.complex)[d - 1] for p in res.parts[1:])
    assert sb[d] >= betti_vector(delta)[d]
