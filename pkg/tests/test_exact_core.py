"""Scalars, integer kernels (both backends), linear algebra and the LP."""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from linkgeom import _accel, _kernels_py
from linkgeom.errors import InvalidInput
from linkgeom.linalg import barycentric, in_closed_simplex, nullspace_vector, solve
from linkgeom.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, feasible_point, maximize
from linkgeom.scalar import SQRT3, QuadSqrt3, format_scalar, parse_scalar, sign, to_scalar

import oracles

try:
    from linkgeom import _ckernels
except ImportError:
    _ckernels = None

small = st.integers(-50, 50)
fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)


# -- scalars ----------------------------------------------------------------

def test_sqrt3_squares_to_three():
    assert SQRT3 * SQRT3 == 3
    assert sign(SQRT3 - Fraction(17, 10)) == 1
    assert sign(SQRT3 - Fraction(7, 4)) == -1


@given(fracs, fracs, fracs, fracs)
def test_quad_field_axioms(a, b, c, d):
    x, y = QuadSqrt3(a, b), QuadSqrt3(c, d)
    assert x + y - y == x
    if y:
        assert (x / y) * y == x
    assert (x * y).sign() == x.sign() * y.sign()


@given(fracs, fracs)
def test_quad_sign_matches_float(a, b):
    x = QuadSqrt3(a, b)
    f = float(x)
    if abs(f) > 1e-9:
        assert x.sign() == (1 if f > 0 else -1)


def test_to_scalar_rejects_floats_and_bools():
    with pytest.raises(TypeError):
        to_scalar(0.5)
    with pytest.raises(TypeError):
        to_scalar(True)
    assert to_scalar(3) == Fraction(3)


@pytest.mark.parametrize("text", ["2/4", "1/0", "1/-2", "0.5", "3", "a/b"])
def test_parse_rejects_bad_fractions(text):
    with pytest.raises(InvalidInput):
        parse_scalar(text, "rational")


@given(fracs, fracs)
def test_scalar_round_trip(a, b):
    assert parse_scalar(format_scalar(a, "rational"), "rational") == a
    q = QuadSqrt3(a, b)
    assert parse_scalar(format_scalar(q, "quad_sqrt3"), "quad_sqrt3") == q


# -- integer kernels ---------------------------------------------------------

@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n),
                                                   min_size=n, max_size=n)))
def test_det_matches_leibniz(m):
    want = oracles.det_leibniz(m)
    assert _kernels_py.det_int(m) == want
    assert _accel.det_int(m) == want
    assert _kernels_py.det_field([[Fraction(v) for v in r] for r in m]) == want


@pytest.mark.skipif(_ckernels is None, reason="compiled extension not built")
@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.lists(st.integers(-2**70, 2**70),
                                                             min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_backends_agree_on_det(m):
    assert _ckernels.det_int(m) == _kernels_py.det_int(m)


def _lp_case():
    return st.integers(1, 4).flatmap(lambda r: st.integers(r, 6).flatmap(lambda c: st.tuples(
        st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r),
        st.lists(st.integers(-10, 10), min_size=r, max_size=r),
        st.lists(st.integers(-4, 4), min_size=c, max_size=c))))


@pytest.mark.skipif(_ckernels is None, reason="compiled extension not built")
@given(_lp_case())
def test_backends_agree_on_lp(case):
    A, b, c = case
    assert _ckernels.lp_max_int(A, b, c) == _kernels_py.lp_max_int(A, b, c)


def test_backend_selected():
    assert _accel.BACKEND in ("cython", "python")


# -- LP against brute force ---------------------------------------------------

def _bounded(A, b):
    # add sum(x) + s = 10 so the region is a polytope and the optimum is a vertex
    n = len(A[0])
    A2 = [list(r) + [0] for r in A] + [[1] * n + [1]]
    return A2, list(b) + [10]


@given(_lp_case())
def test_lp_optimum_matches_vertex_enumeration(case):
    A, b, c = case
    A, b = _bounded(A, b)
    c = list(c) + [0]
    res = maximize(c, A, b)
    bfs = oracles.basic_feasible_solutions(A, b)
    if not bfs:
        assert res.status == INFEASIBLE
        return
    assert res.status == OPTIMAL
    assert res.value == max(sum(ci * xi for ci, xi in zip(c, x)) for x in bfs)
    assert all(v >= 0 for v in res.x)
    for row, bi in zip(A, b):
        assert sum(a * v for a, v in zip(row, res.x)) == bi


def test_lp_unbounded_and_rational_data():
    assert maximize([1, 0], [[1, -1]], [0]).status == UNBOUNDED
    res = maximize([Fraction(1, 3), 1], [[Fraction(1, 2), Fraction(1, 3)]], [1])
    assert res.value == 3 and res.x == (0, 3)
    assert feasible_point([[1, 1]], [-1]) is None


def test_lp_quad_field():
    res = maximize([1, 1], [[1, SQRT3]], [SQRT3])
    assert res.status == OPTIMAL and res.value == SQRT3


# -- linear algebra ---------------------------------------------------------

@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(small, min_size=n, max_size=n))))
def test_solve_matches_oracle(case):
    a, b = case
    want = oracles.gauss_solve(a, b)
    got = solve(a, b)
    if want is not None:
        assert got == want
    elif got is not None:
        assert all(sum(x * y for x, y in zip(r, got)) == v for r, v in zip(a, b))


@given(st.integers(1, 4).flatmap(lambda r: st.lists(
    st.lists(small, min_size=r + 1, max_size=r + 3), min_size=r, max_size=r)
    .filter(lambda rows: len({len(x) for x in rows}) == 1)))
def test_nullspace_vector_is_integer_kernel(rows):
    v = nullspace_vector(rows)
    assert any(v) and all(isinstance(x, int) for x in v)
    assert all(sum(a * x for a, x in zip(r, v)) == 0 for r in rows)


def test_barycentric_and_closed_simplex():
    tri = [(0, 0), (4, 0), (0, 4)]
    assert barycentric(tri, (1, 1)) == [Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)]
    assert in_closed_simplex(tri, (2, 2))
    assert not in_closed_simplex(tri, (3, 2))
    assert barycentric([(0, 0, 0), (1, 0, 0)], (0, 1, 0)) is None
