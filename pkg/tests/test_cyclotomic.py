import cmath

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from brace_forge.cyclotomic import CycMatrix, CycRing

CONDUCTORS = [1, 2, 3, 4, 5, 6, 8, 9, 12, 15]


def evaluate(ring, x):
    z = cmath.exp(2j * cmath.pi / ring.m)
    return np.sum(np.asarray(x) * z ** np.arange(ring.deg), axis=-1)


@st.composite
def ring_and_matrices(draw, d=2):
    m = draw(st.sampled_from(CONDUCTORS))
    ring = CycRing(m)
    size = d * d * ring.deg
    ints = st.integers(-5, 5)
    X = np.array(draw(st.lists(ints, min_size=size, max_size=size)), dtype=np.int64).reshape(d, d, ring.deg)
    Y = np.array(draw(st.lists(ints, min_size=size, max_size=size)), dtype=np.int64).reshape(d, d, ring.deg)
    return ring, X, Y


def test_degrees_are_totients():
    assert [CycRing(m).deg for m in CONDUCTORS] == [1, 1, 2, 2, 4, 2, 4, 6, 4, 8]
    assert CycRing(4).phi.tolist() == [1, 0, 1]


def test_zeta_powers_cycle():
    for m in CONDUCTORS:
        ring = CycRing(m)
        z = ring.zeta(1)
        acc = ring.const(1)
        for _ in range(m):
            acc = ring.mul(acc, z)
        assert acc.tolist() == ring.const(1).tolist()
        vals = evaluate(ring, ring.zeta_powers)
        assert np.allclose(vals, np.exp(2j * np.pi * np.arange(m) / m))


@settings(max_examples=80, deadline=None)
@given(ring_and_matrices())
def test_matmul_agrees_with_complex_evaluation(data):
    ring, X, Y = data
    P = ring.matmul(X, Y)
    assert np.allclose(evaluate(ring, P), evaluate(ring, X) @ evaluate(ring, Y))
    assert np.array_equal(P, ring.matmul_prepared(X, ring.prepare(Y)))
    assert np.allclose(evaluate(ring, ring.trace(X)), np.trace(evaluate(ring, X)))


@settings(max_examples=40, deadline=None)
@given(ring_and_matrices(d=1))
def test_elementwise_product(data):
    ring, X, Y = data
    assert np.allclose(evaluate(ring, ring.mul(X, Y)), evaluate(ring, X) * evaluate(ring, Y))


def test_monomial_and_inverse():
    ring = CycRing(3)
    M = CycMatrix(ring, ring.monomial(3, [1, 2, 0], [1, 0, 2]))
    Minv = CycMatrix(ring, ring.monomial(3, [2, 0, 1], [1, 2, 0]))
    assert (M @ Minv).is_identity()
    assert M.inverse_certified(Minv)
    assert not M.inverse_certified(M)
    assert M.trace().tolist() == [0, 0]


def test_reduction_mod_q():
    ring = CycRing(4)
    assert ring.root_mod(5) == 2
    r = ring.root_mod(13)
    assert pow(r, 4, 13) == 1 and pow(r, 2, 13) != 1
    i = ring.zeta(1)
    assert int(ring.reduce_mod(ring.mul(i, i), 13)) == 12


def test_json_shape():
    ring = CycRing(4)
    M = CycMatrix(ring, ring.identity(2))
    assert M.to_json() == [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]
