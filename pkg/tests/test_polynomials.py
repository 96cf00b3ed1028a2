import mpmath
import pytest
from hypothesis import given, strategies as st

from twotorsion.gaussian import GaussInt
from twotorsion.polynomials import (
    GaussPoly,
    IntPoly,
    conj_product,
    discriminant,
    rationalize,
    resultant,
)

int_polys = st.builds(IntPoly, st.lists(st.integers(-20, 20), max_size=5))
gauss_polys = st.builds(
    GaussPoly,
    st.lists(
        st.builds(GaussInt, st.integers(-9, 9), st.integers(-9, 9)), max_size=4
    ),
)


def nonzero(strategy):
    return strategy.filter(lambda p: not p.is_zero())


# -- pinned examples --------------------------------------------------------


def test_resultant_conjugate_pair():
    h = GaussPoly([GaussInt(1, -2), 1, 1])  # x^2 + x + 1 - 2i
    assert resultant(h, h.conj()) == -16


def test_resultant_common_root():
    f = IntPoly([-1, 1])
    assert resultant(f, f) == 0


def test_resultant_hand_expansion():
    # lc(g)^deg f * f(beta) over the roots +-i of g
    assert resultant(IntPoly([1, 4]), IntPoly([1, 0, 1])) == 17


def test_discriminant_gauss_quadratic():
    h = GaussPoly([GaussInt(1, -2), 1, 1])
    assert discriminant(h) == GaussInt(-3, 8)


def test_discriminant_rational_quadratic():
    assert discriminant(IntPoly([1, 1, 1])) == -3


def test_discriminant_ab1_sextic():
    Q = IntPoly([1, 1, 1])
    F = IntPoly([1, 4]) * (Q * Q + IntPoly([4]))
    assert discriminant(F) == 2**8 * 73 * 1193**2


def test_conj_product_examples():
    h = GaussPoly([GaussInt(1, -2), 1, 1])
    assert conj_product(h) == IntPoly([5, 2, 3, 2, 1])
    assert conj_product(GaussPoly([0, 1])) == IntPoly([0, 0, 1])
    assert conj_product(GaussPoly([GaussInt(0, -1), 1])) == IntPoly([1, 0, 1])


def test_zero_inputs_rejected():
    with pytest.raises(ValueError):
        resultant(IntPoly([]), IntPoly([1]))
    with pytest.raises(ValueError):
        discriminant(IntPoly([3]))


# -- algebraic properties ----------------------------------------------------


@given(int_polys, int_polys, int_polys)
def test_ring_laws(f, g, k):
    assert f * (g + k) == f * g + f * k
    assert f * g == g * f
    assert f + g == g + f


@given(nonzero(int_polys), nonzero(int_polys))
def test_resultant_antisymmetry(f, g):
    sign = -1 if (f.degree * g.degree) % 2 else 1
    assert resultant(f, g) == sign * resultant(g, f)


@given(nonzero(int_polys), nonzero(int_polys))
def test_discriminant_of_product(f, g):
    # disc(fg) = disc f disc g res(f,g)^2, for coprime factors of degree >= 1
    if f.degree < 1 or g.degree < 1:
        return
    r = resultant(f, g)
    if r == 0:
        return
    assert discriminant(f * g) == discriminant(f) * discriminant(g) * r**2


@given(nonzero(gauss_polys))
def test_conj_product_discriminant_identity(h):
    if h.degree < 1:
        return
    hbar = h.conj()
    r = resultant(h, hbar)
    if r == 0:
        return
    lhs = discriminant(conj_product(h))
    rhs = discriminant(h) * discriminant(hbar) * r * r
    assert lhs == rhs


@given(nonzero(int_polys), nonzero(int_polys))
def test_resultant_numeric_root_product(f, g):
    # res(f, g) = lc(g)^deg f * prod f(beta) over complex roots of g,
    # checked numerically (tests only)
    if g.degree < 1:
        return
    mpmath.mp.dps = 40
    roots = mpmath.polyroots([mpmath.mpf(c) for c in reversed(g.coeffs)], maxsteps=200)
    prod = mpmath.mpf(g.lc) ** f.degree
    for beta in roots:
        prod *= mpmath.polyval([mpmath.mpf(c) for c in reversed(f.coeffs)], beta)
    exact = resultant(f, g)
    assert abs(complex(prod) - exact) <= 1e-6 * (1 + abs(exact))


def test_rationalize():
    p = GaussPoly([GaussInt(0, 6), GaussInt(0, -3)])  # i (6 - 3x)
    q = rationalize(p)
    assert q == IntPoly([-2, 1])
    with pytest.raises(ValueError):
        rationalize(GaussPoly([GaussInt(1, 1)]))
