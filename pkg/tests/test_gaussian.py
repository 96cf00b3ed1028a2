import pytest
from hypothesis import given, strategies as st

from twotorsion.gaussian import GaussInt, I, ONE

gauss = st.builds(GaussInt, st.integers(-50, 50), st.integers(-50, 50))


@given(gauss, gauss)
def test_norm_multiplicative(z, w):
    assert (z * w).norm() == z.norm() * w.norm()


@given(gauss)
def test_conj_involution(z):
    assert z.conj().conj() == z
    assert (z * z.conj()).im == 0
    assert z.norm() >= 0


@given(gauss, gauss)
def test_divexact_roundtrip(z, w):
    if w.is_zero():
        with pytest.raises(ZeroDivisionError):
            z.divexact(w)
    else:
        assert (z * w).divexact(w) == z


def test_divexact_rejects_nondivisor():
    with pytest.raises(ValueError):
        GaussInt(1, 0).divexact(GaussInt(1, 1))


def test_units_and_int_comparison():
    assert I * I == GaussInt(-1, 0) == -1
    assert I**4 == ONE == 1
    assert GaussInt(3, 1) != 3


@given(gauss, gauss, gauss)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert (a - b) + b == a
