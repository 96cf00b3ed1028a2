from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from twotorsion.invariants import (
    igusa_clebsch,
    same_curve_over_closure,
    substituted_form,
)
from twotorsion.polynomials import IntPoly, discriminant


# -- independent oracle: the defining symmetric root-difference sums ---------


def _matchings(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k in range(len(rest)):
        for sub in _matchings(rest[:k] + rest[k + 1 :]):
            yield [(first, rest[k])] + sub


def _splits(items):
    first = items[0]
    for other in combinations(items[1:], 2):
        a = (first,) + other
        b = tuple(x for x in items if x not in a)
        yield a, b


def _tri(r, t):
    i, j, k = t
    return (r[i] - r[j]) ** 2 * (r[j] - r[k]) ** 2 * (r[k] - r[i]) ** 2


def oracle_invariants(a0, roots):
    idx = list(range(6))
    i2 = a0**2 * sum(
        (roots[a] - roots[b]) ** 2 * (roots[c] - roots[d]) ** 2 * (roots[e] - roots[f]) ** 2
        for (a, b), (c, d), (e, f) in _matchings(idx)
    )
    i4 = a0**4 * sum(_tri(roots, s) * _tri(roots, t) for s, t in _splits(idx))
    i6 = a0**6 * sum(
        _tri(roots, s) * _tri(roots, t)
        * (roots[s[0]] - roots[p[0]]) ** 2
        * (roots[s[1]] - roots[p[1]]) ** 2
        * (roots[s[2]] - roots[p[2]]) ** 2
        for s, t in _splits(idx)
        for p in permutations(t)
    )
    i10 = a0**10
    for i, j in combinations(idx, 2):
        i10 *= (roots[i] - roots[j]) ** 2
    return i2, i4, i6, i10


def poly_from_roots(a0, roots):
    out = IntPoly([a0])
    for r in roots:
        out = out * IntPoly([-r, 1])
    return out


@given(
    st.integers(-4, 4).filter(lambda v: v != 0),
    st.lists(st.integers(-12, 12), min_size=6, max_size=6),
)
def test_tables_match_root_sums(a0, roots):
    inv = igusa_clebsch(poly_from_roots(a0, roots))
    assert (inv.i2, inv.i4, inv.i6, inv.i10) == oracle_invariants(a0, roots)


# -- invariance laws ----------------------------------------------------------


def test_scaling_weights():
    F = IntPoly([3, -1, 2, 0, 1, 1, 1])
    a = igusa_clebsch(F)
    for u in (2, -3, 7):
        b = igusa_clebsch(u * F)
        assert (b.i2, b.i4, b.i6, b.i10) == (
            u**2 * a.i2,
            u**4 * a.i4,
            u**6 * a.i6,
            u**10 * a.i10,
        )


@given(
    st.lists(st.integers(-5, 5), min_size=7, max_size=7),
    st.tuples(*(st.integers(-3, 3) for _ in range(4))),
)
def test_gl2_weight_law(coeffs, mat):
    F = IntPoly(coeffs)
    det = mat[0] * mat[3] - mat[1] * mat[2]
    if F.degree < 5 or det == 0:
        return
    G = substituted_form(F, mat)
    if G.degree < 5:
        return
    a, b = igusa_clebsch(F), igusa_clebsch(G)
    assert b.i2 == det**6 * a.i2
    assert b.i4 == det**12 * a.i4
    assert b.i6 == det**18 * a.i6
    assert b.i10 == det**30 * a.i10


def test_quintic_as_sextic_with_root_at_infinity():
    # moving a finite root to infinity by an SL2 substitution preserves
    # all four invariants exactly
    F = poly_from_roots(1, [0, 1, -1, 2, 3, -2])
    G = substituted_form(F, (1, 2, 1, 1))  # det 1; sends -2 to infinity
    assert G.degree == 5
    a, b = igusa_clebsch(F), igusa_clebsch(G)
    assert (a.i2, a.i4, a.i6, a.i10) == (b.i2, b.i4, b.i6, b.i10)


def test_repeated_root_flags_singular():
    F = IntPoly([0, 0, 1]) * IntPoly([1, 1]) ** 2 * IntPoly([2, 0, 1])
    inv = igusa_clebsch(F)
    assert inv.singular and inv.i10 == 0 == discriminant(F)
    with pytest.raises(ValueError):
        inv.absolute()


def test_same_curve_over_closure():
    F = IntPoly([1, 2, 0, -3, 1, 0, 1])
    assert same_curve_over_closure(F, F)
    assert same_curve_over_closure(F, 9 * F)  # quadratic twist
    assert same_curve_over_closure(F, -4 * F)
    assert same_curve_over_closure(F, substituted_form(F, (2, 1, 1, 1)))
    G = IntPoly([5, 0, 1, 1, 0, 0, 1])
    assert not same_curve_over_closure(F, G)


def test_same_curve_rejects_singular():
    F = IntPoly([1, 2, 0, -3, 1, 0, 1])
    S = IntPoly([0, 0, 1]) * IntPoly([1, 1]) ** 2 * IntPoly([2, 0, 1])
    with pytest.raises(ValueError):
        same_curve_over_closure(F, S)


def test_degree_bounds():
    with pytest.raises(ValueError):
        igusa_clebsch(IntPoly([1, 1, 1]))
