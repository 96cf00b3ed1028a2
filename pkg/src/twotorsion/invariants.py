"""Igusa-Clebsch invariants of a genus-2 model, exact over the rationals.

For a binary sextic with descending coefficients a0..a6 the even
invariants I2, I4, I6 are isobaric integer polynomials of weight 6, 12,
18; I10 is the discriminant of the form.  The coefficient tables below
are frozen output of scripts/gen_invariant_coeffs.py, which interpolates
the defining symmetric root-difference sums exactly; the tests re-check
them against the same sums on integer-rooted sextics.

Two squarefree sextics define the same curve over an algebraic closure
exactly when the weighted tuple (I2 : I4 : I6 : I10) agrees in weighted
projective space, which for I10 != 0 reduces to equality of the three
absolute invariants I2^5/I10, I4^5/I10^2, I6^5/I10^3.

A quintic is the generic sextic with a root at infinity: homogenize to
degree 6 with a0 = 0.  All tables remain valid there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomials import IntPoly, discriminant

# fmt: off
_I2_TABLE = {
    (0, 0, 0, 2, 0, 0, 0): 6,
    (0, 0, 1, 0, 1, 0, 0): -16,
    (0, 1, 0, 0, 0, 1, 0): 40,
    (1, 0, 0, 0, 0, 0, 1): -240,
}

_I4_TABLE = {
    (0, 0, 2, 0, 2, 0, 0): 4,
    (0, 0, 2, 1, 0, 1, 0): -12,
    (0, 0, 3, 0, 0, 0, 1): 48,
    (0, 1, 0, 1, 2, 0, 0): -12,
    (0, 1, 0, 2, 0, 1, 0): 36,
    (0, 1, 1, 0, 1, 1, 0): 4,
    (0, 1, 1, 1, 0, 0, 1): -180,
    (0, 2, 0, 0, 0, 2, 0): -80,
    (0, 2, 0, 0, 1, 0, 1): 300,
    (1, 0, 0, 0, 3, 0, 0): 48,
    (1, 0, 0, 1, 1, 1, 0): -180,
    (1, 0, 0, 2, 0, 0, 1): 324,
    (1, 0, 1, 0, 0, 2, 0): 300,
    (1, 0, 1, 0, 1, 0, 1): -504,
    (1, 1, 0, 0, 0, 1, 1): -540,
    (2, 0, 0, 0, 0, 0, 2): 1620,
}

_I6_TABLE = {
    (0, 0, 2, 2, 2, 0, 0): 8,
    (0, 0, 2, 3, 0, 1, 0): -24,
    (0, 0, 3, 0, 3, 0, 0): -24,
    (0, 0, 3, 1, 1, 1, 0): 76,
    (0, 0, 3, 2, 0, 0, 1): 60,
    (0, 0, 4, 0, 0, 2, 0): -36,
    (0, 0, 4, 0, 1, 0, 1): -160,
    (0, 1, 0, 3, 2, 0, 0): -24,
    (0, 1, 0, 4, 0, 1, 0): 72,
    (0, 1, 1, 1, 3, 0, 0): 76,
    (0, 1, 1, 2, 1, 1, 0): -238,
    (0, 1, 1, 3, 0, 0, 1): -198,
    (0, 1, 2, 0, 2, 1, 0): 28,
    (0, 1, 2, 1, 0, 2, 0): 26,
    (0, 1, 2, 1, 1, 0, 1): 492,
    (0, 1, 3, 0, 0, 1, 1): 616,
    (0, 2, 0, 0, 4, 0, 0): -36,
    (0, 2, 0, 1, 2, 1, 0): 26,
    (0, 2, 0, 2, 0, 2, 0): 176,
    (0, 2, 0, 2, 1, 0, 1): 330,
    (0, 2, 1, 0, 1, 2, 0): 64,
    (0, 2, 1, 0, 2, 0, 1): -640,
    (0, 2, 1, 1, 0, 1, 1): -1860,
    (0, 2, 2, 0, 0, 0, 2): -900,
    (0, 3, 0, 0, 0, 3, 0): -320,
    (0, 3, 0, 0, 1, 1, 1): 1600,
    (0, 3, 0, 1, 0, 0, 2): 2250,
    (1, 0, 0, 2, 3, 0, 0): 60,
    (1, 0, 0, 3, 1, 1, 0): -198,
    (1, 0, 0, 4, 0, 0, 1): 162,
    (1, 0, 1, 0, 4, 0, 0): -160,
    (1, 0, 1, 1, 2, 1, 0): 492,
    (1, 0, 1, 2, 0, 2, 0): 330,
    (1, 0, 1, 2, 1, 0, 1): -468,
    (1, 0, 2, 0, 1, 2, 0): -640,
    (1, 0, 2, 0, 2, 0, 1): 424,
    (1, 0, 2, 1, 0, 1, 1): -876,
    (1, 0, 3, 0, 0, 0, 2): -96,
    (1, 1, 0, 0, 3, 1, 0): 616,
    (1, 1, 0, 1, 1, 2, 0): -1860,
    (1, 1, 0, 1, 2, 0, 1): -876,
    (1, 1, 0, 2, 0, 1, 1): 1818,
    (1, 1, 1, 0, 0, 3, 0): 1600,
    (1, 1, 1, 0, 1, 1, 1): 3472,
    (1, 1, 1, 1, 0, 0, 2): 3060,
    (1, 2, 0, 0, 0, 2, 1): -2240,
    (1, 2, 0, 0, 1, 0, 2): -18600,
    (2, 0, 0, 0, 2, 2, 0): -900,
    (2, 0, 0, 0, 3, 0, 1): -96,
    (2, 0, 0, 1, 0, 3, 0): 2250,
    (2, 0, 0, 1, 1, 1, 1): 3060,
    (2, 0, 0, 2, 0, 0, 2): -10044,
    (2, 0, 1, 0, 0, 2, 1): -18600,
    (2, 0, 1, 0, 1, 0, 2): 20664,
    (2, 1, 0, 0, 0, 1, 2): 59940,
    (3, 0, 0, 0, 0, 0, 3): -119880,
}
# fmt: on


def _eval_table(table: dict, a: list[int]) -> int:
    total = 0
    for expo, c in table.items():
        term = c
        for e, coeff in zip(expo, a):
            if e:
                term *= coeff**e
        total += term
    return total


@dataclass(frozen=True)
class IgusaClebsch:
    """Weighted invariants (I2, I4, I6, I10) of a degree 5/6 model."""

    i2: int
    i4: int
    i6: int
    i10: int

    @property
    def singular(self) -> bool:
        return self.i10 == 0

    def absolute(self) -> tuple[Fraction, Fraction, Fraction]:
        """Scale-free triple; defined only for nonsingular models."""
        if self.singular:
            raise ValueError("absolute invariants need I10 != 0")
        return (
            Fraction(self.i2**5, self.i10),
            Fraction(self.i4**5, self.i10**2),
            Fraction(self.i6**5, self.i10**3),
        )


def sextic_coefficients(F: IntPoly) -> list[int]:
    """Descending coefficients a0..a6 of F homogenized to degree 6."""
    if not 5 <= F.degree <= 6:
        raise ValueError(f"need degree 5 or 6, got {F.degree}")
    return [F[6 - k] for k in range(7)]


def _form_discriminant(F: IntPoly) -> int:
    # binary-form discriminant of the degree-6 homogenization; a
    # degree-5 F picks up the square of its leading coefficient from
    # the simple root at infinity
    d = discriminant(F)
    if F.degree == 6:
        return d
    return F.lc**2 * d


def igusa_clebsch(F: IntPoly) -> IgusaClebsch:
    """Exact weighted invariants of the sextic form attached to F.

    Repeated roots are reported through I10 = 0 rather than raised.
    """
    a = sextic_coefficients(F)
    return IgusaClebsch(
        i2=_eval_table(_I2_TABLE, a),
        i4=_eval_table(_I4_TABLE, a),
        i6=_eval_table(_I6_TABLE, a),
        i10=_form_discriminant(F),
    )


def same_curve_over_closure(F1: IntPoly, F2: IntPoly) -> bool:
    """Whether y^2 = F1 and y^2 = F2 are isomorphic over a closure of Q."""
    inv1, inv2 = igusa_clebsch(F1), igusa_clebsch(F2)
    if inv1.singular or inv2.singular:
        raise ValueError("singular model: curves must be squarefree of genus 2")
    return inv1.absolute() == inv2.absolute()


def substituted_form(F: IntPoly, mat: tuple[int, int, int, int]) -> IntPoly:
    """GL2 substitution (x, y) -> (p x + q y, r x + s y) on the sextic form.

    Used by the weight-law tests: invariants of weight w scale by det^(w/2)
    per degree, i.e. I2, I4, I6, I10 pick up det^6, det^12, det^18, det^30.
    """
    p, q, r, s = mat
    a = sextic_coefficients(F)
    xs = [IntPoly([q, p]) ** k for k in range(7)]
    ys = [IntPoly([s, r]) ** k for k in range(7)]
    out = IntPoly([])
    for k in range(7):
        # a[k] multiplies x^(6-k) y^k
        out = out + a[k] * (xs[6 - k] * ys[k])
    if len(out.coeffs) > 7:
        raise AssertionError("substitution must preserve degree <= 6")
    return out
