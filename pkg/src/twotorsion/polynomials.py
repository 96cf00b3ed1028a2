"""Univariate polynomials over Z and Z[i], with exact resultants and
discriminants via fraction-free (Bareiss) elimination on the Sylvester
matrix.

Coefficient lists are stored in ascending degree with the leading
coefficient nonzero; the zero polynomial has an empty coefficient tuple
and degree -1.  Degrees in this package never exceed 6, so correctness
is preferred over asymptotics throughout.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .gaussian import GaussInt, I, ONE as GONE, ZERO as GZERO


def _strip_int(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class IntPoly:
    """Polynomial with integer coefficients, ascending degree order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        object.__setattr__(self, "coeffs", _strip_int(cs))

    def __setattr__(self, *args):
        raise AttributeError("IntPoly is immutable")

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def x() -> "IntPoly":
        return IntPoly([0, 1])

    @staticmethod
    def constant(c: int) -> "IntPoly":
        return IntPoly([c])

    @staticmethod
    def monomial(degree: int, c: int = 1) -> "IntPoly":
        return IntPoly([0] * degree + [c])

    # -- basic queries ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- ring operations -------------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    def __rmul__(self, other: int) -> "IntPoly":
        return self * other

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = IntPoly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scalar_divexact(self, c: int) -> "IntPoly":
        if c == 0:
            raise ZeroDivisionError
        out = []
        for a in self.coeffs:
            q, r = divmod(a, c)
            if r:
                raise ValueError(f"coefficient {a} not divisible by {c}")
            out.append(q)
        return IntPoly(out)

    def derivative(self) -> "IntPoly":
        return IntPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def to_gauss(self) -> "GaussPoly":
        return GaussPoly([GaussInt(c, 0) for c in self.coeffs])

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return _render(self.coeffs)


def _strip_gauss(coeffs: Sequence[GaussInt]) -> tuple[GaussInt, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1].is_zero():
        n -= 1
    return tuple(coeffs[:n])


class GaussPoly:
    """Polynomial with coefficients in Z[i], ascending degree order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[GaussInt | int] = ()):
        cs = [c if isinstance(c, GaussInt) else GaussInt(int(c), 0) for c in coeffs]
        object.__setattr__(self, "coeffs", _strip_gauss(cs))

    def __setattr__(self, *args):
        raise AttributeError("GaussPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> GaussInt:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> GaussInt:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else GZERO

    def __eq__(self, other) -> bool:
        return isinstance(other, GaussPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "GaussPoly") -> "GaussPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return GaussPoly(out)

    def __sub__(self, other: "GaussPoly") -> "GaussPoly":
        return self + (-other)

    def __neg__(self) -> "GaussPoly":
        return GaussPoly([-c for c in self.coeffs])

    def __mul__(self, other: "GaussPoly | GaussInt | int") -> "GaussPoly":
        if isinstance(other, (GaussInt, int)):
            return GaussPoly([c * other for c in self.coeffs])
        out = [GZERO] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return GaussPoly(out)

    def __rmul__(self, other: "GaussInt | int") -> "GaussPoly":
        return self * other

    def conj(self) -> "GaussPoly":
        return GaussPoly([c.conj() for c in self.coeffs])

    def derivative(self) -> "GaussPoly":
        return GaussPoly([c * k for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        out = GZERO
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def is_real(self) -> bool:
        return all(c.im == 0 for c in self.coeffs)

    def to_int_poly(self) -> IntPoly:
        bad = [k for k, c in enumerate(self.coeffs) if c.im != 0]
        if bad:
            raise ValueError(f"imaginary part survives at degree {bad[0]}")
        return IntPoly([c.re for c in self.coeffs])

    def __repr__(self) -> str:
        return f"GaussPoly({[(c.re, c.im) for c in self.coeffs]})"

    def __str__(self) -> str:
        return _render(self.coeffs)


def _render(coeffs) -> str:
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if (c == 0) if isinstance(c, int) else c.is_zero():
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        parts.append(f"{c}{'*' if mono and str(c) not in ('1',) else ''}{mono}"
                     if not (str(c) == "1" and mono) else mono)
    return " + ".join(parts)


Poly = IntPoly | GaussPoly


def _as_gauss(p: Poly) -> GaussPoly:
    return p if isinstance(p, GaussPoly) else p.to_gauss()


def _bareiss_det(rows: list[list[GaussInt]]) -> GaussInt:
    """Fraction-free determinant over Z[i]; all divisions are exact."""
    n = len(rows)
    if n == 0:
        return GONE
    m = [row[:] for row in rows]
    sign = 1
    prev = GONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return GZERO
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]).divexact(prev)
            m[i][k] = GZERO
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def _sylvester(f: GaussPoly, g: GaussPoly) -> list[list[GaussInt]]:
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    fdesc = [f[m - k] for k in range(m + 1)]
    gdesc = [g[n - k] for k in range(n + 1)]
    for i in range(n):
        rows.append([GZERO] * i + fdesc + [GZERO] * (size - i - m - 1))
    for i in range(m):
        rows.append([GZERO] * i + gdesc + [GZERO] * (size - i - n - 1))
    return rows


def resultant(f: Poly, g: Poly):
    """Sylvester-determinant resultant; result stays in the input ring."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    both_int = isinstance(f, IntPoly) and isinstance(g, IntPoly)
    fg, gg = _as_gauss(f), _as_gauss(g)
    if fg.degree == 0 and gg.degree == 0:
        res = GONE
    elif fg.degree == 0:
        res = fg.lc ** gg.degree
    elif gg.degree == 0:
        res = gg.lc ** fg.degree
    else:
        res = _bareiss_det(_sylvester(fg, gg))
    if both_int:
        assert res.im == 0
        return res.re
    return res


def discriminant(f: Poly):
    """disc(f) = (-1)^(d(d-1)/2) res(f, f') / lc(f), exact in the ring."""
    d = f.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    r = resultant(f, f.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    if isinstance(f, IntPoly):
        q, rem = divmod(sign * r, f.lc)
        assert rem == 0
        return q
    return (r * sign).divexact(f.lc)


def conj_product(h: GaussPoly) -> IntPoly:
    """h * conj(h), coerced to IntPoly.

    The imaginary parts vanish identically for any h; the coercion
    asserts it.
    """
    return (h * h.conj()).to_int_poly()


def rationalize(p: GaussPoly) -> IntPoly:
    """Reduce ``p`` by a unit of Z[i] and its integer content.

    Returns the primitive integer polynomial with positive leading
    coefficient; raises if no power of i makes ``p`` real.
    """
    if p.is_zero():
        raise ValueError("cannot rationalize the zero polynomial")
    for k in range(4):
        q = p * (I ** k)
        if q.is_real():
            ints = q.to_int_poly()
            if ints.lc < 0:
                ints = -ints
            return ints.scalar_divexact(ints.content())
    raise ValueError("no unit of Z[i] makes the polynomial real")
