"""Exact arithmetic in Z[i].

A Gaussian integer is a plain immutable pair (re, im).  This is all the
number-field machinery the rest of the package needs: the curve
constructions only ever factor over Z[i].
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True, eq=False)
class GaussInt:
    re: int
    im: int

    @staticmethod
    def from_int(n: int) -> "GaussInt":
        return GaussInt(n, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussInt):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __add__(self, other: "GaussInt | int") -> "GaussInt":
        other = _coerce(other)
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: "GaussInt | int") -> "GaussInt":
        other = _coerce(other)
        return GaussInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: "GaussInt | int") -> "GaussInt":
        return _coerce(other) - self

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other: "GaussInt | int") -> "GaussInt":
        other = _coerce(other)
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "GaussInt":
        if n < 0:
            raise ValueError("negative powers leave Z[i]")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def divexact(self, other: "GaussInt | int") -> "GaussInt":
        """Exact division in Z[i]; raises if ``other`` does not divide self."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Z[i]")
        num = self * other.conj()
        n = other.norm()
        qr, rr = divmod(num.re, n)
        qi, ri = divmod(num.im, n)
        if rr or ri:
            raise ValueError(f"{other} does not divide {self} in Z[i]")
        return GaussInt(qr, qi)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        return f"({self.re}{self.im:+}*i)"


def _coerce(z: "GaussInt | int") -> GaussInt:
    if isinstance(z, GaussInt):
        return z
    if isinstance(z, int):
        return GaussInt(z, 0)
    raise TypeError(f"cannot coerce {type(z).__name__} into Z[i]")


ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)
I = GaussInt(0, 1)
