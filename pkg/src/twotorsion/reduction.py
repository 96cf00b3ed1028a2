"""Mild-reduction test at odd primes.

A model y^2 + Q y = P whose data fits the shape Q = m(s a1 + m a3),
P = m(a0 s^3 + m a2 s^2 + m^2 a4 s + m^3 a6) with p | m and s a monic
quadratic separable mod p admits the substitution x = r + mX, y = m^2 Y
at each root r of s.  On the completed square F = Q^2 + 4P this reads
G(X) = F(r + mX) / m^4, which is p-integral with cubic reduction mod p.
The prime is mild when both naive reductions are smooth genus-1 curves.

Working in the quadratic ring Q[T]/(s) makes r = T an exact root of s,
so no p-adic lifting is needed: the reduction only ever sees the residue
of T.  Denominators prime to p are checked before reducing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomials import IntPoly
from .primes import _sqrt_mod_prime, is_prime

MILD = "MILD"
NODE_PLUS_ELLIPTIC = "NODE_PLUS_ELLIPTIC"
NOT_MILD = "NOT_MILD"


@dataclass(frozen=True)
class MildOutcome:
    status: str
    per_root: tuple[str, ...]  # "elliptic" | "node" | "other", one per root


# -- exact arithmetic in Q[T]/(s), elements as (c0, c1) = c0 + c1 T ---------


def _ring_mul(a, b, s0: int, s1: int):
    # T^2 = -s1 T - s0
    a0, a1 = a
    b0, b1 = b
    hi = a1 * b1
    return (a0 * b0 - s0 * hi, a0 * b1 + a1 * b0 - s1 * hi)


def _poly_mul(f, g, s0, s1):
    out = [(Fraction(0), Fraction(0))] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == (0, 0):
            continue
        for j, b in enumerate(g):
            p0, p1 = _ring_mul(a, b, s0, s1)
            c0, c1 = out[i + j]
            out[i + j] = (c0 + p0, c1 + p1)
    return out


def _substituted(F: IntPoly, m: int, s0: int, s1: int):
    """Coefficients of F(T + mX) over Q[T]/(s), ascending in X."""
    lin = [(Fraction(0, 1), Fraction(1, 1)), (Fraction(m), Fraction(0))]  # T + mX
    out = [(Fraction(F.coeffs[-1]), Fraction(0))] if not F.is_zero() else []
    for c in reversed(F.coeffs[:-1]):
        out = _poly_mul(out, lin, s0, s1)
        c0, c1 = out[0]
        out[0] = (c0 + c, c1)
    return out


# -- small finite fields -----------------------------------------------------


class PrimeField:
    def __init__(self, p: int):
        self.p = p

    zero = 0
    one = 1

    def make(self, c0: int, c1: int, root: int) -> int:
        return (c0 + c1 * root) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def smul(self, k: int, a):
        return k * a % self.p

    def inv(self, a):
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0


class QuadExtField:
    """F_p[T]/(T^2 + s1 T + s0) for an irreducible reduction of s."""

    def __init__(self, p: int, s0: int, s1: int):
        self.p = p
        self.s0 = s0 % p
        self.s1 = s1 % p

    zero = (0, 0)
    one = (1, 0)

    def make(self, c0: int, c1: int, root=None):
        return (c0 % self.p, c1 % self.p)

    def add(self, a, b):
        return ((a[0] + b[0]) % self.p, (a[1] + b[1]) % self.p)

    def sub(self, a, b):
        return ((a[0] - b[0]) % self.p, (a[1] - b[1]) % self.p)

    def mul(self, a, b):
        hi = a[1] * b[1]
        return (
            (a[0] * b[0] - self.s0 * hi) % self.p,
            (a[0] * b[1] + a[1] * b[0] - self.s1 * hi) % self.p,
        )

    def smul(self, k: int, a):
        return (k * a[0] % self.p, k * a[1] % self.p)

    def inv(self, a):
        a0, a1 = a
        det = (a0 * a0 - self.s1 * a0 * a1 + self.s0 * a1 * a1) % self.p
        d = pow(det, self.p - 2, self.p)
        return ((a0 - self.s1 * a1) * d % self.p, -a1 * d % self.p)

    def is_zero(self, a) -> bool:
        return a[0] % self.p == 0 and a[1] % self.p == 0


def _trim(f, K):
    while f and K.is_zero(f[-1]):
        f.pop()
    return f


def _pderiv(f, K):
    return _trim([K.smul(k, c) for k, c in enumerate(f)][1:], K)


def _pmod(f, g, K):
    """Remainder of f by g (g nonzero), over the field K."""
    f = list(f)
    dg = len(g) - 1
    inv_lead = K.inv(g[-1])
    while len(f) - 1 >= dg and f:
        if K.is_zero(f[-1]):
            f.pop()
            continue
        q = K.mul(f[-1], inv_lead)
        shift = len(f) - 1 - dg
        for k in range(dg + 1):
            f[shift + k] = K.sub(f[shift + k], K.mul(q, g[k]))
        f.pop()
    return _trim(f, K)


def _pgcd(f, g, K):
    f, g = _trim(list(f), K), _trim(list(g), K)
    while g:
        f, g = g, _pmod(f, g, K)
    return f


def _root_multiplicity(f, rho, K) -> int:
    mult = 0
    f = list(f)
    while len(f) > 1:
        # synthetic division by (X - rho)
        out = []
        acc = K.zero
        for c in reversed(f):
            acc = K.add(K.mul(acc, rho), c)
            out.append(acc)
        rem = out[-1]
        if not K.is_zero(rem):
            break
        f = out[:-1][::-1]
        mult += 1
    return mult


def _classify_cubic(f, K) -> str:
    """Genus-1 model y^2 = cubic: elliptic, node, or other (worse)."""
    g = _pgcd(f, _pderiv(f, K), K)
    if len(g) <= 1:
        return "elliptic"
    if len(g) == 2:
        rho = K.mul(K.sub(K.zero, g[0]), K.inv(g[1]))
        return "node" if _root_multiplicity(f, rho, K) == 2 else "other"
    return "other"


def mild_reduction_on_sextic(F: IntPoly, m: int, s: IntPoly, p: int) -> MildOutcome:
    """Classify the naive reductions of y^2 = F(r + mX)/m^4 at the two
    roots r of s, for an odd prime p dividing m."""
    if p == 2 or not is_prime(p):
        raise ValueError("mild check needs an odd prime")
    if m % p != 0:
        raise ValueError(f"{p} does not divide the shape parameter m = {m}")
    if s.degree != 2 or s.lc != 1:
        raise ValueError("s must be a monic quadratic")
    s0, s1 = s[0], s[1]
    disc_s = (s1 * s1 - 4 * s0) % p
    if disc_s == 0:
        raise ValueError(f"s is inseparable mod {p}")

    coeffs = _substituted(F, m, s0, s1)
    m4 = Fraction(m) ** 4
    reduced: list[tuple[int, int]] = []
    for c0, c1 in coeffs:
        c0, c1 = c0 / m4, c1 / m4
        if c0.denominator % p == 0 or c1.denominator % p == 0:
            raise ValueError(f"substituted model is not p-integral at {p}")
        r0 = c0.numerator * pow(c0.denominator, -1, p) % p
        r1 = c1.numerator * pow(c1.denominator, -1, p) % p
        reduced.append((r0, r1))
    for k in range(4, len(reduced)):
        if reduced[k] != (0, 0):
            raise ValueError("reduction has degree > 3: model is not in shape")
    reduced = reduced[:4]
    while len(reduced) < 4:
        reduced.append((0, 0))

    sqrt_disc = _sqrt_mod_prime(disc_s, p)
    results = []
    if sqrt_disc is not None:
        K = PrimeField(p)
        inv2 = pow(2, -1, p)
        for sign in (1, -1):
            rho = (-s1 + sign * sqrt_disc) * inv2 % p
            cubic = _trim([K.make(c0, c1, rho) for c0, c1 in reduced], K)
            if len(cubic) != 4:
                raise ValueError("reduction is not a cubic: model is not in shape")
            results.append(_classify_cubic(cubic, K))
    else:
        K = QuadExtField(p, s0, s1)
        cubic = _trim([K.make(c0, c1) for c0, c1 in reduced], K)
        if len(cubic) != 4:
            raise ValueError("reduction is not a cubic: model is not in shape")
        kind = _classify_cubic(cubic, K)
        results = [kind, kind]  # conjugate roots share the classification

    if all(r == "elliptic" for r in results):
        status = MILD
    elif sorted(results) == ["elliptic", "node"]:
        status = NODE_PLUS_ELLIPTIC
    else:
        status = NOT_MILD
    return MildOutcome(status, tuple(results))
