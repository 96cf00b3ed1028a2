"""Primality, quadratic-form representations of primes, and the residue
classification of primes p = 1 mod 8.

A prime p = 1 mod 8 always has a representation p = a^2 + 16 b^2 with
a odd, and the residue of a + 4b mod 8 splits such p into the two
classes P1 (a + 4b = +-1) and P3 (a + 4b = +-3); the class does not
depend on the choice of signs.  The finer class P1* consists of the
primes p = a^2 + 64 c^2 with a = +-1 mod 8, equivalently the p in P1
with p = 1 mod 16; both characterizations are computed and compared on
every call.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator


class CapacityError(ValueError):
    """Input needs factoring power beyond the desk-scale engine."""


# deterministic Miller-Rabin witnesses, valid for all n < 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT = 10**6


def is_prime(n: int) -> bool:
    if n < 0:
        raise ValueError("is_prime needs n >= 0")
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_below(bound: int) -> list[int]:
    """Sieve of Eratosthenes."""
    if bound <= 2:
        return []
    sieve = bytearray([1]) * bound
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(bound - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [k for k in range(bound) if sieve[k]]


def primes_in(lo: int, hi: int) -> Iterator[int]:
    for n in range(max(lo, 2), hi + 1):
        if is_prime(n):
            yield n


def _sqrt_mod_prime(a: int, p: int) -> int | None:
    """Tonelli-Shanks; returns a square root of a mod p or None."""
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def cornacchia(p: int, d: int) -> tuple[int, int] | None:
    """Solve p = a^2 + d b^2 with a, b > 0, for d in {16, 64}.

    Returns NONE (None) when no representation exists.  The descent
    needs a square root of -d mod p; the representation, when it
    exists, is unique up to signs and is returned normalized positive.
    """
    if d not in (16, 64):
        raise ValueError("d must be 16 or 64")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2 or p - d <= 0:
        return None
    x0 = _sqrt_mod_prime(-d, p)
    if x0 is None:
        return None
    if x0 < p - x0:
        x0 = p - x0
    a, b = p, x0
    limit = math.isqrt(p)
    while b > limit:
        a, b = b, a % b
    rem = p - b * b
    if rem % d:
        return None
    c = rem // d
    t = math.isqrt(c)
    if t * t != c or t == 0 or b == 0:
        return None
    return b, t


class PrimeClass(Enum):
    P1 = "P1"
    P3 = "P3"
    NOT_1_MOD_8 = "NOT_1_MOD_8"


@dataclass(frozen=True)
class PrimeProfile:
    p: int
    a16: int | None
    b16: int | None
    a64: int | None
    c64: int | None
    label: PrimeClass
    in_p1_star: bool


def classify(p: int) -> PrimeProfile:
    """Full residue profile of a prime.

    The label is determined by a + 4b mod 8 for p = a^2 + 16 b^2; each
    unit mod 8 is self-inverse, so the two sign choices of (a, b) give
    the same residue class and the label is well defined.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p % 8 != 1:
        return PrimeProfile(p, None, None, None, None, PrimeClass.NOT_1_MOD_8, False)
    rep = cornacchia(p, 16)
    if rep is None:
        raise AssertionError(f"p = {p} = 1 mod 8 must be a^2 + 16b^2")
    a, b = rep
    label = PrimeClass.P1 if (a + 4 * b) % 8 in (1, 7) else PrimeClass.P3
    rep64 = cornacchia(p, 64)
    a64, c64 = rep64 if rep64 is not None else (None, None)
    star = _p1_star(p, label, a64)
    return PrimeProfile(p, a, b, a64, c64, label, star)


def _p1_star(p: int, label: PrimeClass, a64: int | None) -> bool:
    by_form = a64 is not None and a64 % 8 in (1, 7)
    by_congruence = label is PrimeClass.P1 and p % 16 == 1
    if by_form != by_congruence:
        raise AssertionError(
            f"P1* characterizations disagree at p = {p}: "
            f"form gives {by_form}, congruence gives {by_congruence}"
        )
    return by_form


def in_p1_star(p: int) -> bool:
    """p = a^2 + 64c^2 with a = +-1 mod 8; cross-checked against
    (p in P1 and p = 1 mod 16) on every call."""
    return classify(p).in_p1_star


def cornacchia_exhaustive(p: int, d: int) -> tuple[int, int] | None:
    """Brute-force b-search; the test oracle for the descent, p < 10^6."""
    if p >= 10**6:
        raise CapacityError("exhaustive search is capped at 10^6")
    b = 1
    while d * b * b < p:
        rem = p - d * b * b
        a = math.isqrt(rem)
        if a * a == rem and a > 0:
            return a, b
        b += 1
    return None


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division to 10^6, then primality or a
    perfect prime power on the cofactor; anything else is out of capacity."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    w = 0
    while f * f <= n and f < _TRIAL_LIMIT:
        if n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        else:
            f += wheel[w]
            w = (w + 1) % 8
    if n == 1:
        return out
    if f * f > n or is_prime(n):
        out[n] = out.get(n, 0) + 1
        return out
    for k in range(2, n.bit_length()):
        root = round(n ** (1.0 / k))
        for cand in (root - 1, root, root + 1):
            if cand > 1 and cand**k == n and is_prime(cand):
                out[cand] = out.get(cand, 0) + k
                return out
    raise CapacityError(f"cofactor {n} resists desk-scale factorization")


def core(n: int) -> int:
    """Squarefree kernel: the product of the distinct primes dividing n."""
    if n == 0:
        raise ValueError("core(0) is undefined")
    out = 1
    for p in factorize(n):
        out *= p
    return out


@dataclass(frozen=True)
class OmegaReport:
    passed: bool
    omega: int
    omega2: int


def omega_bound_check(N: int, g: int) -> OmegaReport:
    """Prime-factor count bound 2g <= Omega(N) + Omega_2(N), where
    Omega_2 restricts to primes q = +-1 mod 8."""
    if N < 1 or N % 2 == 0:
        raise ValueError("N must be odd and positive")
    if g < 1:
        raise ValueError("g must be >= 1")
    fac = factorize(N)
    omega = sum(fac.values())
    omega2 = sum(e for q, e in fac.items() if q % 8 in (1, 7))
    return OmegaReport(2 * g <= omega + omega2, omega, omega2)
