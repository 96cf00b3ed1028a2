"""Form class group of a negative discriminant, and the 2-part data used
by the feasibility bounds.

The class group of Q(sqrt(-p)) for p = 1 mod 4 is realized by reduced
primitive forms of discriminant D = -4p (the maximal order).  Genus
theory makes the 2-Sylow subgroup cyclic for these discriminants, and
the enumeration below witnesses that with an explicit generator.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from dataclasses import dataclass

from .primes import is_prime, in_p1_star


class CacheError(ValueError):
    """The persistent h2 cache is corrupt or being poisoned."""


@dataclass(frozen=True, slots=True)
class QuadForm:
    """Primitive integral form a x^2 + b xy + c y^2."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_primitive(self) -> bool:
        return math.gcd(self.a, self.b, self.c) == 1

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (-a < b <= a <= c):
            return False
        return b >= 0 if (b == a or a == c) else True

    def inverse(self) -> "QuadForm":
        return reduce_form(QuadForm(self.a, -self.b, self.c))

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def normalize_form(f: QuadForm) -> QuadForm:
    a, b, c = f.a, f.b, f.c
    if -a < b <= a:
        return f
    r = (a - b) // (2 * a)
    b2 = b + 2 * r * a
    c2 = a * r * r + b * r + c
    return QuadForm(a, b2, c2)


def reduce_form(f: QuadForm) -> QuadForm:
    f = normalize_form(f)
    a, b, c = f.a, f.b, f.c
    while a > c or (a == c and b < 0):
        s = (c + b) // (2 * c)
        a, b, c = c, -b + 2 * s * c, c * s * s - b * s + a
    return normalize_form(QuadForm(a, b, c))


def principal_form(D: int) -> QuadForm:
    k = D & 1
    return QuadForm(1, k, (k * k - D) // 4)


def _check_disc(D: int) -> None:
    if D >= 0 or D % 4 not in (0, 1):
        raise ValueError("discriminant must be negative and 0 or 1 mod 4")


def enumerate_reduced(D: int) -> list[QuadForm]:
    """All reduced primitive forms of discriminant D < 0."""
    _check_disc(D)
    out = []
    amax = math.isqrt(-D // 3)
    for a in range(1, amax + 1):
        a4 = 4 * a
        target = D % a4
        for b in range(D & 1, a + 1, 2):
            if b * b % a4 != target:
                continue
            c = (b * b - D) // a4
            if c < a or math.gcd(a, b, c) != 1:
                continue
            out.append(QuadForm(a, b, c))
            if 0 < b < a and a < c:
                out.append(QuadForm(a, -b, c))
    return out


def class_number(D: int) -> int:
    """Number of reduced primitive forms, without storing them."""
    _check_disc(D)
    h = 0
    amax = math.isqrt(-D // 3)
    parity = D & 1
    for a in range(1, amax + 1):
        a4 = 4 * a
        target = D % a4
        b = parity
        while b <= a:
            if b * b % a4 == target:
                c = (b * b - D) // a4
                if c >= a and math.gcd(a, b, c) == 1:
                    h += 1 if (b == 0 or b == a or c == a) else 2
            b += 2
    return h


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with x*a + y*b = g = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def compose(f: QuadForm, g: QuadForm) -> QuadForm:
    """Gauss composition of primitive forms, reduced representative.

    General-discriminant composition (no coprimality assumption on the
    leading coefficients).
    """
    if f.discriminant != g.discriminant:
        raise ValueError("forms must share a discriminant")
    if not (f.is_primitive() and g.is_primitive()):
        raise ValueError("composition needs primitive forms")
    D = f.discriminant
    f = reduce_form(f)
    g = reduce_form(g)
    a1, b1, c1 = f.as_tuple()
    a2, b2, c2 = g.as_tuple()
    if a1 > a2:
        a1, b1, c1, a2, b2, c2 = a2, b2, c2, a1, b1, c1
    s = (b1 + b2) // 2
    n = b2 - s
    if a2 % a1 == 0:
        y1, d = 0, a1
    else:
        d, u, _v = _xgcd(a2, a1)
        y1 = u
    if s % d == 0:
        y2, x2, d1 = -1, 0, d
    else:
        d1, u, v = _xgcd(s, d)
        x2, y2 = u, -v
    v1 = a1 // d1
    v2 = a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    a3 = v1 * v2
    b3 = b2 + 2 * v2 * r
    c3 = (b3 * b3 - D) // (4 * a3)
    return reduce_form(QuadForm(a3, b3, c3))


def class_pow(f: QuadForm, n: int) -> QuadForm:
    out = reduce_form(principal_form(f.discriminant))
    base = reduce_form(f)
    while n:
        if n & 1:
            out = compose(out, base)
        base = compose(base, base)
        n >>= 1
    return out


def _two_power_order(f: QuadForm, ident: QuadForm, cap: int) -> int | None:
    """Order of f when it is a power of 2 at most cap, else None."""
    order = 1
    g = reduce_form(f)
    while g != ident:
        g = compose(g, g)
        order *= 2
        if order > cap:
            return None
    return order


@dataclass(frozen=True)
class FormClassGroup:
    D: int
    forms: tuple[QuadForm, ...]
    h: int
    h2: int
    two_sylow_generator: QuadForm | None

    @property
    def cyclic_two_sylow(self) -> bool:
        return self.two_sylow_generator is not None


def form_class_group(D: int) -> FormClassGroup:
    forms = enumerate_reduced(D)
    h = len(forms)
    h2 = h & -h  # largest power of 2 dividing h
    ident = reduce_form(principal_form(D))
    m = h // h2
    gen = None
    if h2 == 1:
        gen = ident
    else:
        for f in forms:
            g = class_pow(f, m)
            order = _two_power_order(g, ident, h2)
            if order == h2:
                gen = g
                break
    return FormClassGroup(D, tuple(forms), h, h2, gen)


class H2Cache:
    """Persistent JSON map prime -> {h, h2}.

    Entries are write-once: committing a different value for a known
    prime is an error, and a file that fails to parse or validate is a
    hard error rather than a silent recompute-and-overwrite.
    """

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = os.fspath(path) if path is not None else None
        self._data: dict[int, tuple[int, int]] = {}
        if self.path is not None and os.path.exists(self.path):
            self._load()

    def _load(self) -> None:
        try:
            with open(self.path, "r", encoding="utf-8") as fh:
                raw = json.load(fh)
            if not isinstance(raw, dict):
                raise TypeError("top level must be an object")
            for key, entry in raw.items():
                p = int(key)
                h, h2 = int(entry["h"]), int(entry["h2"])
                if h <= 0 or h2 <= 0 or h % h2 or h2 & (h2 - 1):
                    raise ValueError(f"invalid entry for {p}")
                self._data[p] = (h, h2)
        except (OSError, ValueError, TypeError, KeyError) as exc:
            raise CacheError(f"corrupt h2 cache at {self.path}: {exc}") from exc

    def get(self, p: int) -> tuple[int, int] | None:
        return self._data.get(p)

    def put(self, p: int, h: int, h2: int) -> None:
        known = self._data.get(p)
        if known is not None:
            if known != (h, h2):
                raise CacheError(
                    f"cache poisoning at p = {p}: stored {known}, recomputed {(h, h2)}"
                )
            return
        self._data[p] = (h, h2)

    def save(self) -> None:
        if self.path is None:
            return
        payload = {str(p): {"h": h, "h2": h2} for p, (h, h2) in sorted(self._data.items())}
        directory = os.path.dirname(os.path.abspath(self.path))
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, indent=0, sort_keys=True)
            os.replace(tmp, self.path)
        finally:
            if os.path.exists(tmp):
                os.unlink(tmp)

    def __len__(self) -> int:
        return len(self._data)


def h2(p: int, cache: H2Cache | None = None) -> int:
    """Order of the 2-Sylow subgroup of the class group of disc -4p."""
    if not is_prime(p) or p % 8 != 1:
        raise ValueError("h2 needs a prime p = 1 mod 8")
    if cache is not None:
        hit = cache.get(p)
        if hit is not None:
            return hit[1]
    h = class_number(-4 * p)
    part = h & -h
    if cache is not None:
        cache.put(p, h, part)
    return part


@dataclass(frozen=True)
class FeasibilityReport:
    p: int
    g: int
    h2: int
    bound_ok: bool
    p1star_required: bool
    p1star_ok: bool

    @property
    def feasible(self) -> bool:
        return self.bound_ok and (not self.p1star_required or self.p1star_ok)


def rm_feasibility(p: int, g: int, cache: H2Cache | None = None) -> FeasibilityReport:
    """Dimension bounds for a g-dimensional variety bad only at p:
    2(g+1) <= h2 always, and p must lie in P1* once 2(g+2) <= h2."""
    if g < 1:
        raise ValueError("g must be >= 1")
    part = h2(p, cache)
    return FeasibilityReport(
        p=p,
        g=g,
        h2=part,
        bound_ok=2 * (g + 1) <= part,
        p1star_required=2 * (g + 2) <= part,
        p1star_ok=in_p1_star(p),
    )


def max_feasible_g(p: int, cache: H2Cache | None = None) -> int:
    """Largest g with 2(g+1) <= h2(p)."""
    return h2(p, cache) // 2 - 1
