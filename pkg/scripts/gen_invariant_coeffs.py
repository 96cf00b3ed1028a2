#!/usr/bin/env python3
"""Regenerate the coefficient tables in twotorsion/invariants.py.

The three even invariants of a binary sextic of degree 2, 4, 6 in the
coefficients are isobaric of weight 6, 12, 18.  Each is determined by its
values on enough sextics, so we evaluate the defining symmetric
root-difference sums on random integer-rooted sextics and solve the exact
linear system for the monomial coefficients.  The degree-10 invariant is
the discriminant and needs no table.

Run from the repository root:

    python scripts/gen_invariant_coeffs.py

and paste the printed dictionaries into src/twotorsion/invariants.py.
"""

from fractions import Fraction
from itertools import combinations, permutations
import random


def pair_matchings(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k in range(len(rest)):
        pair = (first, rest[k])
        remaining = rest[:k] + rest[k + 1 :]
        for sub in pair_matchings(remaining):
            yield [pair] + sub


def triple_splits(items):
    first = items[0]
    for other in combinations(items[1:], 2):
        a = (first,) + other
        b = tuple(x for x in items if x not in a)
        yield a, b


def d2(r, i, j):
    return (r[i] - r[j]) ** 2


def triangle(r, t):
    i, j, k = t
    return d2(r, i, j) * d2(r, j, k) * d2(r, k, i)


def inv2(a0, r):
    total = 0
    for m in pair_matchings(list(range(6))):
        term = 1
        for i, j in m:
            term *= d2(r, i, j)
        total += term
    return a0**2 * total


def inv4(a0, r):
    total = 0
    for a, b in triple_splits(list(range(6))):
        total += triangle(r, a) * triangle(r, b)
    return a0**4 * total


def inv6(a0, r):
    total = 0
    for a, b in triple_splits(list(range(6))):
        base = triangle(r, a) * triangle(r, b)
        for perm in permutations(b):
            cross = 1
            for x, y in zip(a, perm):
                cross *= d2(r, x, y)
            total += base * cross
    return a0**6 * total


def coeffs_from_roots(a0, r):
    # descending: a[k] multiplies x^(6-k)
    cs = [a0]
    for root in r:
        nxt = [0] * (len(cs) + 1)
        for k, c in enumerate(cs):
            nxt[k] += c
            nxt[k + 1] -= c * root
        cs = nxt
    return cs


def monomial_basis(degree, weight):
    # exponent tuples (e0..e6) with sum(e) = degree, sum(k*e_k) = weight
    basis = []

    def rec(idx, deg_left, wt_left, expo):
        if idx == 7:
            if deg_left == 0 and wt_left == 0:
                basis.append(tuple(expo))
            return
        for e in range(deg_left + 1):
            if e * idx > wt_left:
                break
            rec(idx + 1, deg_left - e, wt_left - e * idx, expo + [e])

    rec(0, degree, weight, [])
    return basis


def eval_monomial(expo, a):
    out = 1
    for e, c in zip(expo, a):
        if e:
            out *= c**e
    return out


def solve_exact(rows, rhs):
    n = len(rows[0])
    m = [[Fraction(x) for x in row] + [Fraction(v)] for row, v in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            raise RuntimeError("sample matrix is rank-deficient; add samples")
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    sol = [m[i][-1] for i in range(n)]
    for i in range(n, len(m)):
        if m[i][-1] != 0:
            raise RuntimeError("inconsistent system; definitions disagree")
    return sol


def main():
    rng = random.Random(20230518)
    tables = {}
    for name, degree, weight, fn in [
        ("I2", 2, 6, inv2),
        ("I4", 4, 12, inv4),
        ("I6", 6, 18, inv6),
    ]:
        basis = monomial_basis(degree, weight)
        rows, rhs = [], []
        want = len(basis) + 40
        while len(rows) < want:
            a0 = rng.choice([1, 1, 2, 3, -1, -2, 5])
            roots = [rng.randint(-9, 9) for _ in range(6)]
            a = coeffs_from_roots(a0, roots)
            rows.append([eval_monomial(e, a) for e in basis])
            rhs.append(fn(a0, roots))
        sol = solve_exact(rows, rhs)
        table = {}
        for expo, c in zip(basis, sol):
            assert c.denominator == 1, (name, expo, c)
            if c != 0:
                table[expo] = int(c)
        # held-out verification
        for _ in range(25):
            a0 = rng.choice([1, 2, -3, 7])
            roots = [rng.randint(-20, 20) for _ in range(6)]
            a = coeffs_from_roots(a0, roots)
            got = sum(c * eval_monomial(e, a) for e, c in table.items())
            assert got == fn(a0, roots), name
        tables[name] = table
        print(f"# {name}: degree {degree}, weight {weight}, {len(table)} terms")
        print(f"_{name}_TABLE = {{")
        for expo, c in sorted(table.items()):
            print(f"    {expo}: {c},")
        print("}")
        print()


if __name__ == "__main__":
    main()
