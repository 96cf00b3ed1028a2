"""F2 modules with two involutions and a multiplicative subspace.

Vectors are bitmasks (bit j-1 holds the coefficient of the basis vector
v_j) and matrices are tuples of row bitmasks acting on column vectors,
so everything is exact and fast up to the dimension cap of 64.

The building blocks are cyclic chain modules: a basis v_1..v_k on which
the two involutions alternately shift indices down by one, the top
vector being fixed by one of them.  The h2-dimensional xi-module, the
2d-dimensional phi-blocs and the obstruction operator t^(h2/2) are all
assembled from those chains.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence


class ModuleInvariantError(ValueError):
    """An admissibility invariant fails."""


MAX_DIM = 64


# ---------------------------------------------------------------------------
# bit-packed linear algebra over F2
# ---------------------------------------------------------------------------


def identity(n: int) -> tuple[int, ...]:
    return tuple(1 << r for r in range(n))


def mat_vec(rows: Sequence[int], x: int) -> int:
    y = 0
    for r, row in enumerate(rows):
        if (row & x).bit_count() & 1:
            y |= 1 << r
    return y


def mat_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = []
    for row in a:
        acc = 0
        rr = row
        while rr:
            j = (rr & -rr).bit_length() - 1
            acc ^= b[j]
            rr &= rr - 1
        out.append(acc)
    return tuple(out)


def mat_xor(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x ^ y for x, y in zip(a, b))


def mat_pow(m: Sequence[int], n: int) -> tuple[int, ...]:
    out = identity(len(m))
    base = tuple(m)
    while n:
        if n & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        n >>= 1
    return out


def mat_order(m: Sequence[int], cap: int = 1 << 20) -> int:
    """Multiplicative order, for matrices of 2-power order."""
    ident = identity(len(m))
    power = tuple(m)
    order = 1
    while power != ident:
        power = mat_mul(power, power)
        order *= 2
        if order > cap:
            raise ValueError("order exceeds cap; matrix has no 2-power order")
    return order


def is_nilpotent(m: Sequence[int]) -> bool:
    n = len(m)
    power = tuple(m)
    for _ in range(n.bit_length() + 1):
        if all(row == 0 for row in power):
            return True
        power = mat_mul(power, power)
    return all(row == 0 for row in power)


def rref(vectors: Sequence[int]) -> list[int]:
    """Fully reduced echelon basis of the span (unique pivot bits)."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            if v ^ b < v:
                v ^= b
        if v:
            basis = [b ^ v if b ^ v < b else b for b in basis]
            basis.append(v)
            basis.sort(reverse=True)
    return basis


def reduce_mod(v: int, echelon: Sequence[int]) -> int:
    for b in echelon:
        if v ^ b < v:
            v ^= b
    return v


def in_span(v: int, echelon: Sequence[int]) -> bool:
    return reduce_mod(v, echelon) == 0


def rank(vectors: Sequence[int]) -> int:
    return len(rref(vectors))


def solve_combination(vectors: Sequence[int], target: int) -> list[int] | None:
    """Indices I with XOR of vectors[i] for i in I equal to target, or
    None when target is outside the span."""
    pairs: list[tuple[int, int]] = []  # (reduced vector, combination mask)
    for idx, v in enumerate(vectors):
        combo = 1 << idx
        for rv, rc in pairs:
            if v ^ rv < v:
                v ^= rv
                combo ^= rc
        if v:
            pairs.append((v, combo))
            pairs.sort(reverse=True)
    combo = 0
    for rv, rc in pairs:
        if target ^ rv < target:
            target ^= rv
            combo ^= rc
    if target:
        return None
    return [i for i in range(len(vectors)) if (combo >> i) & 1]


def kernel(rows: Sequence[int], n: int) -> list[int]:
    """Basis of the null space of the matrix on F2^n."""
    eqs = rref(rows)
    pivots = {e.bit_length() - 1 for e in eqs}
    basis = []
    for f in range(n):
        if f in pivots:
            continue
        x = 1 << f
        for e in eqs:
            p = e.bit_length() - 1
            if (e & x).bit_count() & 1:
                x |= 1 << p
        basis.append(x)
    return basis


def intersect(u_basis: Sequence[int], w_basis: Sequence[int], n: int) -> list[int]:
    """Basis of span(U) intersect span(W) (Zassenhaus layout)."""
    rows = [(u << n) | u for u in u_basis] + [w << n for w in w_basis]
    echelon = rref(rows)
    low_mask = (1 << n) - 1
    return rref([r & low_mask for r in echelon if r >> n == 0])


def mat_from_columns(cols: Sequence[int], nrows: int) -> tuple[int, ...]:
    rows = []
    for r in range(nrows):
        acc = 0
        for c, col in enumerate(cols):
            if (col >> r) & 1:
                acc |= 1 << c
        rows.append(acc)
    return tuple(rows)


def mat_inverse(m: Sequence[int]) -> tuple[int, ...] | None:
    n = len(m)
    cols = [mat_vec(m, 1 << c) for c in range(n)]
    inv_cols = []
    for r in range(n):
        combo = solve_combination(cols, 1 << r)
        if combo is None:
            return None
        acc = 0
        for i in combo:
            acc |= 1 << i
        inv_cols.append(acc)
    return mat_from_columns(inv_cols, n)


# ---------------------------------------------------------------------------
# admissible modules
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AdmissibleModule:
    """(V, S_v, S_l, V^m): two involutions and a multiplicative subspace.

    Invariants (checked by validate): S_v and S_l are involutions with
    (S_v - I)^2 = 0, the image of S_l - I sits inside span(V^m) which
    S_l fixes pointwise, and S_l S_v is unipotent so the generated
    group is a 2-group.
    """

    dim: int
    sv: tuple[int, ...]
    sl: tuple[int, ...]
    vm: tuple[int, ...]

    def validate(self) -> None:
        n = self.dim
        if not 0 <= n <= MAX_DIM:
            raise ModuleInvariantError(f"dimension {n} outside [0, {MAX_DIM}]")
        if len(self.sv) != n or len(self.sl) != n:
            raise ModuleInvariantError("matrix size disagrees with dim")
        ident = identity(n)
        for name, m in (("Sv", self.sv), ("Sl", self.sl)):
            if mat_mul(m, m) != ident:
                raise ModuleInvariantError(f"{name} is not an involution")
        nv = mat_xor(self.sv, ident)
        if any(mat_mul(nv, nv)):
            raise ModuleInvariantError("(Sv - I)^2 != 0")
        vm_span = rref(self.vm)
        nl = mat_xor(self.sl, ident)
        for c in range(n):
            if not in_span(mat_vec(nl, 1 << c), vm_span):
                raise ModuleInvariantError("(Sl - I)V not inside span(Vm)")
        for v in self.vm:
            if mat_vec(self.sl, v) != v:
                raise ModuleInvariantError("Sl does not fix Vm pointwise")
        if not is_nilpotent(mat_xor(mat_mul(self.sl, self.sv), ident)):
            raise ModuleInvariantError("Sl*Sv is not unipotent (not a 2-group)")

    @property
    def vm_rank(self) -> int:
        return rank(self.vm)


def direct_sum(*mods: AdmissibleModule) -> AdmissibleModule:
    dim = sum(m.dim for m in mods)
    sv: list[int] = []
    sl: list[int] = []
    vm: list[int] = []
    shift = 0
    for m in mods:
        sv.extend(row << shift for row in m.sv)
        sl.extend(row << shift for row in m.sl)
        vm.extend(v << shift for v in m.vm)
        shift += m.dim
    return AdmissibleModule(dim, tuple(sv), tuple(sl), tuple(vm))


def change_basis(mod: AdmissibleModule, t_rows: Sequence[int]) -> AdmissibleModule:
    """Conjugate by the invertible coordinate change x -> T x."""
    t_inv = mat_inverse(t_rows)
    if t_inv is None:
        raise ValueError("basis change must be invertible")

    def conj(m: Sequence[int]) -> tuple[int, ...]:
        return mat_mul(mat_mul(t_rows, m), t_inv)

    return AdmissibleModule(
        mod.dim,
        conj(mod.sv),
        conj(mod.sl),
        tuple(mat_vec(t_rows, v) for v in mod.vm),
    )


MU2 = AdmissibleModule(1, (1,), (1,), (1,))
Z2 = AdmissibleModule(1, (1,), (1,), ())


@dataclass(frozen=True)
class SubquotientView:
    module: "AdmissibleModule"
    reps: tuple[int, ...]
    project: Callable[[int], int]


def subquotient(
    mod: AdmissibleModule, sub: Sequence[int], killed: Sequence[int]
) -> SubquotientView:
    """span(sub + killed) / span(killed) as an admissible module.

    Both spans must be stable under S_v and S_l.  The multiplicative
    subspace descends as the image of span(Vm) intersected with the
    subspace.
    """
    kill_ech = rref(killed)
    reps: list[int] = []
    ech = list(kill_ech)
    for v in sub:
        red = reduce_mod(v, ech)
        if red:
            reps.append(red)
            ech = rref(ech + [red])
    qdim = len(reps)
    basis_all = list(kill_ech) + reps
    n_kill = len(kill_ech)

    def project(v: int) -> int:
        combo = solve_combination(basis_all, v)
        if combo is None:
            raise ModuleInvariantError("vector escapes the subspace")
        out = 0
        for i in combo:
            if i >= n_kill:
                out |= 1 << (i - n_kill)
        return out

    def act(m: Sequence[int]) -> tuple[int, ...]:
        cols = [project(mat_vec(m, rep)) for rep in reps]
        return mat_from_columns(cols, qdim)

    vm_in = intersect(rref(mod.vm), rref(basis_all), mod.dim)
    qvm = sorted(rref([project(v) for v in vm_in]))
    q = AdmissibleModule(qdim, act(mod.sv), act(mod.sl), tuple(qvm))
    return SubquotientView(q, tuple(reps), project)


# ---------------------------------------------------------------------------
# chain modules
# ---------------------------------------------------------------------------


def _chain_matrix(k: int, moves_top_parity: bool) -> tuple[int, ...]:
    """Involution with (S - I) v_j = v_{j-1} exactly for j = k mod 2
    (moves_top_parity True) or j != k mod 2 (False)."""
    rows = []
    for r in range(k):
        mask = 1 << r
        c = r + 1
        if c < k:
            j = c + 1  # column c holds v_j
            if (j % 2 == k % 2) == moves_top_parity:
                mask |= 1 << c
        rows.append(mask)
    return tuple(rows)


@dataclass(frozen=True)
class LambdaModule:
    """Cyclic chain module of dimension k for involutions g1, g2 with
    generator v_k fixed by g2; lives inside the dihedral group whose
    rotation has order 2^(e+1)."""

    k: int
    e: int
    s1: tuple[int, ...]
    s2: tuple[int, ...]
    faithful: bool

    @property
    def t(self) -> tuple[int, ...]:
        return mat_mul(self.s2, self.s1)

    def t_order(self) -> int:
        return mat_order(self.t)


def build_lambda(k: int, e: int) -> LambdaModule | None:
    """DOES_NOT_EXIST (None) exactly when k > 2^(e+1)."""
    if k < 1 or e < 1:
        raise ValueError("need k >= 1 and e >= 1")
    if k > 1 << (e + 1):
        return None
    s1 = _chain_matrix(k, True)
    s2 = _chain_matrix(k, False)
    return LambdaModule(k, e, s1, s2, faithful=k > 1 << e)


def _t_base(k: int, j: int) -> int:
    # t(v_j) from the one-step action: (t-1)v_j = v_{j-1}, plus v_{j-2}
    # when j = k mod 2; indices below 1 vanish
    if j < 1 or j > k:
        return 0
    out = 1 << (j - 1)
    if j >= 2:
        out |= 1 << (j - 2)
    if j % 2 == k % 2 and j >= 3:
        out |= 1 << (j - 3)
    return out


def _t_recursive(k: int, m: int, j: int) -> int:
    if j < 1 or j > k:
        return 0
    if m == 0:
        return _t_base(k, j)
    return (1 << (j - 1)) ^ _t_recursive(k, m - 1, j - (1 << m))


def t_power(lam: LambdaModule, m: int, j: int) -> int:
    """t^(2^m) applied to v_j by matrix powering; asserted equal to the
    index-halving recursion it must satisfy."""
    if not 1 <= j <= lam.k:
        raise ValueError(f"index {j} outside 1..{lam.k}")
    if m < 0 or (1 << m) > lam.k:
        raise ValueError("need 0 <= m with 2^m <= k")
    direct = mat_vec(mat_pow(lam.t, 1 << m), 1 << (j - 1))
    recursive = _t_recursive(lam.k, m, j)
    assert direct == recursive, (lam.k, m, j, direct, recursive)
    return direct


def _is_valid_h2(h2: int) -> bool:
    return h2 >= 4 and h2 & (h2 - 1) == 0


def build_xi(h2: int) -> AdmissibleModule:
    """Chain module of dimension h2 in which sigma_l moves the even
    indices down, so the odd-index vectors span the multiplicative
    subspace."""
    if not _is_valid_h2(h2):
        raise ValueError("h2 must be a power of 2, at least 4")
    lam = build_lambda(h2, max(1, h2.bit_length() - 1))
    assert lam is not None
    # role assignment g1 = sigma_l, g2 = sigma_v: g1 moves j = k mod 2
    # (the evens), so image(sigma_l - 1) = ker(sigma_l - 1) = odd span
    module = AdmissibleModule(
        dim=h2,
        sv=lam.s2,
        sl=lam.s1,
        vm=tuple(1 << (j - 1) for j in range(1, h2 + 1, 2)),
    )
    module.validate()
    return module


@dataclass(frozen=True)
class PhiBlocModule:
    """Cyclic module of dimension 2d with even-span multiplicative part
    and generator at the top even index."""

    d: int
    module: AdmissibleModule
    generator: int

    def validate(self) -> None:
        self.module.validate()
        orbit = cyclic_span(self.module, self.generator)
        if len(orbit) != self.module.dim:
            raise ModuleInvariantError("phi-bloc is not cyclic on its generator")
        evens = rref([1 << (j - 1) for j in range(2, self.module.dim + 1, 2)])
        if rref(self.module.vm) != evens:
            raise ModuleInvariantError("multiplicative part must be the even span")


def phi_bloc_standard(d: int) -> PhiBlocModule:
    """Standard model: sigma_v moves even indices down, sigma_l moves odd
    indices down, V^m is the even span, generator v_2d."""
    if d < 1:
        raise ValueError("d must be >= 1")
    k = 2 * d
    module = AdmissibleModule(
        dim=k,
        sv=_chain_matrix(k, True),
        sl=_chain_matrix(k, False),
        vm=tuple(1 << (j - 1) for j in range(2, k + 1, 2)),
    )
    module.validate()
    return PhiBlocModule(d, module, 1 << (k - 1))


def build_phi_d(d: int, h2: int) -> PhiBlocModule | None:
    """Subquotient of build_xi(h2) spanned by the cosets of
    v_2 .. v_{2d+1} modulo v_1; DOES_NOT_EXIST (None) once 2d + 2 > h2."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if not _is_valid_h2(h2):
        raise ValueError("h2 must be a power of 2, at least 4")
    if 2 * d + 2 > h2:
        return None
    xi = build_xi(h2)
    sub = [1 << j for j in range(2 * d + 1)]  # v_1 .. v_{2d+1}
    view = subquotient(xi, sub, [1])  # kill v_1
    view.module.validate()
    bloc = PhiBlocModule(d, view.module, 1 << (2 * d - 1))
    bloc.validate()
    return bloc


# ---------------------------------------------------------------------------
# balancedness and the bloc obstruction
# ---------------------------------------------------------------------------


def has_mu2_sub(mod: AdmissibleModule) -> bool:
    """A line fixed by the whole action inside the multiplicative part;
    S_l fixes span(Vm) pointwise already, so only ker(S_v - I) matters."""
    mod.validate()
    nv = mat_xor(mod.sv, identity(mod.dim))
    fixed = kernel(nv, mod.dim)
    return bool(intersect(fixed, mod.vm, mod.dim))


def is_balanced(mod: AdmissibleModule) -> bool:
    mod.validate()
    return not has_mu2_sub(mod) and 2 * mod.vm_rank == mod.dim


def phi_bloc_obstruction(d: int, h2: int) -> bool:
    """PASS (True) iff t^(h2/2) preserves the even span of the standard
    2d-dimensional chain with g1 = sigma_v, g2 = sigma_l."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if not _is_valid_h2(h2):
        raise ValueError("h2 must be a power of 2, at least 4")
    mod = phi_bloc_standard(d).module
    t = mat_mul(mod.sl, mod.sv)  # image of sigma_l sigma_v
    phi = mat_pow(t, h2 // 2)
    vm_span = rref(mod.vm)
    return all(in_span(mat_vec(phi, v), vm_span) for v in mod.vm)


# ---------------------------------------------------------------------------
# decomposition into phi-blocs
# ---------------------------------------------------------------------------


def cyclic_span(mod: AdmissibleModule, x: int) -> list[int]:
    """Echelon basis of the span of the orbit of x under words in Sv, Sl."""
    if x == 0:
        return []
    ech = rref([x])
    frontier = [x]
    while frontier:
        nxt = []
        for v in frontier:
            for m in (mod.sv, mod.sl):
                w = reduce_mod(mat_vec(m, v), ech)
                if w:
                    ech = rref(ech + [w])
                    nxt.append(w)
        frontier = nxt
    return ech


def _descend(mod: AdmissibleModule, top: int, steps: int) -> list[int]:
    """[top, (Sv-1)top, (Sl-1)(Sv-1)top, ...], alternating, length steps+1."""
    ident = identity(mod.dim)
    nv = mat_xor(mod.sv, ident)
    nl = mat_xor(mod.sl, ident)
    chain = [top]
    for step in range(steps):
        op = nv if step % 2 == 0 else nl
        chain.append(mat_vec(op, chain[-1]))
    return chain


def _chain_from_generator(mod: AdmissibleModule, x: int) -> list[int]:
    """Descending chain from a multiplicative generator down to zero,
    zero excluded; for balanced modules the length is the dimension of
    the cyclic span of x."""
    ident = identity(mod.dim)
    nv = mat_xor(mod.sv, ident)
    nl = mat_xor(mod.sl, ident)
    chain = [x]
    for step in range(2 * mod.dim + 2):
        op = nv if step % 2 == 0 else nl
        nxt = mat_vec(op, chain[-1])
        if nxt == 0:
            return chain
        chain.append(nxt)
    raise ModuleInvariantError("chain fails to terminate")


_DECOMPOSE_VM_CAP = 16


def _decompose_chains(mod: AdmissibleModule) -> list[list[int]]:
    if mod.dim == 0:
        return []
    vm_basis = rref(mod.vm)
    if len(vm_basis) > _DECOMPOSE_VM_CAP:
        raise ValueError(
            f"decomposition enumerates span(Vm); rank {len(vm_basis)} exceeds "
            f"cap {_DECOMPOSE_VM_CAP}"
        )
    best_chain: list[int] | None = None
    for combo in range(1, 1 << len(vm_basis)):
        x = 0
        cc = combo
        while cc:
            i = (cc & -cc).bit_length() - 1
            x ^= vm_basis[i]
            cc &= cc - 1
        chain = _chain_from_generator(mod, x)
        if best_chain is None or len(chain) > len(best_chain):
            best_chain = chain
    assert best_chain is not None
    if len(best_chain) % 2 != 0:
        raise ModuleInvariantError("odd chain length on a balanced module")
    first = best_chain[::-1]  # ascending e_1 .. e_2a
    a = len(first) // 2
    if rank(first) != len(first):
        raise ModuleInvariantError("chain vectors are dependent")

    view = subquotient(mod, [1 << c for c in range(mod.dim)], first)
    rest_q = _decompose_chains(view.module)

    vm_images = [view.project(v) for v in mod.vm]

    def lift_to_vm(target_q: int) -> int:
        combo = solve_combination(vm_images, target_q)
        assert combo is not None, "quotient generator must lift into span(Vm)"
        out = 0
        for i in combo:
            out ^= mod.vm[i]
        return out

    nl = mat_xor(mod.sl, identity(mod.dim))
    chains = [first]
    evens = [first[2 * j - 1] for j in range(1, a + 1)]  # e_2, e_4, .., e_2a
    for chain_q in rest_q:
        b = len(chain_q) // 2
        y = lift_to_vm(chain_q[-1])
        raw = _descend(mod, y, 2 * b - 1)  # y_2b down to y_1
        bottom = mat_vec(nl, raw[-1])
        if bottom:
            combo = solve_combination(evens, bottom)
            if combo is None:
                raise ModuleInvariantError("chain tail escapes the leading bloc")
            if any(idx + 1 + b > a for idx in combo):
                raise ModuleInvariantError("maximality violated in correction")
            for idx in combo:
                y ^= evens[idx + b]  # shift e_2j up to e_{2j + 2b}
            raw = _descend(mod, y, 2 * b - 1)
            bottom = mat_vec(nl, raw[-1])
            assert bottom == 0, "correction must close the chain"
        chains.append(raw[::-1])
    return chains


def decompose_chain_basis(mod: AdmissibleModule) -> list[list[int]]:
    """Explicit chains (ascending e_1..e_2d per bloc) whose union is a
    basis of the module realizing it as a direct sum of phi-blocs;
    raises on unbalanced input."""
    mod.validate()
    if not is_balanced(mod):
        raise ModuleInvariantError("module is not balanced")
    chains = _decompose_chains(mod)
    flat = [v for c in chains for v in c]
    if rank(flat) != mod.dim:
        raise ModuleInvariantError("bloc chains do not span the module")
    chains.sort(key=len, reverse=True)
    return chains


def decompose_phi_blocs(mod: AdmissibleModule) -> list[PhiBlocModule] | None:
    """Decomposition into standard phi-blocs, largest first, or
    NOT_BALANCED (None) when the module is not balanced."""
    mod.validate()
    if not is_balanced(mod):
        return None
    return [phi_bloc_standard(len(c) // 2) for c in decompose_chain_basis(mod)]


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def module_to_dict(mod: AdmissibleModule) -> dict:
    return {
        "dim": mod.dim,
        "sv": list(mod.sv),
        "sl": list(mod.sl),
        "vm": list(mod.vm),
    }


def module_from_dict(data: dict) -> AdmissibleModule:
    mod = AdmissibleModule(
        int(data["dim"]),
        tuple(int(r) for r in data["sv"]),
        tuple(int(r) for r in data["sl"]),
        tuple(int(v) for v in data["vm"]),
    )
    mod.validate()
    return mod


def render_matrix(rows: Sequence[int], n: int) -> str:
    return "\n".join(
        " ".join(str((rows[r] >> c) & 1) for c in range(n)) for r in range(n)
    )
