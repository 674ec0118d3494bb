"""Finite-dimensional Hopf algebras presented by structure constants.

An algebra here is a basis together with sparse tensors for multiplication,
unit, comultiplication, counit and antipode.  Every axiom is a finite
statement about basis tuples, so `verify_axioms` decides Hopf-ness by
enumeration and is the oracle all builders are validated against.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from .fields import Field
from .linalg import (Matrix, Vec, basis_vec, tensor_decode, tensor_encode,
                     vec_add, vec_eq, vec_scale, vec_sub, vec_tensor)
from .reports import Report


@dataclass
class HopfAlgebra:
    field: Field
    dim: int
    basis: List[str]
    mul: Dict[Tuple[int, int], Vec]     # (i, j) -> e_i * e_j
    unit: Vec
    comul: List[Vec]                    # i -> Delta(e_i) in H (x) H, flat
    counit: Dict[int, object]           # covector
    antipode: Matrix
    group_table: Optional[List[List[int]]] = None   # set by group builders
    _iter_comul_cache: dict = dc_field(default_factory=dict, repr=False)
    _antipode_inv: object = dc_field(default=False, repr=False)

    # -- structure maps ------------------------------------------------------

    def multiply(self, u: Vec, v: Vec) -> Vec:
        f = self.field
        out: Vec = {}
        for i, ci in u.items():
            for j, cj in v.items():
                prod = self.mul.get((i, j))
                if prod:
                    vec_add(f, out, prod, f.mul(ci, cj))
        return out

    def multiply_all(self, *vecs: Vec) -> Vec:
        out = self.unit
        for v in vecs:
            out = self.multiply(out, v)
        return out

    def comultiply(self, u: Vec) -> Vec:
        f = self.field
        out: Vec = {}
        for i, c in u.items():
            vec_add(f, out, self.comul[i], c)
        return out

    def counit_of(self, u: Vec):
        f = self.field
        acc = f.zero()
        for i, c in u.items():
            eps = self.counit.get(i)
            if eps is not None:
                acc = f.add(acc, f.mul(eps, c))
        return acc

    def antipode_of(self, u: Vec) -> Vec:
        return self.antipode.apply(u)

    def antipode_inverse(self) -> Optional[Matrix]:
        """Exact inverse of S, or None when S is singular."""
        if self._antipode_inv is False:
            self._antipode_inv = self.antipode.inverse()
        return self._antipode_inv

    def comultiply_iter(self, u: Vec, n: int) -> Vec:
        """Iterated coproduct: an element of H^{(x)(n+1)}.

        Computed by expanding the last tensor leg; coassociativity makes any
        other bracketing agree (a tested property, not an assumption).
        """
        if n < 0:
            raise ValueError("n must be >= 0")
        if n == 0:
            return dict(u)
        f = self.field
        out: Vec = {}
        for i, c in u.items():
            vec_add(f, out, self._iter_comul_basis(i, n), c)
        return out

    def _iter_comul_basis(self, i: int, n: int) -> Vec:
        key = (i, n)
        cached = self._iter_comul_cache.get(key)
        if cached is None:
            if n == 1:
                cached = self.comul[i]
            else:
                prev = self._iter_comul_basis(i, n - 1)  # in H^{(x)n}
                cached = self.expand_slot(prev, n, n - 1)
            self._iter_comul_cache[key] = cached
        return cached

    def expand_slot(self, t: Vec, nfactors: int, slot: int) -> Vec:
        """Apply the coproduct to one tensor leg: H^{(x)n} -> H^{(x)(n+1)}."""
        f = self.field
        d = self.dim
        dims = [d] * nfactors
        out: Vec = {}
        for flat, c in t.items():
            idx = tensor_decode(flat, dims)
            head = 0
            for a in idx[:slot]:
                head = head * d + a
            tail = idx[slot + 1:]
            for pair_flat, cc in self.comul[idx[slot]].items():
                new = head * d * d + pair_flat
                for a in tail:
                    new = new * d + a
                acc = f.add(out.get(new, f.zero()), f.mul(c, cc))
                if f.is_zero(acc):
                    out.pop(new, None)
                else:
                    out[new] = acc
        return out

    def is_commutative(self) -> bool:
        return all(vec_eq(self.field, self.mul.get((i, j), {}), self.mul.get((j, i), {}))
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    def is_cocommutative(self) -> bool:
        d = self.dim
        for i in range(d):
            flipped = {(fl % d) * d + fl // d: c for fl, c in self.comul[i].items()}
            if not vec_eq(self.field, flipped, self.comul[i]):
                return False
        return True

    def basis_name(self, i: int) -> str:
        return self.basis[i]

    def __repr__(self):
        return f"HopfAlgebra(dim={self.dim} over {self.field})"


# ---------------------------------------------------------------------------
# axiom verification


def verify_axioms(H: HopfAlgebra) -> Report:
    """Check every Hopf-algebra axiom on all basis tuples.

    The report lists one entry per axiom, with a witness basis tuple and the
    defect on the first failure found.
    """
    f = H.field
    rep = Report()
    d = H.dim
    ebasis = [basis_vec(f, i) for i in range(d)]

    def scan(name, pairs, lhs, rhs):
        for t in pairs:
            a, b = lhs(*t), rhs(*t)
            if not vec_eq(f, a, b):
                rep.add(name, False,
                        {"basis": [H.basis[i] for i in t], "defect": vec_sub(f, a, b)})
                return
        rep.add(name, True)

    idx = range(d)
    scan("associativity", itertools.product(idx, idx, idx),
         lambda i, j, k: H.multiply(H.mul.get((i, j), {}), ebasis[k]),
         lambda i, j, k: H.multiply(ebasis[i], H.mul.get((j, k), {})))
    scan("unit", itertools.product(idx),
         lambda i: H.multiply(H.unit, ebasis[i]), lambda i: ebasis[i])
    scan("unit_right", itertools.product(idx),
         lambda i: H.multiply(ebasis[i], H.unit), lambda i: ebasis[i])
    scan("coassociativity", itertools.product(idx),
         lambda i: H.expand_slot(H.comul[i], 2, 0),
         lambda i: H.expand_slot(H.comul[i], 2, 1))

    def counit_left(i):
        out: Vec = {}
        for fl, c in H.comul[i].items():
            a, b = divmod(fl, d)
            eps = H.counit.get(a)
            if eps is not None:
                vec_add(f, out, {b: f.mul(eps, c)})
        return out

    def counit_right(i):
        out: Vec = {}
        for fl, c in H.comul[i].items():
            a, b = divmod(fl, d)
            eps = H.counit.get(b)
            if eps is not None:
                vec_add(f, out, {a: f.mul(eps, c)})
        return out

    scan("counit", itertools.product(idx), counit_left, lambda i: ebasis[i])
    scan("counit_right", itertools.product(idx), counit_right, lambda i: ebasis[i])

    mul2 = lambda s, t: tensor_square_multiply(H, s, t)
    scan("comul_is_algebra_map", itertools.product(idx, idx),
         lambda i, j: H.comultiply(H.mul.get((i, j), {})),
         lambda i, j: mul2(H.comul[i], H.comul[j]))
    scan("comul_of_unit", [()],
         lambda: H.comultiply(H.unit), lambda: vec_tensor(f, H.unit, H.unit, d))
    scan("counit_is_algebra_map", itertools.product(idx, idx),
         lambda i, j: {0: H.counit_of(H.mul.get((i, j), {}))},
         lambda i, j: {0: f.mul(H.counit.get(i, f.zero()), H.counit.get(j, f.zero()))})
    scan("counit_of_unit", [()], lambda: {0: H.counit_of(H.unit)}, lambda: {0: f.one()})

    def convolve(i, left: bool) -> Vec:
        out: Vec = {}
        for fl, c in H.comul[i].items():
            a, b = divmod(fl, d)
            if left:
                term = H.multiply(H.antipode.apply(ebasis[a]), ebasis[b])
            else:
                term = H.multiply(ebasis[a], H.antipode.apply(ebasis[b]))
            vec_add(f, out, term, c)
        return out

    scan("antipode_left", itertools.product(idx),
         lambda i: convolve(i, True),
         lambda i: vec_scale(f, H.unit, H.counit.get(i, f.zero())))
    scan("antipode_right", itertools.product(idx),
         lambda i: convolve(i, False),
         lambda i: vec_scale(f, H.unit, H.counit.get(i, f.zero())))

    sinv = H.antipode_inverse()
    if sinv is not None:
        ident = Matrix.identity(d, f)
        ok = (sinv @ H.antipode == ident) and (H.antipode @ sinv == ident)
        rep.add("antipode_inverse", ok, None if ok else {"defect": "S^-1 S != id"})
    return rep


def tensor_square_multiply(H: HopfAlgebra, s: Vec, t: Vec) -> Vec:
    """Componentwise product on H (x) H: (a(x)b)(c(x)d) = ac (x) bd."""
    f = H.field
    d = H.dim
    out: Vec = {}
    for fl1, c1 in s.items():
        a, b = divmod(fl1, d)
        for fl2, c2 in t.items():
            cc, dd = divmod(fl2, d)
            left = H.mul.get((a, cc))
            right = H.mul.get((b, dd))
            if not left or not right:
                continue
            coeff = f.mul(c1, c2)
            for i, ci in left.items():
                for j, cj in right.items():
                    k = i * d + j
                    acc = f.add(out.get(k, f.zero()), f.mul(coeff, f.mul(ci, cj)))
                    if f.is_zero(acc):
                        out.pop(k, None)
                    else:
                        out[k] = acc
    return out


# ---------------------------------------------------------------------------
# bialgebra morphisms (the alpha / beta of the equivariant calculus)


@dataclass
class BialgebraMorphism:
    """A (possibly op-cop) bialgebra map, stored as a matrix target <- source."""

    source: HopfAlgebra
    target: HopfAlgebra
    matrix: Matrix
    variant: str = "plain"      # "plain" | "opcop"

    def apply(self, v: Vec) -> Vec:
        return self.matrix.apply(v)

    @classmethod
    def identity(cls, H: HopfAlgebra) -> "BialgebraMorphism":
        return cls(H, H, Matrix.identity(H.dim, H.field), "plain")

    @classmethod
    def antipode(cls, H: HopfAlgebra) -> "BialgebraMorphism":
        return cls(H, H, H.antipode, "opcop")

    @classmethod
    def antipode_inverse(cls, H: HopfAlgebra) -> "BialgebraMorphism":
        sinv = H.antipode_inverse()
        if sinv is None:
            raise ValueError("antipode is not invertible")
        return cls(H, H, sinv, "opcop")


def verify_morphism(m: BialgebraMorphism) -> Report:
    """Check the (op-cop) bialgebra morphism equations on all basis pairs."""
    S, T = m.source, m.target
    f = S.field
    rep = Report()
    opcop = m.variant == "opcop"
    ebasis = [basis_vec(f, i) for i in range(S.dim)]
    fb = [m.apply(e) for e in ebasis]

    ok, wit = True, None
    for i in range(S.dim):
        for j in range(S.dim):
            lhs = m.apply(S.mul.get((i, j), {}))
            rhs = T.multiply(fb[j], fb[i]) if opcop else T.multiply(fb[i], fb[j])
            if not vec_eq(f, lhs, rhs):
                ok, wit = False, {"basis": [S.basis[i], S.basis[j]],
                                  "defect": vec_sub(f, lhs, rhs)}
                break
        if not ok:
            break
    rep.add("multiplicative", ok, wit)
    rep.add("preserves_unit", vec_eq(f, m.apply(S.unit), T.unit))

    ok, wit = True, None
    dT = T.dim
    for i in range(S.dim):
        lhs = T.comultiply(fb[i])
        rhs: Vec = {}
        for fl, c in S.comul[i].items():
            a, b = divmod(fl, S.dim)
            pair = vec_tensor(f, fb[b], fb[a], dT) if opcop else vec_tensor(f, fb[a], fb[b], dT)
            vec_add(f, rhs, pair, c)
        if not vec_eq(f, lhs, rhs):
            ok, wit = False, {"basis": [S.basis[i]], "defect": vec_sub(f, lhs, rhs)}
            break
    rep.add("comultiplicative", ok, wit)

    ok = all(f.is_zero(f.sub(T.counit_of(fb[i]), S.counit.get(i, f.zero())))
             for i in range(S.dim))
    rep.add("preserves_counit", ok)
    return rep


# ---------------------------------------------------------------------------
# group machinery


def cyclic_table(n: int) -> List[List[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def symmetric_table(n: int) -> Tuple[List[List[int]], List[str]]:
    """Cayley table of S_n on the permutation basis, identity first."""
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for p in perms:
        row = []
        for q in perms:
            comp = tuple(p[q[i]] for i in range(n))
            row.append(index[comp])
        table.append(row)
    names = ["".join(str(x) for x in p) for p in perms]
    return table, names


def check_group_table(table: Sequence[Sequence[int]]) -> Tuple[int, List[int]]:
    """Validate a Cayley table; returns (identity index, inverse list)."""
    n = len(table)
    for row in table:
        if len(row) != n or any(not 0 <= x < n for x in row):
            raise ValueError("Cayley table is not square over {0..n-1}")
    ident = None
    for e in range(n):
        if all(table[e][j] == j and table[j][e] == j for j in range(n)):
            ident = e
            break
    if ident is None:
        raise ValueError("Cayley table has no identity element")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise ValueError(f"Cayley table is not associative at {(i, j, k)}")
    inverses = []
    for i in range(n):
        inv = next((j for j in range(n) if table[i][j] == ident and table[j][i] == ident), None)
        if inv is None:
            raise ValueError(f"element {i} has no inverse")
        inverses.append(inv)
    return ident, inverses


# ---------------------------------------------------------------------------
# builders


def build_group_algebra(table: Sequence[Sequence[int]], field: Field = None,
                        names: Optional[List[str]] = None) -> HopfAlgebra:
    """Group algebra k[G]: grouplike basis, S(g) = g^-1."""
    from .fields import QQ
    field = field or QQ
    ident, inverses = check_group_table(table)
    if ident != 0:
        raise ValueError("Cayley tables must list the identity first")
    n = len(table)
    f = field
    one = f.one()
    mul = {(i, j): {table[i][j]: one} for i in range(n) for j in range(n)}
    comul = [{i * n + i: one} for i in range(n)]
    counit = {i: one for i in range(n)}
    antipode = Matrix(n, n, f, {(inverses[i], i): one for i in range(n)})
    basis = names or (["e"] + [f"g{i}" if i > 1 else "g" for i in range(1, n)])
    return HopfAlgebra(f, n, basis, mul, {0: one}, comul, counit, antipode,
                       group_table=[list(r) for r in table])


def build_dual_group_algebra(table: Sequence[Sequence[int]], field: Field = None,
                             names: Optional[List[str]] = None) -> HopfAlgebra:
    """Function algebra k^G: pointwise product, convolution coproduct."""
    from .fields import QQ
    field = field or QQ
    ident, inverses = check_group_table(table)
    if ident != 0:
        raise ValueError("Cayley tables must list the identity first")
    n = len(table)
    f = field
    one = f.one()
    mul = {(i, i): {i: one} for i in range(n)}
    unit = {i: one for i in range(n)}
    comul = []
    for g in range(n):
        t: Vec = {}
        for a in range(n):
            for b in range(n):
                if table[a][b] == g:
                    t[a * n + b] = one
        comul.append(t)
    counit = {ident: one}
    antipode = Matrix(n, n, f, {(inverses[i], i): one for i in range(n)})
    basis = names or [f"d{i}" for i in range(n)]
    return HopfAlgebra(f, n, basis, mul, unit, comul, counit, antipode)


def _is_primitive_root(field: Field, q, n: int) -> bool:
    f = field
    acc = f.one()
    for k in range(1, n):
        acc = f.mul(acc, q)
        if f.is_zero(f.sub(acc, f.one())):
            return False
    return f.is_zero(f.sub(f.mul(acc, q), f.one()))


def build_taft(n: int, q, field: Field) -> HopfAlgebra:
    """Taft algebra of dimension n^2: g^n = 1, x^n = 0, xg = q gx.

    q must be a primitive n-th root of unity in the coefficient field.  The
    coproduct and antipode on monomials g^i x^j are computed from the
    generator values (Delta multiplicatively, S anti-multiplicatively).
    """
    f = field
    q = f.of(q)
    if n < 1:
        raise ValueError("n must be positive")
    if not _is_primitive_root(f, q, n):
        raise ValueError(f"{q} is not a primitive {n}-th root of unity in {f}")
    dim = n * n
    one = f.one()

    def mono(i: int, j: int) -> int:
        return i * n + j

    qpow = [f.one()]
    for _ in range(n * n):
        qpow.append(f.mul(qpow[-1], q))

    mul: Dict[Tuple[int, int], Vec] = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j + l >= n:
                        mul[(mono(i, j), mono(k, l))] = {}
                        continue
                    mul[(mono(i, j), mono(k, l))] = {mono((i + k) % n, j + l): qpow[j * k]}

    unit = {mono(0, 0): one}
    counit = {mono(i, 0): one for i in range(n)}

    # assemble a provisional algebra so we can compute Delta and S by
    # multiplying out generator images
    H = HopfAlgebra(f, dim, [], mul, unit, [], counit, Matrix.identity(dim, f))
    delta_g = {mono(1, 0) * dim + mono(1, 0): one}
    delta_x = {mono(0, 1) * dim + mono(0, 0): one, mono(1, 0) * dim + mono(0, 1): one}
    comul: List[Vec] = []
    for i in range(n):
        for j in range(n):
            t = vec_tensor(f, unit, unit, dim)
            for _ in range(i):
                t = tensor_square_multiply(H, t, delta_g)
            for _ in range(j):
                t = tensor_square_multiply(H, t, delta_x)
            comul.append(t)
    H.comul = comul

    s_g = basis_vec(f, mono((n - 1) % n, 0))
    s_x = vec_scale(f, H.multiply(s_g, basis_vec(f, mono(0, 1))), f.neg(one))
    antipode = Matrix(dim, dim, f)
    for i in range(n):
        for j in range(n):
            img = H.unit
            for _ in range(j):         # S is an anti-homomorphism: x-part first
                img = H.multiply(img, s_x)
            for _ in range(i):
                img = H.multiply(img, s_g)
            antipode._init_column(mono(i, j), img)
    H.antipode = antipode

    names = []
    for i in range(n):
        for j in range(n):
            gpart = "" if i == 0 else ("g" if i == 1 else f"g{i}")
            xpart = "" if j == 0 else ("x" if j == 1 else f"x{j}")
            names.append((gpart + xpart) or "1")
    H.basis = names
    return H


def build_sweedler(field: Field = None) -> HopfAlgebra:
    """Sweedler's 4-dimensional Hopf algebra, basis {1, g, x, gx}."""
    from .fields import QQ
    field = field or QQ
    if field.char == 2:
        raise ValueError("Sweedler's algebra requires characteristic != 2")
    H = build_taft(2, field.of(-1), field)
    return permute_basis(H, [0, 2, 1, 3])


def permute_basis(H: HopfAlgebra, perm: Sequence[int],
                  names: Optional[List[str]] = None) -> HopfAlgebra:
    """Relabel the basis: new e'_a = old e_{perm[a]}."""
    f = H.field
    d = H.dim
    inv = [0] * d
    for a, p in enumerate(perm):
        inv[p] = a

    def rv(v: Vec) -> Vec:
        return {inv[i]: c for i, c in v.items()}

    def rt(t: Vec) -> Vec:
        return {inv[fl // d] * d + inv[fl % d]: c for fl, c in t.items()}

    mul = {(a, b): rv(H.mul.get((perm[a], perm[b]), {})) for a in range(d) for b in range(d)}
    comul = [rt(H.comul[perm[a]]) for a in range(d)]
    counit = {inv[i]: c for i, c in H.counit.items()}
    antipode = Matrix(d, d, f, {(inv[i], inv[j]): v for (i, j), v in H.antipode.data.items()})
    table = None
    if H.group_table is not None:
        table = [[inv[H.group_table[perm[a]][perm[b]]] for b in range(d)] for a in range(d)]
    return HopfAlgebra(f, d, names or [H.basis[p] for p in perm], mul, rv(H.unit),
                       comul, counit, antipode, group_table=table)
