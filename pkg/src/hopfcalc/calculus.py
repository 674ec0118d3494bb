"""The three differential calculi, materialized degreewise.

Degree n lives on C^{(x)n} (x) B (for the two Hopf calculi C = B = H, so
degree n is H^{(x)(n+1)} with the last tensor factor in the B role).  The
differential and the graded product are sparse matrices per degree; the DGA
axioms (d^2 = 0, graded Leibniz, associativity) are verified as exact matrix
identities.

The differential is

    d(c^1 (x) ... (x) c^n (x) b)
      = -(I (x) c^1 (x) ... (x) b)
        + sum_j (-1)^(j-1) (... c^j_(1) (x) c^j_(2) ...)
        + (-1)^n (c^1 (x) ... (x) c^n (x) sand(b_(1), I, b_(3)) (x) b_(2))

where sand(a, c, z) is a . c . S^-1(z) for the S^-1 calculus, a . c . S(z)
for the S calculus, and alpha(a) . c . beta(z) through the bimodule actions
in the generalized case.  The product pattern is the same sandwich applied
to the legs of an iterated coproduct of the B slot.
"""
from __future__ import annotations

import itertools
from typing import Dict, List, Optional, Tuple

from .fields import Field
from .hopf import BialgebraMorphism, HopfAlgebra
from .linalg import (Matrix, Vec, basis_vec, identity_defect_witness,
                     tensor_decode, vec_add, vec_tensor)
from .modules import BimoduleCoalgebra
from .reports import Report

DEFAULT_MAX_DEGREE = 3


class Calculus:
    """One of the three differential graded algebras, built lazily per degree."""

    def __init__(self, kind: str, B: HopfAlgebra, *,
                 C: Optional[BimoduleCoalgebra] = None,
                 alpha: Optional[BialgebraMorphism] = None,
                 beta: Optional[BialgebraMorphism] = None,
                 max_degree: int = DEFAULT_MAX_DEGREE):
        if kind not in ("k", "khat", "general"):
            raise ValueError(f"unknown calculus kind {kind!r}")
        self.kind = kind
        self.B = B
        self.field: Field = B.field
        self.max_degree = max_degree
        self.C = C
        self.alpha = alpha
        self.beta = beta
        if kind == "k":
            conj = B.antipode_inverse()
            if conj is None:
                raise ValueError("the S^-1 calculus needs an invertible antipode")
            self._conj = conj
            self.cdim = B.dim
            self.basepoint: Vec = dict(B.unit)
        elif kind == "khat":
            self._conj = B.antipode
            self.cdim = B.dim
            self.basepoint = dict(B.unit)
        else:
            if C is None or alpha is None or beta is None:
                raise ValueError("the generalized calculus needs (C, alpha, beta)")
            self._conj = None
            self.cdim = C.dim
            self.basepoint = dict(C.grouplike)
        self._diff: Dict[int, Matrix] = {}
        self._prod: Dict[Tuple[int, int], Matrix] = {}
        self._sand_cache: Dict[Tuple[int, int, int], Vec] = {}
        self._sand0_cache: Dict[int, Vec] = {}

    # -- constructors --------------------------------------------------------

    @classmethod
    def k(cls, H: HopfAlgebra, max_degree: int = DEFAULT_MAX_DEGREE) -> "Calculus":
        return cls("k", H, max_degree=max_degree)

    @classmethod
    def khat(cls, H: HopfAlgebra, max_degree: int = DEFAULT_MAX_DEGREE) -> "Calculus":
        return cls("khat", H, max_degree=max_degree)

    @classmethod
    def general(cls, C: BimoduleCoalgebra, alpha: BialgebraMorphism,
                beta: BialgebraMorphism,
                max_degree: int = DEFAULT_MAX_DEGREE) -> "Calculus":
        return cls("general", C.B, C=C, alpha=alpha, beta=beta, max_degree=max_degree)

    # -- degree bookkeeping --------------------------------------------------

    def degree_dim(self, n: int) -> int:
        return self.cdim ** n * self.B.dim

    def degree_dims(self, n: int) -> List[int]:
        return [self.cdim] * n + [self.B.dim]

    def unit_element(self) -> Vec:
        return dict(self.B.unit)

    # -- structural building blocks ------------------------------------------

    def _comul_c(self, c: int) -> Vec:
        if self.kind == "general":
            return self.C.comul[c]
        return self.B.comul[c]

    def _sand(self, a: int, c: int, z: int) -> Vec:
        """alpha(e_a) . e_c . beta(e_z) in C (the sandwich on one slot)."""
        key = (a, c, z)
        out = self._sand_cache.get(key)
        if out is None:
            f = self.field
            if self.kind == "general":
                out = self.C.ract(self.C.lact(self.alpha.apply(basis_vec(f, a)),
                                              basis_vec(f, c)),
                                  self.beta.apply(basis_vec(f, z)))
            else:
                out = self.B.multiply(
                    self.B.multiply(basis_vec(f, a), basis_vec(f, c)),
                    self._conj.apply(basis_vec(f, z)))
            self._sand_cache[key] = out
        return out

    def _sand0(self, b: int) -> Vec:
        """sand(b_(1), I, b_(3)) (x) b_(2), an element of C (x) B."""
        out = self._sand0_cache.get(b)
        if out is None:
            f = self.field
            bdim = self.B.dim
            out = {}
            for fl, c in self.B._iter_comul_basis(b, 2).items():
                b12, b3 = divmod(fl, bdim)
                b1, b2 = divmod(b12, bdim)
                wrap: Vec = {}
                for i, ci in self.basepoint.items():
                    vec_add(f, wrap, self._sand(b1, i, b3), ci)
                vec_add(f, out, vec_tensor(f, wrap, basis_vec(f, b2), bdim), c)
            self._sand0_cache[b] = out
        return out

    # -- the differential ----------------------------------------------------

    def differential(self, n: int) -> Matrix:
        if not 0 <= n <= self.max_degree:
            raise ValueError(f"degree {n} outside materialized range 0..{self.max_degree}")
        m = self._diff.get(n)
        if m is None:
            m = self._build_differential(n)
            self._diff[n] = m
        return m

    def _build_differential(self, n: int) -> Matrix:
        f = self.field
        cd, bd = self.cdim, self.B.dim
        src = self.degree_dim(n)
        tgt = self.degree_dim(n + 1)
        front_stride = cd ** n * bd
        neg = f.neg(f.one())
        sign_n = f.one() if n % 2 == 0 else neg
        out = Matrix(tgt, src, f)
        for col in range(src):
            idx = tensor_decode(col, self.degree_dims(n))
            acc: Vec = {}
            # - I (x) (...)
            for u, cu in self.basepoint.items():
                vec_add(f, acc, {u * front_stride + col: f.mul(neg, cu)})
            # interior coproducts, alternating signs
            sign = f.one()
            for j in range(n):
                prefix = 0
                for a in idx[:j]:
                    prefix = prefix * cd + a
                tail = idx[j + 1:]
                tail_dims = self.degree_dims(n)[j + 1:]
                tail_flat = 0
                for a, d in zip(tail, tail_dims):
                    tail_flat = tail_flat * d + a
                tail_stride = 1
                for d in tail_dims:
                    tail_stride *= d
                for fl2, c2 in self._comul_c(idx[j]).items():
                    fl = (prefix * cd * cd + fl2) * tail_stride + tail_flat
                    vec_add(f, acc, {fl: f.mul(sign, c2)})
                sign = f.neg(sign)
            # last term: sandwich the B slot around the basepoint
            prefix = 0
            for a in idx[:n]:
                prefix = prefix * cd + a
            for fl2, c2 in self._sand0(idx[n]).items():
                vec_add(f, acc, {prefix * cd * bd + fl2: f.mul(sign_n, c2)})
            out._init_column(col, acc)
        return out

    def differential_apply(self, n: int, v: Vec) -> Vec:
        return self.differential(n).apply(v)

    # -- the graded product ----------------------------------------------------

    def product(self, n: int, m: int) -> Matrix:
        if n < 0 or m < 0 or n + m > self.max_degree:
            raise ValueError(f"degree overflow: {n}+{m} > {self.max_degree}")
        key = (n, m)
        p = self._prod.get(key)
        if p is None:
            p = self._build_product(n, m)
            self._prod[key] = p
        return p

    def _build_product(self, n: int, m: int) -> Matrix:
        f = self.field
        cd, bd = self.cdim, self.B.dim
        dim_u, dim_v = self.degree_dim(n), self.degree_dim(m)
        tgt = self.degree_dim(n + m)
        out = Matrix(tgt, dim_u * dim_v, f)
        for cu in range(dim_u):
            uidx = tensor_decode(cu, self.degree_dims(n))
            prefix = 0
            for a in uidx[:n]:
                prefix = prefix * cd + a
            b = uidx[n]
            if m == 0:
                for cv in range(dim_v):
                    prod = self.B.mul.get((b, cv), {})
                    col: Vec = {prefix * bd + k: c for k, c in prod.items()}
                    out._init_column(cu * dim_v + cv, col)
                continue
            leg_dims = [bd] * (2 * m + 1)
            legs = [(tensor_decode(fl, leg_dims), c)
                    for fl, c in self.B._iter_comul_basis(b, 2 * m).items()]
            for cv in range(dim_v):
                vidx = tensor_decode(cv, self.degree_dims(m))
                acc: Vec = {}
                for l, cl in legs:
                    term: Vec = {prefix: cl}
                    dead = False
                    for k in range(1, m + 1):
                        piece = self._sand(l[k - 1], vidx[k - 1], l[2 * m + 1 - k])
                        if not piece:
                            dead = True
                            break
                        term = vec_tensor(f, term, piece, cd)
                    if dead:
                        continue
                    final = self.B.mul.get((l[m], vidx[m]), {})
                    if not final:
                        continue
                    vec_add(f, acc, vec_tensor(f, term, final, bd))
                out._init_column(cu * dim_v + cv, acc)
        return out

    def product_apply(self, u: Vec, n: int, v: Vec, m: int) -> Vec:
        p = self.product(n, m)
        f = self.field
        dim_v = self.degree_dim(m)
        t: Vec = {}
        for i, ci in u.items():
            for j, cj in v.items():
                t[i * dim_v + j] = f.mul(ci, cj)
        return p.apply(t)

    def __repr__(self):
        return f"Calculus({self.kind}, B dim {self.B.dim}, C dim {self.cdim})"


# ---------------------------------------------------------------------------
# DGA verification


def verify_dga(calc: Calculus, max_degree: Optional[int] = None) -> Report:
    """d^2 = 0, graded Leibniz and product associativity, all as exact sparse
    matrix identities across the materialized degrees."""
    max_degree = calc.max_degree if max_degree is None else max_degree
    if max_degree < 2:
        raise ValueError("need max_degree >= 2 to see the DGA axioms")
    f = calc.field
    rep = Report()

    def eye(n):
        return Matrix.identity(calc.degree_dim(n), f)

    for n in range(max_degree):
        w = identity_defect_witness(
            f, [(1, [calc.differential(n + 1), calc.differential(n)])])
        rep.add(f"d_squared_zero[{n}]", w is None,
                None if w is None else _witness(calc, w, [n]))

    for n in range(max_degree):
        for m in range(max_degree - n):
            sign = 1 if n % 2 == 0 else -1
            w = identity_defect_witness(f, [
                (1, [calc.differential(n + m), calc.product(n, m)]),
                (-1, [calc.product(n + 1, m), (calc.differential(n), eye(m))]),
                (-sign, [calc.product(n, m + 1), (eye(n), calc.differential(m))]),
            ])
            rep.add(f"leibniz[{n},{m}]", w is None,
                    None if w is None else _witness(calc, w, [n, m]))

    for n in range(max_degree + 1):
        for m in range(max_degree + 1 - n):
            for l in range(max_degree + 1 - n - m):
                w = identity_defect_witness(f, [
                    (1, [calc.product(n + m, l), (calc.product(n, m), eye(l))]),
                    (-1, [calc.product(n, m + l), (eye(n), calc.product(m, l))]),
                ])
                rep.add(f"associativity[{n},{m},{l}]", w is None,
                        None if w is None else _witness(calc, w, [n, m, l]))

    one = calc.unit_element()
    ok = True
    for n in range(max_degree + 1):
        for i in range(calc.degree_dim(n)):
            e = basis_vec(f, i)
            if calc.product_apply(one, 0, e, n) != e or calc.product_apply(e, n, one, 0) != e:
                ok = False
                break
        if not ok:
            break
    rep.add("graded_unit", ok)
    return rep


def _witness(calc: Calculus, w, degs):
    row, col, val = w
    dims = [calc.degree_dim(d) for d in degs]
    return {"degrees": degs, "column": tensor_decode(col, dims), "value": val}


# ---------------------------------------------------------------------------
# specialization of the generalized calculus to the two Hopf calculi


def specialization_check(H: HopfAlgebra, max_degree: int = DEFAULT_MAX_DEGREE) -> Report:
    """The generalized calculus with alpha = id, beta = S (resp. S^-1) over
    C = B = H must reproduce the S (resp. S^-1) calculus matrix-for-matrix."""
    rep = Report()
    C = BimoduleCoalgebra.from_hopf(H)
    ident = BialgebraMorphism.identity(H)

    pairs = [("khat", Calculus.khat(H, max_degree),
              Calculus.general(C, ident, BialgebraMorphism.antipode(H), max_degree))]
    if H.antipode_inverse() is not None:
        pairs.append(("k", Calculus.k(H, max_degree),
                      Calculus.general(C, ident, BialgebraMorphism.antipode_inverse(H),
                                       max_degree)))
    for name, direct, general in pairs:
        ok_d = all(direct.differential(n) == general.differential(n)
                   for n in range(max_degree + 1))
        rep.add(f"{name}_differentials_match", ok_d)
        ok_p = all(direct.product(n, m) == general.product(n, m)
                   for n in range(max_degree + 1) for m in range(max_degree + 1 - n))
        rep.add(f"{name}_products_match", ok_p)
    return rep
