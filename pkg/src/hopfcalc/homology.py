"""Chain complexes, exact homology dimensions, and the cobar oracle.

The two-sided cobar complex here is constructed from a coalgebra with a
grouplike basepoint and a comodule only, never from a Calculus object, so
it serves as an independent oracle against which the coefficient complexes
of flat connections are compared (both at the chain level and in homology).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from .fields import Field
from .hopf import BialgebraMorphism, HopfAlgebra
from .linalg import Matrix, Vec, basis_vec, tensor_decode, vec_add, vec_tensor
from .modules import BimoduleCoalgebra, ModComod, coassociativity_defects
from .reports import Report


@dataclass
class ChainComplex:
    """Graded spaces with differentials raising degree by one; d^2 = 0 is
    enforced at construction for every composable pair."""

    field: Field
    dims: List[int]
    diffs: List[Matrix]             # diffs[n]: dims[n] -> dims[n+1]

    def __post_init__(self):
        if len(self.dims) != len(self.diffs) + 1:
            raise ValueError("need one differential per adjacent pair of degrees")
        for n, d in enumerate(self.diffs):
            if (d.cols, d.rows) != (self.dims[n], self.dims[n + 1]):
                raise ValueError(f"differential {n} has the wrong shape")
        for n in range(len(self.diffs) - 1):
            if not (self.diffs[n + 1] @ self.diffs[n]).is_zero():
                raise ValueError(f"d^2 != 0 at degree {n}")

    @property
    def max_degree(self) -> int:
        return len(self.diffs)


@dataclass
class HomologyTable:
    entries: List[Tuple[int, int]]          # (degree, dim H_n)

    def dims(self) -> List[int]:
        return [d for _, d in self.entries]

    def __str__(self):
        return "  ".join(f"H_{n}={d}" for n, d in self.entries)


def homology_dims(cx: ChainComplex, max_degree: Optional[int] = None) -> HomologyTable:
    """dim H_n = ker(d_n) - rank(d_{n-1}), degree by degree."""
    top = cx.max_degree if max_degree is None else min(max_degree, cx.max_degree)
    entries = []
    prev_rank = 0
    for n in range(top):
        r = cx.diffs[n].rank()
        h = (cx.dims[n] - r) - prev_rank
        if h < 0:
            raise ValueError("negative homology dimension; complex is malformed")
        entries.append((n, h))
        prev_rank = r
    return HomologyTable(entries)


def cobar_complex(C: Union[HopfAlgebra, BimoduleCoalgebra], X: ModComod,
                  max_degree: int = 3) -> ChainComplex:
    """The unreduced two-sided cobar complex B(k, C, X): degree n space
    C^n (x) X, with k a C-comodule through the grouplike basepoint I and X
    through its (coassociative) coaction.

        d = -(I (x) .) + sum_j (-1)^(j-1) Delta_j + (-1)^n (id (x) rho)
    """
    if isinstance(C, BimoduleCoalgebra):
        comul, I, cd = C.comul, C.grouplike, C.dim
        f = C.field
    else:
        comul, I, cd = C.comul, C.unit, C.dim
        f = C.field
    if X.coaction is None:
        raise ValueError("comodule has no coaction")
    if coassociativity_defects(X):
        raise ValueError("coaction is not coassociative")
    xd = X.dim
    dims = [cd ** n * xd for n in range(max_degree + 1)]
    diffs: List[Matrix] = []
    for n in range(max_degree):
        d = Matrix(dims[n + 1], dims[n], f)
        front_stride = cd ** n * xd
        sign_n = f.one() if n % 2 == 0 else f.neg(f.one())
        for col in range(dims[n]):
            idx = tensor_decode(col, [cd] * n + [xd])
            acc: Vec = {}
            for u, cu in I.items():
                vec_add(f, acc, {u * front_stride + col: f.neg(cu)})
            sign = f.one()
            for j in range(n):
                prefix = 0
                for a in idx[:j]:
                    prefix = prefix * cd + a
                tail_dims = [cd] * (n - 1 - j) + [xd]
                tail_flat = 0
                tail_stride = 1
                for a, dd in zip(idx[j + 1:], tail_dims):
                    tail_flat = tail_flat * dd + a
                for dd in tail_dims:
                    tail_stride *= dd
                for fl2, c2 in comul[idx[j]].items():
                    vec_add(f, acc,
                            {(prefix * cd * cd + fl2) * tail_stride + tail_flat:
                             f.mul(sign, c2)})
                sign = f.neg(sign)
            prefix = 0
            for a in idx[:n]:
                prefix = prefix * cd + a
            for fl2, c2 in X.coaction[idx[n]].items():
                vec_add(f, acc, {prefix * cd * xd + fl2: f.mul(sign_n, c2)})
            d._init_column(col, acc)
        diffs.append(d)
    return ChainComplex(f, dims, diffs)


def _basepoint_coadjoint(calc) -> ModComod:
    """The comodule structure on B itself whose cobar complex matches the
    bare calculus: rho(b) = alpha(b_(1)) I beta(b_(3)) (x) b_(2), built
    from the structure maps directly (conjugation by S or S^-1 for the
    Hopf calculi)."""
    B = calc.B
    f = B.field
    if calc.kind == "general":
        C, alpha, beta, I = calc.C, calc.alpha, calc.beta, calc.C.grouplike
        def wrap(b1: int, b3: int) -> Vec:
            return C.ract(C.lact(alpha.apply(basis_vec(f, b1)), I),
                          beta.apply(basis_vec(f, b3)))
    else:
        conj = calc._conj
        def wrap(b1: int, b3: int) -> Vec:
            return B.multiply(basis_vec(f, b1), conj.apply(basis_vec(f, b3)))
    coaction: List[Vec] = []
    for i in range(B.dim):
        acc: Vec = {}
        for fl, c in B._iter_comul_basis(i, 2).items():
            b12, b3 = divmod(fl, B.dim)
            b1, b2 = divmod(b12, B.dim)
            vec_add(f, acc, vec_tensor(f, wrap(b1, b3), basis_vec(f, b2), B.dim), c)
        coaction.append(acc)
    return ModComod(B, B.dim, None, coaction,
                    coalgebra=calc.C, label="basepoint-coadjoint")


def compare_cotor(calc, X: Optional[ModComod], max_degree: Optional[int] = None) -> Report:
    """Compare the calculus-side complex with the cobar oracle.

    With X None the calculus itself is the complex (degree n space
    C^n (x) B) and the oracle coefficients are the basepoint-coadjoint
    comodule on B; with X given, the coefficient complex of the flat
    connection of its coaction is used.  Differentials are compared
    entrywise and homology dimensions per degree.
    """
    from .connections import coefficient_complex, connection_from_coaction

    max_degree = calc.max_degree if max_degree is None else max_degree
    rep = Report()
    C_or_H = calc.C if calc.kind == "general" else calc.B
    if X is None:
        side = ChainComplex(calc.field,
                            [calc.degree_dim(n) for n in range(max_degree + 1)],
                            [calc.differential(n) for n in range(max_degree)])
        oracle_coeffs = _basepoint_coadjoint(calc)
    else:
        conn = connection_from_coaction(calc, X)
        side = coefficient_complex(calc, conn, max_degree)
        oracle_coeffs = X
    oracle = cobar_complex(C_or_H, oracle_coeffs, max_degree)

    rep.add("degree_dims_equal", side.dims == oracle.dims,
            {"calculus": side.dims, "cobar": oracle.dims})
    for n in range(max_degree):
        w = (side.diffs[n] - oracle.diffs[n]).nonzero_witness()
        rep.add(f"differential_equal[{n}]", w is None,
                None if w is None else {"degree": n, "entry": w})
    hs = homology_dims(side, max_degree)
    ho = homology_dims(oracle, max_degree)
    rep.add(f"homology_dims={hs.dims()}", hs.dims() == ho.dims(),
            {"calculus": hs.dims(), "cobar": ho.dims()})
    return rep
