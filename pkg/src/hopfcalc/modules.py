"""Modules, comodules and their compatibility conditions.

Covers the two sandwich compatibility conditions (the S^-1 flavour used by
Hopf-cyclic coefficients and the S flavour of Yetter-Drinfeld theory),
stability, the generalized (alpha, beta)-equivariance over a bimodule
coalgebra, the sandwich bimodule action on tensor products, and the
conjugation-groupoid grading of comodules over group algebras.

A coaction candidate is *not* required to be coassociative at construction
time: the flat-connection correspondence needs non-coassociative candidates
to be representable, so coassociativity is a separately reported check.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple

from .fields import Field
from .hopf import BialgebraMorphism, HopfAlgebra
from .linalg import (Matrix, Vec, basis_vec, tensor_decode, vec_add, vec_eq,
                     vec_scale, vec_sub, vec_tensor)
from .reports import Report


@dataclass
class BimoduleCoalgebra:
    """A coalgebra C carrying a compatible B-bimodule structure and a
    distinguished grouplike element (the basepoint of the differentials)."""

    B: HopfAlgebra
    dim: int
    comul: List[Vec]                        # c -> C (x) C, flat
    counit: Dict[int, object]
    left: Dict[Tuple[int, int], Vec]        # (b_i, c_a) -> b_i . c_a
    right: Dict[Tuple[int, int], Vec]       # (c_a, b_i) -> c_a . b_i
    grouplike: Vec

    @property
    def field(self) -> Field:
        return self.B.field

    @classmethod
    def from_hopf(cls, H: HopfAlgebra) -> "BimoduleCoalgebra":
        """H as a bimodule coalgebra over itself (regular actions, I = 1)."""
        mul = {(i, j): dict(v) for (i, j), v in H.mul.items()}
        mul_r = {(a, i): dict(H.mul.get((a, i), {})) for a in range(H.dim) for i in range(H.dim)}
        return cls(H, H.dim, [dict(t) for t in H.comul], dict(H.counit),
                   mul, mul_r, dict(H.unit))

    def lact(self, b: Vec, c: Vec) -> Vec:
        f = self.field
        out: Vec = {}
        for i, ci in b.items():
            for a, ca in c.items():
                img = self.left.get((i, a))
                if img:
                    vec_add(f, out, img, f.mul(ci, ca))
        return out

    def ract(self, c: Vec, b: Vec) -> Vec:
        f = self.field
        out: Vec = {}
        for a, ca in c.items():
            for i, ci in b.items():
                img = self.right.get((a, i))
                if img:
                    vec_add(f, out, img, f.mul(ca, ci))
        return out

    def comultiply(self, c: Vec) -> Vec:
        f = self.field
        out: Vec = {}
        for a, ca in c.items():
            vec_add(f, out, self.comul[a], ca)
        return out


def verify_bimodule_coalgebra(C: BimoduleCoalgebra) -> Report:
    """Coassociativity, counit, bimodule axioms, the bimodule-coalgebra
    compatibility of Delta_C, and grouplikeness of the basepoint.

    A basepoint with counit value != 1 is reported as a warning check (it
    cannot arise from a coalgebra map k -> C) but does not fail the report.
    """
    f = C.field
    B = C.B
    d = C.dim
    rep = Report()
    eb = [basis_vec(f, i) for i in range(B.dim)]
    ec = [basis_vec(f, a) for a in range(d)]

    def expand(t: Vec, slot: int) -> Vec:
        out: Vec = {}
        for fl, coeff in t.items():
            a, b = divmod(fl, d)
            if slot == 0:
                for fl2, c2 in C.comul[a].items():
                    vec_add(f, out, {fl2 * d + b: f.mul(coeff, c2)})
            else:
                for fl2, c2 in C.comul[b].items():
                    vec_add(f, out, {a * d * d + fl2: f.mul(coeff, c2)})
        return out

    ok, wit = True, None
    for a in range(d):
        l, r = expand(C.comul[a], 0), expand(C.comul[a], 1)
        if not vec_eq(f, l, r):
            ok, wit = False, {"basis": a, "defect": vec_sub(f, l, r)}
            break
    rep.add("coassociativity", ok, wit)

    ok = True
    for a in range(d):
        l: Vec = {}
        r: Vec = {}
        for fl, c in C.comul[a].items():
            u, v = divmod(fl, d)
            vec_add(f, l, {v: f.mul(C.counit.get(u, f.zero()), c)})
            vec_add(f, r, {u: f.mul(C.counit.get(v, f.zero()), c)})
        if not (vec_eq(f, l, ec[a]) and vec_eq(f, r, ec[a])):
            ok = False
            break
    rep.add("counit", ok)

    ok = all(vec_eq(f, C.lact(B.mul.get((i, j), {}), ec[a]),
                    C.lact(eb[i], C.lact(eb[j], ec[a])))
             for i, j, a in itertools.product(range(B.dim), range(B.dim), range(d)))
    rep.add("left_action_associative", ok)
    ok = all(vec_eq(f, C.ract(ec[a], B.mul.get((i, j), {})),
                    C.ract(C.ract(ec[a], eb[i]), eb[j]))
             for i, j, a in itertools.product(range(B.dim), range(B.dim), range(d)))
    rep.add("right_action_associative", ok)
    ok = all(vec_eq(f, C.lact(eb[i], C.ract(ec[a], eb[j])),
                    C.ract(C.lact(eb[i], ec[a]), eb[j]))
             for i, j, a in itertools.product(range(B.dim), range(B.dim), range(d)))
    rep.add("actions_commute", ok)
    ok = all(vec_eq(f, C.lact(B.unit, ec[a]), ec[a]) and
             vec_eq(f, C.ract(ec[a], B.unit), ec[a]) for a in range(d))
    rep.add("actions_unital", ok)

    # Delta_C(b c b') = b_(1) c_(1) b'_(1) (x) b_(2) c_(2) b'_(2)
    ok, wit = True, None
    for i, a, j in itertools.product(range(B.dim), range(d), range(B.dim)):
        lhs = C.comultiply(C.ract(C.lact(eb[i], ec[a]), eb[j]))
        rhs: Vec = {}
        for fl_b, cb in B.comul[i].items():
            b1, b2 = divmod(fl_b, B.dim)
            for fl_c, cc in C.comul[a].items():
                c1, c2 = divmod(fl_c, d)
                for fl_p, cp in B.comul[j].items():
                    p1, p2 = divmod(fl_p, B.dim)
                    first = C.ract(C.lact(eb[b1], ec[c1]), eb[p1])
                    second = C.ract(C.lact(eb[b2], ec[c2]), eb[p2])
                    vec_add(f, rhs, vec_tensor(f, first, second, d),
                            f.mul(cb, f.mul(cc, cp)))
        if not vec_eq(f, lhs, rhs):
            ok, wit = False, {"basis": (i, a, j), "defect": vec_sub(f, lhs, rhs)}
            break
    rep.add("comul_is_bimodule_map", ok, wit)

    gl = C.comultiply(C.grouplike)
    rep.add("basepoint_grouplike",
            vec_eq(f, gl, vec_tensor(f, C.grouplike, C.grouplike, d)))
    eps = f.zero()
    for a, c in C.grouplike.items():
        eps = f.add(eps, f.mul(C.counit.get(a, f.zero()), c))
    # a coalgebra map k -> C forces counit value 1 on the basepoint; report
    # the value as a warning rather than a failure
    rep.add(f"basepoint_counit_value={f.to_str(eps)}", True)
    return rep


@dataclass
class ModComod:
    """A vector space with an action of B and/or a coaction of C.

    For the Hopf-algebra setting C = B = H and ``coalgebra`` is None; the
    generalized setting stores the bimodule coalgebra explicitly.
    """

    algebra: HopfAlgebra
    dim: int
    action: Optional[Dict[Tuple[int, int], Vec]] = None    # (b_i, x_a) -> X
    coaction: Optional[List[Vec]] = None                   # a -> C (x) X, flat
    coalgebra: Optional[BimoduleCoalgebra] = None
    label: str = ""

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def codim(self) -> int:
        return self.coalgebra.dim if self.coalgebra is not None else self.algebra.dim

    def act(self, h: Vec, x: Vec) -> Vec:
        if self.action is None:
            raise ValueError("module has no action")
        f = self.field
        out: Vec = {}
        for i, ci in h.items():
            for a, ca in x.items():
                img = self.action.get((i, a))
                if img:
                    vec_add(f, out, img, f.mul(ci, ca))
        return out

    def coact(self, x: Vec) -> Vec:
        if self.coaction is None:
            raise ValueError("module has no coaction")
        f = self.field
        out: Vec = {}
        for a, c in x.items():
            vec_add(f, out, self.coaction[a], c)
        return out

    def copy_with(self, action=None, coaction=None, label=None) -> "ModComod":
        return ModComod(self.algebra, self.dim,
                        action if action is not None else
                        ({k: dict(v) for k, v in self.action.items()} if self.action else None),
                        coaction if coaction is not None else
                        ([dict(t) for t in self.coaction] if self.coaction else None),
                        self.coalgebra, label if label is not None else self.label)

    def __repr__(self):
        tag = self.label or "ModComod"
        return f"{tag}(dim={self.dim} over {self.algebra!r})"


@dataclass
class DefectReport:
    """Outcome of a bilinear compatibility check: the full defect tensor per
    basis pair, so equalities of defects (not just booleans) can be asserted."""

    name: str
    defects: Dict[tuple, Vec]

    @property
    def passed(self) -> bool:
        return not self.defects

    def witness(self):
        if not self.defects:
            return None
        key = min(self.defects)
        return {"basis": key, "defect": self.defects[key]}

    def __repr__(self):
        return f"DefectReport({self.name}: {'pass' if self.passed else f'{len(self.defects)} defects'})"


# ---------------------------------------------------------------------------
# structure-map axioms (reported separately; see module docstring)


def check_module_axioms(X: ModComod) -> Report:
    f = X.field
    B = X.algebra
    rep = Report()
    eb = [basis_vec(f, i) for i in range(B.dim)]
    ex = [basis_vec(f, a) for a in range(X.dim)]
    ok, wit = True, None
    for i, j, a in itertools.product(range(B.dim), range(B.dim), range(X.dim)):
        lhs = X.act(B.mul.get((i, j), {}), ex[a])
        rhs = X.act(eb[i], X.act(eb[j], ex[a]))
        if not vec_eq(f, lhs, rhs):
            ok, wit = False, {"basis": (i, j, a), "defect": vec_sub(f, lhs, rhs)}
            break
    rep.add("action_associative", ok, wit)
    rep.add("action_unital", all(vec_eq(f, X.act(B.unit, ex[a]), ex[a])
                                 for a in range(X.dim)))
    return rep


def coassociativity_defects(X: ModComod) -> Dict[tuple, Vec]:
    """Per-basis defect of (Delta_C (x) id) rho - (id (x) rho) rho."""
    f = X.field
    dc = X.codim
    C = X.coalgebra
    out: Dict[tuple, Vec] = {}
    for a in range(X.dim):
        lhs: Vec = {}
        rhs: Vec = {}
        for fl, c in X.coaction[a].items():
            ci, xb = divmod(fl, X.dim)
            cm = C.comul[ci] if C is not None else X.algebra.comul[ci]
            for fl2, c2 in cm.items():
                vec_add(f, lhs, {fl2 * X.dim + xb: f.mul(c, c2)})
            for fl2, c2 in X.coaction[xb].items():
                vec_add(f, rhs, {ci * dc * X.dim + fl2: f.mul(c, c2)})
        d = vec_sub(f, lhs, rhs)
        if d:
            out[(a,)] = d
    return out


def check_comodule_axioms(X: ModComod) -> Report:
    f = X.field
    rep = Report()
    defects = coassociativity_defects(X)
    rep.add("coaction_coassociative", not defects,
            None if not defects else {"basis": min(defects), "defect": defects[min(defects)]})
    counit = X.coalgebra.counit if X.coalgebra is not None else X.algebra.counit
    ok = True
    for a in range(X.dim):
        acc: Vec = {}
        for fl, c in X.coaction[a].items():
            ci, xb = divmod(fl, X.dim)
            eps = counit.get(ci)
            if eps is not None:
                vec_add(f, acc, {xb: f.mul(eps, c)})
        if not vec_eq(f, acc, basis_vec(f, a)):
            ok = False
            break
    rep.add("coaction_counital", ok)
    return rep


# ---------------------------------------------------------------------------
# compatibility conditions


def _sandwich_compat(X: ModComod, conjugator: Matrix, name: str) -> DefectReport:
    """Common core of the two Hopf compatibility checks: compares
    rho(h x) against h_(1) x_(-1) conj(h_(3)) (x) h_(2) x_(0)."""
    f = X.field
    H = X.algebra
    defects: Dict[tuple, Vec] = {}
    dX = X.dim
    for i in range(H.dim):
        legs3 = H.comultiply_iter(basis_vec(f, i), 2)
        for a in range(X.dim):
            lhs = X.coact(X.act(basis_vec(f, i), basis_vec(f, a)))
            rhs: Vec = {}
            for fl, c in legs3.items():
                h12, h3 = divmod(fl, H.dim)
                h1, h2 = divmod(h12, H.dim)
                tail = conjugator.apply(basis_vec(f, h3))
                for fl2, c2 in X.coaction[a].items():
                    xm, x0 = divmod(fl2, dX)
                    left = H.multiply(H.multiply(basis_vec(f, h1), basis_vec(f, xm)), tail)
                    right = X.act(basis_vec(f, h2), basis_vec(f, x0))
                    vec_add(f, rhs, vec_tensor(f, left, right, dX), f.mul(c, c2))
            d = vec_sub(f, lhs, rhs)
            if d:
                defects[(i, a)] = d
    return DefectReport(name, defects)


def check_ayd(X: ModComod) -> DefectReport:
    """The S^-1 sandwich compatibility (coefficients of Hopf-cyclic theory)."""
    sinv = X.algebra.antipode_inverse()
    if sinv is None:
        raise ValueError("antipode is not invertible")
    return _sandwich_compat(X, sinv, "ayd")


def check_yd(X: ModComod) -> DefectReport:
    """The S sandwich (Yetter-Drinfeld) compatibility."""
    return _sandwich_compat(X, X.algebra.antipode, "yd")


def check_stable(X: ModComod) -> bool:
    """True iff acting with x_(-1) on x_(0) returns x, for all basis x."""
    f = X.field
    for a in range(X.dim):
        acc: Vec = {}
        for fl, c in X.coaction[a].items():
            hm, x0 = divmod(fl, X.dim)
            vec_add(f, acc, X.act(basis_vec(f, hm), basis_vec(f, x0)), c)
        if not vec_eq(f, acc, basis_vec(f, a)):
            return False
    return True


def check_equivariant(X: ModComod, C: BimoduleCoalgebra,
                      alpha: BialgebraMorphism, beta: BialgebraMorphism) -> DefectReport:
    """The (alpha, beta)-equivariance condition over a bimodule coalgebra:
    rho(b x) = alpha(b_(1)) x_(-1) beta(b_(3)) (x) b_(2) x_(0)."""
    f = X.field
    B = C.B
    dX = X.dim
    defects: Dict[tuple, Vec] = {}
    for i in range(B.dim):
        legs3 = B.comultiply_iter(basis_vec(f, i), 2)
        for a in range(X.dim):
            lhs = X.coact(X.act(basis_vec(f, i), basis_vec(f, a)))
            rhs: Vec = {}
            for fl, c in legs3.items():
                b12, b3 = divmod(fl, B.dim)
                b1, b2 = divmod(b12, B.dim)
                av = alpha.apply(basis_vec(f, b1))
                bv = beta.apply(basis_vec(f, b3))
                for fl2, c2 in X.coaction[a].items():
                    xm, x0 = divmod(fl2, dX)
                    left = C.ract(C.lact(av, basis_vec(f, xm)), bv)
                    right = X.act(basis_vec(f, b2), basis_vec(f, x0))
                    vec_add(f, rhs, vec_tensor(f, left, right, dX), f.mul(c, c2))
            d = vec_sub(f, lhs, rhs)
            if d:
                defects[(i, a)] = d
    return DefectReport("equivariant", defects)


# ---------------------------------------------------------------------------
# sandwich bimodule action on tensor products


@dataclass
class Bimodule:
    """An H-bimodule given by left and right action tensors."""

    algebra: HopfAlgebra
    dim: int
    left: Dict[Tuple[int, int], Vec]
    right: Dict[Tuple[int, int], Vec]

    @classmethod
    def regular(cls, H: HopfAlgebra) -> "Bimodule":
        act = {(i, j): dict(v) for (i, j), v in H.mul.items()}
        return cls(H, H.dim, act, act)

    @classmethod
    def from_left_module(cls, X: ModComod) -> "Bimodule":
        # trivial right action through the counit; only the left action is
        # used when the module sits in the last tensor slot
        H = X.algebra
        f = H.field
        right = {(a, i): vec_scale(f, basis_vec(f, a), H.counit.get(i, f.zero()))
                 for a in range(X.dim) for i in range(H.dim)}
        return cls(H, X.dim, {k: dict(v) for k, v in X.action.items()}, right)

    def lact(self, h: Vec, x: Vec) -> Vec:
        f = self.algebra.field
        out: Vec = {}
        for i, ci in h.items():
            for a, ca in x.items():
                img = self.left.get((i, a))
                if img:
                    vec_add(f, out, img, f.mul(ci, ca))
        return out

    def ract(self, x: Vec, h: Vec) -> Vec:
        f = self.algebra.field
        out: Vec = {}
        for a, ca in x.items():
            for i, ci in h.items():
                img = self.right.get((a, i))
                if img:
                    vec_add(f, out, img, f.mul(ca, ci))
        return out


def oslash_action(slots: List[Bimodule], h: Vec, t: Vec,
                  conjugator: Optional[Matrix] = None) -> Vec:
    """The sandwich left action on X_0 (x) ... (x) X_n.

    Slot i < n receives h_(i+1) . x^i . S^-1(h_(2n+1-i)); the last slot
    receives h_(n+1) . x^n.  ``conjugator`` defaults to the inverse antipode;
    pass the antipode itself for the S-flavoured variant.
    """
    if not slots:
        raise ValueError("need at least one slot")
    H = slots[0].algebra
    f = H.field
    if conjugator is None:
        conjugator = H.antipode_inverse()
        if conjugator is None:
            raise ValueError("antipode is not invertible")
    n = len(slots) - 1
    dims = [s.dim for s in slots]
    out: Vec = {}
    legs = H.comultiply_iter(h, 2 * n) if n > 0 else dict(h)
    hdim = H.dim
    for fl_h, ch in legs.items():
        hidx = tensor_decode(fl_h, [hdim] * (2 * n + 1))
        for fl_t, ct in t.items():
            tidx = tensor_decode(fl_t, dims)
            coeff = f.mul(ch, ct)
            pieces: List[Vec] = []
            for i in range(n):
                v = slots[i].lact(basis_vec(f, hidx[i]), basis_vec(f, tidx[i]))
                v = slots[i].ract(v, conjugator.apply(basis_vec(f, hidx[2 * n - i])))
                pieces.append(v)
            pieces.append(slots[n].lact(basis_vec(f, hidx[n]), basis_vec(f, tidx[n])))
            acc = pieces[0]
            for k in range(1, n + 1):
                acc = vec_tensor(f, acc, pieces[k], dims[k])
            vec_add(f, out, acc, coeff)
    return out


def check_lemma_sandwich_action(X: ModComod) -> Report:
    """The sandwich action h.(g (x) x) = h_(1) g S^-1(h_(3)) (x) h_(2) x on
    H (x) X: (a) it is an associative unital action; (b) rho_X is a map of
    modules for it.  (b) is equivalent to the S^-1 compatibility condition."""
    f = X.field
    H = X.algebra
    rep = Report()
    slots = [Bimodule.regular(H), Bimodule.from_left_module(X)]

    def act(h: Vec, t: Vec) -> Vec:
        return oslash_action(slots, h, t)

    eb = [basis_vec(f, i) for i in range(H.dim)]
    ok, wit = True, None
    dims = H.dim * X.dim
    for i, j, fl in itertools.product(range(H.dim), range(H.dim), range(dims)):
        t = basis_vec(f, fl)
        lhs = act(H.mul.get((i, j), {}), t)
        rhs = act(eb[i], act(eb[j], t))
        if not vec_eq(f, lhs, rhs):
            ok, wit = False, {"basis": (i, j, fl), "defect": vec_sub(f, lhs, rhs)}
            break
    rep.add("sandwich_action_associative", ok, wit)
    rep.add("sandwich_action_unital",
            all(vec_eq(f, act(H.unit, basis_vec(f, fl)), basis_vec(f, fl))
                for fl in range(dims)))

    ok, wit = True, None
    for i in range(H.dim):
        for a in range(X.dim):
            lhs = X.coact(X.act(eb[i], basis_vec(f, a)))
            rhs = act(eb[i], X.coaction[a])
            if not vec_eq(f, lhs, rhs):
                ok, wit = False, {"basis": (i, a), "defect": vec_sub(f, lhs, rhs)}
                break
        if not ok:
            break
    rep.add("coaction_is_module_map", ok, wit)
    return rep


# ---------------------------------------------------------------------------
# standard module-comodule constructions


def trivial_modcomod(H: HopfAlgebra) -> ModComod:
    """1-dimensional: action through the counit, coaction through the unit."""
    f = H.field
    action = {(i, 0): ({0: H.counit[i]} if i in H.counit else {}) for i in range(H.dim)}
    coaction = [dict(H.unit)]      # X has dim 1, so C (x) X indices = C indices
    return ModComod(H, 1, action, coaction, label="trivial")


def one_dim_modcomod(H: HopfAlgebra, delta: Dict[int, object], sigma: Vec,
                     check: bool = True) -> ModComod:
    """1-dimensional module-comodule from a character and a grouplike."""
    f = H.field
    if check:
        if not is_character(H, delta):
            raise ValueError("delta is not an algebra character")
        if not is_grouplike(H, sigma):
            raise ValueError("sigma is not grouplike")
    action = {(i, 0): ({0: delta[i]} if i in delta and not f.is_zero(delta[i]) else {})
              for i in range(H.dim)}
    return ModComod(H, 1, action, [dict(sigma)], label="onedim")


def regular_modcomod(H: HopfAlgebra) -> ModComod:
    """H acting on itself by multiplication, coacting by the coproduct."""
    action = {k: dict(v) for k, v in H.mul.items()}
    return ModComod(H, H.dim, action, [dict(t) for t in H.comul], label="regular")


def coadjoint_comodule(H: HopfAlgebra) -> ModComod:
    """H with the coadjoint coaction h -> h_(1) S^-1(h_(3)) (x) h_(2)."""
    f = H.field
    sinv = H.antipode_inverse()
    if sinv is None:
        raise ValueError("antipode is not invertible")
    coaction: List[Vec] = []
    for i in range(H.dim):
        acc: Vec = {}
        for fl, c in H.comultiply_iter(basis_vec(f, i), 2).items():
            h12, h3 = divmod(fl, H.dim)
            h1, h2 = divmod(h12, H.dim)
            wrap = H.multiply(basis_vec(f, h1), sinv.apply(basis_vec(f, h3)))
            vec_add(f, acc, vec_tensor(f, wrap, basis_vec(f, h2), H.dim), c)
        coaction.append(acc)
    return ModComod(H, H.dim, None, coaction, label="coadjoint")


def is_character(H: HopfAlgebra, delta: Dict[int, object]) -> bool:
    f = H.field
    if not f.is_zero(f.sub(_covector_val(f, delta, H.unit), f.one())):
        return False
    for i in range(H.dim):
        for j in range(H.dim):
            lhs = _covector_val(f, delta, H.mul.get((i, j), {}))
            rhs = f.mul(delta.get(i, f.zero()), delta.get(j, f.zero()))
            if not f.is_zero(f.sub(lhs, rhs)):
                return False
    return True


def _covector_val(f: Field, delta, v: Vec):
    acc = f.zero()
    for i, c in v.items():
        acc = f.add(acc, f.mul(delta.get(i, f.zero()), c))
    return acc


def is_grouplike(H: HopfAlgebra, sigma: Vec) -> bool:
    f = H.field
    if f.is_zero(f.sub(H.counit_of(sigma), f.one())):
        return vec_eq(f, H.comultiply(sigma), vec_tensor(f, sigma, sigma, H.dim))
    return False


def enumerate_characters(H: HopfAlgebra) -> List[Dict[int, object]]:
    """All algebra characters with values in {0, 1, -1} over Q, or in F_p.

    A finite-candidate search: complete for the built-in algebras (whose
    character values are roots of unity or zero), used to supply corpora.
    """
    return [dict(zip(range(H.dim), sol)) for sol in _backtrack_solutions(H, _char_ok)]


def enumerate_grouplikes(H: HopfAlgebra) -> List[Vec]:
    """All grouplike elements with coordinates from the same candidate set."""
    out = []
    f = H.field
    for sol in _backtrack_solutions(H, _grouplike_partial_ok):
        v = {i: c for i, c in enumerate(sol) if not f.is_zero(c)}
        if is_grouplike(H, v):
            out.append(v)
    return out


def _candidate_values(f: Field):
    if f.char:
        return [f.of(k) for k in range(f.char)]
    return [f.of(0), f.of(1), f.of(-1)]


def _backtrack_solutions(H: HopfAlgebra, partial_ok):
    f = H.field
    values = _candidate_values(f)
    sols = []
    assign: List[object] = []

    def rec():
        if len(assign) == H.dim:
            sols.append(tuple(assign))
            return
        for v in values:
            assign.append(v)
            if partial_ok(H, assign):
                rec()
            assign.pop()

    rec()
    return sols


def _partial_val(f: Field, assign: List[object], v: Vec):
    acc = f.zero()
    for i, c in v.items():
        if i >= len(assign):
            return None
        acc = f.add(acc, f.mul(assign[i], c))
    return acc


def _char_ok(H: HopfAlgebra, assign: List[object]) -> bool:
    f = H.field
    k = len(assign)
    one = _partial_val(f, assign, H.unit)
    if one is not None and not f.is_zero(f.sub(one, f.one())):
        return False
    for i in range(k):
        for j in range(k):
            lhs = _partial_val(f, assign, H.mul.get((i, j), {}))
            if lhs is None:
                continue
            if not f.is_zero(f.sub(lhs, f.mul(assign[i], assign[j]))):
                return False
    return True


def _grouplike_partial_ok(H: HopfAlgebra, assign: List[object]) -> bool:
    f = H.field
    d = H.dim
    k = len(assign)
    # Delta(sigma)[a,b] must equal sigma_a sigma_b for all assigned (a, b)
    for a in range(k):
        for b in range(k):
            acc = f.zero()
            complete = True
            for i in range(d):
                c = H.comul[i].get(a * d + b)
                if c is None:
                    continue
                if i >= k:
                    complete = False
                    break
                acc = f.add(acc, f.mul(assign[i], c))
            if complete and not f.is_zero(f.sub(acc, f.mul(assign[a], assign[b]))):
                return False
    return True


# ---------------------------------------------------------------------------
# conjugation-groupoid grading over group algebras


@dataclass
class GroupoidData:
    """A functor from the conjugation groupoid into vector spaces: a graded
    dimension per group element and one block matrix per (h, g) morphism."""

    dims: Dict[int, int]
    blocks: Dict[Tuple[int, int], Matrix]       # (h, g): M_g -> M_{h g h^-1}


@dataclass
class GroupoidReport:
    ok: bool
    reason: str = ""
    data: Optional[GroupoidData] = None
    grading_basis: Optional[Dict[int, List[Vec]]] = None


def groupoid_decompose(X: ModComod) -> GroupoidReport:
    """Split a comodule over a group algebra into its grading M_g and express
    the action as conjugation-groupoid functor data.

    Replays the basis argument of the guiding example: the coaction of a
    group algebra is a family of complementary idempotent projections; the
    split fails exactly when those matrix identities fail.
    """
    H = X.algebra
    if H.group_table is None:
        raise ValueError("not a group algebra")
    f = H.field
    n = H.dim
    dX = X.dim
    table = H.group_table
    inverse = [next(j for j in range(n) if table[i][j] == 0) for i in range(n)]

    projections: List[Matrix] = []
    for g in range(n):
        data = {}
        for a in range(dX):
            for fl, c in X.coaction[a].items():
                hg, b = divmod(fl, dX)
                if hg == g:
                    data[(b, a)] = c
        projections.append(Matrix(dX, dX, f, data))

    total = projections[0]
    for g in range(1, n):
        total = total + projections[g]
    if total != Matrix.identity(dX, f):
        return GroupoidReport(False, "coaction is not counital: projections do not sum to the identity")
    for g in range(n):
        for h in range(n):
            prod = projections[g] @ projections[h]
            expect = projections[g] if g == h else Matrix.zero(dX, dX, f)
            if prod != expect:
                return GroupoidReport(
                    False, f"coaction components are not orthogonal idempotents at ({g},{h})")

    basis: Dict[int, List[Vec]] = {}
    pivots: Dict[int, List[int]] = {}
    for g in range(n):
        vecs, pivs = _reduced_column_basis(f, projections[g].columns())
        basis[g] = vecs
        pivots[g] = pivs
    if sum(len(v) for v in basis.values()) != dX:
        return GroupoidReport(False, "grading blocks do not fill the space")

    dims = {g: len(basis[g]) for g in range(n) if basis[g]}
    blocks: Dict[Tuple[int, int], Matrix] = {}
    for h in range(n):
        for g in list(dims):
            target = table[table[h][g]][inverse[h]]
            cols = []
            for v in basis[g]:
                img = X.act(basis_vec(f, h), v)
                coords = _coords_in_reduced_basis(f, img, basis.get(target, []),
                                                  pivots.get(target, []))
                if coords is None:
                    return GroupoidReport(
                        False,
                        f"action of {H.basis[h]} does not map grade {H.basis[g]} "
                        f"into grade {H.basis[target]}")
                cols.append(coords)
            blocks[(h, g)] = Matrix.from_columns(cols, len(basis.get(target, [])), f)
    return GroupoidReport(True, data=GroupoidData(dims, blocks), grading_basis=basis)


def _reduced_column_basis(f: Field, cols: List[Vec]) -> Tuple[List[Vec], List[int]]:
    """Reduced (echelon) basis of the column space, with pivot rows."""
    basis: List[Vec] = []
    pivots: List[int] = []
    for col in cols:
        r = dict(col)
        for b, p in zip(basis, pivots):
            c = r.get(p)
            if c is not None:
                vec_add(f, r, b, f.neg(c))
        if not r:
            continue
        p = min(r)
        scale = f.inv(r[p])
        r = {k: f.mul(scale, v) for k, v in r.items()}
        for i, (b, bp) in enumerate(zip(basis, pivots)):
            c = b.get(p)
            if c is not None:
                nb = dict(b)
                vec_add(f, nb, r, f.neg(c))
                basis[i] = nb
        basis.append(r)
        pivots.append(p)
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    return [basis[i] for i in order], [pivots[i] for i in order]


def _coords_in_reduced_basis(f: Field, v: Vec, basis: List[Vec],
                             pivots: List[int]) -> Optional[Vec]:
    coords: Vec = {}
    rest = dict(v)
    for i, (b, p) in enumerate(zip(basis, pivots)):
        c = rest.get(p)
        if c is not None:
            coords[i] = c
            vec_add(f, rest, b, f.neg(c))
    return None if rest else coords


def modcomod_from_groupoid(H: HopfAlgebra, data: GroupoidData) -> ModComod:
    """Assemble the module-comodule attached to conjugation-groupoid functor
    data: coaction diagonal per grade, action by the block matrices."""
    if H.group_table is None:
        raise ValueError("not a group algebra")
    f = H.field
    grades = sorted(g for g, d in data.dims.items() if d > 0)
    offset: Dict[int, int] = {}
    dim = 0
    for g in grades:
        offset[g] = dim
        dim += data.dims[g]
    table = H.group_table
    inverse = [next(j for j in range(H.dim) if table[i][j] == 0) for i in range(H.dim)]

    coaction: List[Vec] = []
    for g in grades:
        for k in range(data.dims[g]):
            coaction.append({g * dim + offset[g] + k: f.one()})

    action: Dict[Tuple[int, int], Vec] = {}
    for h in range(H.dim):
        for g in grades:
            target = table[table[h][g]][inverse[h]]
            block = data.blocks[(h, g)]
            for k in range(data.dims[g]):
                col = block.column(k)
                action[(h, offset[g] + k)] = {offset[target] + r: c for r, c in col.items()}
    return ModComod(H, dim, action, coaction, label="groupoid")
