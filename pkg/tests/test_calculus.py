import itertools

import pytest

from conftest import named_algebra

from hopfcalc.calculus import Calculus, specialization_check, verify_dga
from hopfcalc.hopf import BialgebraMorphism
from hopfcalc.linalg import basis_vec, tensor_encode
from hopfcalc.modules import BimoduleCoalgebra


@pytest.mark.parametrize("name", ["kZ2", "kZ3", "dualZ2", "dualZ2_F2", "sweedler"])
def test_dga_axioms_hold_for_both_hopf_calculi(name):
    H = named_algebra(name)
    for calc in (Calculus.k(H), Calculus.khat(H)):
        rep = verify_dga(calc, max_degree=3)
        assert rep.passed, str(rep)


def test_dga_axioms_for_general_calculus():
    H = named_algebra("sweedler")
    C = BimoduleCoalgebra.from_hopf(H)
    calc = Calculus.general(C, BialgebraMorphism.identity(H),
                            BialgebraMorphism.antipode(H))
    assert verify_dga(calc, max_degree=3).passed


def test_degree_dims():
    H = named_algebra("sweedler")
    calc = Calculus.k(H)
    assert [calc.degree_dim(n) for n in range(4)] == [4, 16, 64, 256]
    assert calc.degree_dims(2) == [4, 4, 4]


def test_corrupted_differential_is_detected():
    H = named_algebra("kZ3")
    calc = Calculus.khat(H)
    d1 = calc.differential(1)
    col = dict(d1.column(0))
    k = next(iter(col)) if col else 0
    col[k] = calc.field.add(col.get(k, calc.field.zero()), calc.field.one())
    d1.set_column(0, col)
    rep = verify_dga(calc, max_degree=2)
    assert not rep.passed
    bad = rep.failures()[0]
    assert bad.witness is not None


def test_specializations_match_matrix_for_matrix():
    for name in ("kZ3", "dualZ2", "sweedler"):
        rep = specialization_check(named_algebra(name), max_degree=2)
        assert rep.passed, str(rep)


def test_h4_calculi_differ():
    # over H4 the antipode is not an involution, so the two calculi have
    # genuinely different differentials (already in low degree)
    H = named_algebra("sweedler")
    k = Calculus.k(H)
    khat = Calculus.khat(H)
    assert k.differential(0) != khat.differential(0)
    assert k.differential(1) != khat.differential(1)


def test_cocommutative_calculi_coincide():
    H = named_algebra("kS3")
    k = Calculus.k(H)
    khat = Calculus.khat(H)
    for n in range(3):
        assert k.differential(n) == khat.differential(n)


def test_degree_one_factors_generate():
    # (c1 (x) 1)(c2 (x) 1)...(cn (x) 1) . b recovers the basis tensor
    for name in ("kZ3", "sweedler"):
        H = named_algebra(name)
        f = H.field
        for calc in (Calculus.k(H), Calculus.khat(H)):
            d = H.dim
            for idx in itertools.product(range(d), repeat=3):
                c1, c2, b = idx
                u = calc.product_apply(
                    {tensor_encode([c1], [d]) * d + 0: f.one()}, 1,
                    {tensor_encode([c2], [d]) * d + 0: f.one()}, 1)
                u = calc.product_apply(u, 2, basis_vec(f, b), 0)
                assert u == {tensor_encode([c1, c2, b], [d, d, d]): f.one()}


def test_unit_element_is_two_sided_identity():
    H = named_algebra("dualZ2")
    calc = Calculus.k(H)
    f = H.field
    one = calc.unit_element()
    for n in range(3):
        for i in range(calc.degree_dim(n)):
            e = basis_vec(f, i)
            assert calc.product_apply(one, 0, e, n) == e
            assert calc.product_apply(e, n, one, 0) == e


def test_rejects_unknown_kind_and_missing_antipode_inverse():
    H = named_algebra("sweedler")
    with pytest.raises(ValueError):
        Calculus("weird", H)
    with pytest.raises(ValueError):
        Calculus("general", H)
