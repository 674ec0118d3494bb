"""Shared builders and the adversarial module corpus.

The corpus for the correspondence theorems is: trivial, every (delta,
sigma) one-dimensional pair, the coadjoint comodule (with the regular
action attached), the regular module-comodule, and single-entry mutations
of their coactions.  Mutations are seeded so runs are reproducible.
"""
import functools
import random

import pytest

from hopfcalc.fields import Field
from hopfcalc.hopf import (HopfAlgebra, build_dual_group_algebra, build_group_algebra,
                           build_sweedler, build_taft, cyclic_table, symmetric_table)
from hopfcalc.modules import (ModComod, coadjoint_comodule, enumerate_characters,
                              enumerate_grouplikes, one_dim_modcomod, regular_modcomod,
                              trivial_modcomod)


@functools.lru_cache(maxsize=None)
def named_algebra(name: str) -> HopfAlgebra:
    if name == "kZ2":
        return build_group_algebra(cyclic_table(2))
    if name == "kZ3":
        return build_group_algebra(cyclic_table(3))
    if name == "kZ4":
        return build_group_algebra(cyclic_table(4))
    if name == "kS3":
        table, names = symmetric_table(3)
        return build_group_algebra(table, names=names)
    if name == "dualZ2":
        return build_dual_group_algebra(cyclic_table(2))
    if name == "dualZ2_F2":
        return build_dual_group_algebra(cyclic_table(2), Field(2))
    if name == "sweedler":
        return build_sweedler()
    if name == "taft327":
        return build_taft(3, 2, Field(7))
    raise KeyError(name)


ACCEPTANCE_ALGEBRAS = ["kZ2", "kZ3", "kS3", "dualZ2", "sweedler", "taft327"]


def base_corpus(H: HopfAlgebra, with_action_on_coadjoint: bool = True):
    """The unmutated corpus for one algebra."""
    out = [trivial_modcomod(H)]
    for delta in enumerate_characters(H):
        for sigma in enumerate_grouplikes(H):
            out.append(one_dim_modcomod(H, delta, sigma))
    if H.antipode_inverse() is not None:
        X = coadjoint_comodule(H)
        if with_action_on_coadjoint:
            X.action = {k: dict(v) for k, v in H.mul.items()}
        out.append(X)
    out.append(regular_modcomod(H))
    return out


def mutate_coaction(X: ModComod, rng: random.Random) -> ModComod:
    """Flip one entry of the coaction tensor (add 1 at a random slot)."""
    f = X.field
    Y = X.copy_with(label=X.label + "+mut")
    a = rng.randrange(X.dim)
    fl = rng.randrange(X.codim * X.dim)
    val = f.add(Y.coaction[a].get(fl, f.zero()), f.one())
    if f.is_zero(val):
        del Y.coaction[a][fl]
    else:
        Y.coaction[a][fl] = val
    return Y


def mutated_corpus(H: HopfAlgebra, count: int, seed: int = 0):
    rng = random.Random(seed)
    base = [X for X in base_corpus(H) if X.coaction is not None]
    out = []
    for k in range(count):
        out.append(mutate_coaction(base[k % len(base)], rng))
    return out


@pytest.fixture(scope="session")
def sweedler():
    return named_algebra("sweedler")


@pytest.fixture(scope="session")
def kS3():
    return named_algebra("kS3")
