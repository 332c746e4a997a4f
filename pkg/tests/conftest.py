import random

import pytest

from semizn.algebra import ModulePresentation
from semizn.group import GeneratorSet, GroupElement
from semizn.laurent import LaurentPoly


def mono(e, c=1):
    return LaurentPoly.monomial(e, c)


def poly(n, terms):
    return LaurentPoly(n, terms)


def free_presentation(n, d=1):
    return ModulePresentation(n=n, d=d, rels_N=[])


def inverse_pair():
    """The canonical 2-generator group instance in Z[X^pm] x| Z."""
    pres = free_presentation(1)
    g1 = GroupElement(pres, [LaurentPoly.one(1)], (1,))
    g2 = GroupElement(pres, [mono((-1,), -1)], (-1,))
    return GeneratorSet(pres, [g1, g2])


def random_poly(rng: random.Random, n, max_terms=3, exp=2, coef=4, allow_zero=True):
    t = {}
    for _ in range(rng.randint(0 if allow_zero else 1, max_terms)):
        e = tuple(rng.randint(-exp, exp) for _ in range(n))
        c = rng.randint(-coef, coef)
        if c:
            t[e] = t.get(e, 0) + c
    return LaurentPoly(n, t)


@pytest.fixture
def rng():
    return random.Random(20240817)
