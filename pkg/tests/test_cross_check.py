"""Feasibility predicate vs exhaustive line verification.

The constraint system and the line scanner are independent code paths:
one reasons about coefficients, the other about materialized grids.  For
every in-range vector they must agree on whether the built array is
pandiagonal-latin.
"""

import random
from itertools import product

from pandiag.lattice import build
from pandiag.params import ParamVector, check, enumerate_feasible
from pandiag.verify import verify_latin_pandiagonal


def agrees(v: ParamVector) -> bool:
    feasible = check(v).feasible
    verified = verify_latin_pandiagonal(build(v), fail_fast=True).passed
    return feasible == verified


def test_pairs_exhaustive_through_13():
    for n in range(2, 14):
        for alphas in product(range(1, n), repeat=2):
            assert agrees(ParamVector(alphas, n)), (alphas, n)


def test_triples_exhaustive_through_13():
    for n in range(2, 14):
        for alphas in product(range(1, n), repeat=3):
            assert agrees(ParamVector(alphas, n)), (alphas, n)


def test_quads_feasible_at_17():
    feasible = enumerate_feasible(4, 17)
    assert len(feasible) >= 100
    for v in feasible:
        assert verify_latin_pandiagonal(build(v), fail_fast=True).passed, v


def test_quads_random_sample_at_17():
    rng = random.Random(170)
    feasible = {v.alphas for v in enumerate_feasible(4, 17)}
    seen = 0
    while seen < 250:
        alphas = tuple(rng.randrange(1, 17) for _ in range(4))
        if alphas in feasible:
            continue
        v = ParamVector(alphas, 17)
        assert agrees(v), v
        seen += 1


def test_quads_even_order_sample():
    rng = random.Random(800)
    for _ in range(50):
        n = rng.choice([6, 10, 12])
        v = ParamVector(tuple(rng.randrange(1, n) for _ in range(4)), n)
        assert not check(v).feasible
        assert agrees(v), v
