"""Shared construction helpers for the test suite (cached, so repeated
lattice work across test modules is paid once per session)."""

from __future__ import annotations

import random
from functools import lru_cache

from pzeta import (
    AlmostSimpleSpec,
    DirichletPolynomial,
    PermGroup,
    builtin_group,
    make_psl2,
)

# corpus used by the oracle-equivalence and factorization suites
CORPUS_NAMES = [
    "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12",
    "S3", "S4", "A4", "A5", "D8", "Q8", "C2xC2", "PSL(2,5)",
]


@lru_cache(maxsize=None)
def group(name: str) -> PermGroup:
    return builtin_group(name)


@lru_cache(maxsize=None)
def psl2(q: int, variant: str) -> AlmostSimpleSpec:
    return make_psl2(q, variant)


def random_polynomial(
    rng: random.Random,
    max_index: int = 24,
    max_terms: int = 5,
    max_coeff: int = 9,
) -> DirichletPolynomial:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[rng.randint(1, max_index)] = rng.randint(-max_coeff, max_coeff)
    return DirichletPolynomial(terms)


def random_unital(rng: random.Random, max_index: int = 12, max_terms: int = 3) -> DirichletPolynomial:
    terms = {1: 1}
    for _ in range(rng.randint(0, max_terms)):
        n = rng.randint(2, max_index)
        terms[n] = rng.randint(-4, 4)
    return DirichletPolynomial(terms)


def random_unit_lead(rng: random.Random) -> DirichletPolynomial:
    """Random polynomial whose minimal-index coefficient is +-1."""
    m0 = rng.choice([1, 1, 2, 3])
    terms = {m0: rng.choice([1, -1])}
    for _ in range(rng.randint(0, 3)):
        n = rng.randint(m0 + 1, 18)
        terms.setdefault(n, rng.randint(-5, 5))
    return DirichletPolynomial(terms)
