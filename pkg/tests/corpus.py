"""Seeded random inputs shared by the kernel test suites.

Plain random.Random generators rather than hypothesis strategies, so the
acceptance suite can replay the exact same cases with its own seeds and
case counts. Sizes are chosen to keep rational row reduction in the
oracles comfortable: big colengths only appear in two variables.
"""

import random
from fractions import Fraction

from singchi.poly import Monomial, Polynomial
from singchi.standard_basis import IdealPresentation


def random_coeff(rng):
    num = rng.choice([-3, -2, -1, 1, 2, 3])
    den = rng.choice([1, 1, 1, 2, 3])
    return Fraction(num, den)


def random_poly(rng, ring, max_deg=3, max_terms=3, min_deg=1):
    """Random sparse polynomial with small exact coefficients."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            d = rng.randint(min_deg, max_deg)
            exps = {}
            for v in rng.choices(ring, k=d):
                exps[v] = exps.get(v, 0) + 1
            mono = Monomial(exps)
            terms[mono] = terms.get(mono, Fraction(0)) + random_coeff(rng)
        p = Polynomial(ring, terms)
        if not p.is_zero:
            return p


def random_zero_dim_ideal(rng, nvars=None):
    """An ideal of guaranteed finite colength: pure powers plus noise.

    Returns (presentation, bound) where bound is the product of the pure
    power exponents, an upper bound for the colength.
    """
    if nvars is None:
        nvars = rng.choice([1, 2, 2, 3])
    ring = ("x", "y", "z")[:nvars]
    cap = {1: 9, 2: 6, 3: 3}[nvars]
    gens = []
    bound = 1
    for v in ring:
        e = rng.randint(1, cap)
        bound *= e
        p = Polynomial(ring, {Monomial.variable(v, e): Fraction(1)})
        if rng.random() < 0.5:
            # perturb strictly above degree e so the pure power survives as
            # the lowest-order term and finiteness stays guaranteed
            p = p + random_poly(rng, ring, max_deg=e + 2, max_terms=2, min_deg=e + 1)
        gens.append(p)
    for _ in range(rng.randint(0, 2)):
        gens.append(random_poly(rng, ring, max_deg=cap, max_terms=2))
    return IdealPresentation(ring, tuple(gens)), bound


def random_monomial_ideal(rng, nvars=None):
    """Monomial generators, finite colength not guaranteed."""
    if nvars is None:
        nvars = rng.choice([1, 2, 2, 3])
    ring = ("x", "y", "z")[:nvars]
    gens = []
    for _ in range(rng.randint(1, 4)):
        d = rng.randint(1, 5)
        exps = {}
        for v in rng.choices(ring, k=d):
            exps[v] = exps.get(v, 0) + 1
        gens.append(Polynomial(ring, {Monomial(exps): Fraction(1)}))
    return IdealPresentation(ring, tuple(gens))
