"""Seeded random generators for property checks and CLI suites.

The PRNG is Python's Mersenne Twister via random.Random(seed); with a fixed
seed every sampled object, and therefore every report, is reproducible
byte for byte.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .scalars import GaussianRational, gr
from .torus import LaurentPoly, TorusRational

# small nonzero values used for torus coordinates; chosen so products and
# quotients stay small while still exercising non-unit denominators
_COORD_POOL = [
    Fraction(1),
    Fraction(2),
    Fraction(3),
    Fraction(1, 2),
    Fraction(1, 3),
    Fraction(5, 2),
    Fraction(-1),
    Fraction(-2),
    Fraction(-1, 2),
    Fraction(3, 2),
]


def rng(seed: int) -> random.Random:
    return random.Random(seed)


def rand_fraction(r: random.Random, max_num: int = 4, max_den: int = 3) -> Fraction:
    num = r.randint(-max_num, max_num)
    den = r.randint(1, max_den)
    return Fraction(num, den)


def rand_scalar(r: random.Random, complex_prob: float = 0.5) -> GaussianRational:
    re = rand_fraction(r)
    im = rand_fraction(r) if r.random() < complex_prob else Fraction(0)
    return GaussianRational(re, im)


def rand_nonzero_scalar(r: random.Random) -> GaussianRational:
    while True:
        s = rand_scalar(r)
        if not s.is_zero():
            return s


def rand_torus_coords(r: random.Random, t: int):
    return tuple(gr(r.choice(_COORD_POOL)) for _ in range(t))


def rand_laurent(
    r: random.Random,
    nvars: int,
    max_terms: int = 3,
    max_exp: int = 2,
    nonzero: bool = False,
) -> LaurentPoly:
    terms = {}
    for _ in range(r.randint(1 if nonzero else 0, max_terms)):
        exps = tuple(r.randint(-max_exp, max_exp) for _ in range(nvars))
        c = rand_scalar(r)
        if not c.is_zero():
            terms[exps] = c
    poly = LaurentPoly(nvars, terms)
    if nonzero and poly.is_zero():
        return LaurentPoly.monomial(nvars, (0,) * nvars, gr(1))
    return poly


def rand_torus_rational(r: random.Random, nvars: int, max_terms: int = 3) -> TorusRational:
    num = rand_laurent(r, nvars, max_terms=max_terms)
    den = rand_laurent(r, nvars, max_terms=2, nonzero=True)
    return TorusRational(num, den)


def rand_word(r: random.Random, dim: int, max_len: int = 4, min_len: int = 0):
    return tuple(r.randrange(dim) for _ in range(r.randint(min_len, max_len)))


def rand_pbw_element(alg, r: random.Random, max_terms: int = 3, max_len: int = 3):
    from .pbw import PBWElement, normalize_terms

    items = []
    for _ in range(r.randint(1, max_terms)):
        items.append((rand_word(r, alg.dim, max_len), rand_scalar(r)))
    return PBWElement(alg, normalize_terms(alg, items))


def rand_monomial(alg, r: random.Random, degree_cap: int = 2):
    """Random PBW normal monomial of bounded degree."""
    from .pbw import monomial_of_sorted_word

    deg = r.randint(0, degree_cap)
    gens = sorted(r.choices(range(alg.dim), k=deg))
    # drop repeated odd generators (their square rewrites to lower degree)
    word = []
    for g in gens:
        if word and word[-1] == g and alg.parities[g]:
            continue
        word.append(g)
    return monomial_of_sorted_word(tuple(word), alg.parities)


def rand_smash_element(smash_alg, r: random.Random, max_terms: int = 3, degree_cap: int = 2):
    from .smash import SmashElement, TorusElement

    terms = {}
    for _ in range(r.randint(1, max_terms)):
        point = TorusElement(rand_torus_coords(r, smash_alg.t))
        mon = rand_monomial(smash_alg.g, r, degree_cap)
        c = rand_scalar(r)
        if not c.is_zero():
            terms[(point, mon)] = c
    return SmashElement(smash_alg, terms)


def rand_invertible_matrix(r: random.Random, n: int):
    """Random invertible n x n matrix over Q(i) by rejection."""
    from .linalg import det
    from .scalars import ZERO

    while True:
        rows = [[rand_scalar(r) for _ in range(n)] for _ in range(n)]
        if n == 0 or not det(rows, ZERO).is_zero():
            return rows


def rand_graded_supermatrix(r: random.Random, p: int, q: int, shape: str = "diagonal"):
    """Random invertible supermatrix honoring the grading over a purely even
    scalar field: block-diagonal, or block-triangular of a fixed type.

    Over Q(i) the off-diagonal blocks of an even supermatrix must vanish
    (there are no odd scalars), and the Berezinian is multiplicative on
    the block-diagonal and one-sided block-triangular families.
    """
    from .scalars import ZERO
    from .supermatrix import SuperMatrix

    a = rand_invertible_matrix(r, p)
    d = rand_invertible_matrix(r, q)
    b = [[ZERO] * q for _ in range(p)]
    c = [[ZERO] * p for _ in range(q)]
    if shape == "upper":
        b = [[rand_scalar(r) for _ in range(q)] for _ in range(p)]
    elif shape == "lower":
        c = [[rand_scalar(r) for _ in range(p)] for _ in range(q)]
    elif shape != "diagonal":
        raise ValueError("shape must be diagonal, upper, or lower")
    return SuperMatrix(p, q, a, b, c, d)
