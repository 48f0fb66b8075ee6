"""Thin bridge to sympy's exact polynomial engine over Q(i).

Only three services are consumed: multivariate gcd, exact division, and
factorization into irreducibles.  Everything else (Laurent arithmetic,
canonical forms, derivations) is implemented in this package.  Terms are
exchanged as dicts mapping exponent tuples (non-negative ints) to
GaussianRational coefficients.
"""

from __future__ import annotations

from fractions import Fraction

from sympy import Poly, symbols
from sympy.polys.domains import QQ, QQ_I

from .scalars import GaussianRational

_GENS = {}


def _gens(n: int):
    if n not in _GENS:
        _GENS[n] = symbols(f"q0:{n}") if n > 1 else (symbols("q0"),)
    return _GENS[n]


def _to_qqi(c: GaussianRational):
    return QQ_I.new(
        QQ(c.re.numerator, c.re.denominator),
        QQ(c.im.numerator, c.im.denominator),
    )


def _from_qqi(e) -> GaussianRational:
    return GaussianRational(
        Fraction(int(e.x.numerator), int(e.x.denominator)),
        Fraction(int(e.y.numerator), int(e.y.denominator)),
    )


def _to_poly(terms: dict, n: int) -> Poly:
    return Poly.from_dict({k: _to_qqi(v) for k, v in terms.items()}, *_gens(n), domain=QQ_I)


def _from_poly(p: Poly) -> dict:
    out = {}
    for exps, c in p.rep.to_dict().items():
        g = _from_qqi(c)
        if not g.is_zero():
            out[tuple(int(e) for e in exps)] = g
    return out


def _is_real(terms: dict) -> bool:
    return all(not c.im for c in terms.values())


def _to_poly_real(terms: dict, n: int) -> Poly:
    return Poly.from_dict(
        {k: QQ(v.re.numerator, v.re.denominator) for k, v in terms.items()},
        *_gens(n),
        domain=QQ,
    )


def _from_poly_real(p: Poly) -> dict:
    out = {}
    for exps, c in p.rep.to_dict().items():
        g = GaussianRational(Fraction(int(c.numerator), int(c.denominator)))
        if not g.is_zero():
            out[tuple(int(e) for e in exps)] = g
    return out


def _unit_normalized(terms: dict) -> dict:
    """Divide by the lexicographically least coefficient.

    gcd is only defined up to a unit, so this is harmless, and it strips a
    global i-power, which moves the common case (real coefficients times a
    Q(i) unit) onto sympy's much faster rational gcd path; gcd over QQ_I
    falls back to subresultant remainder sequences, which crawl in three
    or more variables.
    """
    c = terms[min(terms)]
    if c.is_one():
        return terms
    inv = c.inverse()
    return {e: v * inv for e, v in terms.items()}


def poly_gcd(a: dict, b: dict, n: int) -> dict:
    """gcd of two polynomial term-dicts, up to a unit."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    an, bn = _unit_normalized(a), _unit_normalized(b)
    if _is_real(an) and _is_real(bn):
        return _from_poly_real(_to_poly_real(an, n).gcd(_to_poly_real(bn, n)))
    return _from_poly(_to_poly(an, n).gcd(_to_poly(bn, n)))


def poly_div_exact(a: dict, b: dict, n: int) -> dict:
    """a / b, raising ValueError if the division is not exact."""
    if not a:
        return {}
    if _is_real(a) and _is_real(b):
        q, r = _to_poly_real(a, n).div(_to_poly_real(b, n))
        if not r.is_zero:
            raise ValueError("polynomial division is not exact")
        return _from_poly_real(q)
    q, r = _to_poly(a, n).div(_to_poly(b, n))
    if not r.is_zero:
        raise ValueError("polynomial division is not exact")
    return _from_poly(q)


def poly_factors(a: dict, n: int) -> list:
    """Irreducible factors of a over Q(i) as (term-dict, multiplicity) pairs.

    The scalar content is dropped; callers recover it by exact division.
    Factorization always runs over Q(i): a factor irreducible over the
    rationals may split further there, and square detection needs the
    finest splitting.
    """
    an = _unit_normalized(a)
    fl = _to_poly(an, n).factor_list()
    return [(_from_poly(f), int(m)) for f, m in fl[1]]


def is_unit_dict(a: dict) -> bool:
    """True when the term-dict is a nonzero constant."""
    return len(a) == 1 and not any(next(iter(a)))


def poly_partial(a: dict, var: int) -> dict:
    """Plain partial derivative d/dq_var of a polynomial term-dict."""
    out = {}
    for exps, c in a.items():
        k = exps[var]
        if k:
            e2 = exps[:var] + (k - 1,) + exps[var + 1 :]
            acc = out.get(e2)
            term = c * k
            acc = term if acc is None else acc + term
            if acc.is_zero():
                out.pop(e2, None)
            else:
                out[e2] = acc
    return out
