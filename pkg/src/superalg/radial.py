"""Radial-part calculus on the torus.

gamma is the superdeterminant of the conjugation Jacobian; its closed form
over a type I root system is

    gamma(exp Y) = 2^(|R0| - |R1|) i^|R0|
                   prod_{alpha in R0+} sinh^2(alpha(Y)/2)
                 / prod_{beta  in R1+} sinh^2(beta(Y)/2)

which is exact in half-weight coordinates because each sinh is a Laurent
binomial.  j is a scalar-free square root of gamma; once the torus
Laplacian certifies the eigenfunction identity L(j) = c j, the radial part
of the order-two Casimir acts as

    D f = j^-1 L(j f) - c f

and conjugating by j turns it into a constant-coefficient polynomial in
the momenta: j D (j^-1 q^lam) = p(lam) q^lam with p of degree two whose
leading part matches the Cartan projection of the Casimir under
H_i -> lam_i / 2.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DegenerateForm,
    NotConstantCoefficient,
    NotEigenfunction,
    SingularOddBlock,
    SingularPoint,
)
from .liealg import QuadraticForm, RootSystem
from .linalg import solve_unique
from .pbw import cartan_poly_eval, casimir2, project_to_cartan
from .scalars import GaussianRational, I, ONE, ZERO, gr
from .smash import TorusElement, gamma_via_sdet
from .torus import TorusRational, sinh_half, sqrt_scalar_free


def gamma_closed_form(rs: RootSystem) -> TorusRational:
    """The closed form above as an exact torus function."""
    t = rs.rank
    r0 = rs.even_roots
    r1 = rs.odd_roots
    pref = gr(Fraction(2) ** (len(r0) - len(r1))) * I ** len(r0)
    gamma = TorusRational.const(t, pref)
    for root in rs.even_positives:
        s = sinh_half(t, root.weight)
        gamma = gamma * s * s
    for root in rs.odd_positives:
        s = sinh_half(t, root.weight)
        gamma = gamma / (s * s)
    return gamma


def eval_gamma(rs: RootSystem, point: TorusElement) -> GaussianRational:
    """Closed-form gamma at a torus point; SingularPoint on the bad locus."""
    gamma = gamma_closed_form(rs)
    den = gamma.den.eval(point.coords)
    if den.is_zero():
        raise SingularPoint("gamma has a pole at this torus point")
    return gamma.num.eval(point.coords) / den


def check_gamma_oracle(rs: RootSystem, form: QuadraticForm, points) -> dict:
    """Compare the closed form against the Jacobian superdeterminant at the
    given torus points; pass iff one global sign makes all pairs equal.

    Points on the singular locus are skipped with a notice, and the two
    sides must agree on singularity (odd block singular exactly when the
    closed form's denominator vanishes)."""
    gamma = gamma_closed_form(rs)
    entries = []
    sign = None
    ok = True
    for a in points:
        coords = a.coords if isinstance(a, TorusElement) else tuple(a)
        point = TorusElement(coords)
        den_val = gamma.den.eval(point.coords)
        closed_singular = den_val.is_zero()
        try:
            sdet_val = gamma_via_sdet(rs, form, point)
            sdet_singular = False
        except SingularOddBlock:
            sdet_val = None
            sdet_singular = True
        ent = {
            "point": point.to_json(),
            "singular": closed_singular or sdet_singular,
        }
        if closed_singular != sdet_singular:
            ent["agree"] = False
            ok = False
            entries.append(ent)
            continue
        if closed_singular:
            ent["agree"] = True
            ent["notice"] = "skipped: singular point"
            entries.append(ent)
            continue
        closed_val = gamma.num.eval(point.coords) / den_val
        ent["closed"] = closed_val.to_json()
        ent["sdet"] = sdet_val.to_json()
        if closed_val.is_zero() and sdet_val.is_zero():
            ent["agree"] = True
            entries.append(ent)
            continue
        if sign is None:
            if closed_val == sdet_val:
                sign = 1
            elif closed_val == -sdet_val:
                sign = -1
            else:
                ok = False
                ent["agree"] = False
                entries.append(ent)
                continue
        agree = closed_val == (sdet_val if sign == 1 else -sdet_val)
        ent["agree"] = agree
        ok = ok and agree
        entries.append(ent)
    return {
        "pass": ok,
        "sign": sign,
        "points": entries,
        "skipped": sum(1 for e in entries if e.get("notice")),
    }


class TorusLaplacian:
    """Second-order operator sum_i c_i d^2/dy_i^2 on the Cartan directions,
    with c_i = b(theta(H_i), theta(H_i)) = 1 / b(H_i, H_i)."""

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_cartan(cls, rs: RootSystem, form: QuadraticForm) -> "TorusLaplacian":
        coeffs = []
        for pos, h in enumerate(rs.cartan):
            for other in rs.cartan[pos + 1 :]:
                if not form.b(h, other).is_zero():
                    raise DegenerateForm("Cartan basis is not b-orthogonal")
            diag = form.b(h, h)
            if diag.is_zero():
                raise DegenerateForm("Cartan direction with b(H,H) = 0")
            coeffs.append(diag.inverse())
        return cls(coeffs)

    @property
    def rank(self):
        return len(self.coeffs)

    def apply(self, f: TorusRational) -> TorusRational:
        total = TorusRational.zero(f.nvars)
        for i, c in enumerate(self.coeffs):
            total = total + f.derive(i).derive(i) * c
        return total


class RadialOperator:
    """j together with the certified eigenvalue c in L(j) = c j."""

    def __init__(self, j: TorusRational, laplacian: TorusLaplacian, eigenvalue_c: GaussianRational):
        self.j = j
        self.laplacian = laplacian
        self.eigenvalue_c = eigenvalue_c

    @classmethod
    def certify(cls, j: TorusRational, laplacian: TorusLaplacian) -> "RadialOperator":
        """Verify the exact field identity L(j) = c j; NotEigenfunction
        when the ratio is not a scalar."""
        if j.is_zero():
            raise NotEigenfunction("j must be nonzero")
        ratio = laplacian.apply(j) / j
        if not ratio.is_scalar():
            raise NotEigenfunction("L(j)/j is not constant")
        c = ratio.scalar_value()
        if not (laplacian.apply(j) == j * c):
            raise NotEigenfunction("eigen identity failed to certify")
        return cls(j, laplacian, c)


def build_radial(rs: RootSystem, form: QuadraticForm) -> RadialOperator:
    """Scalar-free square root of gamma, certified against the Laplacian."""
    gamma = gamma_closed_form(rs)
    j, _scale = sqrt_scalar_free(gamma)
    lap = TorusLaplacian.from_cartan(rs, form)
    return RadialOperator.certify(j, lap)


def apply_radial_C2(op: RadialOperator, f: TorusRational) -> TorusRational:
    """Radial part of the order-two Casimir: j^-1 L(j f) - c f."""
    return op.laplacian.apply(op.j * f) / op.j - f * op.eigenvalue_c


def default_weights(t: int, count: int):
    """Deterministic integer weight vectors whose leading block is
    unisolvent for degree-2 polynomial interpolation in t variables:
    the origin, e_i, 2 e_i, and e_i + e_j, followed by sign and scale
    variations as extras."""

    def unit(i, scale=1):
        w = [0] * t
        w[i] = scale
        return tuple(w)

    out = [(0,) * t]
    out += [unit(i) for i in range(t)]
    out += [unit(i, 2) for i in range(t)]
    for i in range(t):
        for j in range(i + 1, t):
            w = [0] * t
            w[i] = w[j] = 1
            out.append(tuple(w))
    extras = [unit(i, -1) for i in range(t)] + [unit(i, 3) for i in range(t)]
    for i in range(t):
        for j in range(i + 1, t):
            w = [0] * t
            w[i], w[j] = 1, -1
            extras.append(tuple(w))
        for j in range(i + 1, t):
            w = [0] * t
            w[i], w[j] = 2, 1
            extras.append(tuple(w))
    scale = 2
    while len(out) + len(extras) < count:
        extras += [unit(i, 2 * scale) for i in range(t)]
        scale += 1
    for w in extras:
        if w not in out:
            out.append(w)
    return out[:count]


def _quadratic_exponents(t: int):
    exps = [tuple(0 for _ in range(t))]
    for i in range(t):
        e = [0] * t
        e[i] = 1
        exps.append(tuple(e))
    for i in range(t):
        for j in range(i, t):
            e = [0] * t
            e[i] += 1
            e[j] += 1
            exps.append(tuple(e))
    return exps


def extract_P(op: RadialOperator, weights) -> tuple:
    """Certify the conjugated radial operator on exponentials and fit the
    resulting eigenvalue map as a degree-two polynomial in the weight.

    For each integer weight lam computes j * D(j^-1 q^lam) exactly and
    demands it be a scalar multiple p(lam) of q^lam (otherwise
    NotConstantCoefficient).  The values are then fit to a single
    polynomial of degree <= 2; rank-deficient weight sets raise ValueError.

    Returns (poly, report) with poly a {exponent tuple: coefficient} map in
    the weight variables.
    """
    t = op.laplacian.rank
    values = []
    for w in weights:
        lam = tuple(int(x) for x in w)
        if len(lam) != t:
            raise ValueError("weight length must equal the Cartan rank")
        q_lam = TorusRational.monomial(t, lam)
        conj = op.j * apply_radial_C2(op, q_lam / op.j)
        ratio = conj / q_lam
        if not ratio.is_scalar():
            raise NotConstantCoefficient(
                f"weight {lam}: conjugated operator left the exponential line"
            )
        values.append((lam, ratio.scalar_value()))

    exps = _quadratic_exponents(t)
    if len(values) < len(exps):
        raise ValueError(
            f"need at least {len(exps)} weights to determine a degree-2 polynomial"
        )
    rows = []
    rhs = []
    for lam, val in values:
        row = []
        for e in exps:
            mono = ONE
            for x, k in zip(lam, e):
                for _ in range(k):
                    mono = mono * gr(x)
            row.append(mono)
        rows.append(row)
        rhs.append(val)
    sol, reason = solve_unique(rows, rhs, ZERO)
    if reason == "underdetermined":
        raise ValueError("degenerate or repeated weights; fit is underdetermined")
    if reason == "inconsistent":
        return {}, {
            "pass": False,
            "reason": "values are not consistent with a degree-2 polynomial",
            "weights": [list(l) for l, _ in values],
        }
    poly = {e: c for e, c in zip(exps, sol) if not c.is_zero()}
    # verify every weight against the fit
    for lam, val in values:
        if cartan_poly_eval(poly, [gr(x) for x in lam]) != val:
            return poly, {
                "pass": False,
                "reason": f"weight {lam} inconsistent with the fitted polynomial",
            }
    degree = max((sum(e) for e in poly), default=0)
    return poly, {
        "pass": True,
        "degree": degree,
        "coefficients": {str(list(e)): c.to_json() for e, c in sorted(poly.items())},
        "weights_tested": len(values),
    }


def leading_term_reference(g, form: QuadraticForm, rs: RootSystem) -> dict:
    """Degree-two part of the Cartan projection of the order-two Casimir,
    rewritten in weight variables via H_i -> lam_i / 2."""
    proj = project_to_cartan(casimir2(g, form), rs)
    out = {}
    for e, c in proj.items():
        if sum(e) == 2:
            scaled = c * gr(Fraction(1, 4))
            if not scaled.is_zero():
                out[e] = scaled
    return out


def leading_term_match(poly: dict, g, form: QuadraticForm, rs: RootSystem) -> dict:
    """Compare the fitted quadratic part against the Casimir's Cartan
    projection; exact coefficient-by-coefficient equality."""
    fitted = {e: c for e, c in poly.items() if sum(e) == 2}
    reference = leading_term_reference(g, form, rs)
    return {
        "pass": fitted == reference,
        "fitted": {str(list(e)): c.to_json() for e, c in sorted(fitted.items())},
        "reference": {str(list(e)): c.to_json() for e, c in sorted(reference.items())},
    }
