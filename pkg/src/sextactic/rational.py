"""Rational-curve machinery: Veronese products, conic families, Wronskians.

A rational plane curve is carried by a triple of coprime binary forms of
equal degree.  Squaring up the triple to the six degree-2 monomial products
turns conics into hyperplane sections; the determinants built from the
fourth and fifth order partials of those products then locate, parameter by
parameter, the osculating conic and the points of excess conic contact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .branch import BranchParam
from .poly import (
    ST,
    XYZ,
    MPoly,
    PolyMatrix,
    binaryform_gcd,
    linear_factor_orders,
    squarefree_decomp,
)
from .series import TruncSeries

XYZST = ("x", "y", "z", "s", "t")

# conic monomial basis paired with the Veronese product columns, in the
# fixed column order phi0^2, phi1^2, phi2^2, phi1*phi2, phi0*phi2, phi0*phi1
CONIC_BASIS = ((2, 0, 0), (0, 2, 0), (0, 0, 2), (0, 1, 1), (1, 0, 1), (1, 1, 0))


class RationalError(ValueError):
    pass


class CommonFactorError(RationalError):
    def __init__(self, factor: MPoly):
        self.factor = factor
        super().__init__(f"components share the nontrivial factor {factor}")


class DegenerateParam(RationalError):
    pass


class ZeroPullback(RationalError):
    pass


class RationalParam:
    """Coprime triple of equal-degree binary forms (phi0 : phi1 : phi2)."""

    __slots__ = ("phi", "degree")

    def __init__(self, phi0: MPoly, phi1: MPoly, phi2: MPoly):
        phi = (phi0, phi1, phi2)
        for p in phi:
            if p.variables != ST:
                raise RationalError(f"components must be forms in {ST}")
        degs = {p.homogeneous_degree() for p in phi}  # raises if inhomogeneous
        degs.discard(None)
        if not degs:
            raise RationalError("all three components are zero")
        if len(degs) != 1:
            raise RationalError(f"components have unequal degrees {sorted(degs)}")
        nonzero = [p for p in phi if not p.is_zero()]
        g = nonzero[0]
        for p in nonzero[1:]:
            g = binaryform_gcd(g, p)
        if g.degree() > 0:
            raise CommonFactorError(g)
        # strip the common positive rational content of the whole triple
        num, den = 0, 1
        for p in nonzero:
            c = p.content()
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        scale = Fraction(den, num)
        self.phi = tuple(p * scale for p in phi)
        self.degree = degs.pop()

    def veronese(self):
        """The six degree-2 products, in the fixed column order."""
        p0, p1, p2 = self.phi
        return (p0 * p0, p1 * p1, p2 * p2, p1 * p2, p0 * p2, p0 * p1)

    def eval_point(self, at):
        """Primitive integer coordinates of the curve point at (s0 : t0)."""
        s0, t0 = Fraction(at[0]), Fraction(at[1])
        vals = [Fraction(p.eval((s0, t0))) for p in self.phi]
        den = lcm(*(v.denominator for v in vals))
        ints = [int(v * den) for v in vals]
        g = gcd(*ints)
        if g == 0:
            raise RationalError(f"parametrization vanishes at ({s0} : {t0})")
        ints = [v // g for v in ints]
        if next(v for v in ints if v) < 0:
            ints = [-v for v in ints]
        return tuple(ints)

    def __repr__(self):
        return f"RationalParam({self.phi[0]} : {self.phi[1]} : {self.phi[2]})"


def _derivative_rows(forms, order: int):
    """Rows r = 0..order of the mixed partials d^order / ds^(order-r) dt^r."""
    rows = []
    current = list(forms)
    for _ in range(order):
        current = [f.partial("s") for f in current]
    rows.append(current)
    prev = list(forms)
    for r in range(1, order + 1):
        prev = [f.partial("t") for f in prev]
        current = list(prev)
        for _ in range(order - r):
            current = [f.partial("s") for f in current]
        rows.append(current)
    return rows


def _minors_along_top(rows):
    """Signed 5x5 minors for expansion along a (virtual) first row."""
    minors = []
    for j in range(6):
        sub = [[row[k] for k in range(6) if k != j] for row in rows]
        minor = PolyMatrix(sub).det()
        minors.append(minor if j % 2 == 0 else -minor)
    return minors


def osculating_conic_family(param: RationalParam, at=None):
    """Conic with binary-form coefficients tracing the osculating conic.

    Without ``at``, the result is a polynomial in (x, y, z, s, t): a conic in
    the first three variables whose coefficients are forms of degree 10d-20
    in the last two.  With ``at``, the coefficients are evaluated and the
    conic is returned in canonical primitive form.
    """
    if param.degree < 3:
        raise RationalError(f"need degree >= 3, got {param.degree}")
    rows = _derivative_rows(param.veronese(), 4)
    minors = _minors_along_top(rows)
    if all(m.is_zero() for m in minors):
        raise DegenerateParam("conic family is identically zero")
    if at is None:
        terms = {}
        for expo, minor in zip(CONIC_BASIS, minors):
            for (es, et), c in minor.terms.items():
                terms[expo + (es, et)] = c
        return MPoly(XYZST, terms)
    s0, t0 = Fraction(at[0]), Fraction(at[1])
    coeffs = [m.eval((s0, t0)) for m in minors]
    conic = MPoly(XYZ, {expo: c for expo, c in zip(CONIC_BASIS, coeffs)})
    if conic.is_zero():
        raise DegenerateParam(f"conic family vanishes at ({s0} : {t0})")
    return conic.canonical()


def conic_coefficients(family: MPoly):
    """Split a (x, y, z, s, t) conic family into {conic monomial: form in (s, t)}."""
    out = {expo: {} for expo in CONIC_BASIS}
    for expo, c in family.terms.items():
        out[expo[:3]][expo[3:]] = c
    return {expo: MPoly(ST, terms) for expo, terms in out.items()}


@dataclass(frozen=True)
class ZeroClass:
    """A Galois-stable packet of zeros of the conic Wronskian.

    ``factor`` is squarefree and primitive; each of its ``points`` roots is a
    zero of the Wronskian of order ``multiplicity``.  ``parameter`` is set
    for linear factors only.
    """

    factor: MPoly
    multiplicity: int
    points: int
    parameter: "tuple | None"
    irreducible: "bool | None"


@dataclass(frozen=True)
class WeierstrassScan:
    xi: MPoly
    content: Fraction
    classes: tuple
    total: int


def _rational_roots(u):
    """Rational roots of a primitive squarefree integer univariate."""
    lead, const = u[-1], u[0]
    roots = []
    for p in _divisors(abs(const)):
        for q in _divisors(abs(lead)):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                acc = Fraction(0)
                for c in reversed(u):
                    acc = acc * cand + c
                if acc == 0 and cand not in roots:
                    roots.append(cand)
    return sorted(roots)


def _divisors(n: int):
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def normalize_parameter(at):
    """Primitive integer representative of (s0 : t0), first nonzero entry positive."""
    s0, t0 = Fraction(at[0]), Fraction(at[1])
    if not s0 and not t0:
        raise RationalError("(0, 0) is not a projective parameter")
    den = lcm(s0.denominator, t0.denominator)
    a, b = int(s0 * den), int(t0 * den)
    g = gcd(a, b)
    a, b = a // g, b // g
    if (a or b) < 0:
        a, b = -a, -b
    return (a, b)


def _refine_factor(factor: MPoly, mult: int):
    """Split one squarefree factor into linear classes plus a root-free rest."""
    from .poly import exact_div, linear_root_form

    if factor.degree() == 1:
        # root of the linear form a*s + b*t is (-b : a)
        a = factor.coefficient((1, 0))
        b = factor.coefficient((0, 1))
        root = normalize_parameter((-b, a))
        return [ZeroClass(factor, mult, 1, root, True)]
    classes = []
    u = [factor.coefficient((i, factor.degree() - i)) for i in range(factor.degree() + 1)]
    rest = factor
    for r in _rational_roots(u):
        root = normalize_parameter((r, 1))
        form = linear_root_form(root)
        rest = exact_div(rest, form)
        classes.append(ZeroClass(form, mult, 1, root, True))
    restdeg = rest.degree()
    if restdeg and restdeg > 0:
        rest = rest.canonical()
        classes.append(
            ZeroClass(rest, mult, restdeg, None, True if restdeg <= 3 else None)
        )
    return classes


def conic_wronskian(param: RationalParam) -> WeierstrassScan:
    """Wronskian of the Veronese products and its zero structure.

    The determinant of the fifth-order partials is a binary form of degree
    6(2d - 5); the order of each zero is the conic contact weight of the
    corresponding curve point.
    """
    if param.degree < 3:
        raise RationalError(f"need degree >= 3, got {param.degree}")
    rows = _derivative_rows(param.veronese(), 5)
    xi = PolyMatrix(rows).det()
    if xi.is_zero():
        raise DegenerateParam("Wronskian vanishes identically")
    content, factors = squarefree_decomp(xi)
    classes = []
    for factor, mult in factors:
        classes.extend(_refine_factor(factor, mult))
    classes.sort(key=lambda z: (-z.multiplicity, z.factor.degree(), str(z.factor)))
    total = sum(z.multiplicity * z.points for z in classes)
    assert total == xi.degree() == 6 * (2 * param.degree - 5)
    return WeierstrassScan(xi, content, tuple(classes), total)


@dataclass(frozen=True)
class WeightEntry:
    weight: int
    points: int
    parameter: "tuple | None"
    point: "tuple | None"
    factor: MPoly


def weights_from_xi(scan: WeierstrassScan, param: RationalParam):
    """Per-point conic contact weights read off the Wronskian zero classes.

    Rational parameters are resolved to curve points; a degree-e root-free
    factor stands for e conjugate points carrying the class weight each.
    """
    out = []
    for z in scan.classes:
        point = param.eval_point(z.parameter) if z.parameter is not None else None
        out.append(WeightEntry(z.multiplicity, z.points, z.parameter, point, z.factor))
    return tuple(out)


def pullback(G: MPoly, param: RationalParam) -> MPoly:
    """Restriction G(phi0, phi1, phi2); zero when the curve divides G."""
    if not G.is_homogeneous():
        raise RationalError("pullback needs a homogeneous polynomial")
    return G.compose(param.phi)


@dataclass(frozen=True)
class OrdersReport:
    orders: tuple
    degree: int
    residual: int  # degree not accounted for by the listed parameters


def intersection_orders(G: MPoly, param: RationalParam, at_list) -> OrdersReport:
    """Vanishing orders of the pullback of G at the given parameters."""
    pb = pullback(G, param)
    if pb.is_zero():
        raise ZeroPullback("pullback vanishes identically: the curve divides G")
    orders = tuple(linear_factor_orders(pb, at) for at in at_list)
    deg = pb.degree()
    return OrdersReport(orders, deg, deg - sum(orders))


def local_branch_at(param: RationalParam, at, trunc: int) -> BranchParam:
    """Expand the parametrization into a branch at the parameter (s0 : t0)."""
    s0, t0 = Fraction(at[0]), Fraction(at[1])
    if not s0 and not t0:
        raise RationalError("(0, 0) is not a projective parameter")
    u = MPoly.variable(("u",), "u")
    if t0:
        imgs = (u + s0 / t0, MPoly.constant(("u",), 1))
    else:
        imgs = (MPoly.constant(("u",), 1), u)
    coords = []
    for p in param.phi:
        expanded = p.compose(imgs)
        coeffs = {e[0]: c for e, c in expanded.terms.items() if e[0] < trunc}
        coords.append(TruncSeries(coeffs, trunc))
    return BranchParam(*coords)
