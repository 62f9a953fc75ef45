"""Differential covariants of a plane projective curve.

Starting from the defining polynomial F this module builds the Hessian
determinant H, the adjugate of the Hessian matrix, the trace covariant of
the adjugate against the second-derivative matrix of H (with its two
one-sided gradient splittings), the adjugate quadratic form of the gradient
of H, the degree 12d-27 covariant cutting out the points of excess conic
contact, and the osculating conic at a rational point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import XYZ, MPoly, PolyMatrix


class DifferentialError(ValueError):
    pass


class DegreeTooSmall(DifferentialError):
    pass


class HessianVanishes(DifferentialError):
    pass


class PointNotOnCurve(DifferentialError):
    pass


class SingularPoint(DifferentialError):
    pass


class InflectionPoint(DifferentialError):
    pass


class IrrationalPoint(DifferentialError):
    pass


VARIANTS = ("corrected", "cayley1865")


@dataclass(frozen=True)
class HessianBundle:
    """F with its Hessian data: H = det(hess_f) and adj_f * hess_f = H * I."""

    F: MPoly
    d: int
    H: MPoly
    hess_f: PolyMatrix
    hess_h: PolyMatrix
    adj_f: PolyMatrix


@dataclass(frozen=True)
class CovariantSet:
    """Trace covariant, its two gradient splittings, and the gradient form.

    ``trace_grad_adj[v] + trace_grad_hess[v]`` equals the v-derivative of
    ``trace_product``; neither summand is a derivative on its own.
    """

    trace_product: MPoly
    trace_grad_adj: tuple
    trace_grad_hess: tuple
    gradient_form: MPoly


def _second_partials(F: MPoly) -> PolyMatrix:
    return PolyMatrix([[F.partial(u).partial(v) for v in XYZ] for u in XYZ])


def _adjugate3(m: PolyMatrix) -> PolyMatrix:
    [a, h, g], [h2, b, f], [g2, f2, c] = m.entries
    A = b * c - f * f
    B = a * c - g * g
    C = a * b - h * h
    Fq = h * g - a * f
    Gq = h * f - b * g
    Hq = f * g - h * c
    return PolyMatrix([[A, Hq, Gq], [Hq, B, Fq], [Gq, Fq, C]])


def _det3(rows) -> MPoly:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def hessian(F: MPoly) -> HessianBundle:
    """Hessian determinant and matrices of a form of degree >= 3."""
    if F.variables != XYZ:
        raise DifferentialError(f"expected a polynomial in {XYZ}")
    d = F.homogeneous_degree()  # raises NotHomogeneous on mixed degrees
    if d is None or d < 3:
        raise DegreeTooSmall(f"need a form of degree >= 3, got degree {d}")
    hess_f = _second_partials(F)
    H = hess_f.det()
    return HessianBundle(F, d, H, hess_f, _second_partials(H), _adjugate3(hess_f))


def _sym_entries(m: PolyMatrix):
    """(a, b, c, f, g, h) reading of a symmetric 3x3 matrix."""
    e = m.entries
    return e[0][0], e[1][1], e[2][2], e[1][2], e[0][2], e[0][1]


def _paired_trace(adj6, hess6):
    a2, b2, c2, f2, g2, h2 = hess6
    A, B, C, Fq, Gq, Hq = adj6
    return (
        A * a2 + B * b2 + C * c2 + 2 * (Fq * f2 + Gq * g2 + Hq * h2)
    )


def covariants(bundle: HessianBundle) -> CovariantSet:
    """All first-order covariants entering the excess-contact determinants."""
    adj6 = _sym_entries(bundle.adj_f)
    hess6 = _sym_entries(bundle.hess_h)
    trace = _paired_trace(adj6, hess6)
    grad_adj = tuple(
        _paired_trace([p.partial(v) for p in adj6], hess6) for v in XYZ
    )
    grad_hess = tuple(
        _paired_trace(adj6, [p.partial(v) for p in hess6]) for v in XYZ
    )
    hx, hy, hz = bundle.H.grad()
    form6 = (hx * hx, hy * hy, hz * hz, hy * hz, hx * hz, hx * hy)
    gradient_form = _paired_trace(adj6, form6)
    return CovariantSet(trace, grad_adj, grad_hess, gradient_form)


def gradient_form_bordered(bundle: HessianBundle) -> MPoly:
    """The gradient form as minus the bordered 4x4 determinant (cross-check)."""
    hx, hy, hz = bundle.H.grad()
    zero = MPoly.zero(XYZ)
    [a, h, g], [_, b, f], [_, _, c] = bundle.hess_f.entries
    m = PolyMatrix(
        [
            [zero, hx, hy, hz],
            [hx, a, h, g],
            [hy, h, b, f],
            [hz, g, f, c],
        ]
    )
    return -m.det()


def second_hessian(F: MPoly, variant: str = "corrected") -> MPoly:
    """The covariant of degree 12d-27 meeting the curve in its points of
    excess conic contact (plus inflections and singular points).

    ``variant`` selects the coefficient of the last term: 20 for the
    corrected form, 40 for the classical 1865 one.  The exact integer output
    of the defining formula is returned, content included.
    """
    if variant not in VARIANTS:
        raise DifferentialError(f"variant must be one of {VARIANTS}")
    kappa = 20 if variant == "corrected" else 40
    bundle = hessian(F)
    if bundle.H.is_zero():
        raise HessianVanishes(
            "the Hessian vanishes identically; no excess-contact covariant exists"
        )
    cov = covariants(bundle)
    d = bundle.d
    grad_f = F.grad()
    grad_h = bundle.H.grad()
    jac_adj = _det3([grad_f, grad_h, cov.trace_grad_adj])
    jac_hess = _det3([grad_f, grad_h, cov.trace_grad_hess])
    jac_form = _det3([grad_f, grad_h, cov.gradient_form.grad()])
    return (
        (12 * d * d - 54 * d + 57) * bundle.H * jac_adj
        + (d - 2) * (12 * d - 27) * bundle.H * jac_hess
        - kappa * (d - 2) * (d - 2) * jac_form
    )


def osculating_conic(F: MPoly, p) -> MPoly:
    """Canonical primitive conic with fifth-order contact at the smooth,
    non-inflection rational point p on V(F)."""
    try:
        point = tuple(Fraction(v) for v in p)
    except (TypeError, ValueError):
        raise IrrationalPoint(f"point coordinates must be rational: {p!r}") from None
    if len(point) != 3 or not any(point):
        raise DifferentialError(f"need a projective point, got {p!r}")
    bundle = hessian(F)
    if F.eval(point) != 0:
        raise PointNotOnCurve(f"F does not vanish at {p!r}")
    grads = [g.eval(point) for g in F.grad()]
    if not any(grads):
        raise SingularPoint(f"the curve is singular at {p!r}")
    h_at = bundle.H.eval(point)
    if h_at == 0:
        raise InflectionPoint(f"the Hessian vanishes at {p!r}")
    cov = covariants(bundle)
    lam = Fraction(
        -3 * Fraction(cov.trace_product.eval(point)) * Fraction(h_at)
        + 4 * Fraction(cov.gradient_form.eval(point)),
        9 * Fraction(h_at) ** 3,
    )
    x, y, z = (MPoly.variable(XYZ, v) for v in XYZ)
    df = x * grads[0] + y * grads[1] + z * grads[2]
    a, b, c, f, g, h = (p.eval(point) for p in _sym_entries(bundle.hess_f))
    d2f = (
        x * x * a + y * y * b + z * z * c
        + 2 * (x * y * h + x * z * g + y * z * f)
    )
    hgrads = [g.eval(point) for g in bundle.H.grad()]
    dh = x * hgrads[0] + y * hgrads[1] + z * hgrads[2]
    conic = d2f - (dh * Fraction(2, 3 * h_at) + df * lam) * df
    return conic.canonical()
