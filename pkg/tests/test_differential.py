"""Hessian bundle, trace/gradient covariants, the 12d-27 covariant, conics."""

import random
from fractions import Fraction

import pytest

from sextactic.differential import (
    DegreeTooSmall,
    HessianVanishes,
    InflectionPoint,
    PointNotOnCurve,
    SingularPoint,
    covariants,
    gradient_form_bordered,
    hessian,
    osculating_conic,
    second_hessian,
)
from sextactic.poly import XYZ, MPoly, NotHomogeneous
from sextactic.rational import linear_factor_orders, pullback
from sextactic.parse import parse_param

X, Y, Z = (MPoly.variable(XYZ, v) for v in XYZ)

NODAL_CUBIC = Y**2 * Z - X**3 - X**2 * Z
QUARTIC = X**4 - X**3 * Y + Y**3 * Z
FERMAT = X**3 + Y**3 + Z**3


def random_form(rng, degree, max_terms=5):
    terms = {}
    for _ in range(rng.randint(2, max_terms)):
        expo = [0, 0, 0]
        for _ in range(degree):
            expo[rng.randrange(3)] += 1
        terms[tuple(expo)] = rng.choice([v for v in range(-9, 10) if v])
    p = MPoly(XYZ, terms)
    return p if not p.is_zero() else MPoly(XYZ, {(degree, 0, 0): 1})


class TestHessian:
    def test_nodal_cubic(self):
        b = hessian(NODAL_CUBIC)
        assert b.H == 24 * X * Y**2 + 8 * Y**2 * Z - 8 * X**2 * Z

    def test_fermat_cubic(self):
        assert hessian(FERMAT).H == 216 * X * Y * Z

    def test_degree_is_3d_minus_6(self):
        assert hessian(QUARTIC).H.degree() == 3 * (4 - 2)

    def test_rejects_low_degree(self):
        with pytest.raises(DegreeTooSmall):
            hessian(X**2 + Y * Z)

    def test_rejects_inhomogeneous(self):
        with pytest.raises(NotHomogeneous):
            hessian(X**3 + Y)

    def test_adjugate_identity_random(self):
        rng = random.Random(17)
        for _ in range(12):
            b = hessian(random_form(rng, rng.randint(3, 5)))
            prod = b.adj_f.mul(b.hess_f)
            for i in range(3):
                for j in range(3):
                    want = b.H if i == j else MPoly.zero(XYZ)
                    assert prod.entries[i][j] == want


class TestCovariants:
    def test_split_identity_quartic(self):
        b = hessian(QUARTIC)
        cov = covariants(b)
        for i, v in enumerate(XYZ):
            assert (
                cov.trace_product.partial(v)
                == cov.trace_grad_adj[i] + cov.trace_grad_hess[i]
            )

    def test_gradient_form_two_formulas(self):
        for f in (FERMAT, QUARTIC):
            b = hessian(f)
            assert covariants(b).gradient_form == gradient_form_bordered(b)

    def test_vanishing_hessian_is_computable(self):
        # a cone: the Hessian vanishes identically, covariants collapse to 0
        b = hessian(X**2 * Y)
        assert b.H.is_zero()
        cov = covariants(b)
        assert cov.trace_product.is_zero()
        assert cov.gradient_form.is_zero()


class TestSecondHessian:
    def test_quartic_golden(self):
        got = second_hessian(QUARTIC)
        want = (
            MPoly.constant(XYZ, -(2**7) * 3**11 * 5 * 7)
            * Y**18
            * (4 * X - Y)
            * (14 * X**2 - 7 * X * Y + 2 * Y**2)
        )
        assert got == want

    def test_variant_difference(self):
        from sextactic.differential import _det3

        d = 4
        b = hessian(QUARTIC)
        cov = covariants(b)
        jac = _det3([QUARTIC.grad(), b.H.grad(), cov.gradient_form.grad()])
        diff = second_hessian(QUARTIC) - second_hessian(QUARTIC, "cayley1865")
        assert diff == 20 * (d - 2) ** 2 * jac

    def test_degree_random(self):
        # sparse forms often factor into lines/conics, where the covariant
        # legitimately vanishes; perturbed Fermat forms stay non-degenerate
        rng = random.Random(23)
        for i in range(12):
            d = (3, 4, 5)[i % 3]
            terms = {(d, 0, 0): 1, (0, d, 0): 1, (0, 0, d): 1}
            for _ in range(3):
                expo = [0, 0, 0]
                for _ in range(d):
                    expo[rng.randrange(3)] += 1
                terms[tuple(expo)] = terms.get(tuple(expo), 0) + rng.randint(-5, 5)
            f = MPoly(XYZ, terms)
            h2 = second_hessian(f)
            assert not h2.is_zero()
            assert h2.degree() == 12 * d - 27

    def test_vanishing_hessian_rejected(self):
        with pytest.raises(HessianVanishes):
            second_hessian(X**3)

    def test_unknown_variant(self):
        with pytest.raises(Exception):
            second_hessian(QUARTIC, "classic")


class TestOsculatingConic:
    def test_nodal_cubic_golden(self):
        conic = osculating_conic(NODAL_CUBIC, (-1, 0, 1))
        assert conic == 2 * X**2 + Y**2 + Z**2 + 3 * X * Z

    def test_inflection_rejected(self):
        with pytest.raises(InflectionPoint):
            osculating_conic(NODAL_CUBIC, (0, 1, 0))

    def test_singular_rejected(self):
        with pytest.raises(SingularPoint):
            osculating_conic(NODAL_CUBIC, (0, 0, 1))

    def test_off_curve_rejected(self):
        with pytest.raises(PointNotOnCurve):
            osculating_conic(NODAL_CUBIC, (1, 1, 1))

    def test_vanishes_at_the_point(self):
        conic = osculating_conic(NODAL_CUBIC, (-1, 0, 1))
        assert conic.eval((-1, 0, 1)) == 0

    def test_contact_order_at_least_five(self):
        # defining property, checked through the parametrization of the
        # nodal cubic: the conic pulled back has order >= 5 at the parameter
        param = parse_param("(s*t^2 - s^3 : t^3 - s^2*t : s^3)")
        f = NODAL_CUBIC
        h = hessian(f).H
        for at in [(1, 0), (1, 2), (1, 3), (2, 1), (3, 5), (1, -3)]:
            point = [Fraction(p.eval(at)) for p in param.phi]
            if f.eval(point) != 0:
                continue
            if not any(g.eval(point) for g in f.grad()):
                continue  # the node
            if h.eval(point) == 0:
                continue  # an inflection
            conic = osculating_conic(f, point)
            order = linear_factor_orders(pullback(conic, param), at)
            assert order >= 5
            if at == (1, 0):  # the distinguished point of excess contact
                assert order == 6
            else:
                assert order == 5
