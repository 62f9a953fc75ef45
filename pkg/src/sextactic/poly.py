"""Exact sparse polynomial arithmetic over the rationals.

Everything downstream (Hessian covariants, Wronskians, local branch analysis)
is built on the types here: ``MPoly`` over a fixed ordered variable tuple,
polynomial matrices with fraction-free determinants, and binary-form
utilities (gcd, squarefree splitting, root orders) for forms in (s, t).

Coefficients are arbitrary-precision rationals, stored as plain ``int``
whenever the denominator is 1.  The canonical term order is graded
lexicographic, descending, with x > y > z (resp. s > t); printing follows
that order and is byte-deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

XYZ = ("x", "y", "z")
ST = ("s", "t")


class PolyError(ValueError):
    """Base class for polynomial-domain errors."""


class VariableSetMismatch(PolyError):
    pass


class UnknownVariable(PolyError):
    pass


class ExactDivisionError(PolyError):
    pass


class NonSquareMatrix(PolyError):
    pass


class ZeroFormError(PolyError):
    pass


class InfiniteOrder(PolyError):
    """Vanishing order requested for the zero form."""


class NotHomogeneous(PolyError):
    pass


def _norm(c):
    """Coerce a coefficient to int when integral, Fraction otherwise."""
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"bad coefficient type {type(c).__name__}")


def _ratio(a, b):
    return _norm(Fraction(a) / Fraction(b))


def _order_key(expo):
    # graded lex, used descending: higher total degree first, then higher
    # exponent on the earlier variable
    return (sum(expo), expo)


def _coeff_str(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


class MPoly:
    """Sparse multivariate polynomial with exact rational coefficients.

    Immutable by convention: no method mutates ``terms`` after construction,
    so values can be shared freely.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        variables = tuple(variables)
        if not variables:
            raise PolyError("empty variable set")
        clean = {}
        for expo, c in (terms or {}).items():
            expo = tuple(int(e) for e in expo)
            if len(expo) != len(variables):
                raise VariableSetMismatch(
                    f"exponent vector {expo} does not match variables {variables}"
                )
            if any(e < 0 for e in expo):
                raise PolyError(f"negative exponent in {expo}")
            c = _norm(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
            if c:
                clean[expo] = clean.get(expo, 0) + c
        self.variables = variables
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def _make(cls, variables, terms):
        # fast path: trusted exponent vectors, coefficients already normalized
        obj = object.__new__(cls)
        obj.variables = variables
        obj.terms = {e: c for e, c in terms.items() if c}
        return obj

    @classmethod
    def zero(cls, variables):
        return cls._make(tuple(variables), {})

    @classmethod
    def constant(cls, variables, c):
        variables = tuple(variables)
        c = _norm(c if isinstance(c, (int, Fraction)) else Fraction(c))
        if not c:
            return cls._make(variables, {})
        return cls._make(variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        if name not in variables:
            raise UnknownVariable(f"variable {name!r} not among {variables}")
        expo = tuple(1 if v == name else 0 for v in variables)
        return cls._make(variables, {expo: 1})

    @classmethod
    def monomial(cls, variables, expo, c=1):
        return cls(tuple(variables), {tuple(expo): c})

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self):
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self):
        """Degree of a homogeneous polynomial (None if zero).

        Raises NotHomogeneous when terms of different total degree occur.
        """
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            raise NotHomogeneous(f"mixed total degrees {sorted(degs)}")
        return degs.pop() if degs else None

    def coefficient(self, expo):
        return self.terms.get(tuple(expo), 0)

    def sorted_terms(self):
        """Terms in canonical (graded-lex descending) order."""
        for expo in sorted(self.terms, key=_order_key, reverse=True):
            yield expo, self.terms[expo]

    def lead(self):
        """(exponent, coefficient) of the canonical leading term."""
        if not self.terms:
            raise ZeroFormError("zero polynomial has no leading term")
        expo = max(self.terms, key=_order_key)
        return expo, self.terms[expo]

    def min_exponent(self, var) -> int:
        """Smallest exponent of ``var`` over all terms (0 for the zero poly)."""
        i = self._index(var)
        if not self.terms:
            return 0
        return min(e[i] for e in self.terms)

    def _index(self, var) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise UnknownVariable(
                f"variable {var!r} not among {self.variables}"
            ) from None

    def _check_vars(self, other):
        if self.variables != other.variables:
            raise VariableSetMismatch(
                f"{self.variables} vs {other.variables}"
            )

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.variables, other)
        self._check_vars(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly._make(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._make(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _norm(other)
            if not c:
                return MPoly.zero(self.variables)
            return MPoly._make(
                self.variables, {e: _norm(k * c) for e, k in self.terms.items()}
            )
        self._check_vars(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly._make(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise PolyError(f"exponent must be a non-negative integer, got {n!r}")
        result = MPoly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    __hash__ = None

    # -- calculus / evaluation -------------------------------------------

    def partial(self, var):
        """Formal partial derivative with respect to ``var``."""
        i = self._index(var)
        out = {}
        for expo, c in self.terms.items():
            e = expo[i]
            if e:
                ne = expo[:i] + (e - 1,) + expo[i + 1 :]
                out[ne] = _norm(c * e)
        return MPoly._make(self.variables, out)

    def grad(self):
        return tuple(self.partial(v) for v in self.variables)

    def eval(self, values):
        """Evaluate at a point given as one rational per variable."""
        values = [Fraction(v) for v in values]
        if len(values) != len(self.variables):
            raise VariableSetMismatch(
                f"expected {len(self.variables)} values, got {len(values)}"
            )
        total = Fraction(0)
        for expo, c in self.terms.items():
            term = Fraction(c)
            for v, e in zip(values, expo):
                if e:
                    term *= v**e
            total += term
        return _norm(total)

    def compose(self, images):
        """Substitute one polynomial per variable; images share a variable set."""
        images = tuple(images)
        if len(images) != len(self.variables):
            raise VariableSetMismatch(
                f"expected {len(self.variables)} images, got {len(images)}"
            )
        tvars = images[0].variables
        for img in images:
            if img.variables != tvars:
                raise VariableSetMismatch("images use different variable sets")
        one = MPoly.constant(tvars, 1)
        powers = [[one] for _ in images]

        def power(i, e):
            cache = powers[i]
            while len(cache) <= e:
                cache.append(cache[-1] * images[i])
            return cache[e]

        acc = MPoly.zero(tvars)
        for expo, c in self.terms.items():
            term = MPoly.constant(tvars, c)
            for i, e in enumerate(expo):
                if e:
                    term = term * power(i, e)
            acc = acc + term
        return acc

    # -- normal forms ------------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self/c primitive integral; 0 for the zero poly."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def primitive(self):
        if not self.terms:
            return self
        return self * (1 / self.content())

    def canonical_with_scale(self):
        """(canonical, scale) with self = scale * canonical.

        Canonical means primitive integer coefficients and a positive
        coefficient on the canonical leading term.
        """
        if not self.terms:
            return self, Fraction(0)
        scale = self.content()
        prim = self * (1 / scale)
        if prim.lead()[1] < 0:
            prim = -prim
            scale = -scale
        return prim, scale

    def canonical(self):
        return self.canonical_with_scale()[0]

    # -- printing ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for expo, c in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.variables, expo)
                if e
            )
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{_coeff_str(mag)}*{mono}"
            else:
                body = _coeff_str(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"MPoly({'/'.join(self.variables)}: {self})"


def exact_div(f: MPoly, g: MPoly) -> MPoly:
    """Exact polynomial quotient f/g; raises ExactDivisionError otherwise."""
    f._check_vars(g)
    if g.is_zero():
        raise ExactDivisionError("division by the zero polynomial")
    if f.is_zero():
        return f
    ge, gc = g.lead()
    quot = {}
    rem = dict(f.terms)
    while rem:
        fe = max(rem, key=_order_key)
        qe = tuple(a - b for a, b in zip(fe, ge))
        if any(x < 0 for x in qe):
            raise ExactDivisionError(f"{g} does not divide {f}")
        qc = _ratio(rem[fe], gc)
        quot[qe] = quot.get(qe, 0) + qc
        for e2, c2 in g.terms.items():
            e = tuple(a + b for a, b in zip(qe, e2))
            nc = rem.get(e, 0) - qc * c2
            if nc:
                rem[e] = nc
            else:
                rem.pop(e, None)
    return MPoly._make(f.variables, quot)


class PolyMatrix:
    """Rectangular matrix of MPoly entries over one shared variable set."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = [list(row) for row in entries]
        if not entries or not entries[0]:
            raise PolyError("empty matrix")
        cols = len(entries[0])
        variables = entries[0][0].variables
        for row in entries:
            if len(row) != cols:
                raise PolyError("ragged rows")
            for p in row:
                if p.variables != variables:
                    raise VariableSetMismatch("matrix entries mix variable sets")
        self.rows = len(entries)
        self.cols = cols
        self.entries = entries

    @property
    def variables(self):
        return self.entries[0][0].variables

    def mul(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise PolyError("dimension mismatch in matrix product")
        zero = MPoly.zero(self.variables)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def det(self, method: str = "auto") -> MPoly:
        if self.rows != self.cols:
            raise NonSquareMatrix(f"{self.rows}x{self.cols} matrix")
        if method == "auto":
            n_zero = sum(p.is_zero() for row in self.entries for p in row)
            sparse = n_zero * 2 >= self.rows * self.cols
            method = "cofactor" if self.rows <= 3 or sparse else "bareiss"
        if method == "bareiss":
            return self._det_bareiss()
        if method == "cofactor":
            return self._det_cofactor()
        raise PolyError(f"unknown determinant method {method!r}")

    def _det_bareiss(self) -> MPoly:
        # fraction-free Gaussian elimination; every interior division is exact
        n = self.rows
        m = [row[:] for row in self.entries]
        zero = MPoly.zero(self.variables)
        sign = 1
        prev = None
        for k in range(n - 1):
            if m[k][k].is_zero():
                for i in range(k + 1, n):
                    if not m[i][k].is_zero():
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return zero
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                    m[i][j] = exact_div(num, prev) if prev is not None else num
                m[i][k] = zero
            prev = m[k][k]
        d = m[n - 1][n - 1]
        return d if sign > 0 else -d

    def _det_cofactor(self) -> MPoly:
        n = self.rows
        zero = MPoly.zero(self.variables)
        memo = {}

        def minor(cols):
            row = n - len(cols)
            if len(cols) == 1:
                return self.entries[row][cols[0]]
            got = memo.get(cols)
            if got is not None:
                return got
            acc = zero
            for idx, c in enumerate(cols):
                e = self.entries[row][c]
                if e.is_zero():
                    continue
                sub = e * minor(cols[:idx] + cols[idx + 1 :])
                acc = acc + sub if idx % 2 == 0 else acc - sub
            memo[cols] = acc
            return acc

        return minor(tuple(range(n)))


# -- binary forms in (s, t) -------------------------------------------------


def _require_form(f: MPoly) -> int:
    """Degree of a nonzero homogeneous binary form; raises otherwise."""
    if f.is_zero():
        raise ZeroFormError("zero form")
    d = f.homogeneous_degree()
    if len(f.variables) != 2:
        raise VariableSetMismatch(f"expected a binary form, got {f.variables}")
    return d


def _univ_from_form(f: MPoly):
    """Split f = s^a * t^b * h into (dense coeffs of h by s-exponent, a, b)."""
    d = _require_form(f)
    a = min(e[0] for e in f.terms)
    b = min(e[1] for e in f.terms)
    n = d - a - b
    u = [0] * (n + 1)
    for (es, _et), c in f.terms.items():
        u[es - a] = c
    return u, a, b


def _form_from_univ(u, variables=ST) -> MPoly:
    n = len(u) - 1
    return MPoly._make(
        tuple(variables), {(i, n - i): _norm(c) for i, c in enumerate(u) if c}
    )


def _u_deg(u) -> int:
    return len(u) - 1


def _u_trim(u):
    while len(u) > 1 and not u[-1]:
        u = u[:-1]
    return u


def _u_is_zero(u) -> bool:
    return len(u) == 1 and not u[0]


def _u_deriv(u):
    if len(u) == 1:
        return [0]
    return _u_trim([_norm(c * i) for i, c in enumerate(u)][1:])


def _u_sub(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] -= c
    return _u_trim(out)


def _u_divmod(a, b):
    if _u_is_zero(b):
        raise ExactDivisionError("univariate division by zero")
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while not _u_is_zero(_u_trim(a)) and len(_u_trim(a)) >= len(b):
        a = _u_trim(a)
        shift = len(a) - len(b)
        c = _ratio(a[-1], lead)
        q[shift] += c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        a[-1] = 0
    return _u_trim(q), _u_trim(a)


def _u_exact_div(a, b):
    q, r = _u_divmod(a, b)
    if not _u_is_zero(r):
        raise ExactDivisionError("univariate division not exact")
    return q


def _u_primitive(u):
    """Primitive integer coefficients, positive leading coefficient."""
    u = _u_trim(u)
    if _u_is_zero(u):
        return u
    num = 0
    den = 1
    for c in u:
        num = gcd(num, c.numerator)
        den = lcm(den, c.denominator)
    scale = Fraction(den, num) if u[-1] > 0 else Fraction(-den, num)
    return [_norm(c * scale) for c in u]


def _u_gcd(a, b):
    a, b = _u_trim(list(a)), _u_trim(list(b))
    while not _u_is_zero(b):
        a, b = b, _u_divmod(a, b)[1]
    return _u_primitive(a)


def _u_squarefree(u):
    """Yun decomposition of a nonconstant univariate over Q.

    Returns [(factor, multiplicity)] with primitive positive-leading factors;
    the product reproduces u up to a rational constant.
    """
    d1 = _u_deriv(u)
    g = _u_gcd(u, d1)
    if _u_deg(g) == 0:
        return [(_u_primitive(u), 1)]
    c = _u_exact_div(u, g)
    d = _u_sub(_u_exact_div(d1, g), _u_deriv(c))
    out = []
    i = 1
    while _u_deg(c) > 0:
        p = _u_gcd(c, d)
        if _u_deg(p) > 0:
            out.append((p, i))
        c = _u_exact_div(c, p)
        d = _u_sub(_u_exact_div(d, p), _u_deriv(c))
        i += 1
    return out


def binaryform_gcd(f: MPoly, g: MPoly) -> MPoly:
    """Gcd of two nonzero binary forms, primitive with positive leading term."""
    uf, af, bf_ = _univ_from_form(f)
    ug, ag, bg = _univ_from_form(g)
    u = _u_gcd(uf, ug)
    a, b = min(af, ag), min(bf_, bg)
    terms = {}
    for i, c in enumerate(u):
        if c:
            terms[(i + a, _u_deg(u) - i + b)] = _norm(c)
    return MPoly._make(f.variables, terms)


def squarefree_decomp(f: MPoly):
    """Split a nonzero binary form as content * prod(factor_i ** mult_i).

    Factors are primitive with positive leading coefficient, squarefree and
    pairwise coprime, listed in a deterministic order (degree, then canonical
    string); the rational content carries the sign.
    """
    u, a, b = _univ_from_form(f)
    variables = f.variables
    factors = []
    if a:
        factors.append((MPoly.variable(variables, variables[0]), a))
    if b:
        factors.append((MPoly.variable(variables, variables[1]), b))
    if _u_deg(u) > 0:
        for p, m in _u_squarefree(u):
            factors.append((_form_from_univ(p, variables), m))
    factors.sort(key=lambda fm: (fm[0].degree(), str(fm[0])))
    prod = MPoly.constant(variables, 1)
    for p, m in factors:
        prod = prod * p**m
    q = exact_div(f, prod)
    (expo, c), = q.terms.items()
    assert expo == (0, 0), "content quotient must be constant"
    return Fraction(c), factors


def linear_root_form(at, variables=ST) -> MPoly:
    """Primitive linear form vanishing at the parameter (s0 : t0)."""
    s0, t0 = Fraction(at[0]), Fraction(at[1])
    if not s0 and not t0:
        raise PolyError("(0, 0) is not a projective parameter")
    f = MPoly(tuple(variables), {(1, 0): t0, (0, 1): -s0})
    return f.canonical()


def linear_factor_orders(f: MPoly, at) -> int:
    """Multiplicity of the linear form through (s0 : t0) in f.

    Computed by exact repeated division; raises InfiniteOrder on the zero
    form, whose order of vanishing is unbounded.
    """
    if f.is_zero():
        raise InfiniteOrder("the zero form vanishes to infinite order")
    _require_form(f)
    s0, t0 = Fraction(at[0]), Fraction(at[1])
    form = linear_root_form((s0, t0), f.variables)
    k = 0
    while f.eval((s0, t0)) == 0:
        f = exact_div(f, form)
        k += 1
        if f.degree() == 0:
            break
    return k
