"""Local analysis at a unibranched curve point.

A branch is given by three truncated power series in a local parameter.  The
central computation reduces the pulled-back conic monomial basis to six
series with pairwise distinct valuations; those valuations are the orders a
conic can attain against the branch, and they determine the conic-contact
weight of the point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import XYZ, MPoly
from .series import TruncSeries


class BranchError(ValueError):
    pass


class NonPrimitiveBranch(BranchError):
    pass


class TruncationInsufficient(BranchError):
    """Raised when distinct valuations cannot be resolved within the data.

    ``needed`` is the smallest input truncation that could possibly resolve
    the stall: one more than what was supplied (deeper coefficients may push
    the requirement further still).
    """

    def __init__(self, needed: int, stalled_at: int):
        self.needed = needed
        self.stalled_at = stalled_at
        super().__init__(
            f"series data exhausted at order {stalled_at}; "
            f"re-supply the branch with truncation >= {needed}"
        )


# conic monomial basis, in the fixed order x^2, y^2, z^2, yz, xz, xy
CONIC_BASIS = ((2, 0, 0), (0, 2, 0), (0, 0, 2), (0, 1, 1), (1, 0, 1), (1, 1, 0))
LINE_BASIS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


class BranchParam:
    """Primitive branch (x(t) : y(t) : z(t)) with a common usable truncation."""

    __slots__ = ("x", "y", "z")

    def __init__(self, x: TruncSeries, y: TruncSeries, z: TruncSeries):
        if not any(c.valuation() == 0 for c in (x, y, z)):
            raise NonPrimitiveBranch(
                "no coordinate is a unit: the branch is not primitive at t=0"
            )
        self.x = x
        self.y = y
        self.z = z

    @property
    def coords(self):
        return (self.x, self.y, self.z)

    @property
    def trunc(self) -> int:
        return min(c.trunc for c in self.coords)

    def monomial_pullback(self, expo) -> TruncSeries:
        """Pull x^i y^j z^k back along the branch."""
        out = None
        for coord, e in zip(self.coords, expo):
            for _ in range(e):
                out = coord if out is None else out * coord
        if out is None:
            t = self.trunc
            return TruncSeries({0: 1}, t)
        return out

    def __repr__(self):
        return f"BranchParam(x={self.x}, y={self.y}, z={self.z})"


@dataclass(frozen=True)
class ValuationLadder:
    """Attainable conic contact orders at a branch, with witnesses.

    ``orders`` is strictly increasing; ``witnesses[i]`` is a primitive
    integer conic whose pullback along the branch has valuation exactly
    ``orders[i]``.
    """

    orders: tuple
    witnesses: tuple

    def witness_for(self, order: int) -> MPoly:
        return self.witnesses[self.orders.index(order)]


@dataclass(frozen=True)
class WeightReport:
    w2: int
    ladder: ValuationLadder
    classification: str
    m: int
    l: int
    c: "int | None"
    sextactic_order: "int | None"


def _reduce_to_distinct(items, branch_trunc: int):
    """Gaussian elimination by leading exponent on (series, coefficient-vector)
    pairs; returns {valuation: (series, vector)} with distinct valuations."""
    pivots = {}
    for series, vec in items:
        while True:
            v = series.valuation()
            if v is None:
                raise TruncationInsufficient(branch_trunc + 1, series.trunc)
            hit = pivots.get(v)
            if hit is None:
                pivots[v] = (series, vec)
                break
            ps, pvec = hit
            r = Fraction(series.coeffs[v]) / Fraction(ps.coeffs[v])
            series = series - ps * r
            vec = tuple(a - r * b for a, b in zip(vec, pvec))
    return pivots


def _vector_to_conic(vec, basis) -> MPoly:
    conic = MPoly(XYZ, {expo: c for expo, c in zip(basis, vec)})
    return conic.canonical()


def valuation_ladder(b: BranchParam) -> ValuationLadder:
    """The six conic contact orders attainable at the branch, with witnesses."""
    items = []
    for i, expo in enumerate(CONIC_BASIS):
        vec = tuple(Fraction(int(i == j)) for j in range(6))
        items.append((b.monomial_pullback(expo), vec))
    pivots = _reduce_to_distinct(items, b.trunc)
    orders = tuple(sorted(pivots))
    witnesses = tuple(_vector_to_conic(pivots[v][1], CONIC_BASIS) for v in orders)
    return ValuationLadder(orders, witnesses)


def line_orders(b: BranchParam):
    """(m, l): branch multiplicity and tangent contact order.

    These are the two nonzero valuations attainable by linear forms.
    """
    items = []
    for i, expo in enumerate(LINE_BASIS):
        vec = tuple(Fraction(int(i == j)) for j in range(3))
        items.append((b.monomial_pullback(expo), vec))
    pivots = _reduce_to_distinct(items, b.trunc)
    v0, m, l = sorted(pivots)
    if v0 != 0:
        raise NonPrimitiveBranch("no linear form is a unit along the branch")
    return m, l


def _special_order(orders, m: int):
    """For a branch with l = 2m the ladder is {0, m, 2m, 3m, 4m, c}; pick c."""
    plain = {0, m, 2 * m, 3 * m, 4 * m}
    extra = [v for v in orders if v not in plain]
    if len(extra) != 1:
        raise BranchError(
            f"ladder {orders} is not of the tangent-degenerate shape for m={m}"
        )
    return extra[0]


def weight2(b: BranchParam) -> WeightReport:
    """Conic contact weight and classification of the branch point."""
    ladder = valuation_ladder(b)
    m, l = line_orders(b)
    w2 = sum(ladder.orders) - 15
    c = None
    sextactic_order = None
    if l == 2 * m:
        c = _special_order(ladder.orders, m)
    if m > 1:
        classification = "cusp"
    elif l > 2:
        classification = "inflection"
    elif c == 5:
        classification = "smooth_ordinary"
    else:
        classification = "sextactic"
        sextactic_order = c - 5
    return WeightReport(w2, ladder, classification, m, l, c, sextactic_order)


def closed_form_ladder(m: int, l: int, c=None):
    """The six attainable conic orders from the branch invariants alone.

    For l != 2m the orders are {0, m, l, 2m, m+l, 2l}; for l = 2m they are
    {0, m, 2m, 3m, 4m, c} and c must satisfy c > 2m, c not in {3m, 4m}.
    Returned sorted ascending.
    """
    if not (isinstance(m, int) and isinstance(l, int) and m >= 1 and l > m):
        raise BranchError(f"need integers l > m >= 1, got m={m!r}, l={l!r}")
    if l != 2 * m:
        if c is not None:
            raise BranchError("c is only meaningful when l = 2m")
        return tuple(sorted({0, m, l, 2 * m, m + l, 2 * l}))
    if c is None:
        raise BranchError("l = 2m requires the conic contact order c")
    if not (isinstance(c, int) and c > 2 * m and c not in (3 * m, 4 * m)):
        raise BranchError(
            f"c must satisfy c > {2*m} and c != {3*m}, {4*m}; got {c!r}"
        )
    return tuple(sorted({0, m, 2 * m, 3 * m, 4 * m, c}))


def hyperosculating_conic_at_branch(b: BranchParam) -> MPoly:
    """The distinguished conic of maximal special contact at the branch.

    For tangent-degenerate branches (l = 2m) this is a conic of contact
    order c, which is irreducible; otherwise it is the conic of maximal
    contact 2l (the doubled tangent line).
    """
    ladder = valuation_ladder(b)
    m, l = line_orders(b)
    target = _special_order(ladder.orders, m) if l == 2 * m else ladder.orders[-1]
    return ladder.witness_for(target)


@dataclass(frozen=True)
class ContactReport:
    ok: bool
    messages: tuple
    feasible_l: tuple  # (value, witnessing k) pairs, increasing in k
    feasible_c: "tuple | None"  # None when the c-constraint does not apply


def cusp_contact_constraints(ms, d: int, l=None, c=None) -> ContactReport:
    """Check tangent/conic contact orders against a cusp multiplicity sequence.

    The attainable orders have the form k*m + m_k where the first k entries
    of the sequence are all equal to m; l is additionally bounded by d and c
    by 2d, with c > 2m and c != 3m, 4m.  When l or c is not supplied, the
    feasible values are reported instead of checked.
    """
    ms = list(ms)
    if not ms or any(not isinstance(v, int) or v < 1 for v in ms):
        raise BranchError(f"malformed multiplicity sequence {ms!r}")
    if any(a < b for a, b in zip(ms, ms[1:])):
        raise BranchError(f"multiplicity sequence must be non-increasing: {ms!r}")
    if not isinstance(d, int) or d < 3:
        raise BranchError(f"need an integer curve degree d >= 3, got {d!r}")
    m = ms[0]
    ext = ms + [1]
    candidates = []  # (k, k*m + m_k) while the prefix stays constant
    for k in range(1, len(ext)):
        if any(v != m for v in ext[:k]):
            break
        candidates.append((k, k * m + ext[k]))

    messages = []
    ok = True
    feasible_l = tuple((val, k) for k, val in candidates if val <= d)
    if not feasible_l:
        ok = False
        messages.append(f"no tangent contact order fits within degree {d}")
    if l is not None:
        if all(val != l for val, _k in feasible_l):
            ok = False
            messages.append(
                f"l={l} is not attainable; feasible: {[v for v, _ in feasible_l]}"
            )
        else:
            k = next(k for val, k in feasible_l if val == l)
            messages.append(f"l={l} realized with k={k}")

    feasible_c = None
    if l is not None and l == 2 * m:
        feasible_c = tuple(
            (val, k)
            for k, val in candidates
            if k >= 2 and 2 * m < val <= 2 * d and val not in (3 * m, 4 * m)
        )
        if not feasible_c:
            ok = False
            messages.append("no conic contact order is available for l = 2m")
        if c is not None:
            if all(val != c for val, _k in feasible_c):
                ok = False
                messages.append(
                    f"c={c} is not attainable; feasible: "
                    f"{[v for v, _ in feasible_c]}"
                )
            else:
                k = next(k for val, k in feasible_c if val == c)
                messages.append(f"c={c} realized with k={k}")
    elif c is not None:
        ok = False
        messages.append("c was supplied but l != 2m, so no conic constraint applies")

    return ContactReport(ok, tuple(messages), feasible_l, feasible_c)
