"""Continuous possibility distributions on the unit interval.

A continuous assignment is a measurable f : [0,1] -> [0,1]; we represent
the piecewise-linear class exactly, because everything downstream then
admits closed forms:

* the level measure P(y) = measure{x : f(x) >= y} is piecewise polynomial
  of degree <= 1 (degree <= 2 after min-products),
* the descending rearrangement is the generalized inverse of P,
* the information value

      info(f) = integral_0^1 (1 - f~(x)) / x dx

  integrates segment by segment in closed form (f~ the rearrangement).

The integral is the information distance from the uniform assignment
f == 1; it diverges for subnormal inputs (sup f < 1), which is reported
as an error rather than regularized.  Non-linear curves enter through
``sample_function`` with the usual interpolation error bound.
"""

import bisect
import math

import numpy as np

from .discrete import NORMALIZATION_TOL
from .errors import DivergenceError, OrderViolationError

_SNAP = 1e-12


class PiecewisePossibility:
    """Piecewise-linear function on [0, 1] with values in [0, 1].

    Breakpoints have strictly increasing x from exactly 0 to exactly 1;
    values interpolate linearly in between.  Normalized means the maximum
    breakpoint value reaches 1 within ``NORMALIZATION_TOL`` (for a
    piecewise-linear function the sup is attained at a breakpoint).
    """

    __slots__ = ("points", "_xs", "_vs", "is_normalized")

    def __init__(self, points):
        pts = tuple((float(x), float(v)) for x, v in points)
        if len(pts) < 2:
            raise ValueError("need at least two breakpoints")
        xs = [x for x, _ in pts]
        vs = [v for _, v in pts]
        if xs[0] != 0.0 or xs[-1] != 1.0:
            raise ValueError(f"domain must be exactly [0, 1], got [{xs[0]}, {xs[-1]}]")
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("x-coordinates must be strictly increasing")
        for i, v in enumerate(vs):
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"value at breakpoint {i} outside [0, 1]: {v!r}")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "_xs", np.asarray(xs))
        object.__setattr__(self, "_vs", np.asarray(vs))
        object.__setattr__(self, "is_normalized", max(vs) >= 1.0 - NORMALIZATION_TOL)

    def __setattr__(self, name, value):
        raise AttributeError("PiecewisePossibility is immutable")

    def __eq__(self, other):
        if not isinstance(other, PiecewisePossibility):
            return NotImplemented
        return self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"PiecewisePossibility({len(self.points)} breakpoints)"

    @property
    def xs(self):
        return self._xs

    @property
    def vs(self):
        return self._vs

    @property
    def max_value(self):
        return float(self._vs.max())

    def __call__(self, x):
        return np.interp(x, self._xs, self._vs)


def sample_function(evaluator, n_breakpoints):
    """Piecewise-linear interpolant of a callable on a uniform grid.

    The evaluator must map [0, 1] into [0, 1] at every grid point; values
    drifting outside by at most 1e-12 (floating round-off) are snapped
    back.  Refinement is the caller's responsibility via ``n_breakpoints``;
    for a C^2 curve the sup-norm error is bounded by max|f''| h^2 / 8 with
    h the grid step.
    """
    if n_breakpoints < 2:
        raise ValueError("need at least two breakpoints")
    xs = np.linspace(0.0, 1.0, n_breakpoints)
    try:  # array-aware evaluators take the whole grid at once
        vs = np.asarray(evaluator(xs), dtype=float)
        if vs.shape != xs.shape:
            raise TypeError
    except (TypeError, ValueError):
        vs = np.array([float(evaluator(float(x))) for x in xs])
    vs[(vs >= -_SNAP) & (vs < 0.0)] = 0.0
    vs[(vs > 1.0) & (vs <= 1.0 + _SNAP)] = 1.0
    bad = np.nonzero((vs < 0.0) | (vs > 1.0) | ~np.isfinite(vs))[0]
    if bad.size:
        i = int(bad[0])
        raise ValueError(
            f"evaluator output outside [0, 1] at x={float(xs[i])!r}: {float(vs[i])!r}"
        )
    return PiecewisePossibility(zip(xs.tolist(), vs.tolist()))


class LevelMeasure:
    """The survival-style level function P(y) = measure{x : f(x) >= y}.

    Stored as contiguous polynomial pieces over y in [0, 1], each of
    degree <= 2, monotone nonincreasing.  P is left-continuous: the piece
    over (b_k, b_{k+1}] owns its upper endpoint, and downward jumps at
    piece boundaries encode plateaus of the underlying function.  ``total``
    is P(0), the measure of the whole domain.
    """

    __slots__ = ("bounds", "coeffs", "total")

    def __init__(self, bounds, coeffs, total):
        bounds = tuple(float(b) for b in bounds)
        coeffs = tuple(
            (float(c[0]), float(c[1]), float(c[2]) if len(c) > 2 else 0.0) for c in coeffs
        )
        if len(bounds) != len(coeffs) + 1:
            raise ValueError("need exactly one more bound than pieces")
        if bounds[0] != 0.0 or bounds[-1] != 1.0:
            raise ValueError("pieces must cover exactly [0, 1]")
        if any(b <= a for a, b in zip(bounds, bounds[1:])):
            raise ValueError("bounds must be strictly increasing")
        object.__setattr__(self, "bounds", bounds)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "total", float(total))

    def __setattr__(self, name, value):
        raise AttributeError("LevelMeasure is immutable")

    def __eq__(self, other):
        if not isinstance(other, LevelMeasure):
            return NotImplemented
        return (
            self.bounds == other.bounds
            and self.coeffs == other.coeffs
            and self.total == other.total
        )

    def __hash__(self):
        return hash((self.bounds, self.coeffs, self.total))

    def __repr__(self):
        return f"LevelMeasure({len(self.coeffs)} pieces, total={self.total:g})"

    @property
    def degree(self):
        deg = 0
        for c0, c1, c2 in self.coeffs:
            if c2 != 0.0:
                deg = max(deg, 2)
            elif c1 != 0.0:
                deg = max(deg, 1)
        return deg

    def piece_value(self, k, y):
        c0, c1, c2 = self.coeffs[k]
        return c0 + y * (c1 + y * c2)

    def __call__(self, y):
        y = float(y)
        if not 0.0 <= y <= 1.0:
            raise ValueError("level must lie in [0, 1]")
        if y == 0.0:
            return self.total
        k = bisect.bisect_left(self.bounds, y) - 1
        k = min(max(k, 0), len(self.coeffs) - 1)
        return self.piece_value(k, y)


def level_measure(f):
    """Exact level measure of a piecewise-linear function.

    Each non-constant segment spanning values [lo, hi] contributes
    (hi - y) * width / (hi - lo) for levels inside its span and its full
    width below; constant segments contribute their width up to their
    value, creating the downward jump there.

    Every piece's value and slope is summed freshly over the segments
    spanning it, so no cancellation occurs even when segment slopes vary
    over many orders of magnitude.  Cost scales with the number of
    (piece, spanning segment) incidences, which is linear for monotone or
    few-breakpoint inputs.
    """
    xs, vs = f.xs, f.vs
    x0, x1 = xs[:-1], xs[1:]
    v0, v1 = vs[:-1], vs[1:]
    w = x1 - x0
    const = v0 == v1
    lo = np.minimum(v0, v1)
    hi = np.maximum(v0, v1)

    b = np.unique(np.concatenate((np.array([0.0, 1.0]), vs)))
    K = len(b) - 1

    nz = np.nonzero(~const)[0]
    rate = np.zeros(len(w))
    rate[nz] = w[nz] / (hi[nz] - lo[nz])

    # full-width mass above a level: non-constant segments with lo >= y
    # plus constant segments with value >= y, via sorted suffix sums
    lo_sorted = np.sort(lo[nz])
    w_suffix = np.concatenate((np.cumsum(w[nz][np.argsort(lo[nz], kind="stable")][::-1])[::-1], [0.0]))
    cidx = np.nonzero(const)[0]
    cv_sorted = np.sort(v0[cidx])
    cw_suffix = np.concatenate((np.cumsum(w[cidx][np.argsort(v0[cidx], kind="stable")][::-1])[::-1], [0.0]))

    def mass_at_or_above(y):
        i = np.searchsorted(lo_sorted, y, side="left")
        j = np.searchsorted(cv_sorted, y, side="left")
        return float(w_suffix[i]) + float(cw_suffix[j])

    # spanning segments per piece, maintained as an event-driven active set
    starts = {}
    ends = {}
    for i in nz:
        starts.setdefault(float(lo[i]), []).append(int(i))
        ends.setdefault(float(hi[i]), []).append(int(i))

    coeffs = []
    active = set()
    for k in range(K):
        active.update(starts.get(float(b[k]), ()))
        y_top = float(b[k + 1])
        m = -sum(float(rate[i]) for i in active)
        top = mass_at_or_above(y_top) + sum(
            float(rate[i]) * (float(hi[i]) - y_top) for i in active
        )
        coeffs.append((top - m * y_top, m, 0.0))
        active.difference_update(ends.get(y_top, ()))
    total = mass_at_or_above(0.0)
    return LevelMeasure(b.tolist(), coeffs, total)


def _invert_monotone_piece(coeffs, ya, yb, x):
    """Solve P(y) = x on [ya, yb] for a nonincreasing polynomial piece."""
    c0, c1, c2 = coeffs
    lo, hi = ya, yb
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if c0 + mid * (c1 + mid * c2) > x:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _quad_inverse_points(coeffs, ya, yb, pa, pb, tol):
    """Sampled inverse graph of a quadratic piece, from (pb, yb) to (pa, ya).

    Subdivides until the chord midpoint is within tol/2 of the true
    inverse, which bounds the sup-norm error of the interpolant by tol for
    the convex/concave inverse of a monotone quadratic.
    """
    out = [(pb, yb)]

    def refine(x0, y0, x1, y1, depth):
        # the 8e-15 width floor keeps generated points clear of the
        # domain-end snapping in rearrange()
        if x1 - x0 <= 8e-15 or depth >= 64:
            out.append((x1, y1))
            return
        xm = 0.5 * (x0 + x1)
        ym = _invert_monotone_piece(coeffs, ya, yb, xm)
        if abs(ym - 0.5 * (y0 + y1)) <= 0.5 * tol:
            out.append((x1, y1))
            return
        refine(x0, y0, xm, ym, depth + 1)
        refine(xm, ym, x1, y1, depth + 1)

    refine(pb, yb, pa, ya, 0)
    return out


def rearrange(level, tol=1e-9):
    """Descending rearrangement: the generalized inverse of a level measure.

    Returns the nonincreasing function f~ on [0, 1] with
    measure{f~ >= a} = P(a) for every level a.  Linear pieces invert
    exactly; quadratic pieces are inverted by bisection at adaptively
    inserted breakpoints until the interpolant is within ``tol`` sup-norm.
    Plateaus of P (possible only at its extreme values for measures built
    here) become the single jump allowed at the domain ends; jumps of P
    become plateaus of f~.
    """
    if abs(level.total - 1.0) > NORMALIZATION_TOL:
        raise ValueError(f"rearrangement requires total measure 1, got {level.total!r}")
    b = level.bounds
    K = len(level.coeffs)
    raw = []
    top_val = level.piece_value(K - 1, b[K])  # P(1)
    if top_val > _SNAP:
        raw.append((0.0, 1.0))
    for k in range(K - 1, -1, -1):
        ya, yb = b[k], b[k + 1]
        pa = level.piece_value(k, ya)
        pb = level.piece_value(k, yb)
        if pa > pb and level.coeffs[k][2] != 0.0:
            raw.extend(_quad_inverse_points(level.coeffs[k], ya, yb, pa, pb, tol))
        else:
            # Linear pieces invert exactly; plateau pieces (pa == pb)
            # collapse to a single x and encode a jump of f~ there.
            raw.append((pb, yb))
            raw.append((pa, ya))
    raw.append((level.total, 0.0))

    # Snap x values near the domain ends (total is 1 within tolerance),
    # force monotonicity against ulp wobble, then collapse duplicate-x
    # runs: keep the lowest y (the right-continuous inverse) except at the
    # right end, where the left limit keeps f~ representable without a jump.
    pts = []
    prev_x = 0.0
    for x, y in raw:
        if x < 1e-15:  # below the quad-refinement width floor
            x = 0.0
        elif x >= 1.0 or abs(x - level.total) < _SNAP:
            x = 1.0
        x = max(x, prev_x)
        prev_x = x
        pts.append((x, y))

    cleaned = []
    for x, y in pts:
        if cleaned and cleaned[-1][0] == x:
            if x == 1.0:
                continue  # keep the first (highest) value at the right end
            cleaned[-1] = (x, y)
        else:
            cleaned.append((x, y))
    if cleaned[-1][0] != 1.0:
        cleaned.append((1.0, cleaned[-1][1]))
    return PiecewisePossibility(cleaned)


def _info_of_descending(ft):
    """Closed-form integral of (1 - f~(x))/x over each linear segment."""
    xs, vs = ft.xs, ft.vs
    u = 1.0 - vs
    if u[0] > NORMALIZATION_TOL:
        raise DivergenceError(
            "information integral diverges at 0: the distribution is subnormal "
            f"(sup = {vs[0]!r} < 1)"
        )
    total = 0.0
    u_prev = 0.0  # u at the left end of the current segment; exactly 0 at x = 0
    for i in range(len(xs) - 1):
        a, bx = float(xs[i]), float(xs[i + 1])
        ua = u_prev if i == 0 else float(u[i])
        ub = float(u[i + 1])
        s = (ub - ua) / (bx - a)
        if a == 0.0:
            total += s * bx
        else:
            total += (ua - s * a) * (math.log(bx) - math.log(a)) + s * (bx - a)
    return total


def info(f):
    """Information value of a normalized continuous assignment.

    Computed by rearranging the level measure and integrating
    (1 - f~(x))/x segment by segment in closed form.  Subnormal input
    raises ``DivergenceError``.
    """
    if not f.is_normalized:
        raise DivergenceError(
            f"information integral diverges at 0: sup f = {f.max_value!r} < 1"
        )
    return _info_of_descending(rearrange(level_measure(f)))


def _quad_segment_integral(coeffs, ya, yb):
    """Integral of (1-y) * (-P'(y)) / P(y) over a quadratic piece."""
    from scipy.integrate import quad

    c0, c1, c2 = coeffs
    if yb == 1.0 and abs(c0 + c1 + c2) <= 1e-13 * max(1.0, abs(c0), abs(c1), abs(c2)):
        # P factors as (1-y) * (c0 - c2*y); cancel the root to keep the
        # integrand numerically stable as y -> 1.
        def integrand(y):
            return -(c1 + 2.0 * c2 * y) / (c0 - c2 * y)

    else:

        def integrand(y):
            return (1.0 - y) * -(c1 + 2.0 * c2 * y) / (c0 + y * (c1 + y * c2))

    value, _err = quad(integrand, ya, yb, epsabs=1e-11, epsrel=1e-11, limit=200)
    return value


def info_from_level(level):
    """Information value computed directly on the level-measure side.

    Change of variables x = P(y) turns the defining integral into

        integral_0^1 (1 - y) * (-P'(y)) / P(y) dy

    plus a term (1 - y) * ln(P(y-) / P(y+)) for each downward jump of P.
    Linear pieces integrate in closed form; quadratic pieces by adaptive
    quadrature.  Agrees with ``info(rearrange(level))`` within 1e-6.
    """
    if abs(level.total - 1.0) > NORMALIZATION_TOL:
        raise ValueError(f"information requires total measure 1, got {level.total!r}")
    total = 0.0
    prev_val = level.total  # value of P on the lower side of the boundary
    for k in range(len(level.coeffs)):
        ya, yb = level.bounds[k], level.bounds[k + 1]
        c0, c1, c2 = level.coeffs[k]
        upper_limit = level.piece_value(k, ya)  # limit of P as y -> ya from above
        if upper_limit <= 0.0 and ya < 1.0:
            if upper_limit < -1e-9:
                raise ValueError("level measure goes negative")
            raise DivergenceError(
                f"information integral diverges: P vanishes at level {ya!r} < 1"
            )
        if prev_val > upper_limit:  # downward jump of P at ya
            total += (1.0 - ya) * (math.log(prev_val) - math.log(upper_limit))
        bottom = upper_limit
        top = level.piece_value(k, yb)
        if top < -1e-9:
            raise ValueError("level measure goes negative")
        if top <= 0.0 and yb < 1.0:
            raise DivergenceError(
                f"information integral diverges: P vanishes at level {yb!r} < 1"
            )
        if c2 == 0.0:
            if c1 != 0.0:
                # integral = (1/m) * [(w_top - w_bottom) - (m + c0) * ln(w_top / w_bottom)]
                # with w = P(y); the log coefficient m + c0 is P extrapolated to y = 1,
                # which vanishes exactly when the piece runs down to P(1) = 0.
                m = c1
                k_extr = m + c0
                term = (top - bottom) / m
                if k_extr != 0.0:
                    if top <= 0.0:
                        raise DivergenceError(
                            "information integral diverges on the final piece"
                        )
                    term -= k_extr * (math.log(top) - math.log(bottom)) / m
                total += term
        else:
            total += _quad_segment_integral(level.coeffs[k], ya, yb)
        prev_val = top
    return total


def product_level(p1, p2):
    """Level measure of the min-product: the pointwise product P1 * P2.

    The super-level set of min(f1(x), f2(y)) on the unit square is the
    Cartesian product of the factors' super-level sets, so the level
    measures multiply.  Pieces multiply on the common refinement; the
    result must stay within degree 2.
    """
    bounds = sorted(set(p1.bounds) | set(p2.bounds))
    coeffs = []
    for a, b in zip(bounds, bounds[1:]):
        k1 = min(bisect.bisect_left(p1.bounds, b) - 1, len(p1.coeffs) - 1)
        k2 = min(bisect.bisect_left(p2.bounds, b) - 1, len(p2.coeffs) - 1)
        c = np.polynomial.polynomial.polymul(p1.coeffs[k1], p2.coeffs[k2])
        c = np.trim_zeros(c, "b")
        if len(c) > 3:
            raise ValueError(
                "degree overflow: the product of these level measures exceeds degree 2"
            )
        c = tuple(float(x) for x in c) + (0.0,) * (3 - len(c))
        coeffs.append(c)
    return LevelMeasure(bounds, coeffs, p1.total * p2.total)


def _merged_grid(f1, f2):
    xs = np.unique(np.concatenate((f1.xs, f2.xs)))
    v1 = f1(xs)
    v2 = f2(xs)
    d = v1 - v2
    crossings = []
    for i in range(len(xs) - 1):
        d0, d1 = d[i], d[i + 1]
        if (d0 > _SNAP and d1 < -_SNAP) or (d0 < -_SNAP and d1 > _SNAP):
            t = xs[i] + d0 / (d0 - d1) * (xs[i + 1] - xs[i])
            crossings.append(t)
    if crossings:
        xs = np.unique(np.concatenate((xs, np.asarray(crossings))))
    return xs


def meet_pw(f1, f2):
    """Pointwise min of two piecewise-linear assignments, exact."""
    xs = _merged_grid(f1, f2)
    vs = np.minimum(f1(xs), f2(xs))
    return PiecewisePossibility(zip(xs.tolist(), vs.tolist()))


def join_pw(f1, f2):
    """Pointwise max of two piecewise-linear assignments, exact."""
    xs = _merged_grid(f1, f2)
    vs = np.maximum(f1(xs), f2(xs))
    return PiecewisePossibility(zip(xs.tolist(), vs.tolist()))


def _info_or_inf(f):
    try:
        return info(f)
    except DivergenceError:
        return math.inf


def g_cont(lower, upper):
    """One-sided continuous distance info(lower) - info(upper).

    Requires lower <= upper pointwise.  The order reverses relative to the
    discrete U-form because info measures distance from the uniform
    assignment and is antitone in pointwise order.  Returns +inf when the
    lower argument is subnormal (its integral diverges) and the upper one
    is not.
    """
    xs = np.unique(np.concatenate((lower.xs, upper.xs)))
    lv = lower(xs)
    uv = upper(xs)
    bad = np.nonzero(lv > uv + _SNAP)[0]
    if bad.size:
        i = int(bad[0])
        raise OrderViolationError(
            f"pointwise order violated at x={float(xs[i]):g}: "
            f"{float(lv[i]):g} > {float(uv[i]):g}"
        )
    upper_info = _info_or_inf(upper)
    if math.isinf(upper_info):
        if np.allclose(lv, uv, rtol=0.0, atol=_SNAP):
            return 0.0
        raise DivergenceError(
            "distance undefined: both arguments are subnormal and their integrals diverge"
        )
    return _info_or_inf(lower) - upper_info


def big_g_cont(f1, f2):
    """Continuous join distance; finite for normalized arguments."""
    top = join_pw(f1, f2)
    return g_cont(f1, top) + g_cont(f2, top)


def big_h_cont(f1, f2):
    """Continuous meet divergence; +inf whenever the meet is subnormal."""
    bottom = meet_pw(f1, f2)
    i_bottom = _info_or_inf(bottom)
    if math.isinf(i_bottom):
        return math.inf
    return (i_bottom - _info_or_inf(f1)) + (i_bottom - _info_or_inf(f2))


def big_k_cont(f1, f2):
    """Continuous max-form distance; finite for normalized arguments."""
    top = join_pw(f1, f2)
    return max(g_cont(f1, top), g_cont(f2, top))
