"""Re-encoding shift, coordinate transformation and the reduced interpolation solver.

The pipeline removes the k highest-multiplicity points from the interpolation
problem: interpolate e(X) through them, shift all Y-values by e, then factor
out the known vanishing structure with the birational substitution
Y -> Y/g(X). What remains is a much smaller problem over the transformed
points, solved by the same Groebner engine under the (1, -1) order with
tail-polynomial initialization and a modified discrepancy for points that
share an X-coordinate with the removed ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .galois import Field
from .koetter import (
    BasisState,
    InterpolationPoint,
    InterpolationProblem,
    PowerCache,
    SolveResult,
    TraceRow,
    _max_x_degree,
    _snapshot,
    constraint_schedule,
    delta_star,
    n_constraints,
    update_basis,
)
from .polynomials import ORDER_REDUCED, BiPoly, UniPoly, lagrange_interpolate


class TooManyErasures(ValueError):
    """Fewer than k eligible distinct X-coordinates in the point set."""


@dataclass
class ReencodingSet:
    points: list[InterpolationPoint]  # exactly k, distinct nonzero x
    e_poly: UniPoly
    indices: list[int]  # positions of the chosen points in the source problem

    @property
    def xs(self) -> list[int]:
        return [p.x for p in self.points]


@dataclass
class ReducedContext:
    field: Field
    g: UniPoly
    psi: UniPoly
    tails: list[UniPoly]  # t_0 .. t_r
    v: dict[int, int]  # re-encoding x -> multiplicity
    s_star: list[InterpolationPoint]  # transformed points with g(x) != 0
    t_star: list[InterpolationPoint]  # transformed points sharing a re-encoding x
    r: int

    def reduced_constraints(self) -> int:
        return n_constraints(p.mult for p in self.s_star + self.t_star)


def select_reencoding_set(problem: InterpolationProblem) -> ReencodingSet:
    """Pick k points of maximal multiplicity on distinct nonzero x-coordinates.

    Per X-coordinate the highest-multiplicity point wins; across coordinates
    the k largest multiplicities are taken, ties resolved by position in the
    problem so the first-listed points win.
    """
    k = problem.k
    best: dict[int, tuple[int, InterpolationPoint]] = {}
    for idx, p in enumerate(problem.points):
        if p.x == 0:
            continue
        cur = best.get(p.x)
        if cur is None or p.mult > cur[1].mult:
            best[p.x] = (idx, p)
    candidates = sorted(best.values(), key=lambda ip: (-ip[1].mult, ip[0]))
    if len(candidates) < k:
        raise TooManyErasures(f"only {len(candidates)} eligible x-coordinates, need {k}")
    chosen = sorted(candidates[:k], key=lambda ip: ip[0])
    e = lagrange_interpolate(problem.field, [(p.x, p.y) for _, p in chosen])
    return ReencodingSet([p for _, p in chosen], e, [i for i, _ in chosen])


def shift_points(problem: InterpolationProblem, e: UniPoly) -> InterpolationProblem:
    """Replace every y with y - e(x); multiplicities unchanged."""
    pts = [InterpolationPoint(p.x, p.y ^ e.eval_at(p.x), p.mult) for p in problem.points]
    return InterpolationProblem(problem.field, pts, problem.k)


def build_context(rset: ReencodingSet, r: int, remaining: list[InterpolationPoint]) -> ReducedContext:
    """Auxiliary polynomials and the transformed point set.

    g is the monic product over the re-encoding x's, psi the multiplicity-
    weighted product, and t_j carries the excess (j - v_i)+ factors that any
    reduced solution's Y^j coefficient must keep. Remaining points split
    into S (fresh x, divide by g(x)) and T (re-encoding x, divide by g'(x)).
    """
    f = rset.e_poly.field
    g = UniPoly.one(f)
    psi = UniPoly.one(f)
    v: dict[int, int] = {}
    for p in rset.points:
        g = g.mul_linear(p.x)
        for _ in range(p.mult):
            psi = psi.mul_linear(p.x)
        v[p.x] = p.mult
    tails = []
    for j in range(r + 1):
        t = UniPoly.one(f)
        for p in rset.points:
            for _ in range(max(j - p.mult, 0)):
                t = t.mul_linear(p.x)
        tails.append(t)
    gprime = g.formal_derivative()
    e = rset.e_poly
    s_star: list[InterpolationPoint] = []
    t_star: list[InterpolationPoint] = []
    for p in remaining:
        yshift = p.y ^ e.eval_at(p.x)
        if p.x in v:
            z = f.div(yshift, gprime.eval_at(p.x))
            t_star.append(InterpolationPoint(p.x, z, p.mult))
        else:
            z = f.div(yshift, g.eval_at(p.x))
            s_star.append(InterpolationPoint(p.x, z, p.mult))
    return ReducedContext(f, g, psi, tails, v, s_star, t_star, r)


def _transformed_basis_poly(poly: BiPoly, x: int, vi: int, xp_powers: list[UniPoly]) -> BiPoly:
    """(X - x)^vi * poly(X, Y / (X - x)) as a polynomial.

    The Y^l coefficient is multiplied by (X - x)^(vi - l), or exactly divided
    by (X - x)^(l - vi) when l > vi; inexact division means the basis lost
    its tail-divisibility structure.
    """
    f = poly.field
    rows = []
    for ell, c in enumerate(poly.ycoeffs):
        d = vi - ell
        if c.is_zero:
            rows.append(c)
        elif d >= 0:
            rows.append(c.mul(xp_powers[d]))
        else:
            rows.append(c.exact_div(xp_powers[-d]))
    return BiPoly(f, rows)


def solve_reduced(ctx: ReducedContext, r: int | None = None, collect_trace: bool = False) -> SolveResult:
    """Koetter engine on the reduced problem.

    Initialization G_j = t_j(X) Y^j, order (1, -1), standard discrepancies on
    S* points and the transformed discrepancy on T* points. Returns the
    (1, -1)-least basis polynomial.
    """
    f = ctx.field
    if r is None:
        r = ctx.r
    if r > ctx.r:
        raise ValueError(f"context was built with tails up to Y^{ctx.r}, cannot solve for r={r}")
    polys = []
    for j in range(r + 1):
        rows = [UniPoly.zero(f)] * j + [ctx.tails[j]]
        polys.append(BiPoly(f, rows))
    state = BasisState(polys, ORDER_REDUCED)
    trace: list[TraceRow] | None = [] if collect_trace else None

    for pt in ctx.s_star:
        xcache = PowerCache(f, pt.x)
        ypow = f.vpowers(pt.y, r) if pt.y else None
        for a, b in constraint_schedule(pt.mult):
            xpow = xcache.upto(max(_max_x_degree(state) - a, 0))

            def disc(p, _a=a, _b=b, _xp=xpow):
                return p.shifted_coef(pt.x, pt.y, _a, _b, xpowers=_xp, ypowers=ypow)

            state = update_basis(state, pt.x, pt.y, a, b, disc)
            if trace is not None:
                trace.append(TraceRow(pt.x, pt.y, pt.mult, a, b, _snapshot(state)))

    for pt in ctx.t_star:
        vi = ctx.v[pt.x]
        max_pow = max(vi, r - vi, 1)
        xp_powers = [UniPoly.one(f)]
        for _ in range(max_pow):
            xp_powers.append(xp_powers[-1].mul_linear(pt.x))
        ypow = f.vpowers(pt.y, r) if pt.y else None
        for a, b in constraint_schedule(pt.mult):

            def disc(p, _a=a, _b=b):
                h = _transformed_basis_poly(p, pt.x, vi, xp_powers)
                return h.shifted_coef(pt.x, pt.y, _a, _b, ypowers=ypow)

            state = update_basis(state, pt.x, pt.y, a, b, disc)
            if trace is not None:
                trace.append(TraceRow(pt.x, pt.y, pt.mult, a, b, _snapshot(state)))

    n_red = ctx.reduced_constraints()
    return SolveResult(state.minimal(), state, n_red, -1, r, trace)


def check_tail_divisibility(state: BasisState, ctx: ReducedContext) -> None:
    """Assert every basis polynomial's Y^l coefficient is divisible by t_l."""
    for p in state.polys:
        for ell, c in enumerate(p.ycoeffs):
            if c.is_zero or ell >= len(ctx.tails):
                continue
            c.exact_div(ctx.tails[ell])


@dataclass
class ReducedInterpolation:
    h: BiPoly
    ctx: ReducedContext
    rset: ReencodingSet
    result: SolveResult
    n_original: int
    delta_star: int
    r: int
    trace: list[TraceRow] | None = dataclass_field(default=None)


def decode_interpolation_reduced(
    problem: InterpolationProblem, r: int | None = None, collect_trace: bool = False
) -> ReducedInterpolation:
    """Full reduced-interpolation pipeline: select R, transform, solve.

    r is taken from the original problem's constraint count so the basis
    spans the same Y-degrees as the original solution space.
    """
    problem.validate()
    n_orig = n_constraints(p.mult for p in problem.points)
    dstar, r_auto = delta_star(n_orig, problem.k)
    if r is None:
        r = r_auto
    rset = select_reencoding_set(problem)
    drop = set(rset.indices)
    remaining = [p for i, p in enumerate(problem.points) if i not in drop]
    ctx = build_context(rset, r, remaining)
    result = solve_reduced(ctx, r, collect_trace=collect_trace)
    return ReducedInterpolation(result.minimal, ctx, rset, result, n_orig, dstar, r, result.trace)
