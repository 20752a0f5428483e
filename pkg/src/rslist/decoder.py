"""End-to-end decoding via the direct and the reduced path, with counters."""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .factorization import (
    ACCEPTED,
    REJECTED_BY_VERIFICATION,
    CandidateMessage,
    factor_reduced,
    polynomial_y_roots,
)
from .galois import OpCounter
from .koetter import InterpolationProblem, delta_star, n_constraints, solve
from .polynomials import reconstruct
from .reencoding import build_context, select_reencoding_set, solve_reduced


@dataclass
class DecodeReport:
    path: str
    candidates: list[CandidateMessage]
    counters: dict[str, dict[str, int]]
    n_constraints: int
    delta_star: int
    r: int
    reduced_constraints: int | None = dataclass_field(default=None)
    trace: list | None = dataclass_field(default=None)

    def accepted(self) -> list[CandidateMessage]:
        return [c for c in self.candidates if c.accepted]

    def accepted_set(self) -> set[tuple[int, ...]]:
        return {tuple(c.f.to_json()) for c in self.accepted()}

    def to_json(self, field, exp_form: bool = True) -> dict:
        return {
            "path": self.path,
            "candidates": [c.to_json(field, exp_form) for c in self.candidates],
            "counters": self.counters,
            "stats": {
                "n_constraints": self.n_constraints,
                "delta_star": self.delta_star,
                "r": self.r,
                "reduced_constraints": self.reduced_constraints,
            },
        }


def decode_direct(
    problem: InterpolationProblem, tau_full: int | None = None, collect_trace: bool = False
) -> DecodeReport:
    """Reference path: Koetter solve, then full polynomial Y-root extraction.

    tau_full is the Roth-Ruckenstein depth bounding candidate degrees,
    default k.
    """
    f = problem.field
    depth = problem.k if tau_full is None else tau_full
    interp = OpCounter()
    fact = OpCounter()
    with f.count_into(interp):
        res = solve(problem, collect_trace=collect_trace)
    with f.count_into(fact):
        roots = polynomial_y_roots(res.minimal, depth)
    candidates = [
        CandidateMessage(root, ACCEPTED) for root in roots if root.degree < problem.k
    ]
    return DecodeReport(
        "direct",
        candidates,
        {"interpolation": interp.snapshot(), "factorization": fact.snapshot()},
        res.n_constraints,
        res.delta_star,
        res.r,
        trace=res.trace,
    )


def decode_reduced(
    problem: InterpolationProblem,
    tau: int | None = None,
    verify: bool = False,
    collect_trace: bool = False,
) -> DecodeReport:
    """Re-encoding path: reduced interpolation, then reduced factorization.

    `verify` turns on the expensive cross-check that reconstructs the
    original-problem solution and demotes accepted candidates whose Y - f(X)
    does not divide it; the rule filters alone are the production behavior.
    """
    f = problem.field
    if tau is None:
        tau = min(problem.k, 6)
    setup = OpCounter()
    interp = OpCounter()
    fact = OpCounter()
    with f.count_into(setup):
        problem.validate()
        n_orig = n_constraints(p.mult for p in problem.points)
        dstar, r = delta_star(n_orig, problem.k)
        rset = select_reencoding_set(problem)
        drop = set(rset.indices)
        remaining = [p for i, p in enumerate(problem.points) if i not in drop]
        ctx = build_context(rset, r, remaining)
    with f.count_into(interp):
        res = solve_reduced(ctx, r, collect_trace=collect_trace)
    with f.count_into(fact):
        candidates = factor_reduced(res.minimal, ctx, rset, tau, problem.k)
    if verify:
        with f.count_into(fact):
            q = reconstruct(res.minimal, ctx.psi, ctx.g, rset.e_poly)
            for c in candidates:
                if c.accepted and not q.y_eval(c.f).is_zero:
                    c.status = REJECTED_BY_VERIFICATION
    return DecodeReport(
        "reduced",
        candidates,
        {
            "reencoding_setup": setup.snapshot(),
            "interpolation": interp.snapshot(),
            "factorization": fact.snapshot(),
        },
        n_orig,
        dstar,
        r,
        reduced_constraints=res.n_constraints,
        trace=res.trace,
    )
