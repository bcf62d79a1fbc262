"""Request handlers: translate payloads to core calls and back.

The CLI invokes these directly in its default in-process mode; the FastAPI
app wires them to POST endpoints.  Package exceptions propagate and are
mapped to HTTP 400 by the app-level handler.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from ..documents import (
    InstanceDocument,
    format_rational,
    parse_instance_dict,
    parse_rational,
)
from ..errors import PreconditionError
from ..gcr import (
    brute_force_gcr,
    brute_force_ip,
    check_corner_exactness_condition,
    solve_gcr,
    solve_gcr_detailed,
)
from ..groupgraph import build_group_graph, to_dot
from ..inverse import (
    InverseResult,
    NormSpec,
    check_inverse_feasible,
    inverse_gcr,
    inverse_ip_oracle,
    inverse_lp_relaxation,
    multi_basis_inverse,
)
from ..linalg import smith_normal_form
from ..lp import (
    DEFAULT_BASIS_CAP,
    Basis,
    IpInstance,
    SolveStatus,
    enumerate_feasible_bases,
    make_basis,
    solve_lp_simplex,
)
from ..sizing import formulation_size_report
from . import schemas

_ZERO = Fraction(0)


def _document(payload: schemas.InstancePayload) -> InstanceDocument:
    return parse_instance_dict(payload.model_dump(exclude_none=True))


def _rationals(values: Sequence, where: str) -> tuple[Fraction, ...]:
    return tuple(parse_rational(v, f"{where}[{i}]") for i, v in enumerate(values))


def _resolve_objective(doc: InstanceDocument, override) -> Optional[tuple[Fraction, ...]]:
    if override is not None:
        return _rationals(override, "objective")
    return None


def _resolve_target(doc: InstanceDocument, override) -> Optional[tuple[Fraction, ...]]:
    if override is not None:
        return _rationals(override, "target")
    return doc.target


def _resolve_x0(doc: InstanceDocument, override) -> tuple[Fraction, ...]:
    if override is not None:
        return _rationals(override, "x0")
    if doc.x0 is not None:
        return doc.x0
    raise PreconditionError("x0 is required: pass it explicitly or attach it to the document")


def _resolve_norm(doc: InstanceDocument, override: Optional[schemas.NormPayload]) -> NormSpec:
    if override is not None:
        omega = _rationals(override.omega, "omega") if override.omega is not None else None
        return NormSpec(kind=override.kind, omega=omega)
    if doc.norm is not None:
        return doc.norm
    return NormSpec()


def _basis(instance: IpInstance, indices: Sequence[int]) -> Basis:
    return make_basis(instance, tuple(indices))


def _fmt_vec(values) -> list:
    return [format_rational(Fraction(v)) for v in values]


def _inverse_response(result: InverseResult) -> schemas.InverseResponse:
    return schemas.InverseResponse(
        status=result.status.value,
        value=format_rational(result.value),
        d_star=_fmt_vec(result.d_star),
        certificate_y=_fmt_vec(result.certificate_y),
        basis=list(result.basis.indices) if result.basis is not None else None,
    )


def handle_solve_lp(req: schemas.SolveLpRequest) -> schemas.LpResponse:
    doc = _document(req.instance)
    solution = solve_lp_simplex(doc.instance, _resolve_objective(doc, req.objective))
    if solution.status is not SolveStatus.OPTIMAL:
        return schemas.LpResponse(status=solution.status.value)
    return schemas.LpResponse(
        status=solution.status.value,
        value=format_rational(solution.value),
        x=_fmt_vec(solution.x),
        basis=list(solution.basis.indices),
    )


def handle_snf(req: schemas.SnfRequest) -> schemas.SnfResponse:
    doc = _document(req.instance)
    basis = _basis(doc.instance, req.basis)
    sub = doc.instance.a.submatrix_cols([i - 1 for i in basis.indices])
    snf = smith_normal_form(sub)
    return schemas.SnfResponse(
        basis=list(basis.indices),
        det=basis.det,
        w=list(snf.w),
        s=snf.s.to_rows(),
        t=snf.t.to_rows(),
    )


def handle_gcr(req: schemas.GcrRequest) -> schemas.GcrResponse:
    doc = _document(req.instance)
    basis = _basis(doc.instance, req.basis)
    objective = _resolve_objective(doc, req.objective)
    solution, graph, search = solve_gcr_detailed(doc.instance, basis, objective)
    return schemas.GcrResponse(
        status=solution.status.value,
        value=format_rational(solution.value) if solution.value is not None else None,
        x=list(solution.x) if solution.x is not None else None,
        lp_constant=format_rational(solution.lp_constant),
        reduced_costs=_fmt_vec(graph.weights),
        vertex_count=graph.vertex_count,
        destination=list(graph.destination),
        path_counts=list(search.path.counts) if search.path is not None else None,
        path_cost=format_rational(search.cost) if search.cost is not None else None,
    )


def handle_gcr_brute(req: schemas.GcrBruteRequest) -> schemas.SolveResponse:
    doc = _document(req.instance)
    basis = _basis(doc.instance, req.basis)
    objective = _resolve_objective(doc, req.objective)
    solution = brute_force_gcr(doc.instance, basis, objective, bound=req.bound)
    return schemas.SolveResponse(
        status=solution.status.value,
        value=format_rational(solution.value) if solution.value is not None else None,
        x=list(solution.x) if solution.x is not None else None,
        lp_constant=format_rational(solution.lp_constant),
    )


def handle_ip_brute(req: schemas.IpBruteRequest) -> schemas.SolveResponse:
    doc = _document(req.instance)
    objective = _resolve_objective(doc, req.objective)
    box = tuple(req.box) if req.box is not None else doc.box
    solution = brute_force_ip(doc.instance, objective, box)
    return schemas.SolveResponse(
        status=solution.status.value,
        value=format_rational(solution.value),
        x=list(solution.x),
        lp_constant=format_rational(solution.lp_constant),
    )


def handle_inverse_gcr(req: schemas.InverseGcrRequest) -> schemas.InverseResponse:
    doc = _document(req.instance)
    basis = _basis(doc.instance, req.basis)
    result = inverse_gcr(
        doc.instance,
        basis,
        _resolve_x0(doc, req.x0),
        _resolve_target(doc, req.target),
        _resolve_norm(doc, req.norm),
    )
    return _inverse_response(result)


def handle_inverse_lp(req: schemas.InverseLpRequest) -> schemas.InverseResponse:
    doc = _document(req.instance)
    result = inverse_lp_relaxation(
        doc.instance,
        _resolve_x0(doc, req.x0),
        _resolve_target(doc, req.target),
        _resolve_norm(doc, req.norm),
    )
    return _inverse_response(result)


def handle_inverse_ip(req: schemas.InverseIpRequest) -> schemas.InverseResponse:
    doc = _document(req.instance)
    box = tuple(req.box) if req.box is not None else doc.box
    result = inverse_ip_oracle(
        doc.instance,
        _resolve_x0(doc, req.x0),
        _resolve_target(doc, req.target),
        _resolve_norm(doc, req.norm),
        box,
    )
    return _inverse_response(result)


def handle_multi_basis(req: schemas.MultiBasisRequest) -> schemas.MultiBasisResponse:
    doc = _document(req.instance)
    outcome = multi_basis_inverse(
        doc.instance,
        _resolve_x0(doc, req.x0),
        _resolve_target(doc, req.target),
        _resolve_norm(doc, req.norm),
        req.cap if req.cap is not None else DEFAULT_BASIS_CAP,
    )
    entries = []
    for item in outcome.per_basis:
        entries.append(
            schemas.PerBasisEntry(
                basis=list(item.basis.indices),
                skipped_reason=item.skipped_reason,
                value=format_rational(item.result.value) if item.result else None,
                d_star=_fmt_vec(item.result.d_star) if item.result else None,
            )
        )
    return schemas.MultiBasisResponse(best=_inverse_response(outcome.best), per_basis=entries)


def handle_bases(req: schemas.BasesRequest) -> schemas.BasesResponse:
    doc = _document(req.instance)
    cap = req.cap if req.cap is not None else DEFAULT_BASIS_CAP
    bases = enumerate_feasible_bases(doc.instance, cap)
    return schemas.BasesResponse(bases=[list(b.indices) for b in bases], count=len(bases))


def handle_exactness(req: schemas.ExactnessRequest) -> schemas.ExactnessResponse:
    doc = _document(req.instance)
    basis = _basis(doc.instance, req.basis)
    check = check_corner_exactness_condition(doc.instance, basis)
    return schemas.ExactnessResponse(
        holds=check.holds,
        lhs_squared=format_rational(check.lhs_squared),
        rhs_squared=format_rational(check.rhs_squared),
    )


def handle_member(req: schemas.MemberRequest) -> schemas.MemberResponse:
    doc = _document(req.instance)
    basis = _basis(doc.instance, req.basis)
    x0 = _resolve_x0(doc, req.x0)
    d = _rationals(req.d, "d")
    member = check_inverse_feasible(doc.instance, basis, x0, d)
    solution = solve_gcr(doc.instance, basis, d)
    x0_value = sum((dv * Fraction(xv) for dv, xv in zip(d, x0)), _ZERO)
    return schemas.MemberResponse(
        member=member,
        gcr_status=solution.status.value,
        gcr_value=format_rational(solution.value) if solution.value is not None else None,
        x0_value=format_rational(x0_value),
    )


def handle_size_report(req: schemas.SizeReportRequest) -> schemas.SizeReportResponse:
    report = formulation_size_report(req.n, req.m, req.det_abs, req.b)
    return schemas.SizeReportResponse(
        ours_vars=report.ours_vars,
        ours_cons=report.ours_cons,
        benchmark_vars=report.benchmark_vars,
        benchmark_cons=report.benchmark_cons,
        log10=report.log10_table(),
    )


def handle_export_dot(req: schemas.ExportDotRequest) -> schemas.DotResponse:
    doc = _document(req.instance)
    basis = _basis(doc.instance, req.basis)
    graph = build_group_graph(doc.instance, basis, _resolve_objective(doc, req.objective))
    return schemas.DotResponse(vertex_count=graph.vertex_count, dot=to_dot(graph))
