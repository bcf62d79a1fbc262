"""Request/response models for the solve service.

Rationals travel as JSON integers or ``"p/q"`` strings, never floats, so
every payload round-trips exactly.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel

Rational = Union[int, str]


class NormPayload(BaseModel):
    kind: Literal["l1", "linf"] = "l1"
    omega: Optional[list[Rational]] = None


class InstancePayload(BaseModel):
    A: list[list[int]]
    b: list[int]
    c: list[Rational]
    x0: Optional[list[Rational]] = None
    norm: Optional[NormPayload] = None
    bases: Optional[list[list[int]]] = None
    box: Optional[list[int]] = None
    target: Optional[list[Rational]] = None


class SolveLpRequest(BaseModel):
    instance: InstancePayload
    objective: Optional[list[Rational]] = None


class SnfRequest(BaseModel):
    instance: InstancePayload
    basis: list[int]


class GcrRequest(BaseModel):
    instance: InstancePayload
    basis: list[int]
    objective: Optional[list[Rational]] = None


class GcrBruteRequest(BaseModel):
    instance: InstancePayload
    basis: list[int]
    bound: int
    objective: Optional[list[Rational]] = None


class IpBruteRequest(BaseModel):
    instance: InstancePayload
    objective: Optional[list[Rational]] = None
    box: Optional[list[int]] = None


class InverseGcrRequest(BaseModel):
    instance: InstancePayload
    basis: list[int]
    x0: Optional[list[Rational]] = None
    target: Optional[list[Rational]] = None
    norm: Optional[NormPayload] = None


class InverseLpRequest(BaseModel):
    instance: InstancePayload
    x0: Optional[list[Rational]] = None
    target: Optional[list[Rational]] = None
    norm: Optional[NormPayload] = None


class InverseIpRequest(BaseModel):
    instance: InstancePayload
    x0: Optional[list[Rational]] = None
    target: Optional[list[Rational]] = None
    norm: Optional[NormPayload] = None
    box: Optional[list[int]] = None


class MultiBasisRequest(BaseModel):
    instance: InstancePayload
    x0: Optional[list[Rational]] = None
    target: Optional[list[Rational]] = None
    norm: Optional[NormPayload] = None
    cap: Optional[int] = None


class BasesRequest(BaseModel):
    instance: InstancePayload
    cap: Optional[int] = None


class ExactnessRequest(BaseModel):
    instance: InstancePayload
    basis: list[int]


class MemberRequest(BaseModel):
    instance: InstancePayload
    basis: list[int]
    d: list[Rational]
    x0: Optional[list[Rational]] = None


class SizeReportRequest(BaseModel):
    n: int
    m: int
    det_abs: int
    b: list[int]


class ExportDotRequest(BaseModel):
    instance: InstancePayload
    basis: list[int]
    objective: Optional[list[Rational]] = None


class LpResponse(BaseModel):
    status: str
    value: Optional[Rational] = None
    x: Optional[list[Rational]] = None
    basis: Optional[list[int]] = None


class SnfResponse(BaseModel):
    basis: list[int]
    det: int
    w: list[int]
    s: list[list[int]]
    t: list[list[int]]


class SolveResponse(BaseModel):
    status: str
    value: Optional[Rational] = None
    x: Optional[list[int]] = None
    lp_constant: Rational


class GcrResponse(BaseModel):
    status: str
    value: Optional[Rational] = None
    x: Optional[list[int]] = None
    lp_constant: Rational
    reduced_costs: list[Rational]
    vertex_count: int
    destination: list[int]
    path_counts: Optional[list[int]] = None
    path_cost: Optional[Rational] = None


class InverseResponse(BaseModel):
    status: str
    value: Rational
    d_star: list[Rational]
    certificate_y: list[Rational]
    basis: Optional[list[int]] = None


class PerBasisEntry(BaseModel):
    basis: list[int]
    skipped_reason: Optional[str] = None
    value: Optional[Rational] = None
    d_star: Optional[list[Rational]] = None


class MultiBasisResponse(BaseModel):
    best: InverseResponse
    per_basis: list[PerBasisEntry]


class BasesResponse(BaseModel):
    bases: list[list[int]]
    count: int


class ExactnessResponse(BaseModel):
    holds: bool
    lhs_squared: Rational
    rhs_squared: Rational


class MemberResponse(BaseModel):
    member: bool
    gcr_status: str
    gcr_value: Optional[Rational] = None
    x0_value: Rational


class SizeReportResponse(BaseModel):
    ours_vars: int
    ours_cons: int
    benchmark_vars: int
    benchmark_cons: int
    log10: dict[str, str]


class DotResponse(BaseModel):
    vertex_count: int
    dot: str


class ServiceInfo(BaseModel):
    service: str
    version: str
    endpoints: list[str]


class ErrorResponse(BaseModel):
    error: str
    detail: str
