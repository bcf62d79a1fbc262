"""FastAPI application exposing every solver operation as a POST endpoint."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import CornerOptError
from . import handlers, schemas

ENDPOINTS = [
    "/solve-lp",
    "/snf",
    "/gcr",
    "/gcr-brute",
    "/ip-brute",
    "/inverse-gcr",
    "/inverse-lp",
    "/inverse-ip",
    "/multi-basis",
    "/bases",
    "/check-exactness",
    "/check-member",
    "/size-report",
    "/export-dot",
]

app = FastAPI(
    title="corneropt",
    version=__version__,
    description=(
        "Exact-arithmetic solves for corner relaxations of integer programs "
        "and their inverse problems. All rationals are exchanged as integers "
        'or "p/q" strings.'
    ),
)


@app.exception_handler(CornerOptError)
async def corneropt_error_handler(request: Request, exc: CornerOptError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": exc.code, "detail": str(exc)})


@app.get("/", response_model=schemas.ServiceInfo)
def service_info() -> schemas.ServiceInfo:
    return schemas.ServiceInfo(service="corneropt", version=__version__, endpoints=ENDPOINTS)


@app.post("/solve-lp", response_model=schemas.LpResponse)
def solve_lp(req: schemas.SolveLpRequest) -> schemas.LpResponse:
    return handlers.handle_solve_lp(req)


@app.post("/snf", response_model=schemas.SnfResponse)
def snf(req: schemas.SnfRequest) -> schemas.SnfResponse:
    return handlers.handle_snf(req)


@app.post("/gcr", response_model=schemas.GcrResponse)
def gcr(req: schemas.GcrRequest) -> schemas.GcrResponse:
    return handlers.handle_gcr(req)


@app.post("/gcr-brute", response_model=schemas.SolveResponse)
def gcr_brute(req: schemas.GcrBruteRequest) -> schemas.SolveResponse:
    return handlers.handle_gcr_brute(req)


@app.post("/ip-brute", response_model=schemas.SolveResponse)
def ip_brute(req: schemas.IpBruteRequest) -> schemas.SolveResponse:
    return handlers.handle_ip_brute(req)


@app.post("/inverse-gcr", response_model=schemas.InverseResponse)
def inverse_gcr(req: schemas.InverseGcrRequest) -> schemas.InverseResponse:
    return handlers.handle_inverse_gcr(req)


@app.post("/inverse-lp", response_model=schemas.InverseResponse)
def inverse_lp(req: schemas.InverseLpRequest) -> schemas.InverseResponse:
    return handlers.handle_inverse_lp(req)


@app.post("/inverse-ip", response_model=schemas.InverseResponse)
def inverse_ip(req: schemas.InverseIpRequest) -> schemas.InverseResponse:
    return handlers.handle_inverse_ip(req)


@app.post("/multi-basis", response_model=schemas.MultiBasisResponse)
def multi_basis(req: schemas.MultiBasisRequest) -> schemas.MultiBasisResponse:
    return handlers.handle_multi_basis(req)


@app.post("/bases", response_model=schemas.BasesResponse)
def bases(req: schemas.BasesRequest) -> schemas.BasesResponse:
    return handlers.handle_bases(req)


@app.post("/check-exactness", response_model=schemas.ExactnessResponse)
def check_exactness(req: schemas.ExactnessRequest) -> schemas.ExactnessResponse:
    return handlers.handle_exactness(req)


@app.post("/check-member", response_model=schemas.MemberResponse)
def check_member(req: schemas.MemberRequest) -> schemas.MemberResponse:
    return handlers.handle_member(req)


@app.post("/size-report", response_model=schemas.SizeReportResponse)
def size_report(req: schemas.SizeReportRequest) -> schemas.SizeReportResponse:
    return handlers.handle_size_report(req)


@app.post("/export-dot", response_model=schemas.DotResponse)
def export_dot(req: schemas.ExportDotRequest) -> schemas.DotResponse:
    return handlers.handle_export_dot(req)
