"""Command-line client for the solve service.

Every subcommand builds the same request model the HTTP API accepts and
prints the response model as JSON.  By default the service handlers run in
process; pass ``--server URL`` to talk to a running instance instead.
Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Callable, Optional, Type

import httpx
from pydantic import BaseModel, ValidationError

from . import __version__
from .errors import CornerOptError, DocumentError
from .service import handlers, schemas

BASIS_CAP_ENV = "CORNEROPT_BASIS_CAP"


class _Route:
    def __init__(self, path: str, request_type: Type[BaseModel],
                 handler: Callable, response_type: Type[BaseModel]) -> None:
        self.path = path
        self.request_type = request_type
        self.handler = handler
        self.response_type = response_type


ROUTES = {
    "solve-lp": _Route("/solve-lp", schemas.SolveLpRequest, handlers.handle_solve_lp, schemas.LpResponse),
    "snf": _Route("/snf", schemas.SnfRequest, handlers.handle_snf, schemas.SnfResponse),
    "gcr": _Route("/gcr", schemas.GcrRequest, handlers.handle_gcr, schemas.GcrResponse),
    "gcr-brute": _Route("/gcr-brute", schemas.GcrBruteRequest, handlers.handle_gcr_brute, schemas.SolveResponse),
    "ip-brute": _Route("/ip-brute", schemas.IpBruteRequest, handlers.handle_ip_brute, schemas.SolveResponse),
    "inverse-gcr": _Route("/inverse-gcr", schemas.InverseGcrRequest, handlers.handle_inverse_gcr, schemas.InverseResponse),
    "inverse-lp": _Route("/inverse-lp", schemas.InverseLpRequest, handlers.handle_inverse_lp, schemas.InverseResponse),
    "inverse-ip": _Route("/inverse-ip", schemas.InverseIpRequest, handlers.handle_inverse_ip, schemas.InverseResponse),
    "multi-basis": _Route("/multi-basis", schemas.MultiBasisRequest, handlers.handle_multi_basis, schemas.MultiBasisResponse),
    "bases": _Route("/bases", schemas.BasesRequest, handlers.handle_bases, schemas.BasesResponse),
    "check-exactness": _Route("/check-exactness", schemas.ExactnessRequest, handlers.handle_exactness, schemas.ExactnessResponse),
    "check-member": _Route("/check-member", schemas.MemberRequest, handlers.handle_member, schemas.MemberResponse),
    "size-report": _Route("/size-report", schemas.SizeReportRequest, handlers.handle_size_report, schemas.SizeReportResponse),
    "export-dot": _Route("/export-dot", schemas.ExportDotRequest, handlers.handle_export_dot, schemas.DotResponse),
}


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _rational_list(text: str) -> list:
    # rationals stay strings ("1/2") so the request payload keeps them exact
    out: list = []
    for part in text.split(","):
        part = part.strip()
        if part:
            out.append(int(part) if part.lstrip("+-").isdigit() else part)
    return out


def _load_instance(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise DocumentError(f"{path}: document root must be an object")
    return data


def _norm_payload(args: argparse.Namespace) -> Optional[dict]:
    if args.norm is None and args.omega is None:
        return None
    return {"kind": args.norm or "l1", "omega": args.omega}


def _cap_value(args: argparse.Namespace) -> Optional[int]:
    if getattr(args, "cap", None) is not None:
        return args.cap
    env = os.environ.get(BASIS_CAP_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise DocumentError(f"{BASIS_CAP_ENV} must be an integer, got {env!r}")
    return None


def _build_payload(command: str, args: argparse.Namespace) -> dict:
    if command == "size-report":
        return {"n": args.n, "m": args.m, "det_abs": args.det, "b": args.b}
    payload: dict = {"instance": _load_instance(args.instance)}
    if command == "solve-lp":
        payload["objective"] = args.objective
    elif command == "snf":
        payload["basis"] = args.basis
    elif command == "gcr":
        payload.update(basis=args.basis, objective=args.objective)
    elif command == "gcr-brute":
        payload.update(basis=args.basis, bound=args.bound, objective=args.objective)
    elif command == "ip-brute":
        payload.update(objective=args.objective, box=args.box)
    elif command == "inverse-gcr":
        payload.update(basis=args.basis, x0=args.x0, target=args.target, norm=_norm_payload(args))
    elif command == "inverse-lp":
        payload.update(x0=args.x0, target=args.target, norm=_norm_payload(args))
    elif command == "inverse-ip":
        payload.update(x0=args.x0, target=args.target, norm=_norm_payload(args), box=args.box)
    elif command == "multi-basis":
        payload.update(x0=args.x0, target=args.target, norm=_norm_payload(args), cap=_cap_value(args))
    elif command == "bases":
        payload["cap"] = _cap_value(args)
    elif command == "check-exactness":
        payload["basis"] = args.basis
    elif command == "check-member":
        payload.update(basis=args.basis, d=args.d, x0=args.x0)
    elif command == "export-dot":
        payload.update(basis=args.basis, objective=args.objective)
    return {k: v for k, v in payload.items() if v is not None}


def _dispatch(route: _Route, payload: dict, server: Optional[str]) -> BaseModel:
    request = route.request_type.model_validate(payload)
    if server is None:
        return route.handler(request)
    with _make_client(server) as client:
        response = client.post(route.path, json=request.model_dump(mode="json", exclude_none=True))
    if response.status_code == 200:
        return route.response_type.model_validate(response.json())
    body = response.json()
    if isinstance(body, dict) and "error" in body:
        raise CornerOptError(f"server rejected request ({body['error']}): {body['detail']}")
    raise CornerOptError(f"server returned HTTP {response.status_code}: {response.text}")


def _make_client(server: str) -> httpx.Client:
    return httpx.Client(base_url=server, timeout=300.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corneropt",
        description="Exact solves for corner relaxations of integer programs and their inverses.",
    )
    parser.add_argument("--version", action="version", version=f"corneropt {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, instance: bool = True) -> None:
        if instance:
            p.add_argument("instance", help="instance document (JSON file)")
        p.add_argument("--server", help="base URL of a running service (default: in-process)")

    p = sub.add_parser("solve-lp", help="solve the LP relaxation exactly")
    common(p)
    p.add_argument("--objective", type=_rational_list, help="override objective, e.g. 0,0,-2,-3")

    p = sub.add_parser("snf", help="Smith normal form of a basis matrix")
    common(p)
    p.add_argument("--basis", type=_int_list, required=True, help="1-based column indices, e.g. 3,4")

    p = sub.add_parser("gcr", help="solve the corner relaxation at a basis")
    common(p)
    p.add_argument("--basis", type=_int_list, required=True)
    p.add_argument("--objective", type=_rational_list)

    p = sub.add_parser("gcr-brute", help="brute-force the corner relaxation (oracle)")
    common(p)
    p.add_argument("--basis", type=_int_list, required=True)
    p.add_argument("--bound", type=int, required=True, help="nonbasic search box upper bound")
    p.add_argument("--objective", type=_rational_list)

    p = sub.add_parser("ip-brute", help="brute-force the integer program (oracle)")
    common(p)
    p.add_argument("--objective", type=_rational_list)
    p.add_argument("--box", type=_int_list, help="per-variable upper bounds")

    for name, with_basis in (("inverse-gcr", True), ("inverse-lp", False), ("inverse-ip", False)):
        p = sub.add_parser(name, help=f"solve the {name.replace('-', ' ')} problem")
        common(p)
        if with_basis:
            p.add_argument("--basis", type=_int_list, required=True)
        p.add_argument("--x0", type=_rational_list, help="given feasible solution (defaults to document x0)")
        p.add_argument("--target", type=_rational_list, help="target objective (defaults to document c)")
        p.add_argument("--norm", choices=["l1", "linf"])
        p.add_argument("--omega", type=_rational_list, help="nonnegative norm weights")
        if name == "inverse-ip":
            p.add_argument("--box", type=_int_list)

    p = sub.add_parser("multi-basis", help="inverse corner relaxation over all feasible bases")
    common(p)
    p.add_argument("--x0", type=_rational_list)
    p.add_argument("--target", type=_rational_list)
    p.add_argument("--norm", choices=["l1", "linf"])
    p.add_argument("--omega", type=_rational_list)
    p.add_argument("--cap", type=int, help=f"feasible-basis cap (or set {BASIS_CAP_ENV})")

    p = sub.add_parser("bases", help="enumerate feasible bases")
    common(p)
    p.add_argument("--cap", type=int, help=f"feasible-basis cap (or set {BASIS_CAP_ENV})")

    p = sub.add_parser("check-exactness", help="corner-exactness distance condition at a basis")
    common(p)
    p.add_argument("--basis", type=_int_list, required=True)

    p = sub.add_parser("check-member", help="is d in the inverse-feasible region at a basis?")
    common(p)
    p.add_argument("--basis", type=_int_list, required=True)
    p.add_argument("--d", type=_rational_list, required=True)
    p.add_argument("--x0", type=_rational_list)

    p = sub.add_parser("size-report", help="formulation size counts")
    p.add_argument("--server", help="base URL of a running service (default: in-process)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--det", type=int, required=True, help="|det A_B|")
    p.add_argument("--b", type=_int_list, required=True, help="rhs entries, e.g. 9,15")

    p = sub.add_parser("export-dot", help="DOT rendering of a small group graph")
    common(p)
    p.add_argument("--basis", type=_int_list, required=True)
    p.add_argument("--objective", type=_rational_list)
    p.add_argument("--output", help="write the DOT text to this file as well")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    route = ROUTES[args.command]
    try:
        payload = _build_payload(args.command, args)
        response = _dispatch(route, payload, args.server)
    except CornerOptError as exc:
        print(f"error ({exc.code}): {exc}", file=sys.stderr)
        return 1
    except ValidationError as exc:
        print(f"error (request): {exc}", file=sys.stderr)
        return 1
    except httpx.HTTPError as exc:
        print(f"error (transport): {exc}", file=sys.stderr)
        return 1

    print(response.model_dump_json(indent=2))
    if args.command == "export-dot" and args.output:
        Path(args.output).write_text(response.dot)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
