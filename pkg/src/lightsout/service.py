"""Stateless JSON-over-HTTP service exposing analysis and edge edits.

Every request carries the full graph; responses are pure functions of the
request body.  Error bodies are {"error": {"code", "message"}}: HTTP 400
for malformed documents, 422 for domain preconditions and guards.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import analysis, edgecalc
from .errors import CapacityError, InputError, LightsOutError, PreconditionError
from .gf2 import BitVector
from .graph import Graph, parse_graph

DEFAULT_MAX_VERTICES = 64


class _MalformedBody(InputError):
    """Request body fails to decode against the endpoint schema."""


def analyze_response(graph: Graph) -> dict:
    summary = analysis.summarize(graph)
    return {
        "nullity": summary.nullity,
        "alwaysSolvable": summary.always_solvable,
        "vertexClasses": [c.tag for c in summary.vertex_classes],
        "oddDominatingCount": summary.odd_dominating.count,
    }


def solve_response(graph: Graph, config: BitVector) -> dict:
    solutions = analysis.solve_configuration(graph, config)
    if solutions is None:
        certificate = analysis.unsolvability_certificate(graph, config)
        return {"solvable": False, "certificate": certificate.to01()}
    return {
        "solvable": True,
        "pattern": solutions.particular.to01(),
        "solutionCount": solutions.count,
    }


def whatif_response(graph: Graph, u: int, v: int) -> dict:
    report = edgecalc.analyze_toggle(graph, u, v)
    doc = {
        "action": report.action,
        "deltaNu": report.delta_nu,
        "beforeClasses": {"u": report.before_u, "v": report.before_v},
        "afterClasses": {"u": report.after_u, "v": report.after_v},
    }
    if report.addition_type is not None:
        doc["additionType"] = report.addition_type
    return doc


def create_app(max_vertices: int = DEFAULT_MAX_VERTICES, static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="lightsout", docs_url=None, redoc_url=None)

    @app.exception_handler(LightsOutError)
    async def _domain_error(_request: Request, exc: LightsOutError):
        if isinstance(exc, _MalformedBody):
            return _error(400, "malformed_body", str(exc))
        code = {
            PreconditionError: "precondition_failed",
            CapacityError: "capacity_exceeded",
        }.get(type(exc), "invalid_input")
        return _error(422, code, str(exc))

    async def _body(request: Request) -> dict:
        try:
            doc = json.loads(await request.body())
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise _MalformedBody(f"request body is not valid JSON: {exc}") from exc
        if not isinstance(doc, dict):
            raise _MalformedBody("request body must be a JSON object")
        return doc

    def _graph(doc: dict) -> Graph:
        if "graph" not in doc:
            raise _MalformedBody('request body is missing "graph"')
        try:
            graph = parse_graph(doc["graph"])
        except InputError as exc:
            raise _MalformedBody(f"invalid graph document: {exc}") from exc
        if graph.n > max_vertices:
            raise PreconditionError(
                f"graph has {graph.n} vertices, exceeding the service limit of {max_vertices}"
            )
        return graph

    def _config(doc: dict, graph: Graph) -> BitVector:
        if "config" not in doc:
            raise _MalformedBody('request body is missing "config"')
        raw = doc["config"]
        if not isinstance(raw, str):
            raise _MalformedBody('"config" must be a bitstring')
        try:
            config = BitVector.parse(raw)
        except InputError as exc:
            raise _MalformedBody(f"invalid config: {exc}") from exc
        if config.n != graph.n:
            raise _MalformedBody(
                f"config length {config.n} does not match graph order {graph.n}"
            )
        return config

    def _vertex(doc: dict, key: str, graph: Graph) -> int:
        if key not in doc:
            raise _MalformedBody(f'request body is missing "{key}"')
        value = doc[key]
        if not isinstance(value, int) or isinstance(value, bool):
            raise _MalformedBody(f'"{key}" must be an integer vertex index')
        if not 0 <= value < graph.n:
            raise _MalformedBody(f'"{key}"={value} is out of range for a graph of order {graph.n}')
        return value

    @app.post("/api/analyze")
    async def _analyze(request: Request):
        doc = await _body(request)
        return analyze_response(_graph(doc))

    @app.post("/api/solve")
    async def _solve(request: Request):
        doc = await _body(request)
        graph = _graph(doc)
        return solve_response(graph, _config(doc, graph))

    @app.post("/api/whatif")
    async def _whatif(request: Request):
        doc = await _body(request)
        graph = _graph(doc)
        u = _vertex(doc, "u", graph)
        v = _vertex(doc, "v", graph)
        return whatif_response(graph, u, v)

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": {"code": code, "message": message}})


app = create_app()
