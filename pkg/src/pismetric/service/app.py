"""FastAPI application wrapping the core package.

Domain errors become 400 responses carrying the error class name; request
validation problems are FastAPI's usual 422. Endpoints are synchronous on
purpose: solves are CPU-bound and run in the server's worker threadpool.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from .. import formulas, metric, pisgraph, verify
from ..errors import PismetricError
from ..rings import RingSpec, parse_ring_spec
from . import schemas


def _spec_from(req) -> RingSpec:
    if req.ring is not None:
        return parse_ring_spec(req.ring)
    return RingSpec(tuple(req.components))


def _graph_from(req: schemas.DimRequest) -> pisgraph.PisGraph:
    if req.graph is not None:
        return pisgraph.import_graph_json(req.graph.model_dump_json())
    return pisgraph.build(_spec_from(req))


def create_app() -> FastAPI:
    app = FastAPI(
        title="pismetric",
        description="Prime ideal sum graphs of finite commutative rings: "
        "construction, metric dimension, closed formulas, verification sweeps.",
        version="0.1.0",
    )

    @app.exception_handler(PismetricError)
    async def _domain_error(_: Request, exc: PismetricError):
        return JSONResponse(
            status_code=400,
            content={"error": type(exc).__name__, "detail": str(exc)},
        )

    @app.get("/health")
    def health():
        return {"status": "ok", "service": "pismetric", "version": app.version}

    @app.post(
        "/build",
        response_model=schemas.BuildResponse,
        responses={400: {"model": schemas.ErrorResponse}},
    )
    def build(req: schemas.BuildRequest):
        g = pisgraph.build(_spec_from(req))
        if req.format == "dot":
            return PlainTextResponse(pisgraph.export_dot(g), media_type="text/vnd.graphviz")
        doc = json.loads(pisgraph.export_json(g))
        return schemas.BuildResponse(
            components=list(g.spec.components),
            vertex_count=g.n,
            edge_count=g.edge_count(),
            labels=list(g.labels),
            graph=schemas.GraphDoc(**doc),
        )

    @app.post(
        "/dim",
        response_model=schemas.DimResponse,
        responses={400: {"model": schemas.ErrorResponse}},
    )
    def dim(req: schemas.DimRequest):
        g = _graph_from(req)
        report = metric.metric_dimension_exact(g, budget_s=req.budget_seconds)
        return schemas.DimResponse(**report.to_json_dict(g.labels))

    @app.post(
        "/formula",
        response_model=schemas.FormulaResponse,
        responses={400: {"model": schemas.ErrorResponse}},
    )
    def formula(req: schemas.FormulaRequest):
        res = formulas.formula_metric_dim(_spec_from(req))
        return schemas.FormulaResponse(
            value=res.value, theorem_id=res.theorem_id, hypothesis_note=res.hypothesis_note
        )

    @app.post(
        "/construct",
        response_model=schemas.ConstructResponse,
        responses={400: {"model": schemas.ErrorResponse}},
    )
    def construct(req: schemas.ConstructRequest):
        spec = _spec_from(req)
        con = formulas.construct_resolving(spec)
        g = pisgraph.build(spec)
        ok, _ = metric.is_resolving(g, pisgraph.all_pairs_distances(g), con.indices)
        return schemas.ConstructResponse(
            set=[g.labels[i] for i in con.indices],
            size=len(con.indices),
            theorem_id=con.theorem_id,
            resolving=ok,
        )

    @app.post("/verify", responses={400: {"model": schemas.ErrorResponse}})
    def run_verify(req: schemas.VerifyRequest):
        try:
            params = verify.parse_family_params(req.params)
            rows = verify.run_family(
                req.family,
                budget_s=req.budget_seconds,
                exact_cap=req.exact_cap,
                workers=req.workers,
                **params,
            )
        except (ValueError, TypeError) as e:
            raise HTTPException(status_code=422, detail=str(e)) from None
        return _report_response(rows, req.format)

    @app.post("/counterexamples", responses={400: {"model": schemas.ErrorResponse}})
    def counterexamples(req: schemas.CounterexamplesRequest):
        rows = verify.run_counterexamples(budget_s=req.budget_seconds)
        return _report_response(rows, req.format)

    return app


def _report_response(rows, fmt: str):
    if fmt == "json":
        return json.loads(verify.emit_report(rows, "json"))
    media = "text/csv" if fmt == "csv" else "text/markdown"
    return PlainTextResponse(verify.emit_report(rows, fmt), media_type=media)


app = create_app()
