"""HTTP/JSON surface over the query engine."""

from __future__ import annotations

import logging

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from .service import Engine, answer_question, schema_inventory

log = logging.getLogger(__name__)


def create_app(engine: Engine) -> FastAPI:
    app = FastAPI(title="nlquery")
    # the chat UI may be served from a different origin (dev server, file://)
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])

    @app.post("/api/query")
    async def query(request: Request):
        try:
            body = await request.json()
        except Exception:
            return JSONResponse({"error": "body must be JSON"}, status_code=400)
        question = body.get("question") if isinstance(body, dict) else None
        if not isinstance(question, str) or not question.strip():
            return JSONResponse(
                {"error": "body must be {\"question\": \"...\"}"},
                status_code=400)
        try:
            response = answer_question(question, engine)
        except Exception:
            # answer_question folds its own errors; this is a true bug.
            log.exception("unhandled failure answering %r", question[:80])
            return JSONResponse({"error": "internal error"}, status_code=500)
        return JSONResponse(response.to_dict())

    @app.get("/api/schema")
    async def schema():
        return JSONResponse(schema_inventory(engine))

    @app.get("/healthz")
    async def healthz():
        return PlainTextResponse("ok")

    return app
