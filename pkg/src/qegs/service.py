"""Stateless HTTP facade over the engine.

Endpoints (JSON bodies shaped {"game": <Game File Format>, "options": {...}}):

    POST /api/v1/solve    {analysis, param?}          -> Result JSON
    POST /api/v1/extend   {class, param? | symbolic}  -> Game File Format
    POST /api/v1/sweep    {min, max, analysis}        -> sweep JSON
    POST /api/v1/ewl      {u1, u2, radians?}          -> payoff + weights
    GET  /api/v1/health                               -> {"ok": true, "version"}

Responses wrap as {"ok": true, "result": ...} or {"ok": false, "error":
{"code", "message"}} with the machine-readable codes INPUT_NOT_NUMERIC,
SIZE_NOT_2X2, PARSE_ERROR, PARAM_ERROR, INTERNAL. Requests are independent
pure computations; there is no persistence or authentication. Bodies above
1 MiB and matrices beyond 100x100 are rejected. The browser explorer is
served from /ui when its asset directory exists.
"""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import __version__
from .core import Bimatrix, game_to_dict, parse_game, parse_rational
from .errors import ParamError, ParseError, QegsError, ValidationError
from .ewl import UnitaryParams, ewl_payoff, ewl_weights
from .extensions import class_info, extend
from .solver import format_exact, normalize_analyses, result_to_json, solve
from .sweep import sweep

log = logging.getLogger("qegs.service")

MAX_BODY_BYTES = 1 << 20
MAX_DIMENSION = 100


def _error_response(code: str, message: str, status: int) -> JSONResponse:
    return JSONResponse(
        {"ok": False, "error": {"code": code, "message": message}}, status_code=status
    )


def _ok(result) -> JSONResponse:
    return JSONResponse({"ok": True, "result": result})


async def _body(request: Request) -> dict:
    raw = await request.body()
    if len(raw) > MAX_BODY_BYTES:
        raise ParamError("request body exceeds 1 MiB")
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON body: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("body must be an object")
    return doc


def _game_from(doc: dict) -> Bimatrix:
    if "game" not in doc:
        raise ParseError("body needs a 'game' field")
    g = parse_game(json.dumps(doc["game"]))
    if g.rows > MAX_DIMENSION or g.cols > MAX_DIMENSION:
        raise ParamError(f"matrices beyond {MAX_DIMENSION}x{MAX_DIMENSION} are rejected")
    return g


def _options(doc: dict) -> dict:
    options = doc.get("options", {})
    if not isinstance(options, dict):
        raise ParseError("'options' must be an object")
    return options


def _unitary(raw, radians: bool) -> UnitaryParams:
    if isinstance(raw, str):
        parts = raw.split(",")
    elif isinstance(raw, list):
        parts = raw
    else:
        raise ParamError(f"unitary must be 'T,A,B' or a 3-list, got {raw!r}")
    if len(parts) != 3:
        raise ParamError(f"unitary needs exactly three angles, got {raw!r}")
    if radians:
        return UnitaryParams.from_radians(*(float(p) for p in parts))
    return UnitaryParams.from_pi(*(parse_rational(str(p)) for p in parts))


def create_app(ui_dir=None) -> FastAPI:
    app = FastAPI(title="qegs", version=__version__, docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(QegsError)
    async def _handle_engine_error(_request, exc: QegsError):
        if isinstance(exc, ValidationError):
            return _error_response(exc.code, str(exc), 400)
        log.error("internal error: %s", exc)
        return _error_response("INTERNAL", str(exc), 500)

    @app.get("/api/v1/health")
    async def health():
        return {"ok": True, "version": __version__}

    @app.post("/api/v1/solve")
    async def solve_endpoint(request: Request):
        doc = await _body(request)
        g = _game_from(doc)
        options = _options(doc)
        analyses = normalize_analyses(options.get("analysis", "all"))
        if options.get("param") is not None:
            if g.parameter is None:
                raise ParamError("game has no parameter to substitute")
            g = g.evaluate(parse_rational(str(options["param"])))
        return _ok(result_to_json(solve(g), analyses))

    @app.post("/api/v1/extend")
    async def extend_endpoint(request: Request):
        doc = await _body(request)
        g = _game_from(doc)
        options = _options(doc)
        name = options.get("class")
        if not isinstance(name, str):
            raise ParamError("options.class is required")
        info = class_info(name)
        param = None
        if options.get("param") is not None and not options.get("symbolic"):
            if info.param_kind is None:
                raise ParamError(f"class {name} takes no parameter")
            param = parse_rational(str(options["param"]))
        return _ok(game_to_dict(extend(g, name, param)))

    @app.post("/api/v1/sweep")
    async def sweep_endpoint(request: Request):
        doc = await _body(request)
        g = _game_from(doc)
        options = _options(doc)
        lo = parse_rational(str(options.get("min", "0")))
        hi = parse_rational(str(options.get("max", "1")))
        analyses = normalize_analyses(options.get("analysis", "all"))
        return _ok(sweep(g, lo, hi, analyses).to_json())

    @app.post("/api/v1/ewl")
    async def ewl_endpoint(request: Request):
        doc = await _body(request)
        g = _game_from(doc)
        options = _options(doc)
        radians = bool(options.get("radians", False))
        u1 = _unitary(options.get("u1"), radians)
        u2 = _unitary(options.get("u2"), radians)
        p1, p2 = ewl_payoff(g, u1, u2)
        weights = ewl_weights(u1, u2)
        if weights.exact:
            payload = {
                "payoff": [format_exact(p1), format_exact(p2)],
                "weights": [format_exact(w) for w in weights.as_tuple()],
                "exact": True,
            }
        else:
            payload = {
                "payoff": [float(p1), float(p2)],
                "weights": [float(w) for w in weights.as_tuple()],
                "exact": False,
            }
        return _ok(payload)

    ui = Path(ui_dir) if ui_dir else _default_ui_dir()
    if ui is not None and ui.is_dir():
        app.mount("/ui", StaticFiles(directory=str(ui), html=True), name="ui")
    return app


def _default_ui_dir():
    env = os.environ.get("QEGS_UI_DIR")
    if env:
        return Path(env)
    candidate = Path.cwd() / "frontend" / "dist"
    return candidate if candidate.is_dir() else None


def serve(port: int, bind: str = "127.0.0.1", ui_dir=None):
    """Run the service with uvicorn (blocking)."""
    import uvicorn

    uvicorn.run(create_app(ui_dir), host=bind, port=port, log_level="warning")
