"""HTTP/SSE frontend: a thin, lossless adapter over the session engine.

Every payload the service emits is produced by the same helpers the library
uses (`canonical_json` over the engine's own dicts), so a round-trip through
HTTP is byte-identical to driving the engine in-process.  Handlers hold a
per-session asyncio lock, which serializes steps against streams and makes
concurrent clients safe without threads.

Routes (all under ``/api/v1``):

* ``POST   /sessions``              create; 201 with ``{"id","state","status"}``
* ``GET    /sessions/{id}``         full session view
* ``POST   /sessions/{id}/step``    body ``{"count": k}`` (default 1); bare records array
* ``POST   /sessions/{id}/run``     run to terminal status
* ``GET    /sessions/{id}/trace``   ``?format=csv|json`` — exact export bytes
* ``DELETE /sessions/{id}``         204, forgets the session
* ``GET    /sessions/{id}/stream``  SSE: ``record`` events, then one ``status``

Errors map by category: invalid_config→422, not_found→404, state_error→409,
unsupported→400; the JSON body names the category and offending fields.
"""

from __future__ import annotations

import asyncio
import json
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from starlette.responses import StreamingResponse

from .errors import NotFoundError, PlaybenchError, ValidationError
from .session import CONVERGED, RUNNING, Session, config_from_dict
from .trace import canonical_json, record_to_dict

_STATUS_BY_CODE = {
    "invalid_config": 422,
    "not_found": 404,
    "state_error": 409,
    "unsupported": 400,
}

_TRACE_MEDIA = {"json": "application/json", "csv": "text/csv; charset=utf-8"}


@dataclass
class _Entry:
    session: Session
    lock: asyncio.Lock = field(default_factory=asyncio.Lock)
    subscribers: list[asyncio.Queue] = field(default_factory=list)
    persisted: bool = False


def _json_response(obj, status_code: int = 200) -> Response:
    return Response(
        content=canonical_json(obj),
        status_code=status_code,
        media_type="application/json",
    )


def _status_payload(session: Session) -> dict:
    return {
        "status": session.status,
        "converged": session.status == CONVERGED,
        "epochs_used": session.epochs_used,
    }


def _sse_frame(event: str, payload: dict) -> bytes:
    return b"event: " + event.encode() + b"\ndata: " + canonical_json(payload) + b"\n\n"


def create_app(data_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="playbench", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    registry: dict[str, _Entry] = {}
    out_dir = Path(data_dir) if data_dir is not None else None
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)

    @app.exception_handler(PlaybenchError)
    async def _on_error(request: Request, exc: PlaybenchError) -> Response:
        fields = list(getattr(exc, "fields", ()))
        return _json_response(
            {"code": exc.code, "message": str(exc), "fields": fields},
            _STATUS_BY_CODE.get(exc.code, 500),
        )

    def _entry(session_id: str) -> _Entry:
        entry = registry.get(session_id)
        if entry is None:
            raise NotFoundError(f"no session {session_id!r}")
        return entry

    async def _body_dict(request: Request) -> dict:
        raw = await request.body()
        if not raw:
            return {}
        try:
            parsed = json.loads(raw)
        except ValueError as exc:
            raise ValidationError(f"request body is not valid JSON: {exc}", ("body",))
        if not isinstance(parsed, dict):
            raise ValidationError("request body must be a JSON object", ("body",))
        return parsed

    def _broadcast(entry: _Entry, frames: list[bytes]) -> None:
        for queue in entry.subscribers:
            for frame in frames:
                queue.put_nowait(frame)

    def _finish_effects(entry: _Entry) -> list[bytes]:
        """Persist and announce a terminal status; [] while still running."""
        session = entry.session
        if session.status == RUNNING:
            return []
        if out_dir is not None and not entry.persisted:
            path = out_dir / f"{session.id}.trace.json"
            path.write_bytes(session.export_trace("json"))
            entry.persisted = True
        return [_sse_frame("status", _status_payload(session))]

    @app.post("/api/v1/sessions")
    async def create_session(request: Request) -> Response:
        config = config_from_dict(await _body_dict(request))
        session = Session(config)
        entry = _Entry(session)
        registry[session.id] = entry
        _finish_effects(entry)  # kmeans sessions are terminal at birth
        return _json_response(
            {"id": session.id, "state": session.state_json(), "status": session.status},
            status_code=201,
        )

    @app.get("/api/v1/sessions/{session_id}")
    async def get_session(session_id: str) -> Response:
        entry = _entry(session_id)
        async with entry.lock:
            return _json_response(entry.session.session_json())

    @app.post("/api/v1/sessions/{session_id}/step")
    async def step_session(session_id: str, request: Request) -> Response:
        body = await _body_dict(request)
        count = body.get("count", 1)
        entry = _entry(session_id)
        async with entry.lock:
            _entry(session_id)  # may have been deleted while waiting
            records = entry.session.step(count)
            frames = [_sse_frame("record", record_to_dict(r)) for r in records]
            frames += _finish_effects(entry)
            _broadcast(entry, frames)
            return _json_response([record_to_dict(r) for r in records])

    @app.post("/api/v1/sessions/{session_id}/run")
    async def run_session(session_id: str) -> Response:
        entry = _entry(session_id)
        async with entry.lock:
            _entry(session_id)
            before = entry.session.steps
            converged, epochs_used = entry.session.run()
            records = entry.session.records[before:]
            frames = [_sse_frame("record", record_to_dict(r)) for r in records]
            frames += _finish_effects(entry)
            _broadcast(entry, frames)
            return _json_response({"converged": converged, "epochs_used": epochs_used})

    @app.get("/api/v1/sessions/{session_id}/trace")
    async def get_trace(session_id: str, format: str = "json") -> Response:
        entry = _entry(session_id)
        async with entry.lock:
            data = entry.session.export_trace(format)
        return Response(content=data, media_type=_TRACE_MEDIA[format])

    @app.delete("/api/v1/sessions/{session_id}")
    async def delete_session(session_id: str) -> Response:
        entry = _entry(session_id)
        async with entry.lock:
            registry.pop(session_id, None)
            # Close any live streams; the current status is the last word.
            _broadcast(entry, [_sse_frame("status", _status_payload(entry.session))])
            entry.subscribers.clear()
        return Response(status_code=204)

    @app.get("/api/v1/sessions/{session_id}/stream")
    async def stream_session(session_id: str) -> StreamingResponse:
        entry = _entry(session_id)
        queue: asyncio.Queue[bytes] = asyncio.Queue()
        async with entry.lock:
            if entry.session.status == RUNNING:
                entry.subscribers.append(queue)
            else:
                # Nothing further will happen; hand over the terminal status.
                queue.put_nowait(_sse_frame("status", _status_payload(entry.session)))

        async def event_stream():
            try:
                while True:
                    frame = await queue.get()
                    yield frame
                    if frame.startswith(b"event: status"):
                        return
            finally:
                if queue in entry.subscribers:
                    entry.subscribers.remove(queue)

        return StreamingResponse(event_stream(), media_type="text/event-stream")

    return app
