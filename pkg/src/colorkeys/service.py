"""Local session service speaking JSON messages over a WebSocket.

One connection owns one session.  Every client CLICK is answered by one
EVENT message per session event followed by exactly one STATE message.
Malformed input produces an ERROR message and leaves the connection open;
sessions on other connections are never affected.  Serialization is
canonical (sorted keys, no whitespace), so a replayed click sequence
produces a byte-identical state sequence.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, WebSocket, WebSocketDisconnect
from fastapi.responses import HTMLResponse
from fastapi.staticfiles import StaticFiles

from .belief import Color
from .lm import CharNgramModel
from .session import Session, SessionConfig

PROTOCOL_VERSION = 1

_FALLBACK_PAGE = """<!doctype html>
<html><head><title>colorkeys</title></head>
<body><h1>colorkeys session service</h1>
<p>The keyboard UI assets are not built. Connect a client to
<code>/ws</code>, or build the frontend and restart with
<code>--assets</code> pointing at its dist directory.</p>
</body></html>"""


def encode(message: dict) -> str:
    return json.dumps(message, sort_keys=True, separators=(",", ":"))


def state_message(session: Session, include_belief: bool = True) -> dict:
    state = session.current_state()
    msg = {
        "v": PROTOCOL_VERSION,
        "kind": "STATE",
        "typed": state.typed_text,
        "colors": state.assignment.as_dict(),
        "theta_mean": state.theta_mean,
        "step": state.step,
        "selections": state.selections,
    }
    if include_belief:
        msg["belief"] = state.belief.as_dict()
    return msg


def event_message(event) -> dict:
    payload = {"type": event.kind}
    payload.update(event.payload())
    return {"v": PROTOCOL_VERSION, "kind": "EVENT", "event": payload}


def error_message(code: str, message: str) -> dict:
    return {"v": PROTOCOL_VERSION, "kind": "ERROR", "code": code,
            "message": message}


def parse_click(raw: str) -> Color:
    """Validate one client message; raises ValueError with an error code."""
    try:
        msg = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValueError(("BAD_MESSAGE", f"not valid JSON: {exc}")) from exc
    if not isinstance(msg, dict):
        raise ValueError(("BAD_MESSAGE", "message must be a JSON object"))
    if msg.get("v") != PROTOCOL_VERSION:
        raise ValueError(("VERSION",
                          f"protocol version {msg.get('v')!r} not supported, "
                          f"expected {PROTOCOL_VERSION}"))
    if msg.get("kind") != "CLICK":
        raise ValueError(("BAD_MESSAGE",
                          f"unsupported message kind {msg.get('kind')!r}"))
    color = msg.get("color")
    if color not in ("RED", "BLUE"):
        raise ValueError(("BAD_MESSAGE", f"color must be RED or BLUE, got {color!r}"))
    return Color(color)


def create_app(
    model: CharNgramModel,
    session_kwargs: Optional[dict] = None,
    assets_dir: Optional[str] = None,
    include_belief: bool = True,
) -> FastAPI:
    session_kwargs = dict(session_kwargs or {})
    app = FastAPI(title="colorkeys")

    @app.websocket("/ws")
    async def ws_session(ws: WebSocket):
        await ws.accept()
        session = Session(SessionConfig(lm=model, **session_kwargs))
        await ws.send_text(encode(state_message(session, include_belief)))
        try:
            while True:
                raw = await ws.receive_text()
                try:
                    color = parse_click(raw)
                except ValueError as exc:
                    code, detail = exc.args[0]
                    await ws.send_text(encode(error_message(code, detail)))
                    continue
                for event in session.observe_click(color):
                    await ws.send_text(encode(event_message(event)))
                await ws.send_text(encode(state_message(session, include_belief)))
        except WebSocketDisconnect:
            session.close()

    if assets_dir and Path(assets_dir).is_dir():
        app.mount("/", StaticFiles(directory=assets_dir, html=True), name="ui")
    else:
        @app.get("/")
        async def index():
            return HTMLResponse(_FALLBACK_PAGE)

    return app
