"""HTTP + event-stream service hosting game sessions.

POST /sessions opens a session for a player; the game itself is played
over a socket upgrade at /sessions/{id}/stream carrying one JSON
message per line in each direction. Events for one session are applied
under a per-session lock, so everything a session does is strictly
sequential; separate sessions run concurrently.
"""

from __future__ import annotations

import asyncio
import secrets
import time
import uuid
from pathlib import Path

from fastapi import FastAPI, WebSocket, WebSocketDisconnect
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .catalog import Catalog
from .config import GameConfig
from .protocol import ErrorEvent, ServerEvent, encode_line
from .runtime import SessionRuntime
from .session import create_session, progress_summary
from .storage import DirectoryProfileStore, SessionLog, StorageError, validate_player_id


def monotonic_ms() -> int:
    return time.monotonic_ns() // 1_000_000


class SessionEntry:
    def __init__(self, runtime: SessionRuntime, log: SessionLog):
        self.runtime = runtime
        self.log = log
        self.lock = asyncio.Lock()
        self.subscribers: set[asyncio.Queue[str]] = set()
        self.ticker: asyncio.Task | None = None

    def publish(self, events: list[ServerEvent]) -> None:
        lines = [encode_line(e) for e in events]
        for queue in self.subscribers:
            for line in lines:
                queue.put_nowait(line)


class CreateSessionRequest(BaseModel):
    player_id: str
    seed: int | None = Field(default=None)


def create_app(
    catalog: Catalog,
    data_dir: str | Path,
    config: GameConfig | None = None,
    *,
    clock=monotonic_ms,
    static_dir: str | Path | None = None,
) -> FastAPI:
    config = config or GameConfig()
    store = DirectoryProfileStore(data_dir)
    app = FastAPI(title="molespell")
    sessions: dict[str, SessionEntry] = {}
    app.state.sessions = sessions

    @app.post("/sessions")
    def post_session(request: CreateSessionRequest) -> dict:
        try:
            validate_player_id(request.player_id)
        except StorageError as exc:
            return _error_response(400, "bad_player_id", str(exc))
        session_id = uuid.uuid4().hex
        seed = request.seed if request.seed is not None else secrets.randbits(32)
        try:
            session = create_session(
                request.player_id,
                catalog,
                seed,
                config=config,
                store=store,
                session_id=session_id,
                now=clock(),
            )
            log = SessionLog(data_dir, session_id)
        except StorageError as exc:
            return _error_response(500, "storage_error", str(exc))
        runtime = SessionRuntime(session=session, append_log=log.append)
        runtime.start_log()
        sessions[session_id] = SessionEntry(runtime, log)
        return {"session_id": session_id}

    @app.get("/players/{player_id}/progress")
    def get_progress(player_id: str) -> dict:
        try:
            profile = store.load(player_id)
        except StorageError as exc:
            return _error_response(500, "storage_error", str(exc))
        return progress_summary(profile)

    @app.websocket("/sessions/{session_id}/stream")
    async def stream(websocket: WebSocket, session_id: str) -> None:
        await websocket.accept()
        entry = sessions.get(session_id)
        if entry is None:
            await websocket.send_text(
                encode_line(ErrorEvent("unknown_session", f"no session {session_id!r}"))
            )
            await websocket.close()
            return

        queue: asyncio.Queue[str] = asyncio.Queue()
        entry.subscribers.add(queue)
        if entry.ticker is None or entry.ticker.done():
            entry.ticker = asyncio.create_task(_run_ticker(entry, config, clock))
        sender = asyncio.create_task(_run_sender(websocket, queue))
        try:
            async with entry.lock:
                for event in entry.runtime.attach_stream():
                    queue.put_nowait(encode_line(event))
            while True:
                raw = await websocket.receive_text()
                for line in raw.splitlines():
                    if not line.strip():
                        continue
                    async with entry.lock:
                        events = entry.runtime.process_line(line, clock())
                    entry.publish(events)
                if entry.runtime.session.ended:
                    entry.log.close()
                    break
        except WebSocketDisconnect:
            pass
        finally:
            entry.subscribers.discard(queue)
            if not entry.subscribers and entry.ticker is not None:
                entry.ticker.cancel()
                entry.ticker = None
            await _drain_and_stop(sender, queue)
            try:
                await websocket.close()
            except RuntimeError:
                pass

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="client")

    return app


async def _run_ticker(entry: SessionEntry, config: GameConfig, clock) -> None:
    interval = config.session.tick_interval_ms / 1000
    while not entry.runtime.session.ended:
        await asyncio.sleep(interval)
        async with entry.lock:
            events = entry.runtime.process_tick(clock())
        if events:
            entry.publish(events)


async def _run_sender(websocket: WebSocket, queue: asyncio.Queue[str]) -> None:
    while True:
        line = await queue.get()
        if line == "":
            return
        try:
            await websocket.send_text(line)
        except (WebSocketDisconnect, RuntimeError):
            return


async def _drain_and_stop(sender: asyncio.Task, queue: asyncio.Queue[str]) -> None:
    queue.put_nowait("")  # sentinel: flush what is queued, then stop
    try:
        await asyncio.wait_for(sender, timeout=2)
    except (asyncio.TimeoutError, asyncio.CancelledError):
        sender.cancel()


def _error_response(status: int, code: str, message: str) -> dict:
    from fastapi import HTTPException

    raise HTTPException(status_code=status, detail={"code": code, "message": message})
