"""HTTP facade: schema browsing and interactive query sessions.

Sessions live in memory and are evicted after an idle timeout. Each session
pins the schema content hash it was created against; if the schema file
changes underneath it, further requests for that session answer 409.
"""
from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path as FilePath
from typing import Optional

from fastapi import FastAPI, HTTPException, Response
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .clustering import ClusterHierarchy, hcluster
from .errors import SchemaError
from .expressions import path_expr
from .graph import Graph, Path, derive_graph
from .reduction import reduce_graph
from .relevance import (DEFAULT_C_WEIGHT, RelevanceConfig, badness,
                        coerce_c_weight)
from .schema import Schema, parse_schema, schema_hash
from .search import SearchState, list_more, release_order, start_state

DEFAULT_SESSION_TTL = 30.0 * 60.0


@dataclass
class CompiledSchema:
    schema: Schema
    graph: Graph
    hierarchy: ClusterHierarchy
    digest: str


def compile_schema(schema: Schema) -> CompiledSchema:
    graph = derive_graph(schema)
    if not graph.is_connected():
        raise SchemaError("schema graph not connected")
    return CompiledSchema(
        schema=schema,
        graph=graph,
        hierarchy=hcluster(graph),
        digest=schema_hash(schema),
    )


@dataclass
class PairSearch:
    start: str
    goal: str
    graph: Graph
    state: SearchState
    shown: list[Path] = field(default_factory=list)

    def advance(self, cfg: RelevanceConfig) -> list[Path]:
        """One MORE round; returns the newly released paths in order."""
        previous = self.state.released
        self.state = list_more(self.state, cfg, self.graph)
        fresh = release_order(self.state.released - previous, cfg)
        self.shown.extend(fresh)
        return fresh


@dataclass
class Session:
    session_id: str
    digest: str
    points: list[str]
    cfg: RelevanceConfig
    pairs: list[PairSearch]
    created_at: float = field(default_factory=time.time)
    last_access: float = field(default_factory=time.monotonic)
    lock: threading.Lock = field(default_factory=threading.Lock)


class Engine:
    """Shared compiled schema plus the live session table."""

    def __init__(self, schema_path: str | FilePath,
                 default_c_weight: Fraction = DEFAULT_C_WEIGHT,
                 session_ttl: float = DEFAULT_SESSION_TTL) -> None:
        self.schema_path = FilePath(schema_path)
        self.default_c_weight = coerce_c_weight(default_c_weight)
        self.session_ttl = session_ttl
        self._lock = threading.Lock()
        self._sessions: dict[str, Session] = {}
        self.compiled = compile_schema(parse_schema(
            self.schema_path.read_text(encoding="utf-8")))

    def refresh(self) -> None:
        """Recompile when the schema file content changed; ignore bad edits."""
        try:
            schema = parse_schema(self.schema_path.read_text(encoding="utf-8"))
        except (OSError, SchemaError):
            return
        digest = schema_hash(schema)
        with self._lock:
            if digest != self.compiled.digest:
                try:
                    self.compiled = compile_schema(schema)
                except SchemaError:
                    pass

    def open_session(self, points: list[str], c_weight) -> Session:
        self.refresh()
        compiled = self.compiled
        if len(points) < 2:
            raise ValueError("need at least two points")
        for point in points:
            if point not in compiled.graph.nodes:
                raise ValueError(f"unknown point {point!r}")
        for left, right in zip(points, points[1:]):
            if left == right:
                raise ValueError("points must be distinct")
        cfg = RelevanceConfig.for_schema(
            compiled.schema,
            self.default_c_weight if c_weight is None else coerce_c_weight(c_weight),
        )
        pairs = []
        for left, right in zip(points, points[1:]):
            graph = reduce_graph(compiled.hierarchy, left, right, compiled.graph)
            pair = PairSearch(start=left, goal=right, graph=graph,
                              state=start_state(left, right, graph))
            pair.advance(cfg)
            pairs.append(pair)
        session = Session(
            session_id=uuid.uuid4().hex,
            digest=compiled.digest,
            points=list(points),
            cfg=cfg,
            pairs=pairs,
        )
        with self._lock:
            self._evict_idle()
            self._sessions[session.session_id] = session
        return session

    def get_session(self, session_id: str) -> Session:
        self.refresh()
        with self._lock:
            self._evict_idle()
            session = self._sessions.get(session_id)
        if session is None:
            raise KeyError(session_id)
        if session.digest != self.compiled.digest:
            raise StaleSessionError(session_id)
        session.last_access = time.monotonic()
        return session

    def drop_session(self, session_id: str) -> bool:
        with self._lock:
            return self._sessions.pop(session_id, None) is not None

    def _evict_idle(self) -> None:
        now = time.monotonic()
        stale = [sid for sid, s in self._sessions.items()
                 if now - s.last_access > self.session_ttl]
        for sid in stale:
            del self._sessions[sid]


class StaleSessionError(Exception):
    """The schema was recompiled after this session started."""


class CreateSessionRequest(BaseModel):
    points: list[str]
    c_weight: float | str | None = None


class MoreRequest(BaseModel):
    pair_index: int


def path_payload(path: Path, schema: Schema, cfg: RelevanceConfig) -> dict:
    return {
        "expression": path_expr(path, schema).render(),
        "badness": float(badness(path, cfg)),
        "nodes": list(path.nodes),
        "labels": list(path.labels),
    }


def pair_payload(pair: PairSearch, schema: Schema, cfg: RelevanceConfig) -> dict:
    return {
        "start": pair.start,
        "goal": pair.goal,
        "paths": [path_payload(p, schema, cfg) for p in pair.shown],
        "exhausted": pair.state.exhausted,
    }


def session_payload(session: Session, schema: Schema) -> dict:
    return {
        "session_id": session.session_id,
        "points": session.points,
        "c_weight": float(session.cfg.c_weight),
        "created_at": session.created_at,
        "pairs": [pair_payload(p, schema, session.cfg) for p in session.pairs],
    }


def create_app(schema_path: str | FilePath,
               default_c_weight: Fraction = DEFAULT_C_WEIGHT,
               session_ttl: float = DEFAULT_SESSION_TTL) -> FastAPI:
    engine = Engine(schema_path, default_c_weight, session_ttl)
    app = FastAPI(title="schemapath", version="0.1.0")
    app.state.engine = engine
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET", "POST", "DELETE"],
        allow_headers=["*"],
    )

    def fetch(session_id: str) -> Session:
        try:
            return engine.get_session(session_id)
        except KeyError:
            raise HTTPException(status_code=404,
                                detail=f"unknown session {session_id!r}")
        except StaleSessionError:
            raise HTTPException(status_code=409,
                                detail="schema recompiled since session start")

    @app.get("/schema")
    def get_schema() -> dict:
        engine.refresh()
        schema = engine.compiled.schema

        def listing(names):
            ordered = sorted(names, key=lambda n: (-schema.cweight[n], n))
            return [{"name": n, "cweight": schema.cweight[n]} for n in ordered]

        return {
            "schema_hash": engine.compiled.digest,
            "object_types": listing(schema.obj_types),
            "relationship_types": listing(schema.rel_types),
        }

    @app.post("/sessions")
    def create_session(request: CreateSessionRequest) -> dict:
        try:
            session = engine.open_session(request.points, request.c_weight)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return session_payload(session, engine.compiled.schema)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str) -> dict:
        session = fetch(session_id)
        with session.lock:
            return session_payload(session, engine.compiled.schema)

    @app.post("/sessions/{session_id}/more")
    def more(session_id: str, request: MoreRequest) -> dict:
        session = fetch(session_id)
        with session.lock:
            if not 0 <= request.pair_index < len(session.pairs):
                raise HTTPException(status_code=400,
                                    detail=f"pair_index out of range")
            pair = session.pairs[request.pair_index]
            fresh = pair.advance(session.cfg)
            schema = engine.compiled.schema
            return {
                "pair_index": request.pair_index,
                "new_paths": [path_payload(p, schema, session.cfg) for p in fresh],
                "exhausted": pair.state.exhausted,
            }

    @app.delete("/sessions/{session_id}", status_code=204)
    def close_session(session_id: str) -> Response:
        if not engine.drop_session(session_id):
            raise HTTPException(status_code=404,
                                detail=f"unknown session {session_id!r}")
        return Response(status_code=204)

    return app
