"""Read-only HTTP service over a directory of flow-graph files.

All walkthrough state lives in the client; the server only lists
procedures and hands out the flow JSON verbatim, so responses survive a
restart unchanged.
"""
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Optional

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles

log = logging.getLogger(__name__)


def _listing_entry(path: Path) -> dict:
    data = json.loads(path.read_text(encoding="utf-8"))
    title = ""
    entry_id = data.get("entry")
    for node in data.get("nodes", []):
        if node["id"] == entry_id:
            title = node.get("question") or node["text"]
            break
    return {
        "id": path.stem,
        "title": title[:120],
        "source": data.get("source", {}),
    }


def build_app(flows_dir: Path | str, ui_dir: Optional[Path | str] = None) -> FastAPI:
    flows = Path(flows_dir)
    app = FastAPI(title="procmine walkthrough API")
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["GET"], allow_headers=["*"])

    def flow_path(proc_id: str) -> Optional[Path]:
        # ids are bare file stems; reject anything path-like
        if "/" in proc_id or "\\" in proc_id or proc_id.startswith("."):
            return None
        p = flows / f"{proc_id}.json"
        return p if p.is_file() else None

    @app.get("/api/procedures")
    def list_procedures():
        entries = []
        for p in sorted(flows.glob("*.json")):
            if p.name in ("run_report.json", "manifest.json"):
                continue
            try:
                entries.append(_listing_entry(p))
            except (OSError, ValueError, KeyError) as exc:
                log.error("unreadable flow file %s: %s", p, exc)
        return entries

    @app.get("/api/procedures/{proc_id}/flow")
    def get_flow(proc_id: str):
        p = flow_path(proc_id)
        if p is None:
            return JSONResponse({"error": "not_found"}, status_code=404)
        try:
            raw = p.read_bytes()
        except OSError as exc:
            log.error("unreadable flow file %s: %s", p, exc)
            return JSONResponse({"error": "unreadable"}, status_code=500)
        return Response(content=raw, media_type="application/json")

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")
    return app


def serve(flows_dir: Path | str, bind_addr: str = "127.0.0.1:8000",
          ui_dir: Optional[Path | str] = None) -> None:
    import uvicorn
    host, _, port = bind_addr.rpartition(":")
    uvicorn.run(build_app(flows_dir, ui_dir), host=host or "127.0.0.1",
                port=int(port))
