"""Read-only HTTP facade over a loaded genealogy graph.

Endpoints (all JSON, UTF-8):

    GET /api/researchers?q=<text>&limit=<n>   substring search over names
    GET /api/researchers/{id}                 one researcher's summary
    GET /api/researchers/{id}/tree?up=&down=  VIEW_JSON subtree around a node
    GET /api/metrics                          cached MetricsReport
    GET /api/trees/largest?n=<k>              largest trees with profiles

The graph is immutable for the lifetime of the service; metrics and tree
profiles are computed once at startup.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .analytics import DEFAULT_HOME_COUNTRY, all_profiles, summarize
from .errors import EmptyName
from .exports import export_subtree, view_json_dict
from .graph import GenealogyGraph
from .identity import normalize_name

MAX_SEARCH_LIMIT = 200
MAX_TREE_DEPTH = 6


def _hit(graph: GenealogyGraph, node_id: int) -> dict:
    node = graph.nodes[node_id]
    return {
        "node_id": node.node_id,
        "display_name": node.display_name,
        "institutions": sorted(node.institutions),
        "has_curriculum": node.has_curriculum,
        "advisee_count": graph.out_degree(node.node_id),
    }


def create_app(graph: GenealogyGraph, home_country: str = DEFAULT_HOME_COUNTRY,
               cors_origin: str = "*") -> FastAPI:
    app = FastAPI(title="agt query service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[cors_origin],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    metrics_doc = summarize(graph, home_country=home_country).to_json_dict()
    profiles = sorted(all_profiles(graph), key=lambda p: (-p.size, p.root))
    search_rows = sorted(
        (
            (normalize_name(n.display_name).normalized, n.node_id)
            for n in graph.nodes.values()
        ),
        key=lambda row: (-graph.out_degree(row[1]), graph.nodes[row[1]].display_name, row[1]),
    )

    @app.exception_handler(RequestValidationError)
    async def bad_request(_, exc):
        # The API contract uses 400 for malformed parameters.
        return JSONResponse(status_code=400, content={"detail": str(exc.errors())})

    @app.get("/api/researchers")
    def search(q: str = Query(default=""), limit: int = Query(default=20)):
        if not q.strip():
            raise HTTPException(status_code=400, detail="q must be non-empty")
        try:
            needle = normalize_name(q).normalized
        except EmptyName:
            raise HTTPException(status_code=400, detail="q must be non-empty") from None
        limit = max(0, min(limit, MAX_SEARCH_LIMIT))
        hits = []
        for normalized, node_id in search_rows:
            if needle in normalized:
                hits.append(_hit(graph, node_id))
                if len(hits) == limit:
                    break
        return {"hits": hits}

    @app.get("/api/researchers/{node_id}")
    def researcher(node_id: int):
        if node_id not in graph.nodes:
            raise HTTPException(status_code=404, detail=f"unknown researcher {node_id}")
        return _hit(graph, node_id)

    @app.get("/api/researchers/{node_id}/tree")
    def tree(node_id: int, up: int = Query(default=1), down: int = Query(default=2)):
        if node_id not in graph.nodes:
            raise HTTPException(status_code=404, detail=f"unknown researcher {node_id}")
        up = max(0, min(up, MAX_TREE_DEPTH))
        down = max(0, min(down, MAX_TREE_DEPTH))
        return view_json_dict(export_subtree(graph, node_id, up, down))

    @app.get("/api/metrics")
    def metrics():
        return metrics_doc

    @app.get("/api/trees/largest")
    def largest(n: int = Query(default=10)):
        if n <= 0:
            raise HTTPException(status_code=400, detail="n must be positive")
        return {
            "trees": [
                {
                    "root": p.root,
                    "name": graph.nodes[p.root].display_name,
                    "size": p.size,
                    "depth": p.depth,
                    "max_width": p.max_width,
                }
                for p in profiles[:n]
            ]
        }

    return app
