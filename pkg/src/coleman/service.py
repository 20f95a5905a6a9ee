"""HTTP service exposing the computation library.

One process holds the build and automorphism caches, so repeated queries
about the same groups are cheap; the CLI is a thin client of this app,
either in-process or over the network.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .automorphisms import automorphism_group, out_col
from .config import Caps, default_caps
from .constructors import build
from .core import FiniteGroup
from .errors import GroupError
from .nilcyclic import dade_construct
from .search import is_isomorphic
from .structure import normal_subgroups
from .verify import catalog_run, check, scan_questions, theorem_ids


class GroupRequest(BaseModel):
    spec: dict
    max_order: int | None = Field(
        default=None, description="override the automorphism/isomorphism cap"
    )


class AutomorphismsRequest(GroupRequest):
    coleman: bool = False
    class_preserving: bool = False
    p_central: int | None = None


class OutcolRequest(GroupRequest):
    identify: dict | None = None


class VerifyRequest(GroupRequest):
    theorem: str
    params: dict = Field(default_factory=dict)


class DadeRequest(BaseModel):
    invariants: list[int]


class CatalogRequest(BaseModel):
    max_order: int = 300
    jobs: int = 1


class QuestionsRequest(BaseModel):
    max_order: int = 100


class HealthResponse(BaseModel):
    status: str
    version: str


class TheoremsResponse(BaseModel):
    theorems: list[str]


class GroupSummary(BaseModel):
    name: str
    order: int
    primes: list[int]
    center_order: int
    class_count: int
    normal_subgroup_count: int
    generator_indices: list[int]


class AutomorphismsResponse(BaseModel):
    count: int
    automorphisms: list[list[int]]


class OutcolResponse(BaseModel):
    order: int
    abelian: bool
    invariants: list[int] | None
    coset_table: list[list[int]]
    representatives: list[list[int]]
    identified: bool | None


class VerifyResponse(BaseModel):
    theorem: str
    group: dict
    hypotheses: list[dict]
    conclusion: dict | None
    status: str
    timing_ms: float
    cap_notes: list[str]


class DadeResponse(BaseModel):
    spec: dict
    order: int


def _caps_for(max_order: int | None) -> Caps:
    return default_caps().with_max_order(max_order)


def create_app() -> FastAPI:
    app = FastAPI(
        title="coleman",
        version=__version__,
        description="Coleman automorphism computations on small finite groups",
    )

    @app.exception_handler(GroupError)
    async def group_error_handler(request: Request, exc: GroupError):
        return JSONResponse(
            status_code=400,
            content={
                "error": {"type": type(exc).__name__, "message": str(exc)}
            },
        )

    @app.exception_handler(ValueError)
    async def value_error_handler(request: Request, exc: ValueError):
        return JSONResponse(
            status_code=400,
            content={"error": {"type": "ValueError", "message": str(exc)}},
        )

    @app.get("/health", response_model=HealthResponse)
    def health():
        return HealthResponse(status="ok", version=__version__)

    @app.get("/theorems", response_model=TheoremsResponse)
    def theorems():
        return TheoremsResponse(theorems=theorem_ids())

    @app.post("/group/show", response_model=GroupSummary)
    def group_show(req: GroupRequest):
        caps = _caps_for(req.max_order)
        G = build(req.spec, caps)
        return GroupSummary(
            name=G.name,
            order=G.order,
            primes=list(G.prime_set),
            center_order=G.center().order,
            class_count=len(G.conjugacy_classes()),
            normal_subgroup_count=len(normal_subgroups(G, caps)),
            generator_indices=list(G.generator_indices),
        )

    @app.post("/automorphisms", response_model=AutomorphismsResponse)
    def automorphisms(req: AutomorphismsRequest):
        caps = _caps_for(req.max_order)
        G = build(req.spec, caps)
        matching = []
        for sigma in automorphism_group(G, caps):
            if req.coleman and not sigma.is_coleman():
                continue
            if req.class_preserving and not sigma.is_class_preserving():
                continue
            if req.p_central is not None and not sigma.is_p_central(
                req.p_central
            ):
                continue
            matching.append(list(sigma.images))
        return AutomorphismsResponse(count=len(matching), automorphisms=matching)

    @app.post("/outcol", response_model=OutcolResponse)
    def outcol(req: OutcolRequest):
        caps = _caps_for(req.max_order)
        G = build(req.spec, caps)
        oc = out_col(G, caps)
        identified = None
        if req.identify is not None:
            target = build(req.identify, caps)
            identified = is_isomorphic(oc.cosets, target, caps)
        return OutcolResponse(
            order=oc.order,
            abelian=oc.cosets.is_abelian(),
            invariants=oc.abelian_invariants(),
            coset_table=oc.coset_table(),
            representatives=[list(r.images) for r in oc.representatives],
            identified=identified,
        )

    @app.post("/verify", response_model=VerifyResponse)
    def verify_theorem(req: VerifyRequest):
        caps = _caps_for(req.max_order)
        report = check(req.theorem, req.spec, req.params, caps)
        return VerifyResponse(**report)

    @app.post("/dade", response_model=DadeResponse)
    def dade(req: DadeRequest):
        caps = default_caps()
        spec = dade_construct(req.invariants, caps)
        G = build(spec, caps)
        return DadeResponse(spec=spec, order=G.order)

    @app.post("/catalog/run")
    def run_catalog(req: CatalogRequest) -> dict:
        return catalog_run(max_order=req.max_order, jobs=req.jobs)

    @app.post("/questions")
    def questions(req: QuestionsRequest) -> dict:
        return scan_questions(req.max_order)

    return app


app = create_app()
