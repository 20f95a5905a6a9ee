"""Command-line client for the computation service.

By default the commands talk to an in-process copy of the service; pass
--server to point them at a running instance instead.  All payloads and
results are JSON.  Exit codes for `verify`: 0 when the conclusion passed or
the hypotheses did not apply, 2 when a conclusion failed (a contradiction of
the verified statement, the interesting outcome), 3 when an order cap left
the check incomplete.  Other errors exit 1 with a JSON error object on
stderr.
"""

from __future__ import annotations

import asyncio
import json
import sys

import click
import httpx

EXIT_CONTRADICTION = 2
EXIT_INCOMPLETE = 3


def canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


class ServiceClient:
    def __init__(self, server: str | None):
        self.server = server

    def post(self, path: str, payload: dict) -> tuple[int, dict]:
        if self.server:
            with httpx.Client(base_url=self.server, timeout=None) as client:
                r = client.post(path, json=payload)
                return r.status_code, r.json()
        return self._post_in_process(path, payload)

    def _post_in_process(self, path: str, payload: dict) -> tuple[int, dict]:
        from .service import app

        async def go():
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://coleman", timeout=None
            ) as client:
                r = await client.post(path, json=payload)
                return r.status_code, r.json()

        return asyncio.run(go())


def _fail(payload: dict, code: int = 1):
    sys.stderr.write(canonical(payload))
    sys.exit(code)


def _request(ctx, path: str, payload: dict) -> dict:
    client: ServiceClient = ctx.obj["client"]
    try:
        status, body = client.post(path, payload)
    except httpx.HTTPError as exc:
        _fail({"error": {"type": "ConnectionError", "message": str(exc)}})
    if status != 200:
        _fail(
            body
            if "error" in body
            else {"error": {"type": f"HTTP{status}", "message": body}}
        )
    return body


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        _fail({"error": {"type": type(exc).__name__, "message": str(exc)}})


@click.group()
@click.option("--server", default=None, help="base URL of a running service")
@click.option(
    "--max-order",
    type=int,
    default=None,
    help="override the automorphism search cap (default 512)",
)
@click.pass_context
def main(ctx, server, max_order):
    """Coleman automorphism computations on small finite groups."""
    ctx.ensure_object(dict)
    ctx.obj["client"] = ServiceClient(server)
    ctx.obj["max_order"] = max_order


@main.group()
def group():
    """Inspect constructed groups."""


@group.command("show")
@click.argument("specfile", type=click.Path())
@click.pass_context
def group_show(ctx, specfile):
    """Order, primes, center, classes and normal subgroup count."""
    body = _request(
        ctx,
        "/group/show",
        {"spec": _load_json(specfile), "max_order": ctx.obj["max_order"]},
    )
    click.echo(canonical(body), nl=False)


@main.command()
@click.argument("specfile", type=click.Path())
@click.option("--coleman", is_flag=True, help="only Coleman automorphisms")
@click.option(
    "--class-preserving", is_flag=True, help="only class-preserving ones"
)
@click.option("--p-central", type=int, default=None, help="only p-central ones")
@click.pass_context
def aut(ctx, specfile, coleman, class_preserving, p_central):
    """Count and list matching automorphisms as image tuples."""
    body = _request(
        ctx,
        "/automorphisms",
        {
            "spec": _load_json(specfile),
            "coleman": coleman,
            "class_preserving": class_preserving,
            "p_central": p_central,
            "max_order": ctx.obj["max_order"],
        },
    )
    click.echo(canonical(body), nl=False)


@main.command()
@click.argument("specfile", type=click.Path())
@click.option(
    "--identify",
    "identify_file",
    type=click.Path(),
    default=None,
    help="spec of a target group to compare against",
)
@click.pass_context
def outcol(ctx, specfile, identify_file):
    """The outer Coleman group: order, structure, representatives."""
    payload = {
        "spec": _load_json(specfile),
        "max_order": ctx.obj["max_order"],
    }
    if identify_file:
        payload["identify"] = _load_json(identify_file)
    body = _request(ctx, "/outcol", payload)
    click.echo(canonical(body), nl=False)


@main.command()
@click.argument("theorem_id")
@click.argument("specfile", type=click.Path())
@click.option(
    "--params",
    "params_file",
    type=click.Path(),
    default=None,
    help="JSON file with checker parameters",
)
@click.pass_context
def verify(ctx, theorem_id, specfile, params_file):
    """Run one verification check; exit 2 on a contradicted conclusion."""
    payload = {
        "theorem": theorem_id,
        "spec": _load_json(specfile),
        "params": _load_json(params_file) if params_file else {},
        "max_order": ctx.obj["max_order"],
    }
    body = _request(ctx, "/verify", payload)
    click.echo(canonical(body), nl=False)
    if body["status"] == "contradiction":
        sys.exit(EXIT_CONTRADICTION)
    if body["status"] == "incomplete":
        sys.exit(EXIT_INCOMPLETE)


@main.command()
@click.option(
    "--invariants",
    required=True,
    help="comma-separated cyclic orders of the target abelian group",
)
@click.pass_context
def dade(ctx, invariants):
    """Emit a recipe whose outer Coleman group is the given abelian group."""
    try:
        orders = [int(v) for v in invariants.split(",") if v.strip()]
    except ValueError as exc:
        _fail({"error": {"type": "ValueError", "message": str(exc)}})
    body = _request(ctx, "/dade", {"invariants": orders})
    click.echo(canonical(body), nl=False)


@main.group()
def catalog():
    """The built-in regression catalog."""


@catalog.command("run")
@click.option("--max-order", type=int, default=300, show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True)
@click.pass_context
def catalog_run_cmd(ctx, max_order, jobs):
    """Invariants, stock checks and question scan over the catalog."""
    body = _request(
        ctx, "/catalog/run", {"max_order": max_order, "jobs": jobs}
    )
    click.echo(canonical(body), nl=False)
    summary = body.get("summary", {})
    if summary.get("contradictions") or summary.get("question_counterexamples"):
        sys.exit(EXIT_CONTRADICTION)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
