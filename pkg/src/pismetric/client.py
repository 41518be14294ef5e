"""Thin client for the solver service.

By default the FastAPI app is served in-process through an ASGI transport,
so no server needs to be running; pass a base URL to talk to a remote
instance instead. Either way the CLI sees the same JSON surface.
"""

from __future__ import annotations

import asyncio
from dataclasses import dataclass

import httpx


@dataclass
class ServiceError(Exception):
    """A 4xx from the service: domain error name plus human detail."""

    name: str
    detail: str
    status_code: int

    def __str__(self):
        return f"{self.name}: {self.detail}"


class _SyncASGITransport(httpx.BaseTransport):
    """Drive an ASGI app from synchronous httpx calls.

    Each request runs the app on a fresh event loop; fine for CLI-style
    usage of one or two requests per process.
    """

    def __init__(self, app):
        self._app = app

    def handle_request(self, request: httpx.Request) -> httpx.Response:
        async def go():
            transport = httpx.ASGITransport(app=self._app)
            try:
                response = await transport.handle_async_request(request)
                content = await response.aread()
                await response.aclose()
                return response.status_code, response.headers, content
            finally:
                await transport.aclose()

        status, headers, content = asyncio.run(go())
        return httpx.Response(status_code=status, headers=headers, content=content)


class ServiceClient:
    """HTTP access to the pismetric service, in-process unless given a URL."""

    def __init__(self, base_url: str | None = None, timeout: float | None = None):
        if base_url:
            self._client = httpx.Client(base_url=base_url, timeout=timeout)
        else:
            from .service.app import create_app

            self._client = httpx.Client(
                transport=_SyncASGITransport(create_app()),
                base_url="http://pismetric.local",
                timeout=None,
            )

    def close(self):
        self._client.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def post(self, path: str, payload: dict) -> httpx.Response:
        resp = self._client.post(path, json=payload)
        if resp.status_code == 400:
            body = resp.json()
            raise ServiceError(body.get("error", "Error"), body.get("detail", ""), 400)
        if resp.status_code == 422:
            raise ServiceError("UsageError", _detail_text(resp), 422)
        resp.raise_for_status()
        return resp

    def health(self) -> dict:
        resp = self._client.get("/health")
        resp.raise_for_status()
        return resp.json()


def _detail_text(resp: httpx.Response) -> str:
    try:
        detail = resp.json().get("detail", "")
    except ValueError:
        return resp.text
    if isinstance(detail, list):  # pydantic validation errors
        return "; ".join(
            f"{'.'.join(str(x) for x in d.get('loc', []))}: {d.get('msg', '')}" for d in detail
        )
    return str(detail)
