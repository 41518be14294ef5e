"""HTTP service exposing the library over JSON endpoints."""

from .app import app, create_app

__all__ = ["app", "create_app"]
