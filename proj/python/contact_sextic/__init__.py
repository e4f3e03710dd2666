"""Exact and numeric tools for the rational sextic solutions of a seventh-order ODE."""

from ._core import *  # noqa: F401,F403

__all__ = [name for name in dir() if not name.startswith("_")]
