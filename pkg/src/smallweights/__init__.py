"""Exact combinatorics of small weights of finite root systems."""

from __future__ import annotations

__version__ = "0.1.0"
