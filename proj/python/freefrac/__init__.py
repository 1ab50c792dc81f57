"""Exact arithmetic in the free field via admissible linear systems."""

from ._freefrac import Element, Session, UserError, from_json, minimize

__all__ = ["Element", "Session", "UserError", "from_json", "minimize"]
