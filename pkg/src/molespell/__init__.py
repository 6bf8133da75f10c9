"""Mole-themed spelling practice game.

Deterministic per-word round engine with timed hint escalation, a
Whac-A-Mole bonus mini-game, an in-session spaced-repetition scheduler
with adaptive difficulty levels, and a session service exposing the
whole thing over HTTP plus a newline-delimited JSON event stream.
"""

__version__ = "0.1.0"
