"""Coxeter groups, Cayley graph balls and their automorphisms.

Every analysis returns plain dicts and lists with the same layout as the
``coxaut`` command-line tool's JSON output.
"""

from ._core import (
    CoxautError,
    GuardExceeded,
    InvalidArgument,
    ParseError,
    System,
)

__all__ = ["CoxautError", "GuardExceeded", "InvalidArgument", "ParseError", "System"]
