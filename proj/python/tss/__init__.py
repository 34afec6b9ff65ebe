"""Python bindings for the tss target set selection library."""

from ._tss import *  # noqa: F401,F403
from ._tss import TssError, run_cli

__all__ = [name for name in dir() if not name.startswith("_")]
