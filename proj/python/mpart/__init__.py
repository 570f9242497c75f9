"""Label structures, homomorphisms and reductions between matrix partition problems."""

from ._core import *  # noqa: F401,F403
from ._core import ResourceLimitError, Structure, run_cli

__all__ = [name for name in dir() if not name.startswith("_")]
