"""Induced minors, walls and sparse treewidth witnesses (C++ core)."""

from ._core import *  # noqa: F401,F403
from ._core import Graph, InputError, Refusal, BudgetExhausted, __version__  # noqa: F401
