"""Node budgets for exhaustive enumerations.

The environment variable GIRTHLAB_BUDGET, when set, overrides both defaults.
Enumerations raise :class:`girthlab.errors.BudgetExceeded` instead of
silently timing out.
"""

import os

DEFAULT_CYCLE_BUDGET = 100_000_000
DEFAULT_SEARCH_BUDGET = 1_000_000_000


def cycle_budget(override=None) -> int:
    if override is not None:
        return int(override)
    env = os.environ.get("GIRTHLAB_BUDGET")
    return int(env) if env else DEFAULT_CYCLE_BUDGET


def search_budget(override=None) -> int:
    if override is not None:
        return int(override)
    env = os.environ.get("GIRTHLAB_BUDGET")
    return int(env) if env else DEFAULT_SEARCH_BUDGET
