# quotfib/core/settings.py
"""
Settings
========
Environment-driven limits shared by the brute-force layers.
"""

import logging
import os

logger = logging.getLogger(__name__)

BUDGET_ENV_VAR = "QUOTFIB_BUDGET"
DEFAULT_ENUMERATION_BUDGET = 10 ** 8
MAX_PRIME = 2 ** 16


def enumeration_budget(override: int = None) -> int:
    """Candidate cap for brute-force enumerations; explicit override beats the environment."""
    if override is not None:
        return max(1, override)

    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None or not raw.strip():
        return DEFAULT_ENUMERATION_BUDGET
    try:
        value = int(raw.strip())
    except ValueError:
        logger.warning(f"Ignoring non-integer {BUDGET_ENV_VAR}={raw!r}")
        return DEFAULT_ENUMERATION_BUDGET
    return max(1, value)
