# quotfib/checks/__init__.py
"""
Acceptance Checks
=================

One plugin module per acceptance criterion. Each module exposes a
create_plugin() factory returning a CheckPlugin; CHECK_MODULES lists them in
acceptance order and is what the session and the CLI discover.

Public API:
    - CHECK_MODULES: module names under quotfib.checks
    - load_checks(): a CheckRegistry holding every acceptance check

Example Usage:
    ```python
    from quotfib.checks import load_checks

    registry = load_checks()
    plugin = registry.get("involution")
    verdicts, data = plugin.run_check(plugin.validate_config({}))
    ```
"""

from typing import Optional, Sequence

from ..plugins import CheckRegistry, discover_plugins

CHECK_MODULES = [
    "chart_equations",
    "residual_hypersurface",
    "singular_locus",
    "involution",
    "pullback_table",
    "discrepancy_ledger",
    "census_closed_form",
    "quadric_fibre",
    "kernel_oracle",
    "chart_transition",
    "chart_census_bijection",
    "stable_pair_invariants",
    "cramer_identity",
]


def load_checks(names: Optional[Sequence[str]] = None) -> CheckRegistry:
    """Registry of the named checks (default: all of them)."""
    return discover_plugins(list(names or CHECK_MODULES), package_prefix=__name__)


__all__ = ["CHECK_MODULES", "load_checks"]
