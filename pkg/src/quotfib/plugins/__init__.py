# quotfib/plugins/__init__.py
"""
Plugin System
=============

Check plugins and their registry.
Every acceptance check lives in its own module under quotfib.checks and
exposes a create_plugin() factory.

Public API:
    Core Classes:
        - CheckPlugin: Abstract base class for check plugins
        - CheckRegistry: Registry for managing check plugins

    Functions:
        - load_plugin_from_module: Load a plugin from a Python module
        - discover_plugins: Load a list of check modules into a registry
        - validate_plugin: Sanity-check a plugin implementation

Example Usage:
    ```python
    from quotfib.plugins import discover_plugins

    registry = discover_plugins(["census_closed_form"])
    plugin = registry.get("census_closed_form")
    config = plugin.validate_config({"pairs": [[2, 2]]})
    verdicts, data = plugin.run_check(config)
    ```
"""

from typing import Tuple

from .plugin_registry import CheckOutcome, CheckPlugin, CheckRegistry
from .plugin_registry import load_plugin_from_module, discover_plugins

__all__ = [
    "CheckOutcome",
    "CheckPlugin",
    "CheckRegistry",
    "load_plugin_from_module",
    "discover_plugins",
    "validate_plugin",
]


def validate_plugin(plugin: CheckPlugin) -> Tuple[bool, str]:
    """
    Validate a plugin implementation.

    Returns:
        tuple: (is_valid, error_message)
    """
    try:
        name = plugin.get_check_name()
        if not name or not isinstance(name, str):
            return False, "get_check_name() must return a non-empty string"

        if not plugin.get_check_info():
            return False, "get_check_info() must return a CheckInfo instance"

        if not plugin.get_config_model():
            return False, "get_config_model() must return a Pydantic model class"

        if not isinstance(plugin.get_json_schema(), dict):
            return False, "get_json_schema() must return a dictionary"

        return True, "Plugin validation successful"

    except Exception as e:
        return False, f"Plugin validation failed: {str(e)}"
