# quotfib/plugins/plugin_registry.py
"""
Check Registry
==============

Registry for verification checks with discovery and validation.
Every acceptance check is a plugin module exposing create_plugin().
"""

import logging
from typing import Dict, List, Type, Any, Tuple
from abc import ABC, abstractmethod

from ..core.models import CheckConfig, CheckInfo, Verdict

logger = logging.getLogger(__name__)

CheckOutcome = Tuple[List[Verdict], Dict[str, Any]]


class CheckPlugin(ABC):
    """Abstract base class for check plugins."""

    @abstractmethod
    def get_check_name(self) -> str:
        """Return the unique check identifier."""
        pass

    @abstractmethod
    def get_check_info(self) -> CheckInfo:
        """Return check information and metadata."""
        pass

    def get_config_model(self) -> Type[CheckConfig]:
        """Return the Pydantic model for check configuration."""
        return CheckConfig

    @abstractmethod
    def run_check(self, config: CheckConfig) -> CheckOutcome:
        """Run the verification; return its verdicts and structured data."""
        pass

    def validate_config(self, config_dict: Dict[str, Any]) -> CheckConfig:
        """Validate and parse check configuration using the check's config model."""
        config_model = self.get_config_model()
        try:
            return config_model(**config_dict)
        except Exception as e:
            logger.error(f"Config validation failed for {self.get_check_name()}: {e}")
            raise ValueError(f"Invalid configuration: {str(e)}")

    def get_json_schema(self) -> Dict[str, Any]:
        """Get JSON schema for check configuration."""
        return self.get_config_model().model_json_schema()


class CheckRegistry:
    """Registry for managing check plugins."""

    def __init__(self):
        self.plugins: Dict[str, CheckPlugin] = {}
        logger.info("Check registry initialized")

    def register(self, plugin: CheckPlugin):
        """Register a check plugin."""
        name = plugin.get_check_name()

        if name in self.plugins:
            raise ValueError(f"Check '{name}' already registered")

        try:
            info = plugin.get_check_info()
            plugin.get_config_model()
            logger.info(f"Registering check plugin: {name} - {info.name}")
        except Exception as e:
            raise ValueError(f"Invalid plugin for {name}: {str(e)}")

        self.plugins[name] = plugin
        logger.debug(f"Successfully registered plugin: {name}")

    def get(self, name: str) -> CheckPlugin:
        """Get a plugin by check name."""
        if name not in self.plugins:
            available = ", ".join(self.plugins.keys())
            raise ValueError(f"Unknown check: {name}. Available: {available}")
        return self.plugins[name]

    def list_names(self) -> List[str]:
        """Registered check names, in acceptance order."""
        def order(name: str):
            acceptance = self.plugins[name].get_check_info().acceptance_id
            return (acceptance is None, acceptance or 0, name)

        return sorted(self.plugins, key=order)

    def get_all_info(self) -> Dict[str, CheckInfo]:
        """Get info for all registered checks."""
        return {name: self.plugins[name].get_check_info() for name in self.list_names()}

    def has_plugin(self, name: str) -> bool:
        return name in self.plugins

    def unregister(self, name: str) -> bool:
        """Unregister a plugin."""
        if name in self.plugins:
            del self.plugins[name]
            logger.info(f"Unregistered plugin: {name}")
            return True
        return False

    def clear(self):
        """Clear all registered plugins."""
        count = len(self.plugins)
        self.plugins.clear()
        logger.info(f"Cleared {count} plugins from registry")

    def get_stats(self) -> Dict[str, Any]:
        """Get registry statistics."""
        return {
            "total_plugins": len(self.plugins),
            "registered_checks": self.list_names(),
            "plugin_info": {
                name: {
                    "name": info.name,
                    "category": info.category,
                    "acceptance_id": info.acceptance_id,
                    "estimated_seconds": info.estimated_seconds,
                }
                for name, info in self.get_all_info().items()
            },
        }


def load_plugin_from_module(module_name: str) -> CheckPlugin:
    """Load a check plugin from a module."""
    try:
        module = __import__(module_name, fromlist=[''])
    except ImportError as e:
        raise ValueError(f"Failed to import {module_name}: {str(e)}")

    if not hasattr(module, 'create_plugin'):
        raise ValueError(f"Module {module_name} missing create_plugin() function")
    try:
        plugin = module.create_plugin()
    except Exception as e:
        raise ValueError(f"Error creating plugin from {module_name}: {str(e)}")
    if not isinstance(plugin, CheckPlugin):
        raise ValueError("create_plugin() must return a CheckPlugin instance")
    return plugin


def discover_plugins(check_names: List[str], package_prefix: str = "quotfib.checks") -> CheckRegistry:
    """Discover and load check plugins; modules that fail to load are logged and skipped."""
    registry = CheckRegistry()

    for check_name in check_names:
        try:
            plugin = load_plugin_from_module(f"{package_prefix}.{check_name}")
            registry.register(plugin)
        except Exception as e:
            logger.error(f"Failed to load check {check_name}: {e}")

    return registry
