# tests/test_plugin_registry.py
import pytest

from quotfib.core import CheckCategory, CheckConfig, CheckInfo, Verdict
from quotfib.plugins import (
    CheckPlugin,
    CheckRegistry,
    discover_plugins,
    load_plugin_from_module,
    validate_plugin,
)


class ConstantPlugin(CheckPlugin):
    def __init__(self, name="constant", acceptance_id=None, passes=True):
        self.name = name
        self.acceptance_id = acceptance_id
        self.passes = passes

    def get_check_name(self) -> str:
        return self.name

    def get_check_info(self) -> CheckInfo:
        return CheckInfo(
            name=self.name.title(),
            description="Always returns one verdict.",
            claim="nothing",
            category=CheckCategory.ALGEBRA,
            acceptance_id=self.acceptance_id,
        )

    def run_check(self, config: CheckConfig):
        return [Verdict.check("constant", self.passes)], {"seed": config.seed}


class BrokenInfoPlugin(ConstantPlugin):
    def get_check_info(self) -> CheckInfo:
        raise RuntimeError("no info")


def test_register_and_get():
    registry = CheckRegistry()
    plugin = ConstantPlugin()
    registry.register(plugin)
    assert registry.has_plugin("constant")
    assert registry.get("constant") is plugin
    with pytest.raises(ValueError, match="already registered"):
        registry.register(ConstantPlugin())
    with pytest.raises(ValueError, match="Unknown check"):
        registry.get("missing")


def test_register_rejects_broken_plugin():
    registry = CheckRegistry()
    with pytest.raises(ValueError, match="Invalid plugin"):
        registry.register(BrokenInfoPlugin())
    assert not registry.has_plugin("constant")


def test_list_names_in_acceptance_order():
    registry = CheckRegistry()
    registry.register(ConstantPlugin("zeta", acceptance_id=1))
    registry.register(ConstantPlugin("alpha"))
    registry.register(ConstantPlugin("beta", acceptance_id=2))
    assert registry.list_names() == ["zeta", "beta", "alpha"]
    stats = registry.get_stats()
    assert stats["total_plugins"] == 3
    assert stats["plugin_info"]["beta"]["acceptance_id"] == 2


def test_unregister_and_clear():
    registry = CheckRegistry()
    registry.register(ConstantPlugin("a"))
    registry.register(ConstantPlugin("b"))
    assert registry.unregister("a")
    assert not registry.unregister("a")
    registry.clear()
    assert registry.list_names() == []


def test_validate_config():
    plugin = ConstantPlugin()
    assert plugin.validate_config({"seed": 7}).seed == 7
    with pytest.raises(ValueError, match="Invalid configuration"):
        plugin.validate_config({"seed": "not a number"})
    assert "seed" in plugin.get_json_schema()["properties"]


def test_validate_plugin():
    assert validate_plugin(ConstantPlugin())[0]
    ok, message = validate_plugin(BrokenInfoPlugin())
    assert not ok
    assert "no info" in message


def test_load_plugin_from_module():
    plugin = load_plugin_from_module("quotfib.checks.involution")
    assert plugin.get_check_name() == "involution"
    with pytest.raises(ValueError, match="Failed to import"):
        load_plugin_from_module("quotfib.checks.no_such_check")
    with pytest.raises(ValueError, match="missing create_plugin"):
        load_plugin_from_module("quotfib.core")


def test_discover_skips_unloadable_modules():
    registry = discover_plugins(["involution", "no_such_check", "cramer_identity"])
    assert registry.list_names() == ["involution", "cramer_identity"]
