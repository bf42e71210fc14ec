# quotfib/checks/chart_equations.py
"""
Chart Equations Check
=====================

Regenerates the nine t-invariance equations of Q_3 on the chart
W0 = Span(ut, ut^2, vt^2) and compares them, after sign normalization,
with the golden copy shipped in quotfib/data.
"""

from typing import Optional
import logging

from pydantic import Field

from ..core import CheckCategory, CheckConfig, CheckInfo, Verdict
from ..algebra import parse_poly, rationals
from ..charts import ChartSpec, generate_invariance_equations
from ..plugins import CheckOutcome, CheckPlugin
from .golden import CHART_EQUATIONS_FILE, golden_lines

logger = logging.getLogger(__name__)

EXPECTED_COUNTS = {3: 9}


class ChartEquationsConfig(CheckConfig):
    """Chart equations check configuration."""
    n: int = Field(default=3, ge=1, le=5, description="Truncation order of the chart")
    expected_count: Optional[int] = Field(None, ge=0, description="Expected number of nonzero equations (9 when n = 3)")
    golden_dir: Optional[str] = Field(None, description="Directory overriding the packaged golden files")


class ChartEquationsPlugin(CheckPlugin):
    """Symbolic chart equations against the golden file."""

    def get_check_name(self) -> str:
        return "chart_equations"

    def get_check_info(self) -> CheckInfo:
        return CheckInfo(
            name="Chart equations",
            description="The nine invariance equations on 9 variables, normalized and matched to the golden file.",
            claim="the full set of equations on 9 variables",
            category=CheckCategory.CHARTS,
            acceptance_id=1,
            estimated_seconds=0.2,
            tags=["charts", "golden"],
        )

    def get_config_model(self):
        return ChartEquationsConfig

    def run_check(self, config: ChartEquationsConfig) -> CheckOutcome:
        field = rationals()
        chart = ChartSpec.standard(config.n)
        system = generate_invariance_equations(chart, field).normalized()
        produced = system.as_strings()

        expected = config.expected_count if config.expected_count is not None else EXPECTED_COUNTS.get(config.n)
        verdicts = []
        if expected is not None:
            verdicts.append(Verdict.compare("number of equations", expected, len(produced)))
        data = {"chart": chart.describe(), "variables": list(chart.variables), "equations": produced}

        if config.n == 3:
            golden = [str(parse_poly(line, chart.variables, field).monic())
                      for line in golden_lines(CHART_EQUATIONS_FILE, config.golden_dir)]
            missing = sorted(set(golden) - set(produced))
            extra = sorted(set(produced) - set(golden))
            verdicts.append(Verdict.check(
                "golden file match",
                not missing and not extra and len(golden) == len(produced),
                f"missing {missing}, unexpected {extra}",
            ))
            data["golden"] = golden
        else:
            logger.info(f"No golden file for n={config.n}; equations emitted uncertified")

        return verdicts, data


def create_plugin() -> CheckPlugin:
    return ChartEquationsPlugin()
