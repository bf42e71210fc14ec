# quotfib/checks/golden.py
"""
Golden Files
============
Reference data shipped with the package under quotfib/data. A directory
given on the command line (--golden) takes precedence over the packaged copy.
"""

from importlib import resources
from pathlib import Path
from typing import List, Optional, Tuple
import logging

from ..core.errors import QuotfibError

logger = logging.getLogger(__name__)

CHART_EQUATIONS_FILE = "chart_equations_n3.txt"
PHI_PULLBACKS_FILE = "phi_pullbacks.txt"


def read_golden(name: str, directory: Optional[str] = None) -> str:
    if directory:
        path = Path(directory) / name
        if not path.is_file():
            raise QuotfibError(f"Golden file {path} does not exist")
        logger.debug(f"Reading golden file {path}")
        return path.read_text(encoding="utf-8")
    return (resources.files("quotfib") / "data" / name).read_text(encoding="utf-8")


def golden_lines(name: str, directory: Optional[str] = None) -> List[str]:
    """Non-empty lines with '#' comments removed."""
    lines = []
    for raw in read_golden(name, directory).splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def golden_table(name: str, directory: Optional[str] = None) -> List[Tuple[str, str]]:
    """'key = value' lines as pairs."""
    table = []
    for line in golden_lines(name, directory):
        key, sep, value = line.partition("=")
        if not sep:
            raise QuotfibError(f"Golden file {name}: expected 'key = value', got '{line}'")
        table.append((key.strip(), value.strip()))
    return table
