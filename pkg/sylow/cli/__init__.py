"""
Command-line surface.

Modules:
- main: argparse entry point and exit codes
- commands: gen, regions, orbits, classify and superchar
- verify: acceptance suites
- report: JSON, CSV and rich text rendering
"""

from sylow.cli.commands import CommandReport, Workspace
from sylow.cli.main import main, run

__all__ = ["CommandReport", "Workspace", "main", "run"]
