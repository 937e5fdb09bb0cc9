"""Command-line interface: ``python -m src.interfaces.cli``."""
from src.interfaces.cli.main import build_parser, run

__all__ = ["build_parser", "run"]
