"""Command-line front end"""
from discvar.cli.commands import run
from discvar.cli.parser import RunConfig, build_parser, parse_config

__all__ = [
    "run",
    "RunConfig",
    "build_parser",
    "parse_config",
]
