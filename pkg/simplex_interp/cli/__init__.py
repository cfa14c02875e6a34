from .commands import cmd_analyze, cmd_minimize, cmd_tables, cmd_curve, cmd_schema

__all__ = [
    "cmd_analyze",
    "cmd_minimize",
    "cmd_tables",
    "cmd_curve",
    "cmd_schema",
]
