"""Команды CLI asreg."""

from src.commands import algebra_commands, curve_commands

__all__ = ["algebra_commands", "curve_commands"]
