"""
Moduł utils - Funkcje pomocnicze
"""

from .logging_config import setup_logging
from .ui_helpers import (
    display_banner,
    info,
    print_error,
    print_warning,
    section,
    verdict_pass,
    verdict_zero,
)
from .config_manager import load_config, save_config_for_command
from .parallel import run_tasks

__all__ = [
    "setup_logging",
    "display_banner",
    "info",
    "print_error",
    "print_warning",
    "section",
    "verdict_pass",
    "verdict_zero",
    "load_config",
    "save_config_for_command",
    "run_tasks",
]
