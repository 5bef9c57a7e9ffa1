"""
Funkcje pomocnicze interfejsu użytkownika
"""

import sys
from colorama import Fore, Style
from ..config.settings import DEBUG_MODE


def display_banner(command: str, n: int, q: int, debug: bool = False):
    """Nagłówek przebiegu, na stderr, aby nie mieszał się z raportem na stdout."""
    print(f"{Fore.GREEN}=== modinv: {command} (n={n}, q={q}) ==={Style.RESET_ALL}", file=sys.stderr)
    if DEBUG_MODE or debug:
        print(
            f"{Fore.MAGENTA}*** TRYB DEBUGOWANIA AKTYWNY (logi w pliku debug.log) ***{Style.RESET_ALL}",
            file=sys.stderr,
        )


def section(title: str):
    print(f"\n{Fore.CYAN}--- {title} ---{Style.RESET_ALL}", file=sys.stderr)


def verdict_zero(name: str, zero: bool) -> str:
    color, word = (Fore.GREEN, "ZERO") if zero else (Fore.RED, "NONZERO")
    line = f"  {name}: {color}{word}{Style.RESET_ALL}"
    print(line, file=sys.stderr)
    return line


def verdict_pass(name: str, passed: bool) -> str:
    color, word = (Fore.GREEN, "PASS") if passed else (Fore.RED, "FAIL")
    line = f"{name}: {color}{word}{Style.RESET_ALL}"
    print(line, file=sys.stderr)
    return line


def print_error(message: str):
    print(f"{Fore.RED}Błąd: {message}{Style.RESET_ALL}", file=sys.stderr)


def print_warning(message: str):
    print(f"{Fore.YELLOW}Ostrzeżenie: {message}{Style.RESET_ALL}", file=sys.stderr)


def info(message: str):
    print(f"{Fore.CYAN}{message}{Style.RESET_ALL}", file=sys.stderr)
