#!/usr/bin/env python3
"""
modinv - Niezmienniki modularne GL(V) na V + V* nad F_q
Główny plik uruchomieniowy aplikacji
"""

import sys
import os
import logging
import traceback
import warnings
from colorama import Fore, Style

# Ignoruj ostrzeżenia o przestarzałych funkcjach (np. z setuptools)
warnings.filterwarnings("ignore", category=DeprecationWarning)

# Dodaj katalog główny projektu do ścieżki Pythona
project_root = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, project_root)

if __name__ == "__main__":
    try:
        from src.core.processor import main

        # Zdefiniuj ścieżkę do pliku konfiguracyjnego w głównym katalogu
        config_file_path = os.path.join(project_root, "config.json")
        sys.exit(main(config_path=config_file_path))

    except KeyboardInterrupt:
        print(f"\n{Fore.YELLOW}Przerwano działanie programu.{Style.RESET_ALL}", file=sys.stderr)
        logging.warning("Program przerwany przez użytkownika (KeyboardInterrupt).")
        sys.exit(130)
    except Exception as e:
        print(f"\n{Fore.RED}Wystąpił nieoczekiwany błąd globalny: {e}{Style.RESET_ALL}", file=sys.stderr)
        logging.critical(f"Wystąpił nieoczekiwany błąd globalny: {e}", exc_info=True)
        traceback.print_exc()
        sys.exit(2)
