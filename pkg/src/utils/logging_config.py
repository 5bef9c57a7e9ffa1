"""
Konfiguracja systemu logowania
"""

import logging
import os
import sys
from typing import Optional

from ..config.settings import DEBUG_MODE, LOG_CONSOLE_FORMAT, LOG_FILE, LOG_FORMAT


class StderrHandler(logging.StreamHandler):
    """Pisze do bieżącego sys.stderr (podmienianego m.in. przez colorama)."""

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


def setup_logging(debug: bool = False, log_file: Optional[str] = None, command: Optional[str] = None) -> Optional[str]:
    """
    Ostrzeżenia i błędy zawsze trafiają na stderr.

    W trybie debugowania (DEBUG_MODE, --debug lub --log-file) pełny log DEBUG
    zapisywany jest dodatkowo do pliku, nadpisywanego przy każdym uruchomieniu.
    Zwraca ścieżkę pliku logu albo None.
    """
    logging.disable(logging.NOTSET)
    console = StderrHandler()
    console.setLevel(logging.WARNING)
    console.setFormatter(logging.Formatter(LOG_CONSOLE_FORMAT))
    handlers = [console]

    path = None
    if DEBUG_MODE or debug or log_file:
        path = os.path.abspath(log_file or LOG_FILE)
        file_handler = logging.FileHandler(path, mode="w", encoding="utf-8")
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handlers.append(file_handler)

    logging.basicConfig(level=logging.DEBUG if path else logging.WARNING, handlers=handlers, force=True)
    logging.captureWarnings(True)
    if path:
        logging.debug(f"Tryb debugowania aktywny ({command or 'modinv'}). Logi zapisywane do {path}")
    return path
