"""
modinv - Moduł główny aplikacji
"""

__version__ = "1.0.0"
__author__ = "modinv Team"
