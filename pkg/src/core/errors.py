"""
Wyjątki pakietu modinv
"""


class ModinvError(Exception):
    """Bazowy wyjątek wszystkich błędów obliczeniowych modinv."""


class FieldMismatchError(ModinvError, ValueError):
    """Argumenty należą do różnych ciał albo mają różną liczbę zmiennych."""


class BoundExceededError(ModinvError):
    """Przekroczono skonfigurowany limit (rząd ciała, grupy, wymiar składowej)."""


class NotDivisibleError(ModinvError):
    """Dzielenie dokładne nie powiodło się."""


class CrossCheckError(ModinvError):
    """Dwie niezależne konstrukcje tego samego obiektu dały różne wyniki."""


class InvarianceError(ModinvError):
    """Wielomian wejściowy nie jest niezmiennikiem wymaganej grupy."""


class PoleOrderError(ModinvError):
    """Niezgodny rząd bieguna w lambda = 1 w szeregu Hilberta."""


class ConjectureRangeError(ModinvError):
    """Parametry spoza zakresu, dla którego sformułowano hipotezę."""


class ParseError(ModinvError, ValueError):
    """Niepoprawny zapis tekstowy elementu, wielomianu lub macierzy."""


class ParameterError(ModinvError, ValueError):
    """Niedozwolone parametry wejściowe (p nie jest pierwsze, n < 2 itp.)."""
