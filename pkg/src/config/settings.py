"""
Konfiguracja aplikacji modinv
"""

# ==============================================================================
# === KONFIGURACJA SKRYPTU ===
DEBUG_MODE = False
LOG_FILE = "debug.log"
LOG_FORMAT = "%(asctime)s - %(processName)s - %(levelname)s - %(name)s - %(message)s"
LOG_CONSOLE_FORMAT = "%(levelname)s: %(message)s"  # ostrzeżenia na stderr poza trybem debugowania

# Ciała skończone
MAX_FIELD_ORDER = 256  # największe dopuszczalne q = p^e

# Grupy macierzy
MAX_GROUP_ORDER = 10**6  # limit pełnej enumeracji GL_n(F_q)
FULL_GROUP_SCAN_LIMIT = 200  # do tego rzędu |G| niezmienniczość liczona na całej grupie

# Algebra liniowa w składowych dwustopniowych
MAX_COMPONENT_DIM = 50_000  # maksymalny wymiar składowej wielomianowej
MAX_SPAN_PRODUCTS = 20_000  # maksymalna liczba iloczynów generatorów w jednej składowej
MAX_U_INDEX = 12  # |j| dla niezmienników u_j

# Konstrukcje niezmienników
PRODUCT_FORMULA_LIMIT = 81  # kontrola Dicksona wzorem iloczynowym dla q^n <= 81
COFACTOR_DET_LIMIT = 4  # rozwinięcie Laplace'a do rozmiaru 4, dalej Bareiss

# Przeglądy i raporty
DEFAULT_SEED = 1
DEFAULT_SAMPLE = 30
FULL_OMEGA_SWEEP_LIMIT = 64  # pełny przegląd Omega do tej liczności
DEFAULT_JOBS = 1
DEFAULT_CACHE_DIR = None  # brak katalogu = brak cache
REPORT_SCHEMA_VERSION = 1
CONTROL_DEGREE_BOUND = 4  # stopień łączny listy kontrolnej w check-minimal

# Szeregi Hilberta
DEFAULT_SERIES_DEGREE = 20  # rząd obcięcia szeregów
HILBERT_COMPARE_DEGREE = 6  # stopień porównania z prawdziwymi wymiarami (--compare)
VALUATION_SWEEP_MAX_N = 10
VALUATION_SWEEP_QS = (2, 3, 4, 5, 7, 8, 9, 16)
# ==============================================================================
