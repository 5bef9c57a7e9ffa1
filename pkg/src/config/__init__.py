"""
Moduł config - Konfiguracja aplikacji
"""

from .settings import (
    COFACTOR_DET_LIMIT,
    CONTROL_DEGREE_BOUND,
    DEFAULT_SERIES_DEGREE,
    HILBERT_COMPARE_DEGREE,
    VALUATION_SWEEP_MAX_N,
    VALUATION_SWEEP_QS,
    DEBUG_MODE,
    DEFAULT_CACHE_DIR,
    DEFAULT_JOBS,
    DEFAULT_SAMPLE,
    DEFAULT_SEED,
    FULL_GROUP_SCAN_LIMIT,
    FULL_OMEGA_SWEEP_LIMIT,
    LOG_FILE,
    MAX_COMPONENT_DIM,
    MAX_FIELD_ORDER,
    MAX_GROUP_ORDER,
    MAX_SPAN_PRODUCTS,
    MAX_U_INDEX,
    PRODUCT_FORMULA_LIMIT,
    REPORT_SCHEMA_VERSION,
)

__all__ = [
    'DEBUG_MODE',
    'LOG_FILE',
    'MAX_FIELD_ORDER',
    'MAX_GROUP_ORDER',
    'FULL_GROUP_SCAN_LIMIT',
    'MAX_COMPONENT_DIM',
    'MAX_SPAN_PRODUCTS',
    'MAX_U_INDEX',
    'PRODUCT_FORMULA_LIMIT',
    'COFACTOR_DET_LIMIT',
    'DEFAULT_SEED',
    'DEFAULT_SAMPLE',
    'FULL_OMEGA_SWEEP_LIMIT',
    'DEFAULT_JOBS',
    'DEFAULT_CACHE_DIR',
    'REPORT_SCHEMA_VERSION',
    'CONTROL_DEGREE_BOUND',
    'DEFAULT_SERIES_DEGREE',
    'HILBERT_COMPARE_DEGREE',
    'VALUATION_SWEEP_MAX_N',
    'VALUATION_SWEEP_QS',
]
