"""
Moduł core - Główne funkcjonalności aplikacji
"""

from .processor import main
from .gfq import FieldSpec, make_field, field_for_order
from .mpoly import Poly, FormalPoly, format_poly, parse_poly
from .matgroup import GroupElement, enumerate_GL, enumerate_U, act
from .invariants import InvariantCatalog, build_generator_sets
from .presentation import PresentationRing
from .relations import relation_suite
from .transfer import make_transfer_context, rel_trace, reynolds
from .grlin import invariant_dimension, membership, minimal_generators_K, check_conjecture
from .hilbert import ci_candidate_series, benson_leading_check, q_valuation_check
from .export import export_to_csv, write_report

__all__ = [
    'main',
    'FieldSpec',
    'make_field',
    'field_for_order',
    'Poly',
    'FormalPoly',
    'format_poly',
    'parse_poly',
    'GroupElement',
    'enumerate_GL',
    'enumerate_U',
    'act',
    'InvariantCatalog',
    'build_generator_sets',
    'PresentationRing',
    'relation_suite',
    'make_transfer_context',
    'rel_trace',
    'reynolds',
    'invariant_dimension',
    'membership',
    'minimal_generators_K',
    'check_conjecture',
    'ci_candidate_series',
    'benson_leading_check',
    'q_valuation_check',
    'export_to_csv',
    'write_report',
]
