"""Cayley-Dickson 2^N-ion arithmetic and the box-kite zero-divisor structures it carries."""

from .assessors import Assessor, Diagonal, StrutContext, mutual_zd_edge, tone_row
from .atlas import EmanationTable, census, generate_table, self_similarity_report
from .cdp import Multivector, SignedUnit, product_sign, unit, unit_product
from .topology import BoxKite, ShapeError, assemble_boxkites, find_lanyards

__all__ = [
    "Assessor", "BoxKite", "Diagonal", "EmanationTable", "Multivector", "ShapeError",
    "SignedUnit", "StrutContext", "assemble_boxkites", "census", "find_lanyards",
    "generate_table", "mutual_zd_edge", "product_sign", "self_similarity_report",
    "tone_row", "unit", "unit_product",
]
