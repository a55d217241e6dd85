"""Series computations: the functional equation, explicit solutions and identity checks."""

from .base import BaseSeries, base_series
from .closed import (
    change_of_variables,
    closed_form_G1,
    closed_form_m1,
    closed_form_m2,
)
from .companion import CompanionRing, companion_ring
from .extract import extract_character_series
from .functional import iterate_functional_equation, q_iterate
from .tower import PhiTower, assemble_F, phi_tower
from .unlabelled import unlabelled_series_check

__all__ = [
    "BaseSeries", "base_series", "change_of_variables", "closed_form_G1", "closed_form_m1",
    "closed_form_m2", "CompanionRing", "companion_ring", "extract_character_series",
    "iterate_functional_equation", "q_iterate", "PhiTower", "assemble_F", "phi_tower",
    "unlabelled_series_check",
]
