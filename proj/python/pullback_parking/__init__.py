"""Pullback parking functions: simulation and exact counts."""

from ._core import (
    InputError,
    ResourceLimitError,
    classical_closed_form,
    contained_count,
    count_by_enumeration,
    count_contained_by_enumeration,
    count_weakly_increasing,
    fiber_histogram,
    fiber_size,
    is_contained_pf,
    is_pullback_pf,
    knaples_published,
    pf_count_recursive,
    simulate,
    simulate_contained,
    term_breakdown,
    total_count,
)

__all__ = [
    "InputError",
    "ResourceLimitError",
    "classical_closed_form",
    "contained_count",
    "count_by_enumeration",
    "count_contained_by_enumeration",
    "count_weakly_increasing",
    "fiber_histogram",
    "fiber_size",
    "is_contained_pf",
    "is_pullback_pf",
    "knaples_published",
    "pf_count_recursive",
    "simulate",
    "simulate_contained",
    "term_breakdown",
    "total_count",
]
