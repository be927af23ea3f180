"""Exact invariants and freeness checks for rational hyperplane arrangements."""

from fractions import Fraction

from ._hyparr import (
    CentralArrangement as _CentralArrangement,
    HyparrError,
    Multiarrangement,
    abe_yoshinaga_free_check,
    b_coefficients,
    chamber_count,
    char_poly,
    compare_coefficients,
    corpus_get,
    corpus_names,
    finite_field_char_poly,
    find_free_basis,
    mca_check,
    parse_arrangement,
    rank2_exponents,
    reduced_char_poly,
    region_count_recursion,
    run_cli,
    sigma_coefficients,
    simple,
    yoshinaga_3d,
    ziegler_restriction,
)


def _entry(value):
    if isinstance(value, bool):
        raise TypeError("coefficients must be int, Fraction or 'p/q' strings")
    if isinstance(value, (int, Fraction, str)):
        return str(value)
    raise TypeError(f"unsupported coefficient {value!r}")


def arrangement(dim, rows, labels=None):
    """Builds a central arrangement from rows of ints, Fractions or 'p/q' strings."""
    return _CentralArrangement(dim, [[_entry(c) for c in row] for row in rows], list(labels or []))


CentralArrangement = _CentralArrangement

__all__ = [
    "CentralArrangement",
    "HyparrError",
    "Multiarrangement",
    "abe_yoshinaga_free_check",
    "arrangement",
    "b_coefficients",
    "chamber_count",
    "char_poly",
    "compare_coefficients",
    "corpus_get",
    "corpus_names",
    "finite_field_char_poly",
    "find_free_basis",
    "mca_check",
    "parse_arrangement",
    "rank2_exponents",
    "reduced_char_poly",
    "region_count_recursion",
    "run_cli",
    "sigma_coefficients",
    "simple",
    "yoshinaga_3d",
    "ziegler_restriction",
]
