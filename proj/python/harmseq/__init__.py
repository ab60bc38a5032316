"""Harmonious and R-harmonious sequences in finite groups."""

from harmseq._core import (  # noqa: F401
    BudgetExceededError,
    Group,
    InputError,
    UnsupportedError,
    abelian_basis,
    build_k,
    build_matched,
    consecutive_products,
    group,
    hall_paige_check,
    is_harmonious,
    is_matched_pair,
    is_r_harmonious,
    is_symmetric_harmonious,
    load_table,
    load_table_text,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_semidirect_cyclic,
    matched_pair,
    mext,
    r_harmonious,
    search_harmonious,
    search_matched,
    search_r_harmonious,
    search_symmetric_harmonious,
    sigma,
    symmetric_harmonious,
    verify_harmonious_int,
    verify_matched_int,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
