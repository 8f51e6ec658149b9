"""Exact jimm on quadratic surds, continued fractions and PGL(2,Z)."""

from ._core import (
    DomainError,
    QuadSurd,
    beatty,
    boundary_word,
    box_graph_csv,
    continued_fraction,
    count_automorphisms,
    delta_formula,
    farey_map,
    from_continued_fraction,
    galois_commutes,
    gauss_map,
    is_noble,
    jimm,
    jimm_cf,
    jimm_decimal,
    jimm_matrix,
    jimm_q,
    jimm_rewrite,
    jimm_stream_prefix,
    jimm_word,
    jimm_xor,
    jump,
    matrix_word,
    measure_residual,
    orbit_fixed_point,
    rational_cf,
    run_suite,
    suite_names,
    t_jimm,
    word_value,
    xor_words,
)

__all__ = [name for name in dir() if not name.startswith("_")]
