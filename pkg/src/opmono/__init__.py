"""Enumeration of multi-operator monomials in four commutativity regimes.

Monomials are generated from one indeterminate by an associative product
and d unary operators.  Depending on whether the operators and/or the
product commute, the package provides exact multigraded and length-graded
counts (closed forms and recurrences), a brute-force enumerator that serves
as ground truth, generating-series solvers, bijections onto trees and
lattice paths, and growth-rate analysis.
"""

from .asymptotics import (
    GrowthResult,
    growth,
    growth_comm_unary,
    growth_estimate,
    growth_free,
)
from .bijections import (
    BinaryTree,
    LatticePath,
    OrderedTree,
    all_binary_trees,
    all_dyck_paths,
    all_lattice_paths,
    count_vertices,
    dyck_inverse,
    dyck_run_lengths_ok,
    dyck_transform,
    from_binary_tree,
    from_ordered_tree,
    from_path,
    matched_ascent_monotone,
    right_chain_monotone,
    to_binary_tree,
    to_ordered_tree,
    to_path,
    validate_path,
)
from .counting import (
    LengthSequence,
    SelfCheckError,
    count,
    count_comm_both,
    count_comm_mult,
    count_comm_unary,
    count_free,
    free_length_closed,
    length_sequence,
    multinomial,
    narayana,
)
from .monomial import (
    STAR,
    Monomial,
    Product,
    Regime,
    Star,
    Unary,
    canonical_key,
    canonicalize,
    decode_word,
    degree,
    encode_word,
    format_monomial,
    is_atom,
    is_canonical,
    multiplicity,
    parse_monomial,
    product,
    word_length,
)
from .oracle import (
    DEFAULT_CAP,
    EnumerationCapExceeded,
    compositions,
    count_by_length,
    enumerate_monomials,
)
from .series import (
    Series,
    check_symmetry_a1,
    closed_form_free,
    euler_exp_log,
    euler_series,
    series_for,
    solve_quadratic_fe,
    unary_layer_series,
)

__version__ = "0.1.0"
