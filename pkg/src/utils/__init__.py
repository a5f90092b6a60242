"""
组合核心与输入输出工具包
"""
from .validator import (
    ValidationError,
    PathParseError,
    PreconditionError,
    LimitExceededError,
    ConsistencyError,
    validate_path_text,
    validate_max_n,
    validate_tableau_rows,
    sanitize_word
)
from .paths import (
    Path,
    PathClass,
    parse_path,
    format_path,
    heights,
    path_from_heights,
    k_encoding,
    from_k_encoding,
    valley_peak_profile,
    classify,
    decompose_prime,
    decompose_prefix,
    decompose_suffix
)
from .lattice import (
    Multichain,
    MultichainClass,
    compare,
    join_meet,
    chain_length,
    covers,
    filling,
    degree,
    count_interval,
    classify_multichain,
    parse_multichain,
    format_multichain
)
from .tableaux import (
    Shape,
    ShiftedTableau,
    TableauClass,
    shape_of,
    path_of_shape,
    tableau_class,
    count_increasing,
    count_weak,
    count_standard_formula
)
from .bijections import (
    theta,
    theta_inv,
    classify_via_theta,
    split_product,
    merge_product,
    strip_first_row,
    unstrip_first_row,
    prime_map,
    prime_map_inverse,
    v_tableau_to_typeV_chain,
    typev_chain_to_v_tableau,
    prefix_map,
    prefix_map_inverse
)
from .formulas import (
    FResult,
    Route,
    I_count,
    J_count,
    V_count,
    f_by_tableaux,
    f_recursive,
    prop2_rhs,
    prop3_rhs,
    saturated_count,
    multichain_counts
)

__all__ = [
    # validator
    'ValidationError',
    'PathParseError',
    'PreconditionError',
    'LimitExceededError',
    'ConsistencyError',
    'validate_path_text',
    'validate_max_n',
    'validate_tableau_rows',
    'sanitize_word',
    # paths
    'Path',
    'PathClass',
    'parse_path',
    'format_path',
    'heights',
    'path_from_heights',
    'k_encoding',
    'from_k_encoding',
    'valley_peak_profile',
    'classify',
    'decompose_prime',
    'decompose_prefix',
    'decompose_suffix',
    # lattice
    'Multichain',
    'MultichainClass',
    'compare',
    'join_meet',
    'chain_length',
    'covers',
    'filling',
    'degree',
    'count_interval',
    'classify_multichain',
    'parse_multichain',
    'format_multichain',
    # tableaux
    'Shape',
    'ShiftedTableau',
    'TableauClass',
    'shape_of',
    'path_of_shape',
    'tableau_class',
    'count_increasing',
    'count_weak',
    'count_standard_formula',
    # bijections
    'theta',
    'theta_inv',
    'classify_via_theta',
    'split_product',
    'merge_product',
    'strip_first_row',
    'unstrip_first_row',
    'prime_map',
    'prime_map_inverse',
    'v_tableau_to_typeV_chain',
    'typev_chain_to_v_tableau',
    'prefix_map',
    'prefix_map_inverse',
    # formulas
    'FResult',
    'Route',
    'I_count',
    'J_count',
    'V_count',
    'f_by_tableaux',
    'f_recursive',
    'prop2_rhs',
    'prop3_rhs',
    'saturated_count',
    'multichain_counts'
]
