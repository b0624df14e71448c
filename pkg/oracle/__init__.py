"""
Explicit truth-table reference implementation.
"""

from .truth_table_oracle import (tt_classify_pair, tt_cofactor, tt_cond_entropy,
                                 tt_cond_entropy_by_cofactors, tt_cond_entropy_set,
                                 tt_detect, tt_entropy, tt_group_summary, tt_profile, tt_support,
                                 tt_total_symmetry)

__all__ = [
    'tt_classify_pair', 'tt_cofactor', 'tt_cond_entropy', 'tt_cond_entropy_by_cofactors',
    'tt_cond_entropy_set', 'tt_detect', 'tt_entropy', 'tt_group_summary', 'tt_profile',
    'tt_support', 'tt_total_symmetry',
]
