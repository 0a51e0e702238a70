"""Weight tables for type C and D Lie algebras: Robinson-Schensted shapes,
row swaps, column-strict tables, the component-group action and the
finite-dimensionality test for simple highest weight modules of W-algebras.
"""

from .core import (
    Frame,
    HalfInt,
    LieType,
    Partition,
    SFrame,
    STable,
    Table,
    Weight,
    Word,
    coordinate_table,
    dominance_leq,
    frame_predicates,
    left_justify,
    partition_transpose,
    symmetric_pyramid,
    validate_partition,
    weight_of,
    word_of,
)
from .schensted import greene_decreasing, greene_increasing, knuth_equivalent, rs, rs_shape
from .rowops import (
    find_column_strict,
    find_column_strict_sym,
    is_column_strict,
    is_jrecs,
    swap_rows,
    swap_rows_sym,
)
from .component_group import apply_generator, c_middle, orbit, sharp_element
from .barbasch_vogan import bv, bv_partition
from .classifier import (
    CentralCharacter,
    classify,
    enumerate_pyr_c,
    enumerate_tables,
    is_finite_dim_bv,
    primitive_ideal_labels,
)

__version__ = "0.1.0"
