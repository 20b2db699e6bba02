"""rskforge: row-insertion tableaux, cyclic/almost-cyclic witness synthesis,
and exhaustive cycle-type/shape censuses over small symmetric groups."""

from .core import (
    CycleType,
    DisplacementRecord,
    ExcludedShapeError,
    IntSequence,
    InvalidInputError,
    OutOfRangeError,
    Permutation,
    RskError,
    Shape,
    Tableau,
    TrivialShapeError,
    cycle_type,
    functional_graph_kind,
    is_tail_monotone,
    lds_length,
    lis_length,
    rsk_insert,
    rsk_insertions,
    rsk_shape,
    rsk_tableau,
    shape_add,
)
from .constructions import (
    build_A,
    build_B,
    build_B_prime,
    build_D,
    build_D_prime,
    relabel_R,
    seq_L,
    seq_L_prime,
    shift_I,
)
from .synthesis import plan_column_additions, synth_almost_cyclic, synth_cyclic
from .oracle import (
    Census,
    CompletenessReport,
    census,
    check_excluded_two_row,
    check_fixed_point_row_bound,
    check_two_row_classification,
    partitions,
    rsk_complete_types,
)
from .kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = [
    "Census",
    "CompletenessReport",
    "CycleType",
    "DisplacementRecord",
    "ExcludedShapeError",
    "IntSequence",
    "InvalidInputError",
    "KERNEL_BACKEND",
    "OutOfRangeError",
    "Permutation",
    "RskError",
    "Shape",
    "Tableau",
    "TrivialShapeError",
    "build_A",
    "build_B",
    "build_B_prime",
    "build_D",
    "build_D_prime",
    "census",
    "check_excluded_two_row",
    "check_fixed_point_row_bound",
    "check_two_row_classification",
    "cycle_type",
    "functional_graph_kind",
    "is_tail_monotone",
    "lds_length",
    "lis_length",
    "partitions",
    "plan_column_additions",
    "relabel_R",
    "rsk_complete_types",
    "rsk_insert",
    "rsk_insertions",
    "rsk_shape",
    "rsk_tableau",
    "seq_L",
    "seq_L_prime",
    "shape_add",
    "shift_I",
    "synth_almost_cyclic",
    "synth_cyclic",
]
