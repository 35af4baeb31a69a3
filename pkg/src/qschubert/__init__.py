"""Classical and quantum Schubert calculus in Grassmannians, with the sliding
construction of coefficient-one classes and exhaustive checks of its claims."""

from .core import (
    PhiSequence, RectContext, complement, conjugate, contains, cyclic_shift,
    is_nonoverlapping, make_context, make_partition, partition_of, phi,
    phi_sequence, weight, word_of,
)
from .cylindric import (
    CylindricLoop, Frame, LatticePoint, frame_view, is_cylindric_shape, is_toric,
    loop_height_at, toric_support,
)
from .lr import (
    ClassSum, SkewShape, SkewTableau, enumerate_lr_fillings, is_lr_filling,
    is_yamanouchi, lr_coefficient, pieri_row, point_pairing, reading_word,
    schubert_product,
)
from .quantum import (
    ExtremalData, OracleDisagreement, QuantumClassSum, d_max, d_min,
    extremal_data, gw_invariant, q_support, quantum_product, rim_hook_reduce,
)
from .render import render
from .slide import (
    ColumnDiagram, SlideAnomaly, SlideTrace, nu_classical, nu_quantum,
    quantum_slide, rho, slide,
)
from .verify import (
    CHECKS, VerificationReport, all_bounded_partitions, run_check, verify_chain,
    verify_classical, verify_conjecture, verify_extremal, verify_support,
)

__version__ = "0.1.0"
