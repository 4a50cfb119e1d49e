"""Exact computation in the braid shelf and its relatives.

The braid group B_inf carries the selfdistributive operation

    b1 > b2 = b1 . sh(b2) . sigma_1 . sh(b1)^-1

This package decides equality of braid words, computes with the operation,
recognises and decomposes special braids, compares braids in the
sigma-ordering, and builds the quotient and extended shelves (permutations,
injections, Burau matrices, Laver tables, extended braids).
"""

from .engine import (
    ONE,
    Braid,
    Order,
    SigmaClass,
    Sign,
    artin_apply,
    compare,
    equal,
    fingerprint,
    handle_reduce,
    is_shift_image,
    is_trivial,
    reverse_to_neg_pos,
    reverse_to_pos_neg,
    shift_depth,
    shift_preimage,
    sigma_classify,
)
from .errors import (
    ActionUndefined,
    BraidParseError,
    CapExceeded,
    EngineInconsistency,
    NotDivisible,
    NotShifted,
    ShelfBraidError,
)
from .extended import (
    EB_ONE,
    TAU,
    ExtBraid,
    braid_distance,
    eb_distance,
    eb_equal,
    eb_mul,
    eb_shelf,
    parse_ext,
)
from .laver import (
    LaverTable,
    build_cyclic,
    is_left_shelf,
    laver_powers,
    laver_table,
    project,
    row_period,
)
from .shelf import (
    act_partial,
    act_positive,
    in_Bn,
    is_left_divisible,
    left_divide,
    left_power,
    opposite_op,
    right_power,
    shelf_op,
    shifted_product,
    unit_colors,
)
from .special import (
    LEAF,
    Division,
    Leaf,
    Node,
    SpecialDecomposition,
    Term,
    complexity,
    decompose,
    decompose_positive,
    eval_term,
    is_simple,
    is_special,
    laver_conjecture_probe,
    parse_term,
    positive_form,
    positive_special_length,
    recognize_special,
    special_compare,
    synthesize_term,
)
from .words import (
    EMPTY,
    BraidWord,
    GeneratorLetter,
    concat,
    free_cancel,
    invert,
    parse,
    render,
    shift_word,
    tau_word,
    unshift_word,
)

__version__ = "0.1.0"
