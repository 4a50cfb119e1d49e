"""Shelves that the braid shelf maps onto: permutations, injections, Burau matrices."""

from .burau import IDENTITY as IDENTITY_BURAU
from .burau import (
    BurauMatrix,
    burau_left_power,
    burau_of,
    burau_shelf_op,
    burau_sigma,
    det,
    parse_rows,
    shtr,
)
from .injection import SH, Injection, inj_embed, inj_shelf_op
from .laurent import LaurentPoly, parse_laurent
from .perm import IDENTITY as IDENTITY_PERM
from .perm import (
    Perm,
    braid_class,
    parse_perm,
    perm_class,
    perm_left_power,
    perm_of,
    perm_right_power,
    perm_shelf_op,
    perm_shift,
    small_class_quotient,
)

__all__ = [
    "IDENTITY_BURAU",
    "IDENTITY_PERM",
    "BurauMatrix",
    "burau_left_power",
    "burau_of",
    "burau_shelf_op",
    "burau_sigma",
    "det",
    "parse_rows",
    "shtr",
    "SH",
    "Injection",
    "inj_embed",
    "inj_shelf_op",
    "LaurentPoly",
    "parse_laurent",
    "Perm",
    "braid_class",
    "parse_perm",
    "perm_class",
    "perm_left_power",
    "perm_of",
    "perm_right_power",
    "perm_shelf_op",
    "perm_shift",
    "small_class_quotient",
]
