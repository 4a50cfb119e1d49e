"""Shelves the braid shelf maps onto: permutations and Burau matrices."""

from shelfbraid import Braid, shelf_op
from shelfbraid.quotients import (
    IDENTITY_BURAU,
    IDENTITY_PERM,
    Perm,
    burau_left_power,
    burau_of,
    burau_shelf_op,
    det,
    perm_class,
    perm_left_power,
    perm_of,
    perm_shelf_op,
    shtr,
)
from shelfbraid.words import parse

s = Perm.from_word
print("id > id =", perm_shelf_op(IDENTITY_PERM, IDENTITY_PERM).one_line(3))
print("left powers of id:", [perm_left_power(IDENTITY_PERM, m).one_line(5) for m in range(2, 6)])

i3, i2 = perm_left_power(IDENTITY_PERM, 3), perm_left_power(IDENTITY_PERM, 2)
print("id > id_[3] == id_[3] > id_[2] ?", perm_shelf_op(IDENTITY_PERM, i3) == perm_shelf_op(i3, i2))
print("class of s2 s1:", perm_class(s((2, 1))))

b1, b2 = Braid(parse("1 -2")), Braid(parse("3 1"))
print("perm_of is a morphism here:", perm_of(shelf_op(b1, b2).word) == perm_shelf_op(perm_of(b1.word), perm_of(b2.word)))

A, B = burau_of(parse("1 -2")), burau_of(parse("2 2"))
C = burau_shelf_op(A, B)
print("det(A > B) =", det(C), "  det(B) =", det(B))
print("shtr(A > B) =", shtr(C), "  shtr(B) =", shtr(B))
I3 = burau_left_power(IDENTITY_BURAU, 3)
I2 = burau_left_power(IDENTITY_BURAU, 2)
print("I > I_[3] == I_[3] > I_[2] ?", burau_shelf_op(IDENTITY_BURAU, I3) == burau_shelf_op(I3, I2))
