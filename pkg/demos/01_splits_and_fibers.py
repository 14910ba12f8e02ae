#!/usr/bin/env python3
"""Splits of Jordan types and the unique minimum, worked by hand.

A symplectic Jordan type (even values free, odd values in pairs) can be cut
into an all-even part r and a doubled part p in several ways; the number of
parts of p is what the section minimizes.  This script walks one symplectic
and one orthogonal example and shows the whole fiber next to the winner.
"""

from weyl2uni import Partition, type_bd, type_c

print("== symplectic side ==")
c = Partition([2, 2, 1, 1])
print(f"Jordan type {c.text()} admits the splits:")
for split in type_c.fiber(c):
    print(f"  {split.text()}   (p has {len(split.p)} parts)")
best = type_c.minimal_split(c)
print(f"unique minimum: {best.text()}")
print(f"same answer from the parity rule: {type_c.canonical_split(c).text()}")

print()
print("== orthogonal side ==")
# two of the four candidate splits survive the chained-family conditions
c = Partition([5, 3, 3, 1])
print(f"Jordan type {c.text()} admits the splits:")
for split in type_bd.fiber(c):
    print(f"  {split.text()}   (p has {len(split.p)} parts)")
print(f"unique minimum: {type_bd.minimal_split(c).text()}")

print()
print("== the r side is rigid ==")
# (3,3) cannot put anything into r: two equal odd parts may only sit at an
# even position of the odd chain, and a leading pair sits at position one
c = Partition([3, 3])
print(f"fiber of {c.text()}: {[s.text() for s in type_bd.fiber(c)]}")

print()
print("== halves <-> blocks ==")
# the chained family is exactly what negative cycles can contribute:
# halves (2,2) stretch to blocks (5,3), and back
halves = Partition([2, 2])
blocks = type_bd.blocks_from_halves(halves, 0)
print(f"halves {halves.text()} (kappa=0) -> blocks {blocks.text()}")
print(f"blocks {blocks.text()} -> halves {type_bd.halves_from_blocks(blocks, 0).text()}")
