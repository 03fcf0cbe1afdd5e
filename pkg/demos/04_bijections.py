"""The two statistic-exchanging maps and their composition codecs.

Members of the 231,312-avoiding (layered) class are direct sums of
decreasing blocks, so each is a composition of n.  Members of the
213,231-avoiding class decompose into maximal ascending runs, giving a
second composition codec.  Complementing the block boundaries is an
involution on the layered class; reversing the block sizes and re-encoding
as runs carries it onto the other class.  Both exchange
(asc, des, mna, mnd) with (des, asc, mnd, mna) pointwise.
"""

from avoidpair import (
    complement_map,
    layered_compose,
    layered_decompose,
    runs_decompose,
    stat_vector,
    transfer_map,
)
from avoidpair.perms import format_perm, parse_perm

perm = parse_perm("1 2 4 3 5 8 7 6 9 14 13 12 11 10")
print(f"pi       = {format_perm(perm)}")
print(f"blocks   = {layered_decompose(perm)}")

image = complement_map(perm)
print(f"\nf(pi)    = {format_perm(image)}")
print(f"blocks   = {layered_decompose(image)}")
print(f"pi  stats: {stat_vector(perm)}")
print(f"f   stats: {stat_vector(image)}")
assert complement_map(image) == perm, "f is an involution"

moved = transfer_map(perm)
print(f"\ng(pi)    = {format_perm(moved)}")
print(f"runs     = {runs_decompose(moved)}")
print(f"g   stats: {stat_vector(moved)}")

# The codec round-trips, and the smallest non-trivial case flips 12 to 21.
assert layered_compose(layered_decompose(perm)) == perm
print(f"\ng(1 2)   = {format_perm(transfer_map((1, 2)))}")

# Odd lengths have exactly one transfer-map fixed point.
for n in (5, 7):
    i = (n - 1) // 2
    fixed = tuple(range(1, i + 1)) + tuple(range(n, i, -1))
    assert transfer_map(fixed) == fixed
    print(f"fixed point at n={n}: {format_perm(fixed)}")
