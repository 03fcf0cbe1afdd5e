"""The eight statistics and the symmetries that exchange them.

asc/des count adjacent rises and falls; lrmax/lrmin/rlmax/rlmin count
running extremes from either end; mna/mnd are the maximum numbers of
pairwise index-disjoint ascents and descents.
"""

from avoidpair import complement, reverse, stat_vector
from avoidpair.perms import parse_perm
from avoidpair.stats import des, mnd

perm = parse_perm("3 4 1 5 2")
print(f"statistics of 34152: {stat_vector(perm)}")

# des can exceed mnd: three descents in a row only yield one disjoint pair.
for text in ("1 3 2 5 4", "3 2 1 5 4"):
    perm = parse_perm(text)
    print(f"des({text}) = {des(perm)},  mnd({text}) = {mnd(perm)}")

# Reversing exchanges ascents with descents; complementing does the same.
perm = parse_perm("3 4 1 5 2")
for name, image in (("reverse", reverse(perm)), ("complement", complement(perm))):
    print(f"{name}: {image} -> {stat_vector(image)}")
