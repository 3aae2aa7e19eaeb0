"""Odd supplement indices of PSL(2,q) and PGL(2,q).

w(X) is the least odd m such that the socle has a supplement of index
m and every such supplement is maximal.  Brute force only ever has to
look above a Sylow 2-subgroup, so the table is fast; the closed form
(from the classical subgroup classification) is printed next to it.

Run:  python demos/04_minimal_odd_index.py
"""

from pzeta import (
    make_psl2,
    minimal_odd_index_table,
    odd_supplement_indices,
    supplement_zeta,
)

print("q variant computed predicted")
for row in minimal_odd_index_table([5, 7, 11, 13]):
    print(f"{row.q:>2} {row.variant:>7} {row.computed:>8} {row.predicted:>9}  {row.status}")

# Why w(PGL(2,7)) = 21: the only odd-index proper subgroups above a
# Sylow 2-subgroup are the dihedral groups of order 16, all maximal.
spec = make_psl2(7, "pgl")
report = odd_supplement_indices(spec)
print(f"\n{spec.name}:")
for d in report.details:
    print(f"  index {d.index}: {d.supplement_classes} supplement class(es), "
          f"all maximal: {d.all_maximal}")

# The supplement zeta function shows the corresponding negative term.
print("P_X,S =", supplement_zeta(spec))
