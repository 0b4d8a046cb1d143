"""
TAQ of HF_p, HZ and HZ/p^m
==========================

Stable words survive the colimit along the tower; the remaining index
sequences give F_p bases in each degree.
"""

# %%
from taqlab import crosscheck_lie, stabilization_check, taq_dims, torsion_ranks

for target in ("fp", "z", "zpm"):
    table = taq_dims(target, 3, 24)
    print(target, dict(table.table.dims))

# %%
for b in taq_dims("fp", 3, 20).basis:
    print(b.row())

# %%
# counts of tower generators in degree d + n settle down as n grows
rep = stabilization_check(3, 9, n_max=30)
print(rep.counts, "stable from n =", rep.stable_from)

# %%
print("Lie comparison ok:", crosscheck_lie(3, 40).ok, crosscheck_lie(5, 40).ok)
print("p-torsion ranks of TAQ(HZ):", torsion_ranks(3, 40).ranks)
