"""
Iterating Tor: the higher THH tower of HF_p
===========================================

Each stage is Tor over the previous one, computed generator by generator.
"""

# %%
from taqlab import TowerSpec, build_tower, hilbert_series

p, cutoff = 3, 40
for n in range(1, 6):
    alg = build_tower(TowerSpec("thh_fp", p, n), cutoff)
    print(f"B^{n}:", alg.describe())

# %%
# Poincaré series of the fourth stage through degree 20
series = hilbert_series(build_tower(TowerSpec("thh_fp", p, 4), 20), 20)
print(series.as_list(0, 20))

# %%
# the HZ and HZ/p^m towers run on two (three) chains in parallel
for fam in ("thh_hz", "thh_zpm"):
    print(fam, build_tower(TowerSpec(fam, p, 2), 24).describe())
