"""
Checking the Tor rules against the bar complex
==============================================

The reduced bar complex is built explicitly and its homology computed by
sparse elimination mod p.  A broken sign convention would show up as
d∘d ≠ 0 and abort the run.
"""

# %%
from taqlab import polynomial, presentation_from_free, tor_dims

res = tor_dims(presentation_from_free(polynomial(3, 2, "mu"), 12))
print("bidegrees (s, t):", dict(res.bidegrees.dims))
print("total degrees:", dict(res.total.dims))

# %%
from taqlab import TowerSpec, build_tower, verify_rule

for n in range(1, 5):
    rep = verify_rule(build_tower(TowerSpec("thh_fp", 3, n), 24), 24)
    print(f"stage {n}: {rep.name:60s} ok={rep.ok}")

# %%
# chain-group sizes grow fast; the ranks of the differentials keep homology small
print(max(res.chain_dims.values()), "basis tuples in the largest chain group up to t = 12")
