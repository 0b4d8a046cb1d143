"""
Dual Steenrod algebra, A_p/β, and the command line
==================================================
"""

# %%
from taqlab import a_mod_beta_dims, dual_steenrod_dims, hz_base_table

print("A_3   :", dual_steenrod_dims(3, 20).as_list(0, 20))
print("A_3/β :", a_mod_beta_dims(3, 20).as_list(0, 20))
print("TAQ(Z/3^n | Z):", hz_base_table("taq_zpn_over_z", 3, 12).as_list(0, 12))
for row in hz_base_table("hz_homology", 3, 10).rows():
    print(row)

# %%
# the same tables through the CLI; a second run is served from the cache
import io
import tempfile

from taqlab.cli import run


class Out(io.StringIO):
    def __init__(self):
        super().__init__()
        self.buffer = io.BytesIO()  # run() writes bytes here


with tempfile.TemporaryDirectory() as cache:
    outs = []
    for _ in range(2):
        buf = Out()
        code = run(["steenrod", "--p", "3", "--variant", "mod_beta", "--max-degree", "12", "--cache-dir", cache], buf)
        outs.append(buf.buffer.getvalue())
    print(code, outs[0].decode().strip())
    print("identical:", outs[0] == outs[1])
