"""Dimensions of Hecke algebras with mixed 0/1 parameters."""
# %%
from pathlib import Path

from hecke_ip import build_diagram, dimension, prepare
from hecke_ip.heckealg import dimension_table

# A generic parameter collapses to 0 or 1 after normalization
d, dropped = prepare(build_diagram("A4[0,3,3,0]"))
print(d, "dropped:", sorted(dropped))
print("dim =", dimension(d))

# %%
# Adjacent nonzero parameters that differ force both generators to scalars
d, dropped = prepare(build_diagram("A3[0,2,5]"))
print(d, "dropped:", sorted(dropped), "dim =", dimension(d))

# %%
# All strings of length 4; 0000 is H_5(0), 1111 is the group algebra of S_5
for bits in ["0000", "1111", "0101", "1010", "0110", "1001"]:
    print(bits, dimension(build_diagram("q=" + bits)))

# %%
# One row per set J of one blocks: prod(|W_j| - 1) times the restricted zero groups
for J, a, b in dimension_table(build_diagram("q=00100")):
    print(sorted(J), a, b, a * b)

# %%
mixed = build_diagram((Path(__file__).parent / "mixed_d4_e7_a2.json").read_text())
print(mixed.n, "nodes, dim =", dimension(prepare(mixed)[0]))
