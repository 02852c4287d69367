"""Projective modules, Cartan matrix and quiver of H_4(0)."""
# %%
import numpy as np

from hecke_ip import build_diagram
from hecke_ip.zerohecke import (cartan_matrix, composition_factors, module_top,
                                projective_module, zero_hecke_quiver)

A3 = build_diagram("A3")
S = frozenset(A3.nodes)

# P_I lives on the permutations with descent set I
for I in [set(), {1}, {2}, {1, 3}, {1, 2, 3}]:
    P = projective_module(A3, S, I)
    print(sorted(I), "dim", P.dim, "top", dict(module_top(P)))

# %%
P = projective_module(A3, S, {2})
for J, m in composition_factors(P).items():
    print(sorted(J), m)

# %%
labels, C = cartan_matrix(A3, S)
C = np.array(C)
print(C)
print("symmetric:", (C == C.T).all(), " sum of entries:", C.sum())

# %%
q = zero_hecke_quiver(A3, S)
print(q.arrow_count(), "arrows,", len(q.loops()), "loops")
print(q.to_dot(label=lambda I: "{" + ",".join(map(str, sorted(I))) + "}"))
