"""Induction and restriction across a single node."""
# %%
from hecke_ip import build_diagram, irr_labels
from hecke_ip.indres import P, C, duality_all, induce, restrict

S = build_diagram("q=00110")
R = S.subdiagram([1, 2, 4, 5])

# Removing the zero node 3 keeps the one blocks intact
lab = irr_labels(R)[3]
print("R-label", lab)
print("P up:", dict(induce(S, 3, lab, P).terms))
print("C up:", dict(induce(S, 3, lab, C).terms))

# %%
# Removing a one node splits its block; lam branches by LR coefficients
big = [x for x in irr_labels(S) if x.lam == ((2, 1),)][0]
for t, m in restrict(S, 4, big, P).terms.items():
    print(m, t)

# %%
# Q-module summands: projective only when the block fits inside inner,
# or when I misses it altogether
S2 = build_diagram("q=01100")
for x in irr_labels(S2):
    res = restrict(S2, 2, x, P)
    flags = [t.projective for t in res.terms]
    print(x, flags)

# %%
pairs, failures = duality_all(S, 4)
print(pairs, "label pairs,", len(failures), "failures")
