"""Products and coproducts on the tower of type-A algebras H(q)."""
# %%
from hecke_ip.tower import (C, P, coproduct, counterexample, duality_failures, hat_tensor,
                            labels_of_grade, parse_label)

x = parse_label("(1),[2]", "1", C)
y = parse_label("(2)", "0", C)
for t, m in hat_tensor(x, y).items():
    print(m, t)

# %%
for (a, b), m in coproduct(parse_label("(1,2)", "00", P)).items():
    print(m, a, "(x)", b)

# %%
print([len(labels_of_grade(n)) for n in range(6)])

# %%
checked, failures = duality_failures(5)
print(checked, "identities,", len(failures), "failures")

# %%
# The coproduct is not multiplicative
ce = counterexample()
print(ce["term"], ce["in_delta_of_product"], ce["in_product_of_deltas"])
