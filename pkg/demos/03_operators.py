# # Class interiors and closures
#
# Every class gets its own interior (union of member subsets) and closure
# (intersection of closed supersets). For the semi-alpha class a closed
# form built from four plain operators gives the same answer without
# enumerating the family.

# %%

import numpy as np

from nanotopo import ClassKind, build_nano_space, make_partition, make_universe
from nanotopo.operators import (
    g_closure,
    g_interior,
    kind_interior_table,
    nsalpha_closure_formula,
    nsalpha_interior_formula,
    nsalpha_interior_formula_table,
)

SA = ClassKind.NSemiAlpha
u = make_universe("pqrs")
s = build_nano_space(u, make_partition(u, ["q", "r", "ps"]), u.subset("pr"))

for spec in ["qr", "pqs", "q", "qs"]:
    c = u.subset(spec)
    print(f"int {str(c):10} family={str(g_interior(s, SA, c)):10} formula={nsalpha_interior_formula(s, c)}")

for spec in ["pr", "qr", "r", "ps", "prs"]:
    c = u.subset(spec)
    print(f"cl  {str(c):10} family={str(g_closure(s, SA, c)):10} formula={nsalpha_closure_formula(s, c)}")

# %%
# The same comparison for every subset at once. Tables are indexed by mask.

fam = kind_interior_table(s, SA)
formula = nsalpha_interior_formula_table(s)
print("all 16 subsets agree:", bool(np.array_equal(fam, formula)))

# %%
# The interior does not distribute over unions:

a, b = u.subset("ps"), u.subset("qs")
print(g_interior(s, SA, a) | g_interior(s, SA, b), "vs", g_interior(s, SA, a | b))
