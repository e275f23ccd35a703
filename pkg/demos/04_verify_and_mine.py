# # Checking the theorem catalogue and hunting counterexamples
#
# The verifier evaluates every catalogued statement on a space and reports a
# status plus a concrete witness when one exists. Running it over every
# space on a small universe is cheap.

# %%

import time

from nanotopo import build_nano_space, make_partition, make_universe
from nanotopo.core_sets import default_universe
from nanotopo.verifier import check_all, enumerate_spaces, mine, summarize

u = make_universe("pqrs")
s = build_nano_space(u, make_partition(u, ["p", "r", "qs"]), u.subset("pq"))
for r in check_all(s):
    print(f"{r.theorem.value:12} {r.status.value:9} {' '.join(map(str, r.witnesses))}")

# %%
# Exhaustive sweep over all universes of size 1 to 4.

start = time.perf_counter()
reports = []
for n in range(1, 5):
    for space in enumerate_spaces(default_universe(n)):
        reports += check_all(space)
print(summarize(reports), f"{time.perf_counter() - start:.2f}s")

# %%
# Counterexample mining: the first space (in enumeration order) where two
# semi-alpha-open sets meet outside the class.

hit = mine(default_universe(4), "meet-escape:NSaO")
print(hit.space.label(), "->", " ".join(str(w) for w in hit.witnesses))

# %%
# An alpha-open set that is not pre-open never exists, so this search is empty.

print(mine(default_universe(4), "NaO&!NpO"))
