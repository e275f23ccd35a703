# # Rough approximations and the nano topology
#
# A partition of a finite universe describes which elements we cannot tell
# apart. Given a target set, the lower approximation keeps the blocks that
# sit wholly inside it and the upper approximation keeps every block that
# touches it. Those two sets and their difference generate a topology with
# at most five open sets.

# %%

from nanotopo import build_nano_space, make_partition, make_universe, n_closure, n_interior

u = make_universe("pqrs")
part = make_partition(u, ["p", "r", "qs"])
target = u.subset("pq")
s = build_nano_space(u, part, target)

print("partition:", " ".join(str(b) for b in part.subsets))
print("lower:    ", s.lower)
print("upper:    ", s.upper)
print("boundary: ", s.boundary)

# %%
# The open sets, and their complements:

print("open:  ", " ".join(str(t) for t in s.tau))
print("closed:", " ".join(str(f) for f in s.closed))

# %%
# Interior and closure are the largest open subset and the smallest closed
# superset. With masks under the hood they are a handful of bit operations.

for spec in ["p", "pr", "qr", "qrs"]:
    c = u.subset(spec)
    print(f"{str(c):10} int={str(n_interior(s, c)):10} cl={n_closure(s, c)}")

# %%
# An empty target collapses everything to the indiscrete topology.

flat = build_nano_space(u, part, u.empty)
print("empty target:", " ".join(str(t) for t in flat.tau))
