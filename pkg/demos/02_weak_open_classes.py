# # Weaker notions of openness
#
# Four families sit between the open sets and the full powerset: pre-open,
# semi-open, alpha-open and semi-alpha-open. Each is decided by a short
# interior/closure inequality, so a whole family takes one pass over the
# powerset.

# %%

from nanotopo import ClassKind, build_nano_space, enumerate_family, is_open, make_partition, make_universe
from nanotopo.classes import nsalpha_witness

u = make_universe("pqrs")
s = build_nano_space(u, make_partition(u, ["p", "r", "qs"]), u.subset("pq"))

for kind in ClassKind:
    members = enumerate_family(s, kind, "open")
    print(f"{kind.label:4} ({len(members):2}):", " ".join(str(m) for m in members))

# %%
# {p,r} is semi-alpha-open but fails every stronger test. The witness is an
# alpha-open set squeezed between it and its closure.

pr = u.subset("pr")
print({k.label: is_open(s, k, pr) for k in ClassKind})
print("witness:", nsalpha_witness(s, pr))

# %%
# Pre-openness and semi-alpha-openness are independent: {p,r,s} is pre-open
# and not semi-alpha-open.

prs = u.subset("prs")
print("Np:", is_open(s, ClassKind.NPre, prs), " NSα:", is_open(s, ClassKind.NSemiAlpha, prs))

# %%
# Semi-open and semi-alpha-open coincide here, and in fact in every space.

print(enumerate_family(s, ClassKind.NSemi) == enumerate_family(s, ClassKind.NSemiAlpha))
