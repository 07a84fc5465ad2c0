"""Invariants decide isomorphism of variants once the sandwich has positive rank."""
from collections import Counter

from partial_brauer import build_table, decide_isomorphism, find_isomorphism, invariants, Variant
from partial_brauer.enumeration import elements

els = [a for a in elements(3) if a.rank >= 1]
print(len(els), "sandwich elements of positive rank in PB_3")
print("invariant classes:", Counter((i.r, i.k, i.p) for i in map(invariants, els)))

a = els[3]
b = next(x for x in els if x != a and invariants(x) == invariants(a))
v = decide_isomorphism(a, b)
print(a, "vs", b, "->", v.verdict, "|", v.reason)
if v.conjugators:
    print("conjugators", v.conjugators)

print("witness checked on both tables:", v.witness is not None)

# the table search is slower but needs no theory
phi = find_isomorphism(build_table(Variant(a)), build_table(Variant(b)))
print("table search found a bijection:", phi is not None)
