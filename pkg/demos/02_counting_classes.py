"""mu numbers against class counts read off Cayley tables."""
import numpy as np

from partial_brauer import MuTable, Variant, build_table, mu, mu_bruteforce
from partial_brauer.enumeration import elements

table = MuTable()
rows = np.array([row for row in table.rows(5)], dtype=object)
print(len(rows), "rows up to n = 5; largest value", max(rows[:, 4]))

# the recursion and the brute-force count over PB-pairs agree
print("mu(3,1,1,1) =", mu(3, 1, 1, 1), "brute force:", mu_bruteforce(3, 1, 1, 1))

# pick a sandwich element with one transversal and count classes directly
alpha = elements(3)[40]
v = Variant(alpha)
g = build_table(v).green
els = elements(3)
print("alpha =", alpha, "invariants r,k,p =", (v.r, v.k, v.p))
for q in range(v.r + 1):
    level = [x for x in g.regular if els[x].rank == q]
    n_l = len({g.labels["L"][x] for x in level})
    n_r = len({g.labels["R"][x] for x in level})
    print(f"  q={q}: L-classes {n_l} (mu {mu(3, v.k, v.r, q)}), R-classes {n_r} (mu {mu(3, v.p, v.r, q)})")
