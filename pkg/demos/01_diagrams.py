"""Diagrams, products and half diagrams in PB_7."""
from partial_brauer import from_blocks, halves, product, stats, to_blocks

# two partitions of [7] u [7]' into blocks of size at most two; -i means i'
alpha = from_blocks(7, [[1, 5], [2], [3, -2], [4], [6, -5], [7, -7], [-1, -6], [-3, -4]])
beta = from_blocks(7, [[1, 2], [3, -2], [4], [5, 7], [6, -6], [-1, -3], [-4, -7], [-5]])

st = stats(alpha)
print("rank", st.rank, "dom", sorted(st.dom), "codom", sorted(st.codom))
print("kernel singletons", st.ker_singletons, "cokernel singletons", st.coker_singletons)

# the product follows paths through the stacked diagram
ab = product(alpha, beta)
print("alpha beta =", to_blocks(ab), "rank", ab.rank)

# each diagram splits into an upper and a lower PB-pair
up, low = halves(alpha)
print("upper half:", up)
print("lower half:", low)
