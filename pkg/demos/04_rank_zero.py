"""Two rank-0 sandwiches with matching fibre sizes that still give different variants."""
from partial_brauer import parse_partition, rank_zero_report

alpha = parse_partition("2;[[1],[2],[-1,-2]]")
beta = parse_partition("2;[[1,2],[-1,-2]]")

rep = rank_zero_report(alpha, beta)
print("fibre sizes of x -> x*x:", rep.preimages)
print("R fingerprints:", rep.r_fingerprints)
print("L fingerprints:", rep.l_fingerprints)
print("table verdict:", rep.verdict, "| predicted:", rep.hypothesis_predicts)
for note in rep.notes:
    print("note:", note)
